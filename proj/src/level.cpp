#include "hfseq/level.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfseq/macaulay.hpp"

namespace hfseq {

LevelCheck check_cod2_level(const HilbertSeq& h) {
  std::size_t n = h.size();
  std::size_t j = h.socle_degree();
  std::size_t d = 0;
  while (d < n && h[d] == d + 1) ++d;
  if (d == 0) return {false, std::nullopt};

  LevelProfile prof;
  prof.initial_degree = d;
  prof.type = h[j];

  if (d == n) {
    // Full ramp: nothing left to chain, e_{j+1} alone.
    prof.e = {h[j]};
    return {true, std::move(prof)};
  }
  if (h[d] > d) return {false, std::nullopt};  // rose above the two-variable ramp

  prof.e.reserve(j + 2 - d);
  prof.e.push_back(Integer(d) - h[d]);  // e_d
  for (std::size_t i = d + 1; i <= j; ++i) prof.e.push_back(h[i - 1] - h[i]);
  prof.e.push_back(h[j]);  // e_{j+1} = t

  for (std::size_t idx = 0; idx + 1 < prof.e.size(); ++idx) {
    if (prof.e[idx] > prof.e[idx + 1]) return {false, std::nullopt};
  }
  return {true, std::move(prof)};
}

HilbertSeq compressed_level(std::size_t numvars, const Integer& type, std::size_t socle) {
  if (numvars == 0) throw std::invalid_argument("need at least one variable");
  if (type < 1) throw std::invalid_argument("type must be >= 1");
  if (socle == 0) throw std::invalid_argument("socle degree must be >= 1");
  std::vector<Integer> h(socle + 1);
  for (std::size_t i = 0; i <= socle; ++i) {
    h[i] = std::min(poly_dim(numvars, i), type * poly_dim(numvars, socle - i));
  }
  return HilbertSeq(std::move(h));
}

bool is_admissible_decreasing_type(const HilbertSeq& h) {
  std::size_t n = h.size();
  std::size_t i = 0;
  while (i < n && h[i] == i + 1) ++i;
  if (i == 0) return false;
  Integer d(i);
  while (i < n && h[i] == d) ++i;
  Integer prev = d;
  for (; i < n; ++i) {
    if (h[i] < 1 || h[i] >= prev) return false;
    prev = h[i];
  }
  return true;
}

}  // namespace hfseq
