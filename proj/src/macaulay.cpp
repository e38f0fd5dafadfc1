#include "hfseq/macaulay.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace hfseq {

Integer binom(const Integer& n, const Integer& k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer kk = k;
  if (n - k < kk) kk = n - k;
  if (kk > 1'000'000'000) throw std::overflow_error("binomial index too large");
  unsigned long m = kk.convert_to<unsigned long>();
  Integer result = 1;
  for (unsigned long i = 1; i <= m; ++i) {
    result *= n - m + i;
    result /= i;
  }
  return result;
}

namespace {

// Largest n with C(n, bottom) <= rem, for rem >= 1.  Gallops out then
// bisects, so huge values cost O(log) binomial evaluations.
Integer largest_top(const Integer& rem, std::size_t bottom) {
  Integer lo = bottom;
  Integer hi = Integer(bottom) + 1;
  while (binom(hi, bottom) <= rem) {
    lo = hi;
    hi = 2 * hi - Integer(bottom) + 1;
  }
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binom(mid, bottom) <= rem) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

Integer MacaulayExpansion::evaluate() const {
  Integer total = 0;
  for (const auto& t : terms) total += binom(t.top, Integer(t.bottom));
  return total;
}

MacaulayExpansion expand(const Integer& h, std::size_t a) {
  if (a == 0) throw std::invalid_argument("expansion degree must be >= 1");
  if (h < 0) throw std::invalid_argument("cannot expand a negative value");
  MacaulayExpansion out{h, a, {}};
  Integer rem = h;
  for (std::size_t bottom = a; rem > 0; --bottom) {
    assert(bottom >= 1);
    Integer top = largest_top(rem, bottom);
    rem -= binom(top, Integer(bottom));
    out.terms.push_back({std::move(top), bottom});
  }
  return out;
}

Integer bound(const Integer& h, std::size_t a) {
  Integer total = 0;
  for (const auto& t : expand(h, a).terms) {
    total += binom(t.top + 1, Integer(t.bottom) + 1);
  }
  return total;
}

Integer growth_defect(const Integer& h, std::size_t a) { return bound(h, a) - h; }

bool is_max_growth(const Integer& h_a, const Integer& h_next, std::size_t a) {
  return h_next == bound(h_a, a);
}

OSequenceCheck check_o_sequence(std::span<const Integer> h) {
  if (h.empty()) throw std::invalid_argument("sequence must be non-empty");
  if (h[0] != 1) return {false, 0};
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] < 0) return {false, i};
    if (i >= 2 && h[i] > bound(h[i - 1], i - 1)) return {false, i};
  }
  return {true, std::nullopt};
}

Integer poly_dim(std::size_t numvars, std::size_t degree) {
  if (numvars == 0) throw std::invalid_argument("need at least one variable");
  return binom(Integer(numvars - 1 + degree), Integer(degree));
}

Integer min_b(std::size_t delta, std::size_t a) {
  if (delta == 0) throw std::invalid_argument("delta must be >= 1");
  if (a < delta) {
    throw std::invalid_argument("no defect-" + std::to_string(delta) +
                                " value exists at degree " + std::to_string(a));
  }
  Integer limit = poly_dim(3, a);
  for (Integer b = 1; b < limit; ++b) {
    if (growth_defect(b, a) >= delta) return b;
  }
  throw std::logic_error("unreachable: defect " + std::to_string(delta) +
                         " not attained below poly_dim(3, a)");
}

}  // namespace hfseq
