#include "hfseq/family.hpp"

#include <cmath>
#include <stdexcept>

#include "hfseq/errors.hpp"
#include "hfseq/gorenstein.hpp"
#include "hfseq/macaulay.hpp"

namespace hfseq {

namespace {

void require_params(const FamilyParams& p) {
  if (p.delta == 0) throw std::invalid_argument("delta must be >= 1");
  if (p.k == 0) throw std::invalid_argument("k must be >= 1");
  if (p.b < 1) throw std::invalid_argument("b must be >= 1");
}

void require_step(const Integer& prev, const Integer& value, std::size_t degree) {
  if (value < 0) {
    throw GrowthError(degree, "negative value at degree " + std::to_string(degree));
  }
  Integer cap = bound(prev, degree - 1);
  if (value > cap) {
    throw GrowthError(degree, "step to " + value.str() + " at degree " +
                                  std::to_string(degree) +
                                  " exceeds the growth bound " + cap.str());
  }
}

}  // namespace

ParamValidation validate_params(const FamilyParams& p) {
  require_params(p);
  ParamValidation v;
  v.s_k = poly_dim(4, p.k);
  v.actual_defect = growth_defect(p.b, p.k + 1);
  v.growth_feasible = v.actual_defect >= p.delta;
  v.lc_defect = Integer(p.delta) * v.s_k - p.b * p.b;
  v.violating = v.lc_defect > 0;
  v.advisory_b_lo = Integer(p.delta) * p.k;
  double kk = static_cast<double>(p.k);
  v.advisory_b_hi = std::sqrt(static_cast<double>(p.delta)) * kk * std::sqrt(kk) /
                    (6.0 * std::sqrt(6.0));
  return v;
}

HilbertSeq build_extended(const FamilyParams& p) {
  require_params(p);
  std::size_t m = p.k + 2 + p.ell;
  std::vector<Integer> half(m + 1);
  for (std::size_t t = 0; t <= p.k; ++t) half[t] = poly_dim(3, t);
  for (std::size_t u = 0; u <= p.ell + 1; ++u) {
    half[p.k + 1 + u] = p.b + Integer(u) * p.delta;
  }
  require_step(half[p.k], half[p.k + 1], p.k + 1);
  Integer defect = growth_defect(p.b, p.k + 1);
  if (defect < p.delta) {
    throw GrowthError(p.k + 2, "growth defect of " + p.b.str() + " at degree " +
                                   std::to_string(p.k + 1) + " is " + defect.str() +
                                   ", below delta = " + std::to_string(p.delta));
  }
  for (std::size_t t = p.k + 2; t <= m; ++t) require_step(half[t - 1], half[t], t);
  return symmetric_from_half_difference(half, 2 * m);
}

HilbertSeq build_base(const FamilyParams& p) {
  if (p.ell != 0) throw std::invalid_argument("base construction takes ell = 0");
  return build_extended(p);
}

Integer predicted_defect(std::size_t k, const Integer& b, std::size_t u) {
  Integer uu(u);
  return poly_dim(4, k) - b * b - uu * b - uu * (uu + 1) / 2;
}

std::size_t max_extension(std::size_t k, const Integer& b) {
  if (predicted_defect(k, b, 0) <= 0) return 0;
  std::size_t ell = 0;
  while (predicted_defect(k, b, ell + 1) > 0) ++ell;
  return ell;
}

HilbertSeq lengthen_with_tail(const HilbertSeq& h, const TailSpec& tail) {
  SiCheck si = check_si_sequence(h);
  if (!si.ok) throw std::invalid_argument("input is not an SI sequence: " + si.reason);
  std::size_t m = h.socle_degree() / 2;
  auto diff = first_difference(h);
  std::vector<Integer> half(diff.begin(), diff.begin() + m + 1);
  for (const auto& v : tail.values) {
    require_step(half.back(), v, half.size());
    half.push_back(v);
  }
  return symmetric_from_half_difference(half, h.socle_degree() + 2 * tail.values.size());
}

std::vector<ScanRow> scan_params(std::size_t delta_lo, std::size_t delta_hi,
                                 std::size_t k_lo, std::size_t k_hi) {
  if (delta_lo == 0) throw std::invalid_argument("delta must be >= 1");
  std::vector<ScanRow> rows;
  for (std::size_t delta = delta_lo; delta <= delta_hi; ++delta) {
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      if (k + 1 < delta) continue;
      ScanRow row;
      row.delta = delta;
      row.k = k;
      row.b_min = min_b(delta, k + 1);
      Integer target = Integer(delta) * poly_dim(4, k);
      row.b_max = isqrt(target - 1);
      row.violating = row.b_min <= row.b_max;
      row.defect_at_k_plus_1 = target - row.b_min * row.b_min;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string scan_to_csv(std::span<const ScanRow> rows) {
  std::string out = "delta,k,b_min,b_max,violating,defect_at_k_plus_1\n";
  for (const auto& r : rows) {
    out += std::to_string(r.delta) + ',' + std::to_string(r.k) + ',' + r.b_min.str() +
           ',' + r.b_max.str() + ',' + (r.violating ? "true" : "false") + ',' +
           r.defect_at_k_plus_1.str() + '\n';
  }
  return out;
}

}  // namespace hfseq
