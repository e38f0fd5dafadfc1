#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hfseq/integer.hpp"
#include "hfseq/sequence.hpp"

// Parametric construction of symmetric sequences that pass the SI test yet
// fail log-concavity near the middle.  The first-difference half is the
// three-variable ramp 1, 3, 6, ..., C(k+2, 2) followed by a drop to b and
// steps of delta; mirroring yields socle degree 2k + 4 + 2*ell.

namespace hfseq {

struct FamilyParams {
  std::size_t delta = 1;  // growth step after the drop
  std::size_t k = 1;      // ramp length: last ramp degree
  Integer b = 1;          // value the first difference drops to at degree k+1
  std::size_t ell = 0;    // extra delta-steps beyond the base shape
};

struct ParamValidation {
  // b can grow by delta at degree k+1, i.e. growth_defect(b, k+1) >= delta.
  bool growth_feasible = false;
  Integer actual_defect;  // growth_defect(b, k+1)

  // The constructed sequence fails log-concavity at degree k+1,
  // i.e. lc_defect = delta * s_k - b^2 > 0, where s_k = C(k+3, 3).
  bool violating = false;
  Integer lc_defect;
  Integer s_k;

  // Approximate closed-form window for violating b; advisory only, the exact
  // decision is the pair of flags above.
  Integer advisory_b_lo;   // delta * k
  double advisory_b_hi = 0;  // sqrt(delta) * k^1.5 / 6^1.5
};

ParamValidation validate_params(const FamilyParams& p);

// Base construction (ell = 0): socle degree 2k + 4, middle entries
// (s_k, s_k + b, s_k + 2b + delta, s_k + b, s_k).  Throws GrowthError at the
// first degree whose step exceeds the Macaulay bound.
HilbertSeq build_base(const FamilyParams& p);

// Same with ell extra steps b + 2*delta, ..., b + (ell+1)*delta appended to
// the half difference; socle degree 2k + 4 + 2*ell.
HilbertSeq build_extended(const FamilyParams& p);

// Expected log-concavity defect at degree k + 1 + u of the delta = 1
// extension: s_k - b^2 - u*b - u*(u+1)/2.
Integer predicted_defect(std::size_t k, const Integer& b, std::size_t u);

// Largest ell such that the delta = 1 extension still violates log-concavity
// at degree k + 1 + ell; 0 when s_k <= b^2 (no violation to extend).
std::size_t max_extension(std::size_t k, const Integer& b);

struct TailSpec {
  std::vector<Integer> values;  // appended to the first-difference half
};

// Appends tail to the first-difference half of an SI sequence and mirrors,
// raising the socle degree by 2 * tail.size().  Throws GrowthError at the
// first appended degree that exceeds the Macaulay bound, and
// std::invalid_argument when h is not SI.
HilbertSeq lengthen_with_tail(const HilbertSeq& h, const TailSpec& tail);

struct ScanRow {
  std::size_t delta = 0;
  std::size_t k = 0;
  Integer b_min;  // smallest b with growth_defect(b, k+1) >= delta
  Integer b_max;  // largest b with b^2 < delta * s_k
  bool violating = false;  // window [b_min, b_max] non-empty
  Integer defect_at_k_plus_1;  // delta * s_k - b_min^2
};

// One row per (delta, k) pair in the given inclusive ranges; pairs with
// k + 1 < delta (where no b has such a growth defect) are skipped.
std::vector<ScanRow> scan_params(std::size_t delta_lo, std::size_t delta_hi,
                                 std::size_t k_lo, std::size_t k_hi);

std::string scan_to_csv(std::span<const ScanRow> rows);

}  // namespace hfseq
