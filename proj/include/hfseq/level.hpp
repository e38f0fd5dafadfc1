#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hfseq/integer.hpp"
#include "hfseq/sequence.hpp"

namespace hfseq {

// Shape data for a two-variable level Hilbert function: a ramp 1, 2, ..., d
// up to the initial degree d (d = socle + 1 when the ramp never breaks),
// then backward differences e_i = h_{i-1} - h_i chained into
// t = e_{socle+1} >= e_socle >= ... >= e_{d+1} >= e_d = d - h_d >= 0.
struct LevelProfile {
  std::size_t initial_degree = 0;  // d
  Integer type;                    // t = h_socle
  // e_i for d <= i <= socle + 1, stored at [i - d].
  std::vector<Integer> e;
};

struct LevelCheck {
  bool ok = false;
  std::optional<LevelProfile> profile;  // set when the ramp shape holds
};

LevelCheck check_cod2_level(const HilbertSeq& h);

inline bool is_cod2_level(const HilbertSeq& h) { return check_cod2_level(h).ok; }

// Entrywise-maximal level sequence in numvars variables with the given type
// and socle degree: min(poly_dim(numvars, i), type * poly_dim(numvars, j - i)).
HilbertSeq compressed_level(std::size_t numvars, const Integer& type, std::size_t socle);

// Ramp 1, 2, ..., d, a plateau at d, then strictly decreasing positive
// entries to the end.
bool is_admissible_decreasing_type(const HilbertSeq& h);

}  // namespace hfseq
