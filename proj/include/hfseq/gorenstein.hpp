#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hfseq/integer.hpp"
#include "hfseq/sequence.hpp"

namespace hfseq {

struct SiCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

// SI sequence: symmetric, h_0 = 1, and the first difference restricted to
// degrees 0..floor(socle/2) is an O-sequence.
SiCheck check_si_sequence(const HilbertSeq& h);

inline bool is_si_sequence(const HilbertSeq& h) { return check_si_sequence(h).ok; }

// SI with h_1 <= 3.  For codimension at most three this is exactly the set of
// Gorenstein Hilbert functions.
bool is_cod3_gorenstein(const HilbertSeq& h);

// Hilbert function of some Artin quotient of a polynomial ring in two
// variables: a ramp 1, 2, ..., then non-increasing once it leaves the ramp.
bool is_cod2_artin_hf(const HilbertSeq& h);

struct EnumerationLimits {
  // Budget on prefix-tree nodes visited; EnumerationCapExceeded beyond it.
  std::uint64_t max_nodes = 100'000'000;
};

// Visits every SI sequence with h_1 = codim and the given socle degree, in
// lexicographic order of the first-difference half (delta_2, ..., delta_m).
void enumerate_si_sequences(std::size_t codim, std::size_t socle,
                            const std::function<void(const HilbertSeq&)>& visit,
                            const EnumerationLimits& limits = {});

std::vector<HilbertSeq> collect_si_sequences(std::size_t codim, std::size_t socle,
                                             const EnumerationLimits& limits = {});

struct SequenceViolations {
  HilbertSeq sequence;
  std::vector<std::size_t> degrees;  // where log-concavity fails
};

struct VerificationReport {
  std::size_t codim = 0;
  std::size_t socle_cap = 0;
  std::uint64_t sequences_checked = 0;
  std::vector<SequenceViolations> violations_found;
  std::chrono::duration<double> elapsed{0};
};

// Runs the log-concavity check over every SI sequence with h_1 = codim and
// socle degree 1..socle_cap.  The report is independent of jobs: work is
// split over prefix-tree subtrees and merged back in lexicographic order.
VerificationReport verify_logconcavity_class(std::size_t codim, std::size_t socle_cap,
                                             unsigned jobs = 1,
                                             const EnumerationLimits& limits = {});

}  // namespace hfseq
