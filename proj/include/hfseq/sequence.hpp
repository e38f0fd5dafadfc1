#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfseq/integer.hpp"

namespace hfseq {

// Parses a decimal token as a non-negative integer.  Throws ParseError.
Integer parse_integer(std::string_view token);

// Splits on commas/whitespace and parses every token; empty input gives an
// empty list.  Throws ParseError on a bad token.
std::vector<Integer> parse_integer_list(std::string_view text);

// A finite Hilbert function: non-negative entries indexed by degree.
// Construction canonicalizes by stripping trailing zeros (at least one entry
// always remains) and rejects negative entries.
class HilbertSeq {
 public:
  HilbertSeq() : entries_{Integer(0)} {}
  explicit HilbertSeq(std::vector<Integer> entries);

  // Reads a comma- or whitespace-separated list of non-negative integers.
  // Throws ParseError on a bad token or an empty literal.
  static HilbertSeq parse(std::string_view text);

  const std::vector<Integer>& entries() const noexcept { return entries_; }
  const Integer& operator[](std::size_t degree) const { return entries_[degree]; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Largest degree with a (possibly zero, for the zero sequence) entry.
  std::size_t socle_degree() const noexcept { return entries_.size() - 1; }

  // Sum of all entries: the length of the algebra the function describes.
  Integer sum() const;

  std::string to_string() const;

  bool operator==(const HilbertSeq&) const = default;

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

 private:
  std::vector<Integer> entries_;
};

// (h_0, h_1 - h_0, h_2 - h_1, ...); same length as h, entries may be negative.
std::vector<Integer> first_difference(const HilbertSeq& h);

// Partial sums; the left inverse of first_difference.  Throws if some partial
// sum is negative.
HilbertSeq sum_function(std::span<const Integer> diffs);

// Builds the symmetric sequence of the given socle degree whose first
// difference through degree floor(socle/2) is half_diff: partial sums up to
// the middle, mirrored beyond it.  Requires half_diff.size() == socle/2 + 1.
HilbertSeq symmetric_from_half_difference(std::span<const Integer> half_diff,
                                          std::size_t socle);

bool is_symmetric(const HilbertSeq& h);

// No strict increase after a strict decrease.
bool is_unimodal(const HilbertSeq& h);

struct LogConcavityReport {
  // defects[i - 1] = h_{i-1} * h_{i+1} - h_i^2 for interior degrees
  // i = 1 .. socle - 1.  Positive means log-concavity fails at i.
  std::vector<Integer> defects;
  std::vector<std::size_t> violations;
  std::vector<std::size_t> equalities;
  bool log_concave = true;

  const Integer& defect_at(std::size_t degree) const;
};

LogConcavityReport log_concavity_report(const HilbertSeq& h);

// f_i = sum_t h_t * C(t, i); the face-count transform of h.
std::vector<Integer> f_vector(const HilbertSeq& h);

inline Integer seq_length(const HilbertSeq& h) { return h.sum(); }

}  // namespace hfseq
