#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hfseq/integer.hpp"

// Exact Macaulay-bound arithmetic: binomial expansions of an integer at a
// degree, the induced growth bound, and the O-sequence test built on it.

namespace hfseq {

// n choose k, exact.  Returns 0 when k > n or either argument is negative.
Integer binom(const Integer& n, const Integer& k);

struct MacaulayTerm {
  Integer top;
  std::size_t bottom;

  bool operator==(const MacaulayTerm&) const = default;
};

// The unique greedy decomposition of value at the given degree:
//   value = C(top_a, a) + C(top_{a-1}, a-1) + ...
// with strictly decreasing tops.  Zero terms are dropped, so the bottoms run
// from degree downward but may stop early.
struct MacaulayExpansion {
  Integer value;
  std::size_t degree;
  std::vector<MacaulayTerm> terms;

  // Recomputes the sum of the terms; equals value.
  Integer evaluate() const;
};

// Greedy expansion of h at degree a >= 1.  h = 0 yields no terms.
MacaulayExpansion expand(const Integer& h, std::size_t a);

// Max value allowed in degree a+1 after h in degree a: each term of the
// expansion has top and bottom bumped by one.
Integer bound(const Integer& h, std::size_t a);

// bound(h, a) - h.  Zero iff growth from h at degree a is forced flat.
Integer growth_defect(const Integer& h, std::size_t a);

// True when h_next equals bound(h_a, a) exactly.
bool is_max_growth(const Integer& h_a, const Integer& h_next, std::size_t a);

struct OSequenceCheck {
  bool ok = false;
  // Smallest degree where the sequence fails (negative entry, h_0 != 1, or a
  // growth step above the bound).  Unset when ok.
  std::optional<std::size_t> first_failure;
};

// Checks h_0 = 1, all entries >= 0, and h_{a+1} <= bound(h_a, a) for a >= 1.
// Growth from degree 0 to 1 is unconstrained.
OSequenceCheck check_o_sequence(std::span<const Integer> h);

inline bool is_o_sequence(std::span<const Integer> h) { return check_o_sequence(h).ok; }

// Dimension of the space of degree-d monomials in v variables:
// C(v - 1 + d, d).  Requires v >= 1.
Integer poly_dim(std::size_t numvars, std::size_t degree);

// Smallest b with growth_defect(b, a) >= delta.  Requires 1 <= delta <= a;
// the result is always below poly_dim(3, a).
Integer min_b(std::size_t delta, std::size_t a);

}  // namespace hfseq
