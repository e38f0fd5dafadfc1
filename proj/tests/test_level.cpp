#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hfseq/gorenstein.hpp"
#include "hfseq/level.hpp"
#include "hfseq/macaulay.hpp"
#include "oracles.hpp"

using hfseq::HilbertSeq;
using hfseq::Integer;

namespace {

HilbertSeq seq(std::initializer_list<long long> vals) {
  return HilbertSeq(std::vector<Integer>(vals.begin(), vals.end()));
}

// Every canonical sequence with h_0 = 1, the given socle degree, and entries
// bounded by cap; used to cross-check the chain enumerator by brute force.
template <typename Fn>
void for_all_sequences(std::size_t socle, long long cap, Fn&& fn) {
  std::vector<Integer> v(socle + 1);
  v[0] = 1;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i > socle) {
      if (v[socle] == 0) return;
      fn(HilbertSeq(std::vector<Integer>(v)));
      return;
    }
    for (long long x = 0; x <= cap; ++x) {
      v[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
}

}  // namespace

TEST_CASE("codim-2 level chain examples") {
  CHECK(hfseq::is_cod2_level(seq({1, 2, 1})));
  CHECK(hfseq::is_cod2_level(seq({1, 2, 3, 4, 4, 3, 2})));
  CHECK_FALSE(hfseq::is_cod2_level(seq({1, 2, 3, 4, 4, 2, 2})));
  CHECK(hfseq::is_cod2_level(seq({1, 2, 3})));  // full ramp
  CHECK(hfseq::is_cod2_level(seq({1, 1, 1})));
  CHECK(hfseq::is_cod2_level(seq({1})));
  CHECK_FALSE(hfseq::is_cod2_level(seq({1, 3, 1})));
  CHECK_FALSE(hfseq::is_cod2_level(seq({2, 2})));
  CHECK_FALSE(hfseq::is_cod2_level(seq({1, 2, 1, 2, 1})));
}

TEST_CASE("level profile fields") {
  auto chk = hfseq::check_cod2_level(seq({1, 2, 3, 4, 4, 3, 2}));
  REQUIRE(chk.ok);
  REQUIRE(chk.profile.has_value());
  CHECK(chk.profile->initial_degree == 4);
  CHECK(chk.profile->type == 2);
  CHECK(chk.profile->e == (std::vector<Integer>{0, 1, 1, 2}));

  auto ramp = hfseq::check_cod2_level(seq({1, 2, 3}));
  REQUIRE(ramp.ok);
  CHECK(ramp.profile->initial_degree == 3);
  CHECK(ramp.profile->type == 3);

  auto no = hfseq::check_cod2_level(seq({1, 2, 4}));
  CHECK_FALSE(no.ok);
  CHECK_FALSE(no.profile.has_value());
}

TEST_CASE("compressed level sequences") {
  CHECK(hfseq::compressed_level(3, 2, 5) == seq({1, 3, 6, 10, 6, 2}));
  for (std::size_t r = 1; r <= 6; ++r) {
    std::vector<Integer> want = {1, Integer(r), 1};
    CHECK(hfseq::compressed_level(r, 1, 2) == HilbertSeq(std::move(want)));
  }
  CHECK(hfseq::compressed_level(4, 3, 6) == seq({1, 4, 10, 20, 30, 12, 3}));
  CHECK(hfseq::compressed_level(1, 5, 4) == seq({1, 1, 1, 1, 1}));

  CHECK_THROWS_AS(hfseq::compressed_level(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(hfseq::compressed_level(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(hfseq::compressed_level(3, 1, 0), std::invalid_argument);
}

TEST_CASE("compressed entries match the min formula") {
  for (std::size_t r = 1; r <= 5; ++r) {
    for (long long t = 1; t <= 5; ++t) {
      for (std::size_t j = 1; j <= 9; ++j) {
        auto h = hfseq::compressed_level(r, t, j);
        REQUIRE(h.socle_degree() == j);
        for (std::size_t i = 0; i <= j; ++i) {
          Integer lhs = hfseq::poly_dim(r, i);
          Integer rhs = t * hfseq::poly_dim(r, j - i);
          CHECK(h[i] == (lhs < rhs ? lhs : rhs));
        }
      }
    }
  }
}

TEST_CASE("type-one compressed sequences are symmetric") {
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t j = 1; j <= 10; ++j) {
      CHECK(hfseq::is_symmetric(hfseq::compressed_level(r, 1, j)));
    }
  }
}

TEST_CASE("compressed level sequences are log-concave") {
  for (std::size_t r = 1; r <= 6; ++r) {
    for (long long t = 1; t <= 6; ++t) {
      for (std::size_t j = 1; j <= 12; ++j) {
        auto rep = hfseq::log_concavity_report(hfseq::compressed_level(r, t, j));
        CHECK_MESSAGE(rep.log_concave, "r=", r, " t=", t, " j=", j);
      }
    }
  }
}

TEST_CASE("chain enumeration matches a brute-force filter at small size") {
  for (std::size_t j = 1; j <= 6; ++j) {
    std::set<std::vector<Integer>> brute;
    for_all_sequences(j, 7, [&](const HilbertSeq& h) {
      if (h.socle_degree() == j && hfseq::is_cod2_level(h)) brute.insert(h.entries());
    });
    std::set<std::vector<Integer>> chain;
    for (const auto& h : oracle::chain_level_sequences(j, 7)) chain.insert(h.entries());
    CHECK_MESSAGE(brute == chain, "j=", j);
  }
}

TEST_CASE("every codim-2 level sequence up to socle 20 is log-concave") {
  std::size_t total = 0;
  for (std::size_t j = 1; j <= 20; ++j) {
    for (const auto& h : oracle::chain_level_sequences(j, 40)) {
      REQUIRE(hfseq::is_cod2_level(h));
      REQUIRE(hfseq::log_concavity_report(h).log_concave);
      ++total;
    }
  }
  CHECK(total == 4484);
}

TEST_CASE("complete intersection shapes pass the level check") {
  for (std::size_t a = 1; a <= 12; ++a) {
    for (std::size_t b = a; b <= 12; ++b) {
      auto h = oracle::ci_sequence(a, b);
      CHECK_MESSAGE(hfseq::is_cod2_level(h), "a=", a, " b=", b);
      CHECK(hfseq::is_symmetric(h));
      auto chk = hfseq::check_cod2_level(h);
      REQUIRE(chk.ok);
      CHECK(chk.profile->type == 1);
    }
  }
}

TEST_CASE("admissible decreasing type") {
  CHECK(hfseq::is_admissible_decreasing_type(seq({1, 2, 3, 3, 2, 1})));
  CHECK_FALSE(hfseq::is_admissible_decreasing_type(seq({1, 2, 3, 3, 3, 2, 2})));
  CHECK(hfseq::is_admissible_decreasing_type(seq({1, 2, 2, 1})));
  CHECK(hfseq::is_admissible_decreasing_type(seq({1})));
  CHECK(hfseq::is_admissible_decreasing_type(seq({1, 1})));
  CHECK(hfseq::is_admissible_decreasing_type(seq({1, 2, 3, 4})));
  CHECK_FALSE(hfseq::is_admissible_decreasing_type(seq({1, 2, 4, 2})));
  CHECK_FALSE(hfseq::is_admissible_decreasing_type(seq({2, 1})));
  CHECK_FALSE(hfseq::is_admissible_decreasing_type(seq({1, 2, 3, 1, 2})));
}

TEST_CASE("decreasing type implies the codim-2 Artin shape") {
  std::size_t accepted = 0;
  for (std::size_t j = 1; j <= 6; ++j) {
    for_all_sequences(j, 6, [&](const HilbertSeq& h) {
      if (!hfseq::is_admissible_decreasing_type(h)) return;
      ++accepted;
      CHECK(hfseq::is_cod2_artin_hf(h));
    });
  }
  CHECK(accepted > 50);  // the implication was not tested vacuously
}
