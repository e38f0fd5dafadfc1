#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hfseq/errors.hpp"
#include "hfseq/gorenstein.hpp"
#include "hfseq/macaulay.hpp"
#include "oracles.hpp"

using hfseq::HilbertSeq;
using hfseq::Integer;

namespace {

HilbertSeq seq(std::initializer_list<long long> vals) {
  return HilbertSeq(std::vector<Integer>(vals.begin(), vals.end()));
}

}  // namespace

TEST_CASE("SI predicate examples") {
  CHECK(hfseq::is_si_sequence(seq({1, 3, 3, 1})));
  CHECK(hfseq::is_si_sequence(seq({1})));
  CHECK(hfseq::is_si_sequence(
      seq({1, 4, 10, 20, 35, 56, 63, 71, 63, 56, 35, 20, 10, 4, 1})));

  auto nonuni = hfseq::check_si_sequence(seq({1, 13, 12, 13, 1}));
  CHECK_FALSE(nonuni.ok);
  CHECK(nonuni.reason.find("degree 2") != std::string::npos);

  auto asym = hfseq::check_si_sequence(seq({1, 3, 2, 1}));
  CHECK_FALSE(asym.ok);
  CHECK(asym.reason == "not symmetric");

  auto lead = hfseq::check_si_sequence(seq({2, 2}));
  CHECK_FALSE(lead.ok);
  CHECK(lead.reason == "leading entry is not 1");
}

TEST_CASE("codim-3 Gorenstein predicate") {
  CHECK(hfseq::is_cod3_gorenstein(seq({1, 3, 6, 10, 6, 3, 1})));
  CHECK(hfseq::is_cod3_gorenstein(seq({1, 3, 5, 3, 1})));
  CHECK(hfseq::is_cod3_gorenstein(seq({1})));
  CHECK_FALSE(hfseq::is_cod3_gorenstein(seq({1, 3, 6, 5, 6, 3, 1})));
  CHECK_FALSE(hfseq::is_cod3_gorenstein(
      seq({1, 4, 10, 20, 35, 56, 63, 71, 63, 56, 35, 20, 10, 4, 1})));
}

TEST_CASE("codim-2 Artin Hilbert functions") {
  CHECK(hfseq::is_cod2_artin_hf(seq({1, 2, 3, 2, 2, 1})));
  CHECK(hfseq::is_cod2_artin_hf(seq({1, 2, 3, 4, 2})));
  CHECK(hfseq::is_cod2_artin_hf(seq({1})));
  CHECK(hfseq::is_cod2_artin_hf(seq({1, 1, 1})));
  CHECK_FALSE(hfseq::is_cod2_artin_hf(seq({1, 2, 4, 2})));
  CHECK_FALSE(hfseq::is_cod2_artin_hf(seq({1, 2, 3, 2, 3})));
  CHECK_FALSE(hfseq::is_cod2_artin_hf(seq({2, 1})));
}

TEST_CASE("enumeration of trivial classes") {
  CHECK(hfseq::collect_si_sequences(1, 6) ==
        (std::vector<HilbertSeq>{seq({1, 1, 1, 1, 1, 1, 1})}));
  CHECK(hfseq::collect_si_sequences(1, 1) == (std::vector<HilbertSeq>{seq({1, 1})}));
  CHECK(hfseq::collect_si_sequences(2, 1).empty());
  CHECK(hfseq::collect_si_sequences(2, 3) == (std::vector<HilbertSeq>{seq({1, 2, 2, 1})}));
  CHECK(hfseq::collect_si_sequences(3, 2) == (std::vector<HilbertSeq>{seq({1, 3, 1})}));
  CHECK_THROWS_AS(hfseq::collect_si_sequences(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(hfseq::collect_si_sequences(3, 0), std::invalid_argument);
}

TEST_CASE("enumeration of codim 3 socle 4 in lexicographic order") {
  auto got = hfseq::collect_si_sequences(3, 4);
  std::vector<HilbertSeq> want = {seq({1, 3, 3, 3, 1}), seq({1, 3, 4, 3, 1}),
                                  seq({1, 3, 5, 3, 1}), seq({1, 3, 6, 3, 1})};
  CHECK(got == want);
}

TEST_CASE("enumeration agrees with the slow symmetric filter") {
  for (std::size_t codim = 1; codim <= 3; ++codim) {
    for (std::size_t socle = 1; socle <= 8; ++socle) {
      auto fast = hfseq::collect_si_sequences(codim, socle);
      auto slow = oracle::slow_si_filter(codim, socle);
      std::set<std::vector<Integer>> fast_set, slow_set;
      for (const auto& h : fast) fast_set.insert(h.entries());
      for (const auto& h : slow) slow_set.insert(h.entries());
      CHECK_MESSAGE(fast_set == slow_set, "codim=", codim, " socle=", socle);
      CHECK(fast.size() == fast_set.size());  // no duplicates
    }
  }
}

TEST_CASE("every enumerated sequence is SI with the requested shape") {
  for (std::size_t socle = 1; socle <= 9; ++socle) {
    hfseq::enumerate_si_sequences(3, socle, [&](const HilbertSeq& h) {
      REQUIRE(hfseq::is_si_sequence(h));
      REQUIRE(hfseq::is_cod3_gorenstein(h));
      REQUIRE(hfseq::is_unimodal(h));
      REQUIRE(h.socle_degree() == socle);
      REQUIRE(h[1] == 3);
    });
  }
}

TEST_CASE("adjacent-entry product bound when differences shrink") {
  // With D = first difference: (h_i - D_i)(h_i + D_{i+1}) <= h_i^2 whenever
  // D_{i+1} <= D_i; over the first half of an SI sequence that inequality
  // chains into log-concavity.
  hfseq::enumerate_si_sequences(3, 9, [&](const HilbertSeq& h) {
    auto d = hfseq::first_difference(h);
    std::size_t m = h.socle_degree() / 2;
    for (std::size_t i = 1; i < m; ++i) {
      if (d[i + 1] <= d[i]) {
        CHECK((h[i] - d[i]) * (h[i] + d[i + 1]) <= h[i] * h[i]);
      }
    }
  });
}

TEST_CASE("verification sweep finds nothing below codim 4") {
  auto rep2 = hfseq::verify_logconcavity_class(2, 12);
  CHECK(rep2.violations_found.empty());

  auto rep3 = hfseq::verify_logconcavity_class(3, 10);
  CHECK(rep3.codim == 3);
  CHECK(rep3.socle_cap == 10);
  CHECK(rep3.violations_found.empty());
  CHECK(rep3.sequences_checked == 141);

  std::uint64_t by_socle = 0;
  for (std::size_t s = 1; s <= 10; ++s) by_socle += hfseq::collect_si_sequences(3, s).size();
  CHECK(by_socle == 141);
}

TEST_CASE("codim-4 sweep finds the known violators") {
  auto rep = hfseq::verify_logconcavity_class(4, 14, 4);
  CHECK(rep.sequences_checked == 30971);
  CHECK(rep.violations_found.size() == 10);

  auto base = seq({1, 4, 10, 20, 35, 56, 63, 71, 63, 56, 35, 20, 10, 4, 1});
  bool found = false;
  for (const auto& v : rep.violations_found) {
    CHECK_FALSE(hfseq::log_concavity_report(v.sequence).log_concave);
    CHECK(hfseq::is_si_sequence(v.sequence));
    if (v.sequence == base) {
      found = true;
      CHECK(v.degrees == (std::vector<std::size_t>{6, 8}));
    }
  }
  CHECK(found);
}

TEST_CASE("reports are identical for any worker count") {
  auto a = hfseq::verify_logconcavity_class(4, 12, 1);
  auto b = hfseq::verify_logconcavity_class(4, 12, 8);
  CHECK(a.sequences_checked == b.sequences_checked);
  REQUIRE(a.violations_found.size() == b.violations_found.size());
  for (std::size_t i = 0; i < a.violations_found.size(); ++i) {
    CHECK(a.violations_found[i].sequence == b.violations_found[i].sequence);
    CHECK(a.violations_found[i].degrees == b.violations_found[i].degrees);
  }
}

TEST_CASE("node cap interrupts enumeration") {
  hfseq::EnumerationLimits tiny{10};
  CHECK_THROWS_AS(hfseq::collect_si_sequences(3, 10, tiny), hfseq::EnumerationCapExceeded);
  try {
    hfseq::verify_logconcavity_class(3, 10, 2, tiny);
    FAIL("expected EnumerationCapExceeded");
  } catch (const hfseq::EnumerationCapExceeded& e) {
    CHECK(e.nodes_visited() >= 10);
  }
}
