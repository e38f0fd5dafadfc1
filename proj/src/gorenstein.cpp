#include "hfseq/gorenstein.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hfseq/errors.hpp"
#include "hfseq/macaulay.hpp"

namespace hfseq {

SiCheck check_si_sequence(const HilbertSeq& h) {
  if (h[0] != 1) return {false, "leading entry is not 1"};
  if (!is_symmetric(h)) return {false, "not symmetric"};
  auto diff = first_difference(h);
  std::size_t m = h.socle_degree() / 2;
  auto chk = check_o_sequence(std::span(diff).first(m + 1));
  if (!chk.ok) {
    return {false, "first-difference half is not an O-sequence (fails at degree " +
                       std::to_string(*chk.first_failure) + ")"};
  }
  return {true, {}};
}

bool is_cod3_gorenstein(const HilbertSeq& h) {
  if (h.size() > 1 && h[1] > 3) return false;
  return is_si_sequence(h);
}

bool is_cod2_artin_hf(const HilbertSeq& h) {
  if (h[0] != 1) return false;
  std::size_t n = h.size();
  std::size_t d = 0;
  while (d < n && h[d] == d + 1) ++d;
  if (d == n) return true;
  if (h[d] > d) return false;
  for (std::size_t i = d; i + 1 < n; ++i) {
    if (h[i + 1] > h[i]) return false;
  }
  return true;
}

namespace {

// Memoized growth bounds; the enumeration hits the same (value, degree)
// pairs constantly.
class BoundMemo {
 public:
  const Integer& get(const Integer& h, std::size_t a) {
    auto key = std::make_pair(a, h);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), bound(h, a)).first;
    return it->second;
  }

 private:
  std::map<std::pair<std::size_t, Integer>, Integer> cache_;
};

struct EnumShared {
  std::uint64_t max_nodes = 0;
  std::atomic<std::uint64_t>* nodes = nullptr;
  std::atomic<bool>* capped = nullptr;
};

// Expands delta over degrees [t, last]; sink sees each completed vector.
// Returns false when the node budget ran out.
template <typename Sink>
bool run_suffix(std::vector<Integer>& delta, std::size_t t, std::size_t last,
                const EnumShared& sh, BoundMemo& memo, Sink&& sink) {
  if (t > last) {
    sink(delta);
    return true;
  }
  const Integer top = memo.get(delta[t - 1], t - 1);
  for (Integer v = 0; v <= top; ++v) {
    if (sh.capped->load(std::memory_order_relaxed)) return false;
    if (sh.nodes->fetch_add(1, std::memory_order_relaxed) + 1 > sh.max_nodes) {
      sh.capped->store(true, std::memory_order_relaxed);
      return false;
    }
    delta[t] = v;
    if (!run_suffix(delta, t + 1, last, sh, memo, sink)) return false;
  }
  return true;
}

struct SocleResult {
  std::uint64_t checked = 0;
  std::vector<SequenceViolations> bad;
};

void check_sequence(const HilbertSeq& h, SocleResult& out) {
  ++out.checked;
  auto lc = log_concavity_report(h);
  if (!lc.log_concave) out.bad.push_back({h, std::move(lc.violations)});
}

// One socle degree, split at a fixed prefix depth and run over a pool.
// Results are merged in frontier (= lexicographic) order, so the outcome is
// identical for any number of workers.
SocleResult run_socle(std::size_t codim, std::size_t socle, unsigned jobs,
                      const EnumShared& sh) {
  SocleResult total;
  std::size_t m = socle / 2;
  if (m == 0) {
    if (codim == 1) check_sequence(HilbertSeq({1, 1}), total);
    return total;
  }

  std::vector<Integer> half(m + 1);
  half[0] = 1;
  half[1] = Integer(codim) - 1;

  auto emit = [socle](SocleResult& slot) {
    return [&slot, socle](const std::vector<Integer>& d) {
      check_sequence(symmetric_from_half_difference(d, socle), slot);
    };
  };

  std::size_t split = std::min(m, std::size_t(4));
  if (jobs <= 1 || m <= split) {
    BoundMemo memo;
    run_suffix(half, 2, m, sh, memo, emit(total));
    return total;
  }

  std::vector<std::vector<Integer>> frontier;
  {
    BoundMemo memo;
    std::vector<Integer> prefix(half.begin(), half.begin() + split + 1);
    run_suffix(prefix, 2, split, sh, memo,
               [&](const std::vector<Integer>& d) { frontier.push_back(d); });
  }
  if (sh.capped->load()) return total;

  std::vector<SocleResult> results(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BoundMemo memo;
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= frontier.size() || sh.capped->load(std::memory_order_relaxed)) break;
      std::vector<Integer> delta = frontier[idx];
      delta.resize(m + 1);
      run_suffix(delta, split + 1, m, sh, memo, emit(results[idx]));
    }
  };
  std::vector<std::thread> pool;
  unsigned nworkers = std::min<std::size_t>(jobs, frontier.size());
  pool.reserve(nworkers);
  for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (auto& r : results) {
    total.checked += r.checked;
    for (auto& v : r.bad) total.bad.push_back(std::move(v));
  }
  return total;
}

void require_enum_args(std::size_t codim, std::size_t socle) {
  if (codim == 0) throw std::invalid_argument("codim must be >= 1");
  if (socle == 0) throw std::invalid_argument("socle degree must be >= 1");
}

}  // namespace

void enumerate_si_sequences(std::size_t codim, std::size_t socle,
                            const std::function<void(const HilbertSeq&)>& visit,
                            const EnumerationLimits& limits) {
  require_enum_args(codim, socle);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> capped{false};
  EnumShared sh{limits.max_nodes, &nodes, &capped};
  std::uint64_t emitted = 0;

  std::size_t m = socle / 2;
  if (m == 0) {
    if (codim == 1) {
      visit(HilbertSeq({1, 1}));
    }
    return;
  }
  std::vector<Integer> half(m + 1);
  half[0] = 1;
  half[1] = Integer(codim) - 1;
  BoundMemo memo;
  run_suffix(half, 2, m, sh, memo, [&](const std::vector<Integer>& d) {
    ++emitted;
    visit(symmetric_from_half_difference(d, socle));
  });
  if (capped.load()) throw EnumerationCapExceeded(nodes.load(), emitted);
}

std::vector<HilbertSeq> collect_si_sequences(std::size_t codim, std::size_t socle,
                                             const EnumerationLimits& limits) {
  std::vector<HilbertSeq> out;
  enumerate_si_sequences(
      codim, socle, [&](const HilbertSeq& h) { out.push_back(h); }, limits);
  return out;
}

VerificationReport verify_logconcavity_class(std::size_t codim, std::size_t socle_cap,
                                             unsigned jobs,
                                             const EnumerationLimits& limits) {
  require_enum_args(codim, socle_cap);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.codim = codim;
  rep.socle_cap = socle_cap;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> capped{false};
  for (std::size_t socle = 1; socle <= socle_cap; ++socle) {
    EnumShared sh{limits.max_nodes, &nodes, &capped};
    SocleResult res = run_socle(codim, socle, jobs, sh);
    rep.sequences_checked += res.checked;
    for (auto& v : res.bad) rep.violations_found.push_back(std::move(v));
    if (capped.load()) {
      throw EnumerationCapExceeded(nodes.load(), rep.sequences_checked);
    }
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

}  // namespace hfseq
