#include "hfseq/sequence.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "hfseq/errors.hpp"
#include "hfseq/macaulay.hpp"

namespace hfseq {

Integer parse_integer(std::string_view token) {
  if (token.empty()) throw ParseError("", "empty numeric token");
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string(token),
                       "not a non-negative integer: '" + std::string(token) + "'");
    }
  }
  return Integer(std::string(token));
}

HilbertSeq::HilbertSeq(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sequence must be non-empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) {
      throw std::invalid_argument("negative entry at degree " + std::to_string(i));
    }
  }
  while (entries_.size() > 1 && entries_.back() == 0) entries_.pop_back();
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> values;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    values.push_back(parse_integer(text.substr(start, i - start)));
  }
  return values;
}

HilbertSeq HilbertSeq::parse(std::string_view text) {
  auto entries = parse_integer_list(text);
  if (entries.empty()) throw ParseError(std::string(text), "empty sequence literal");
  return HilbertSeq(std::move(entries));
}

Integer HilbertSeq::sum() const {
  Integer total = 0;
  for (const auto& e : entries_) total += e;
  return total;
}

std::string HilbertSeq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].str();
  }
  return out;
}

std::vector<Integer> first_difference(const HilbertSeq& h) {
  std::vector<Integer> out;
  out.reserve(h.size());
  Integer prev = 0;
  for (const auto& e : h) {
    out.push_back(e - prev);
    prev = e;
  }
  return out;
}

HilbertSeq sum_function(std::span<const Integer> diffs) {
  if (diffs.empty()) throw std::invalid_argument("sequence must be non-empty");
  std::vector<Integer> out;
  out.reserve(diffs.size());
  Integer run = 0;
  for (const auto& d : diffs) {
    run += d;
    out.push_back(run);
  }
  return HilbertSeq(std::move(out));
}

HilbertSeq symmetric_from_half_difference(std::span<const Integer> half_diff,
                                          std::size_t socle) {
  std::size_t m = socle / 2;
  if (half_diff.size() != m + 1) {
    throw std::invalid_argument("half difference must cover degrees 0.." +
                                std::to_string(m));
  }
  std::vector<Integer> h(socle + 1);
  Integer run = 0;
  for (std::size_t t = 0; t <= m; ++t) {
    run += half_diff[t];
    h[t] = run;
  }
  for (std::size_t i = m + 1; i <= socle; ++i) h[i] = h[socle - i];
  return HilbertSeq(std::move(h));
}

bool is_symmetric(const HilbertSeq& h) {
  std::size_t j = h.socle_degree();
  for (std::size_t i = 0; 2 * i < j; ++i) {
    if (h[i] != h[j - i]) return false;
  }
  return true;
}

bool is_unimodal(const HilbertSeq& h) {
  bool falling = false;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] > h[i - 1]) {
      if (falling) return false;
    } else if (h[i] < h[i - 1]) {
      falling = true;
    }
  }
  return true;
}

const Integer& LogConcavityReport::defect_at(std::size_t degree) const {
  if (degree == 0 || degree > defects.size()) {
    throw std::out_of_range("no log-concavity defect at degree " + std::to_string(degree));
  }
  return defects[degree - 1];
}

LogConcavityReport log_concavity_report(const HilbertSeq& h) {
  LogConcavityReport rep;
  if (h.size() < 3) return rep;
  rep.defects.reserve(h.size() - 2);
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    Integer d = h[i - 1] * h[i + 1] - h[i] * h[i];
    if (d > 0) {
      rep.violations.push_back(i);
    } else if (d == 0) {
      rep.equalities.push_back(i);
    }
    rep.defects.push_back(std::move(d));
  }
  rep.log_concave = rep.violations.empty();
  return rep;
}

std::vector<Integer> f_vector(const HilbertSeq& h) {
  std::vector<Integer> f(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t t = i; t < h.size(); ++t) {
      f[i] += h[t] * binom(Integer(t), Integer(i));
    }
  }
  return f;
}

}  // namespace hfseq
