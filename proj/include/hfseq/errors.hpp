#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hfseq {

// Raised when a sequence literal or numeric token cannot be read.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& what)
      : std::runtime_error(what), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

// Raised when a constructed sequence would break the Macaulay growth bound.
// Carries the first offending degree.
class GrowthError : public std::runtime_error {
 public:
  GrowthError(std::size_t degree, const std::string& what)
      : std::runtime_error(what), degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

// Raised when an enumeration hits its node budget.  Carries how far it got.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(std::uint64_t nodes_visited, std::uint64_t sequences_emitted)
      : std::runtime_error("enumeration node cap exceeded after " +
                           std::to_string(nodes_visited) + " nodes (" +
                           std::to_string(sequences_emitted) + " sequences emitted)"),
        nodes_visited_(nodes_visited),
        sequences_emitted_(sequences_emitted) {}

  std::uint64_t nodes_visited() const noexcept { return nodes_visited_; }
  std::uint64_t sequences_emitted() const noexcept { return sequences_emitted_; }

 private:
  std::uint64_t nodes_visited_;
  std::uint64_t sequences_emitted_;
};

}  // namespace hfseq
