#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hfseq/gorenstein.hpp"
#include "hfseq/integer.hpp"
#include "hfseq/sequence.hpp"

namespace hfseq {

using Json = nlohmann::ordered_json;

// Integers up to 2^53 - 1 in magnitude stay JSON numbers; anything larger is
// emitted as a decimal string so consumers never lose precision.
Json json_integer(const Integer& v);

Json json_sequence(const HilbertSeq& h);

// Everything cmd_check reports about one sequence.
struct CheckReport {
  HilbertSeq sequence;
  Integer length;
  std::size_t socle_degree = 0;
  bool symmetric = false;
  bool unimodal = false;
  bool o_sequence = false;
  bool si = false;
  bool cod3_gorenstein = false;
  bool cod2_level = false;
  bool decreasing_type = false;
  bool log_concave = false;
  std::vector<std::pair<std::size_t, Integer>> violations;  // (degree, defect)
  std::optional<std::size_t> first_o_failure;

  // Flag lookup by report key; throws std::invalid_argument on unknown names.
  bool flag(const std::string& name) const;
  static const std::vector<std::string>& flag_names();
};

CheckReport build_check_report(const HilbertSeq& h);

Json to_json(const CheckReport& r);

// Deterministic fields only; elapsed time is deliberately not included so
// output is byte-identical across thread counts.
Json to_json(const VerificationReport& r);

}  // namespace hfseq
