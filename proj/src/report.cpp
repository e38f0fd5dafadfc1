#include "hfseq/report.hpp"

#include <stdexcept>

#include "hfseq/level.hpp"
#include "hfseq/macaulay.hpp"

namespace hfseq {

Json json_integer(const Integer& v) {
  static const Integer kSafeMax = (Integer(1) << 53) - 1;
  if (v >= -kSafeMax && v <= kSafeMax) return v.convert_to<std::int64_t>();
  return v.str();
}

Json json_sequence(const HilbertSeq& h) {
  Json arr = Json::array();
  for (const auto& e : h) arr.push_back(json_integer(e));
  return arr;
}

CheckReport build_check_report(const HilbertSeq& h) {
  CheckReport r;
  r.sequence = h;
  r.length = h.sum();
  r.socle_degree = h.socle_degree();
  r.symmetric = is_symmetric(h);
  r.unimodal = is_unimodal(h);
  auto o = check_o_sequence(h.entries());
  r.o_sequence = o.ok;
  r.first_o_failure = o.first_failure;
  r.si = is_si_sequence(h);
  r.cod3_gorenstein = is_cod3_gorenstein(h);
  r.cod2_level = is_cod2_level(h);
  r.decreasing_type = is_admissible_decreasing_type(h);
  auto lc = log_concavity_report(h);
  r.log_concave = lc.log_concave;
  for (std::size_t deg : lc.violations) {
    r.violations.emplace_back(deg, lc.defect_at(deg));
  }
  return r;
}

bool CheckReport::flag(const std::string& name) const {
  if (name == "symmetric") return symmetric;
  if (name == "unimodal") return unimodal;
  if (name == "o_sequence") return o_sequence;
  if (name == "si") return si;
  if (name == "cod3_gorenstein") return cod3_gorenstein;
  if (name == "cod2_level") return cod2_level;
  if (name == "decreasing_type") return decreasing_type;
  if (name == "log_concave") return log_concave;
  throw std::invalid_argument("unknown flag: " + name);
}

const std::vector<std::string>& CheckReport::flag_names() {
  static const std::vector<std::string> names = {
      "symmetric",      "unimodal",   "o_sequence",      "si",
      "cod3_gorenstein", "cod2_level", "decreasing_type", "log_concave"};
  return names;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["sequence"] = json_sequence(r.sequence);
  j["length"] = json_integer(r.length);
  j["socle_degree"] = r.socle_degree;
  Json flags;
  for (const auto& name : CheckReport::flag_names()) flags[name] = r.flag(name);
  j["flags"] = std::move(flags);
  Json viol = Json::array();
  for (const auto& [deg, defect] : r.violations) {
    viol.push_back(Json{{"degree", deg}, {"defect", json_integer(defect)}});
  }
  j["violations"] = std::move(viol);
  if (r.first_o_failure) {
    j["first_o_failure"] = *r.first_o_failure;
  } else {
    j["first_o_failure"] = nullptr;
  }
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["codim"] = r.codim;
  j["socle_cap"] = r.socle_cap;
  j["sequences_checked"] = r.sequences_checked;
  Json viol = Json::array();
  for (const auto& v : r.violations_found) {
    viol.push_back(Json{{"sequence", json_sequence(v.sequence)}, {"degrees", v.degrees}});
  }
  j["violations_found"] = std::move(viol);
  return j;
}

}  // namespace hfseq
