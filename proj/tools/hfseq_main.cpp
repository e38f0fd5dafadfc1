#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hfseq/errors.hpp"
#include "hfseq/family.hpp"
#include "hfseq/gorenstein.hpp"
#include "hfseq/level.hpp"
#include "hfseq/macaulay.hpp"
#include "hfseq/report.hpp"
#include "hfseq/sequence.hpp"

namespace {

using hfseq::HilbertSeq;
using hfseq::Integer;
using hfseq::Json;

constexpr const char* kNodeCapVar = "HFSEQ_MAX_NODES";

hfseq::EnumerationLimits limits_from_env() {
  hfseq::EnumerationLimits limits;
  const char* raw = std::getenv(kNodeCapVar);
  if (!raw) return limits;
  Integer v = hfseq::parse_integer(raw);  // ParseError -> exit 2
  if (v < 1 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw hfseq::ParseError(raw, std::string(kNodeCapVar) + " out of range: " + raw);
  }
  limits.max_nodes = v.convert_to<std::uint64_t>();
  return limits;
}

// Reads the whole file when input starts with '@', else returns it as-is.
std::string resolve_input(const std::string& input) {
  if (input.empty() || input[0] != '@') return input;
  std::ifstream in(input.substr(1));
  if (!in) throw hfseq::ParseError(input, "cannot open file: " + input.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_report(const HilbertSeq& h) {
  std::cout << hfseq::to_json(hfseq::build_check_report(h)).dump() << "\n";
}

struct CheckArgs {
  std::string input;
  std::string assert_flag;
};

int run_check(const CheckArgs& args) {
  bool batch = !args.input.empty() && args.input[0] == '@';
  if (!batch) {
    HilbertSeq h = HilbertSeq::parse(args.input);
    auto rep = hfseq::build_check_report(h);
    std::cout << hfseq::to_json(rep).dump() << "\n";
    if (args.assert_flag.empty()) return 0;
    return rep.flag(args.assert_flag) ? 0 : 1;
  }

  std::string path = args.input.substr(1);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "parse error: cannot open file: " << path << "\n";
    return 2;
  }
  bool all_hold = true;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r\n,") == std::string::npos) continue;
    try {
      auto rep = hfseq::build_check_report(HilbertSeq::parse(line));
      std::cout << hfseq::to_json(rep).dump() << "\n";
      if (!args.assert_flag.empty() && !rep.flag(args.assert_flag)) all_hold = false;
    } catch (const hfseq::ParseError& e) {
      Json err;
      err["line"] = lineno;
      err["input"] = line;
      err["error"] = e.what();
      std::cout << err.dump() << "\n";
      all_hold = false;
    }
  }
  if (args.assert_flag.empty()) return 0;
  return all_hold ? 0 : 1;
}

struct GenArgs {
  std::size_t delta = 1;
  std::size_t k = 1;
  std::string b = "1";
  std::size_t ell = 0;
  std::string input;
  std::string tail;
  std::size_t numvars = 1;
  std::string type = "1";
  std::size_t socle = 1;
  bool report = false;
};

int emit_sequence(const HilbertSeq& h, bool report) {
  std::cout << h.to_string() << "\n";
  if (report) print_report(h);
  return 0;
}

int run_gen_base(const GenArgs& a) {
  hfseq::FamilyParams p{a.delta, a.k, hfseq::parse_integer(a.b), 0};
  return emit_sequence(hfseq::build_base(p), a.report);
}

int run_gen_extended(const GenArgs& a) {
  hfseq::FamilyParams p{a.delta, a.k, hfseq::parse_integer(a.b), a.ell};
  return emit_sequence(hfseq::build_extended(p), a.report);
}

int run_gen_lengthen(const GenArgs& a) {
  HilbertSeq h = HilbertSeq::parse(resolve_input(a.input));
  hfseq::TailSpec tail{hfseq::parse_integer_list(a.tail)};
  return emit_sequence(hfseq::lengthen_with_tail(h, tail), a.report);
}

int run_gen_compressed(const GenArgs& a) {
  HilbertSeq h = hfseq::compressed_level(a.numvars, hfseq::parse_integer(a.type), a.socle);
  return emit_sequence(h, a.report);
}

struct VerifyArgs {
  std::size_t codim = 1;
  std::size_t max_socle = 1;
  unsigned jobs = 1;
};

int run_verify(const VerifyArgs& a) {
  auto rep = hfseq::verify_logconcavity_class(a.codim, a.max_socle, a.jobs,
                                              limits_from_env());
  std::cout << hfseq::to_json(rep).dump() << "\n";
  std::cerr << "checked " << rep.sequences_checked << " sequences in "
            << rep.elapsed.count() << "s\n";
  if (a.codim <= 3 && !rep.violations_found.empty()) return 1;
  return 0;
}

struct ScanArgs {
  std::string delta_range;
  std::string k_range;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto to_size = [&](std::string_view tok) {
    Integer v = hfseq::parse_integer(tok);
    if (v > 1'000'000) throw hfseq::ParseError(std::string(tok), "range endpoint too large");
    return v.convert_to<std::size_t>();
  };
  if (dots == std::string::npos) {
    std::size_t v = to_size(text);
    return {v, v};
  }
  return {to_size(text.substr(0, dots)), to_size(text.substr(dots + 2))};
}

int run_scan(const ScanArgs& a) {
  auto [dlo, dhi] = parse_range(a.delta_range);
  auto [klo, khi] = parse_range(a.k_range);
  std::cout << hfseq::scan_to_csv(hfseq::scan_params(dlo, dhi, klo, khi));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact predicates and constructions for Hilbert-function sequences"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "analyze a sequence (or @file of them) as JSON");
  check->add_option("input", check_args.input, "sequence literal or @file")->required();
  check->add_option("--assert", check_args.assert_flag, "exit 0 iff this flag holds")
      ->check(CLI::IsMember(hfseq::CheckReport::flag_names()));

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "construct a sequence");
  gen->require_subcommand(1);

  auto add_family_opts = [&](CLI::App* cmd, bool with_ell) {
    cmd->add_option("--delta", gen_args.delta, "growth step")->check(CLI::PositiveNumber);
    cmd->add_option("--k", gen_args.k, "ramp length")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--b", gen_args.b, "drop value")->required();
    if (with_ell) cmd->add_option("--ell", gen_args.ell, "extra steps")->required();
    cmd->add_flag("--report", gen_args.report, "append a JSON report line");
  };
  auto* gen_base = gen->add_subcommand("base", "ramp, drop to b, one delta step, mirror");
  add_family_opts(gen_base, false);
  auto* gen_ext = gen->add_subcommand("extended", "base shape with ell extra delta steps");
  add_family_opts(gen_ext, true);

  auto* gen_len = gen->add_subcommand("lengthen", "append a tail to an SI sequence");
  gen_len->add_option("input", gen_args.input, "sequence literal or @file")->required();
  gen_len->add_option("--tail", gen_args.tail, "values appended to the difference half")
      ->required();
  gen_len->add_flag("--report", gen_args.report, "append a JSON report line");

  auto* gen_comp = gen->add_subcommand("compressed", "entrywise-maximal level sequence");
  gen_comp->add_option("--r", gen_args.numvars, "number of variables")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_comp->add_option("--type", gen_args.type, "socle type")->required();
  gen_comp->add_option("--socle", gen_args.socle, "socle degree")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_comp->add_flag("--report", gen_args.report, "append a JSON report line");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "log-concavity sweep over SI sequences");
  verify->add_option("--codim", verify_args.codim, "h_1 of the class")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-socle", verify_args.max_socle, "largest socle degree")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", verify_args.jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "CSV sweep of the violating-b window");
  scan->add_option("--delta-range", scan_args.delta_range, "A..B inclusive")->required();
  scan->add_option("--k-range", scan_args.k_range, "C..D inclusive")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(check_args);
    if (*gen_base) return run_gen_base(gen_args);
    if (*gen_ext) return run_gen_extended(gen_args);
    if (*gen_len) return run_gen_lengthen(gen_args);
    if (*gen_comp) return run_gen_compressed(gen_args);
    if (*verify) return run_verify(verify_args);
    if (*scan) return run_scan(scan_args);
  } catch (const hfseq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hfseq::EnumerationCapExceeded& e) {
    Json err;
    err["error"] = "enumeration node cap exceeded";
    err["nodes_visited"] = e.nodes_visited();
    err["sequences_checked"] = e.sequences_emitted();
    std::cout << err.dump() << "\n";
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const hfseq::GrowthError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
