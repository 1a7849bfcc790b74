// qvote: quantum voting simulator command line.
//
// Exit codes: 0 success, 1 property-check or demo failure, 2 scenario or
// usage errors, 3 revote required, 4 majority cycle under policy 'error',
// 5 check budget exceeded.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qvote/scenario.hpp"

namespace {

using namespace qvote;

struct CommonFlags {
  std::optional<std::string> constitution, mode, cycle_policy;
  std::optional<uint64_t> seed;
  std::optional<int> samples;
  std::string format = "text";
};

void add_overrides(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--constitution", flags.constitution, "qmr | qmr2 | qmr3 | classical-mr");
  cmd->add_option("--mode", flags.mode, "strict | weak");
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--samples", flags.samples, "empirical sample count");
  cmd->add_option("--cycle-policy", flags.cycle_policy, "error | all-equal");
  cmd->add_option("--format", flags.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
}

BasisMode parse_mode(const std::string& text) {
  if (text == "strict") return BasisMode::Strict;
  if (text == "weak") return BasisMode::Weak;
  throw ParseError("mode must be 'strict' or 'weak'");
}

ConstitutionKind parse_constitution(const std::string& text) {
  if (text == "qmr") return ConstitutionKind::Qmr;
  if (text == "qmr2") return ConstitutionKind::Qmr2;
  if (text == "qmr3") return ConstitutionKind::Qmr3;
  if (text == "classical-mr") return ConstitutionKind::ClassicalMr;
  throw ParseError("unknown constitution '" + text + "'");
}

Scenario load_scenario(const std::string& path, const CommonFlags& flags) {
  Scenario sc = parse_scenario_file(path);
  if (flags.constitution) sc.constitution = parse_constitution(*flags.constitution);
  if (flags.mode) sc.mode = parse_mode(*flags.mode);
  if (flags.seed) sc.seed = *flags.seed;
  if (flags.samples) sc.samples = *flags.samples;
  if (flags.cycle_policy) {
    if (*flags.cycle_policy == "error") {
      sc.cycle_policy = CyclePolicy::Error;
    } else if (*flags.cycle_policy == "all-equal") {
      sc.cycle_policy = CyclePolicy::AllEqual;
    } else {
      throw ParseError("cycle-policy must be 'error' or 'all-equal'");
    }
  }
  return sc;
}

OutputFormat output_format(const CommonFlags& flags) {
  return flags.format == "records" ? OutputFormat::Records : OutputFormat::Text;
}

std::string scc_text(const CycleReport& report, const Scenario& sc) {
  const CandidateSet candidates(sc.candidate_labels);
  std::string out;
  for (const auto& comp : report.sccs.components) {
    if (comp.size() < 2) continue;
    out += out.empty() ? "{" : ", {";
    for (size_t i = 0; i < comp.size(); ++i) {
      if (i > 0) out += ",";
      out += candidates.label(comp[i]);
    }
    out += "}";
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"qvote: quantum voting constitutions, property checks, and reproductions"};
  app.require_subcommand(1);

  CommonFlags run_flags, sample_flags, demo_flags;
  std::string run_path, sample_path;

  CLI::App* run_cmd = app.add_subcommand("run", "run one election scenario");
  run_cmd->add_option("scenario", run_path, "scenario file")->required();
  add_overrides(run_cmd, run_flags);

  CLI::App* sample_cmd = app.add_subcommand("sample", "sampled outcome frequencies of a scenario");
  sample_cmd->add_option("scenario", sample_path, "scenario file")->required();
  add_overrides(sample_cmd, sample_flags);

  CheckConfig check_config;
  std::string check_mode = "strict";
  CLI::App* check_cmd = app.add_subcommand("check", "verify constitutional properties");
  check_cmd->add_option("--constitution", check_config.constitution,
                        "qmr | qmr2 | qmr3 | classical-mr | broken-constant");
  check_cmd->add_option("--candidates", check_config.num_candidates, "number of candidates");
  check_cmd->add_option("--voters", check_config.num_voters, "number of voters");
  check_cmd->add_option("--mode", check_mode, "strict | weak");
  check_cmd->add_flag("--exhaustive", check_config.exhaustive,
                      "check every basis-state profile");
  check_cmd->add_option("--random", check_config.random_count, "check seeded random profiles");
  check_cmd->add_option("--seed", check_config.seed, "RNG seed for random profiles");
  check_cmd->add_option("--budget", check_config.budget, "largest family size to accept");
  std::string check_format = "text";
  check_cmd->add_option("--format", check_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  std::string demo_name;
  CLI::App* demo_cmd = app.add_subcommand("demo", "reproduce a named example");
  demo_cmd->add_option("name", demo_name, "demo name (see --list)");
  bool demo_list = false;
  demo_cmd->add_flag("--list", demo_list, "list demo names");
  add_overrides(demo_cmd, demo_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage errors share the scenario-error code
  }

  try {
    if (run_cmd->parsed()) {
      const Scenario sc = load_scenario(run_path, run_flags);
      try {
        std::cout << run_report(sc, output_format(run_flags));
      } catch (const RevoteRequired& e) {
        std::cerr << "revote required\n";
        return 3;
      } catch (const CycleError& e) {
        std::cerr << "cycle: majority relation is not a weak order; components " +
                         scc_text(e.report(), sc) + "\n";
        return 4;
      }
      return 0;
    }
    if (sample_cmd->parsed()) {
      const Scenario sc = load_scenario(sample_path, sample_flags);
      const int n = sample_flags.samples.value_or(sc.samples > 0 ? sc.samples : 1000);
      try {
        std::cout << sample_report(sc, output_format(sample_flags), n);
      } catch (const RevoteRequired&) {
        std::cerr << "revote required\n";
        return 3;
      } catch (const CycleError& e) {
        std::cerr << "cycle: majority relation is not a weak order; components " +
                         scc_text(e.report(), sc) + "\n";
        return 4;
      }
      return 0;
    }
    if (check_cmd->parsed()) {
      check_config.mode = parse_mode(check_mode);
      check_config.format = check_format == "records" ? OutputFormat::Records : OutputFormat::Text;
      const CheckResult result = run_check(check_config);
      std::cout << result.text;
      return result.all_pass ? 0 : 1;
    }
    if (demo_cmd->parsed()) {
      if (demo_list || demo_name.empty()) {
        for (const auto& name : demo_names()) std::cout << name << "\n";
        return 0;
      }
      const BasisMode mode = parse_mode(demo_flags.mode.value_or("strict"));
      const DemoResult result = run_demo(demo_name, demo_flags.samples.value_or(0), mode,
                                         demo_flags.seed.value_or(42));
      std::cout << result.text;
      std::cout << (result.pass ? "PASS" : "FAIL") << " " << demo_name << "\n";
      return result.pass ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 5;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
