#pragma once

#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qvote/properties.hpp"
#include "qvote/tactics.hpp"

namespace qvote {

// One election described as a text file. Grammar (one entry per line,
// '#' starts a comment):
//
//   candidates: a b c
//   mode: strict | weak
//   constitution: qmr | qmr2 | qmr3 | classical-mr
//   seed: 42
//   samples: 1000
//   cycle-policy: error | all-equal
//   voter: pure <amp> <order> [; <amp> <order> ...]
//   voter: mixed <weight> <order> [; ...]
//   joint: pure <amp> <order>,<order>,... [; ...]
//   tactic: pure-vote <amp> <order> [; ...]
//   tactic: opposition-pair <amp> <order> [; ...]
//   tactic: party-line voters=<n> <amp> <order> [; ...]
//   tactic: w-analog voters=<n> preferred=<order> other=<order>
//
// Orders use the canonical encoding ("a>b=c"). Amplitudes are complex
// literals: "0.5", "-0.5", "0+1i", "0.5-0.5i". Exactly one of a voter list
// or a joint state must be present; a pure-vote tactic appends a voter,
// the entangled tactics define the joint state.
struct PureVoterSpec {
  std::vector<OrderAmplitude> terms;
};

struct MixedVoterSpec {
  std::vector<std::pair<std::string, double>> weights;
};

struct JointTerm {
  std::vector<std::string> orders; // one per voter
  Complex amplitude;
};

struct Scenario {
  std::vector<std::string> candidate_labels;
  BasisMode mode = BasisMode::Strict;
  ConstitutionKind constitution = ConstitutionKind::Qmr;
  uint64_t seed = 0;
  int samples = 0;
  CyclePolicy cycle_policy = CyclePolicy::Error;
  std::vector<std::variant<PureVoterSpec, MixedVoterSpec>> voters;
  std::vector<JointTerm> joint_terms;
  std::optional<TacticSpec> joint_tactic;

  bool has_joint() const { return !joint_terms.empty() || joint_tactic.has_value(); }
};

Complex parse_complex(const std::string& text);

Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

PreferenceBasis scenario_basis(const Scenario& scenario);
Profile scenario_profile(const Scenario& scenario);

// Classical votes of a basis-state scenario (classical-mr input).
std::vector<WeakOrder> scenario_votes(const Scenario& scenario, const PreferenceBasis& basis);

enum class OutputFormat { Text, Records };

// Election report: exact outcome plus seeded empirical frequencies when
// samples > 0. Identical (scenario, seed) inputs produce identical bytes.
// Throws RevoteRequired / CycleError / ParseError for the CLI to map onto
// exit codes.
std::string run_report(const Scenario& scenario, OutputFormat format);

// Frequency table of `samples` seeded election outcomes.
std::string sample_report(const Scenario& scenario, OutputFormat format, int samples);

// --- property checking ------------------------------------------------------

struct CheckConfig {
  std::string constitution = "qmr"; // qmr | qmr2 | qmr3 | classical-mr | broken-constant
  int num_candidates = 3;
  int num_voters = 3;
  BasisMode mode = BasisMode::Strict;
  bool exhaustive = false;
  int random_count = 0;
  uint64_t seed = 0;
  int64_t budget = 20000; // refuse families larger than this
  OutputFormat format = OutputFormat::Text;
};

struct CheckResult {
  std::string text;
  bool all_pass = false;
};

// Runs all four property checkers over the configured family. Throws
// BudgetExceeded rather than silently truncating.
CheckResult run_check(const CheckConfig& config);

// --- named reproductions ------------------------------------------------------

struct DemoResult {
  std::string text;
  bool pass = false;
};

std::vector<std::string> demo_names();

// Reproduces one named example, printing expected vs computed values at
// the library tolerances. `samples` <= 0 selects each demo's default.
DemoResult run_demo(const std::string& name, int samples, BasisMode mode, uint64_t seed);

} // namespace qvote
