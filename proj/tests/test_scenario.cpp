#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qvote/scenario.hpp"

using namespace qvote;

namespace {

Scenario from_string(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

const std::string kTheorem2 = "candidates: a b c\n"
                              "constitution: qmr\n"
                              "voter: pure 1 a>b>c\n"
                              "voter: pure 1 c>a>b\n"
                              "voter: pure 1 b>c>a\n";

} // namespace

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("0.7071") == Complex(0.7071, 0.0));
  CHECK(parse_complex("-0.7071") == Complex(-0.7071, 0.0));
  CHECK(parse_complex("0+1i") == Complex(0.0, 1.0));
  CHECK(parse_complex("0.5-0.5i") == Complex(0.5, -0.5));
  CHECK(parse_complex("1i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2.5e-1") == Complex(0.25, 0.0));
  CHECK(parse_complex("1e-2i") == Complex(0.0, 0.01));
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
}

TEST_CASE("scenario parsing: fields, comments, voters") {
  const Scenario sc = from_string("# comment line\n"
                                  "candidates: c a b\n"
                                  "mode: weak\n"
                                  "constitution: qmr3\n"
                                  "seed: 99\n"
                                  "samples: 12\n"
                                  "voter: pure 0.70710678118654752 a>b>c; 0+0.70710678118654752i c>a=b  # inline\n"
                                  "voter: mixed 0.25 a>b>c; 0.75 b>a=c\n");
  CHECK(sc.candidate_labels == std::vector<std::string>{"c", "a", "b"});
  CHECK(sc.mode == BasisMode::Weak);
  CHECK(sc.constitution == ConstitutionKind::Qmr3);
  CHECK(sc.seed == 99);
  CHECK(sc.samples == 12);
  REQUIRE(sc.voters.size() == 2);
  const Profile profile = scenario_profile(sc);
  CHECK(profile.num_voters() == 2);
  CHECK(profile.marginal(1).trace() == doctest::Approx(1.0));
}

TEST_CASE("scenario parse errors") {
  CHECK_THROWS_AS(from_string("constitution: qmr\nvoter: pure 1 a>b\n"), ParseError); // no candidates
  CHECK_THROWS_AS(from_string("candidates: a b\nvoter: pure 1 a>b\n"), ParseError);   // no constitution
  CHECK_THROWS_AS(from_string("candidates: a b\nconstitution: qmr\n"), ParseError);   // no voters
  CHECK_THROWS_AS(from_string("candidates: a b\nconstitution: qmr\n"
                              "voter: pure 1 a>b\n"
                              "joint: pure 1 a>b,b>a\n"),
                  ParseError); // both voters and joint
  CHECK_THROWS_AS(from_string("candidates: a b\nconstitution: nope\nvoter: pure 1 a>b\n"),
                  ParseError);
  CHECK_THROWS_AS(from_string("candidates: a b\nconstitution: qmr\nbogus: 1\n"), ParseError);
  CHECK_THROWS_AS(from_string("candidates: a b\nmode: strict\nmode: weak\n"
                              "constitution: qmr\nvoter: pure 1 a>b\n"),
                  ParseError); // duplicate key
}

TEST_CASE("unknown labels are rejected when the profile is built") {
  const Scenario sc = from_string("candidates: a b\nconstitution: qmr\nvoter: pure 1 a>c\n");
  CHECK_THROWS_AS(scenario_profile(sc), ParseError);
}

TEST_CASE("run report: qmr on the cyclic profile is uniform") {
  const Scenario sc = from_string(kTheorem2);
  const std::string report = run_report(sc, OutputFormat::Records);
  CHECK(report.find("record=meta constitution=qmr mode=strict candidates=a,b,c voters=3 dim=6") !=
        std::string::npos);
  CHECK(report.find("record=prob order=a>b>c p=0.166666666666667") != std::string::npos);
  // determinism: same scenario, same bytes
  CHECK(run_report(sc, OutputFormat::Records) == report);
  CHECK(run_report(sc, OutputFormat::Text) == run_report(sc, OutputFormat::Text));
}

TEST_CASE("run report: classical-mr cycle surfaces as CycleError") {
  Scenario sc = from_string(kTheorem2);
  sc.constitution = ConstitutionKind::ClassicalMr;
  sc.cycle_policy = CyclePolicy::Error;
  CHECK_THROWS_AS(run_report(sc, OutputFormat::Text), CycleError);
  sc.cycle_policy = CyclePolicy::AllEqual;
  const std::string report = run_report(sc, OutputFormat::Records);
  CHECK(report.find("record=order order=a=b=c") != std::string::npos);
}

TEST_CASE("run report: qmr2 revote scenario throws") {
  const Scenario sc = from_string(
      "candidates: a b c\n"
      "constitution: qmr2\n"
      "voter: pure 0.70710678118654752 a>b>c; 0.70710678118654752 a>c>b\n"
      "voter: pure 0.70710678118654752 c>b>a; -0.70710678118654752 b>c>a\n");
  CHECK_THROWS_AS(run_report(sc, OutputFormat::Text), RevoteRequired);
}

TEST_CASE("sampling block is reproducible per seed and changes across seeds") {
  Scenario sc = from_string(kTheorem2);
  sc.samples = 200;
  sc.seed = 13;
  const std::string r1 = run_report(sc, OutputFormat::Records);
  const std::string r2 = run_report(sc, OutputFormat::Records);
  CHECK(r1 == r2);
  sc.seed = 14;
  CHECK(run_report(sc, OutputFormat::Records) != r1);
  CHECK(sample_report(sc, OutputFormat::Records, 50) ==
        sample_report(sc, OutputFormat::Records, 50));
}

TEST_CASE("joint scenario entry builds an entangled profile") {
  const Scenario sc = from_string(
      "candidates: a b\n"
      "constitution: qmr3\n"
      "joint: pure 0.70710678118654752 a>b,a>b; 0.70710678118654752 b>a,b>a\n");
  const Profile profile = scenario_profile(sc);
  CHECK_FALSE(profile.is_product());
  CHECK(profile.num_voters() == 2);
  const auto dist = qmr3_distribution(profile);
  CHECK(std::abs(dist[0] - 0.5) <= 1e-12);
  CHECK(std::abs(dist[1] - 0.5) <= 1e-12);
}

TEST_CASE("tactic entries: pure-vote appends voters, w-analog sets the joint state") {
  const Scenario sc = from_string("candidates: a b c\n"
                                  "constitution: qmr3\n"
                                  "tactic: w-analog voters=3 preferred=a>b>c other=c>b>a\n");
  const Profile profile = scenario_profile(sc);
  CHECK_FALSE(profile.is_product());
  CHECK(profile.num_voters() == 3);

  const Scenario sc2 = from_string("candidates: a b c\n"
                                   "constitution: qmr2\n"
                                   "voter: pure 1 a>b>c\n"
                                   "tactic: pure-vote -0.70710678118654752 b>a>c; "
                                   "0.70710678118654752 c>b>a\n");
  CHECK(sc2.voters.size() == 2);
}

TEST_CASE("check runner: qmr exhaustive strict family") {
  CheckConfig config;
  config.constitution = "qmr";
  config.exhaustive = true;
  const CheckResult result = run_check(config);
  CHECK(result.text.find("unanimity: pass") != std::string::npos);
  CHECK(result.text.find("transitivity: pass") != std::string::npos);
  CHECK(result.text.find("non-dictatorship: pass") != std::string::npos);
  // per-pair QIIA genuinely fails for qmr on this family
  CHECK(result.text.find("qiia: FAIL") != std::string::npos);
  CHECK_FALSE(result.all_pass);

  config.constitution = "broken-constant";
  const CheckResult bad = run_check(config);
  CHECK_FALSE(bad.all_pass);
  CHECK(bad.text.find("unanimity: FAIL") != std::string::npos);
  CHECK(bad.text.find("counterexample") != std::string::npos);
}

TEST_CASE("check runner: random families are byte-reproducible") {
  CheckConfig config;
  config.constitution = "qmr";
  config.random_count = 20;
  config.seed = 7;
  config.format = OutputFormat::Records;
  const CheckResult r1 = run_check(config);
  const CheckResult r2 = run_check(config);
  CHECK(r1.text == r2.text);
  CHECK(r1.text.find("property=unanimity result=pass") != std::string::npos);
  CHECK(r1.text.find("property=qiia result=pass") != std::string::npos);
  CHECK(r1.text.find("property=transitivity result=pass") != std::string::npos);
  // full-support random states satisfy both dictatorship implications
  // vacuously, so the family cannot clear any voter
  CHECK(r1.text.find("property=non-dictatorship result=fail") != std::string::npos);
  CHECK_FALSE(r1.all_pass);
}

TEST_CASE("check runner refuses over-budget families outright") {
  CheckConfig config;
  config.constitution = "qmr";
  config.exhaustive = true;
  config.num_voters = 3;
  config.budget = 100; // 6^3 = 216 > 100
  CHECK_THROWS_AS(run_check(config), BudgetExceeded);
}

TEST_CASE("demo registry") {
  for (const auto& name : demo_names()) {
    if (name == "w-state" || name == "entangle-product") continue; // sampled; covered below
    const DemoResult result = run_demo(name, 200, BasisMode::Strict, 42);
    INFO(name, ": ", result.text);
    CHECK(result.pass);
  }
  const DemoResult w = run_demo("w-state", 500, BasisMode::Strict, 42);
  CHECK(w.pass);
  const DemoResult e = run_demo("entangle-product", 2000, BasisMode::Strict, 42);
  CHECK(e.pass);
  CHECK_THROWS_AS(run_demo("nope", 0, BasisMode::Strict, 0), Error);
}
