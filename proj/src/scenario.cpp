#include "qvote/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qvote {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& text) {
  size_t used = 0;
  double v;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + text + "'");
  }
  if (used != text.size()) throw ParseError("bad number '" + text + "'");
  return v;
}

uint64_t parse_u64(const std::string& text) {
  size_t used = 0;
  uint64_t v;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad unsigned integer '" + text + "'");
  }
  if (used != text.size()) throw ParseError("bad unsigned integer '" + text + "'");
  return v;
}

} // namespace

Complex parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty amplitude");
  if (text.back() != 'i') return Complex(parse_double(text), 0.0);
  // split "re+imi" / "re-imi" / "imi" at the last sign not part of an exponent
  const std::string body = text.substr(0, text.size() - 1);
  for (size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      const std::string re = body.substr(0, pos);
      std::string im = body.substr(pos);
      if (im == "+") im = "1";
      if (im == "-") im = "-1";
      return Complex(parse_double(re), parse_double(im));
    }
  }
  std::string im = body;
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex(0.0, parse_double(im));
}

namespace {

// "<amp> <order>" terms separated by ';'
std::vector<OrderAmplitude> parse_amp_terms(const std::string& text) {
  std::vector<OrderAmplitude> out;
  for (const auto& term : split(text, ';')) {
    const auto parts = split_ws(term);
    if (parts.size() != 2) throw ParseError("expected '<amplitude> <order>', got '" + term + "'");
    out.push_back({parts[1], parse_complex(parts[0])});
  }
  if (out.empty()) throw ParseError("empty amplitude list");
  return out;
}

TacticSpec parse_tactic(const std::string& value) {
  auto parts = split_ws(value);
  if (parts.empty()) throw ParseError("tactic entry is empty");
  TacticSpec spec;
  const std::string kind = parts.front();
  if (kind == "pure-vote") {
    spec.kind = TacticKind::PureVote;
  } else if (kind == "opposition-pair") {
    spec.kind = TacticKind::OppositionPair;
  } else if (kind == "party-line") {
    spec.kind = TacticKind::PartyLine;
  } else if (kind == "w-analog") {
    spec.kind = TacticKind::WAnalog;
  } else {
    throw ParseError("unknown tactic kind '" + kind + "'");
  }
  std::string rest = trim(value.substr(kind.size()));
  // leading key=value options
  while (true) {
    const auto tokens = split_ws(rest);
    if (tokens.empty()) break;
    const auto& tok = tokens.front();
    const auto eq = tok.find('=');
    bool consumed = false;
    if (eq != std::string::npos) {
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "voters") {
        spec.members = static_cast<int>(parse_u64(val));
        consumed = true;
      } else if (key == "preferred") {
        spec.preferred = val;
        consumed = true;
      } else if (key == "other") {
        spec.other = val;
        consumed = true;
      }
    }
    if (!consumed) break;
    rest = trim(rest.substr(rest.find(tok) + tok.size()));
  }
  if (spec.kind == TacticKind::WAnalog) {
    if (spec.preferred.empty() || spec.other.empty()) {
      throw ParseError("w-analog needs preferred=<order> other=<order>");
    }
    if (!rest.empty()) throw ParseError("unexpected trailing text in w-analog tactic");
  } else {
    spec.coeffs = parse_amp_terms(rest);
  }
  return spec;
}

} // namespace

Scenario parse_scenario(std::istream& in) {
  Scenario sc;
  bool have_candidates = false, have_mode = false, have_constitution = false;
  bool have_seed = false, have_samples = false, have_policy = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    try {
      if (key == "candidates") {
        if (have_candidates) throw ParseError("duplicate 'candidates'");
        sc.candidate_labels = split_ws(value);
        have_candidates = true;
      } else if (key == "mode") {
        if (have_mode) throw ParseError("duplicate 'mode'");
        if (value == "strict") {
          sc.mode = BasisMode::Strict;
        } else if (value == "weak") {
          sc.mode = BasisMode::Weak;
        } else {
          throw ParseError("mode must be 'strict' or 'weak'");
        }
        have_mode = true;
      } else if (key == "constitution") {
        if (have_constitution) throw ParseError("duplicate 'constitution'");
        if (value == "qmr") {
          sc.constitution = ConstitutionKind::Qmr;
        } else if (value == "qmr2") {
          sc.constitution = ConstitutionKind::Qmr2;
        } else if (value == "qmr3") {
          sc.constitution = ConstitutionKind::Qmr3;
        } else if (value == "classical-mr") {
          sc.constitution = ConstitutionKind::ClassicalMr;
        } else {
          throw ParseError("unknown constitution '" + value + "'");
        }
        have_constitution = true;
      } else if (key == "seed") {
        if (have_seed) throw ParseError("duplicate 'seed'");
        sc.seed = parse_u64(value);
        have_seed = true;
      } else if (key == "samples") {
        if (have_samples) throw ParseError("duplicate 'samples'");
        sc.samples = static_cast<int>(parse_u64(value));
        have_samples = true;
      } else if (key == "cycle-policy") {
        if (have_policy) throw ParseError("duplicate 'cycle-policy'");
        if (value == "error") {
          sc.cycle_policy = CyclePolicy::Error;
        } else if (value == "all-equal") {
          sc.cycle_policy = CyclePolicy::AllEqual;
        } else {
          throw ParseError("cycle-policy must be 'error' or 'all-equal'");
        }
        have_policy = true;
      } else if (key == "voter") {
        const auto sp = value.find(' ');
        if (sp == std::string::npos) throw ParseError("voter entry needs 'pure' or 'mixed'");
        const std::string kind = value.substr(0, sp);
        const std::string terms = trim(value.substr(sp));
        if (kind == "pure") {
          sc.voters.emplace_back(PureVoterSpec{parse_amp_terms(terms)});
        } else if (kind == "mixed") {
          MixedVoterSpec mv;
          for (const auto& term : split(terms, ';')) {
            const auto parts = split_ws(term);
            if (parts.size() != 2) {
              throw ParseError("expected '<weight> <order>', got '" + term + "'");
            }
            mv.weights.emplace_back(parts[1], parse_double(parts[0]));
          }
          sc.voters.emplace_back(std::move(mv));
        } else {
          throw ParseError("voter entry needs 'pure' or 'mixed'");
        }
      } else if (key == "joint") {
        const auto sp = value.find(' ');
        if (sp == std::string::npos || value.substr(0, sp) != "pure") {
          throw ParseError("joint entry must start with 'pure'");
        }
        for (const auto& term : split(trim(value.substr(sp)), ';')) {
          const auto parts = split_ws(term);
          if (parts.size() != 2) {
            throw ParseError("expected '<amplitude> <order,order,...>', got '" + term + "'");
          }
          JointTerm jt;
          jt.amplitude = parse_complex(parts[0]);
          jt.orders = split(parts[1], ',');
          sc.joint_terms.push_back(std::move(jt));
        }
      } else if (key == "tactic") {
        TacticSpec spec = parse_tactic(value);
        if (spec.kind == TacticKind::PureVote) {
          sc.voters.emplace_back(PureVoterSpec{spec.coeffs});
        } else {
          if (sc.joint_tactic) throw ParseError("more than one entangled tactic");
          sc.joint_tactic = std::move(spec);
        }
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_candidates) throw ParseError("scenario is missing 'candidates'");
  if (!have_constitution) throw ParseError("scenario is missing 'constitution'");
  const bool has_voters = !sc.voters.empty();
  if (has_voters == sc.has_joint()) {
    throw ParseError("scenario needs exactly one of a voter list or a joint state");
  }
  if (!sc.joint_terms.empty() && sc.joint_tactic) {
    throw ParseError("scenario has both joint terms and an entangled tactic");
  }
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

PreferenceBasis scenario_basis(const Scenario& scenario) {
  return enumerate_basis(CandidateSet(scenario.candidate_labels), scenario.mode);
}

namespace {

Eigen::VectorXcd amplitudes_on_basis(const std::vector<OrderAmplitude>& terms,
                                     const PreferenceBasis& basis, const char* what) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
  for (const auto& [text, amp] : terms) {
    const int idx = basis.index_of_text(text);
    if (v(idx) != Complex(0.0, 0.0)) throw ParseError("duplicate order '" + text + "'");
    v(idx) = amp;
  }
  const double norm_sq = v.squaredNorm();
  if (norm_sq <= 0.0) throw ParseError(std::string(what) + " amplitudes are all zero");
  if (std::abs(norm_sq - 1.0) > tol::kState) {
    std::cerr << "note: " << what << " amplitudes renormalized (sum |c|^2 = "
              << format_real(norm_sq) << ")\n";
  }
  return v / std::sqrt(norm_sq);
}

VoterState build_voter(const std::variant<PureVoterSpec, MixedVoterSpec>& spec,
                       const PreferenceBasis& basis) {
  if (std::holds_alternative<PureVoterSpec>(spec)) {
    return StateVector(amplitudes_on_basis(std::get<PureVoterSpec>(spec).terms, basis, "voter"),
                       1, basis.dim());
  }
  const auto& mixed = std::get<MixedVoterSpec>(spec);
  std::vector<double> weights(basis.dim(), 0.0);
  double total = 0.0;
  for (const auto& [text, w] : mixed.weights) {
    if (w < 0.0) throw ParseError("mixed weights must be nonnegative");
    const int idx = basis.index_of_text(text);
    if (weights[idx] != 0.0) throw ParseError("duplicate order '" + text + "'");
    weights[idx] = w;
    total += w;
  }
  if (total <= 0.0) throw ParseError("mixed weights are all zero");
  if (std::abs(total - 1.0) > tol::kState) {
    std::cerr << "note: mixed weights renormalized (sum = " << format_real(total) << ")\n";
  }
  for (double& w : weights) w /= total;
  return DensityOperator::from_diagonal(weights, 1, basis.dim());
}

} // namespace

Profile scenario_profile(const Scenario& scenario) {
  const PreferenceBasis basis = scenario_basis(scenario);
  if (scenario.joint_tactic) {
    return build_profile(*scenario.joint_tactic, basis);
  }
  if (!scenario.joint_terms.empty()) {
    const int n = static_cast<int>(scenario.joint_terms.front().orders.size());
    if (n < 1) throw ParseError("joint term needs at least one order");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(joint_dim(basis.dim(), n));
    for (const auto& term : scenario.joint_terms) {
      if (static_cast<int>(term.orders.size()) != n) {
        throw ParseError("joint terms disagree on the number of voters");
      }
      std::vector<int> tuple;
      tuple.reserve(n);
      for (const auto& text : term.orders) tuple.push_back(basis.index_of_text(text));
      const int64_t idx = encode_joint_index(tuple, basis.dim());
      if (v(idx) != Complex(0.0, 0.0)) throw ParseError("duplicate joint term");
      v(idx) = term.amplitude;
    }
    const double norm_sq = v.squaredNorm();
    if (norm_sq <= 0.0) throw ParseError("joint amplitudes are all zero");
    if (std::abs(norm_sq - 1.0) > tol::kState) {
      std::cerr << "note: joint amplitudes renormalized (sum |c|^2 = " << format_real(norm_sq)
                << ")\n";
    }
    return Profile::entangled(basis,
                              StateVector(v / std::sqrt(norm_sq), n, basis.dim()));
  }
  std::vector<VoterState> voters;
  voters.reserve(scenario.voters.size());
  for (const auto& spec : scenario.voters) voters.push_back(build_voter(spec, basis));
  return Profile::product(basis, std::move(voters));
}

std::vector<WeakOrder> scenario_votes(const Scenario& scenario, const PreferenceBasis& basis) {
  const Profile profile = scenario_profile(scenario);
  std::vector<WeakOrder> votes;
  for (int v = 1; v <= profile.num_voters(); ++v) {
    const auto w = profile.dephased_weights(v);
    const auto it = std::max_element(w.begin(), w.end());
    if (*it < 1.0 - tol::kState) {
      throw ParseError("classical-mr needs basis-state voters (voter " + std::to_string(v) +
                       " is a superposition or mixture)");
    }
    votes.push_back(basis.order(static_cast<int>(it - w.begin())));
  }
  return votes;
}

// --- reports ---------------------------------------------------------------

namespace {

std::string meta_block(const Scenario& sc, const PreferenceBasis& basis, int voters,
                       OutputFormat format) {
  std::ostringstream out;
  std::string cand;
  for (const auto& l : basis.candidates().labels()) {
    if (!cand.empty()) cand += format == OutputFormat::Records ? "," : " ";
    cand += l;
  }
  if (format == OutputFormat::Records) {
    out << "record=meta constitution=" << constitution_kind_name(sc.constitution)
        << " mode=" << basis_mode_name(sc.mode) << " candidates=" << cand << " voters=" << voters
        << " dim=" << basis.dim() << " seed=" << sc.seed << "\n";
  } else {
    out << "constitution: " << constitution_kind_name(sc.constitution) << "\n"
        << "mode: " << basis_mode_name(sc.mode) << "\n"
        << "candidates: " << cand << "\n"
        << "voters: " << voters << "\n"
        << "dim: " << basis.dim() << "\n";
  }
  return out.str();
}

std::string distribution_block(const std::vector<double>& dist, const PreferenceBasis& basis,
                               OutputFormat format, const char* title) {
  std::ostringstream out;
  if (format == OutputFormat::Text) out << title << ":\n";
  for (int i = 0; i < basis.dim(); ++i) {
    if (dist[i] <= 0.0) continue;
    if (format == OutputFormat::Records) {
      out << "record=prob order=" << basis.order_text(i) << " p=" << format_real(dist[i]) << "\n";
    } else {
      out << "  " << basis.order_text(i) << "  " << format_real(dist[i]) << "\n";
    }
  }
  return out.str();
}

std::string amplitude_block(const StateVector& psi, const PreferenceBasis& basis,
                            OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Text) out << "society amplitudes:\n";
  for (int i = 0; i < basis.dim(); ++i) {
    const Complex a = psi.amplitude(i);
    if (std::abs(a) <= tol::kRepro) continue;
    if (format == OutputFormat::Records) {
      out << "record=amp order=" << basis.order_text(i) << " re=" << format_real(a.real())
          << " im=" << format_real(a.imag()) << "\n";
    } else {
      out << "  " << basis.order_text(i) << "  " << format_complex(a) << "\n";
    }
  }
  return out.str();
}

std::string frequency_block(const std::vector<int64_t>& counts, int64_t total,
                            const PreferenceBasis& basis, OutputFormat format, uint64_t seed) {
  std::ostringstream out;
  if (format == OutputFormat::Text) {
    out << "samples (n=" << total << ", seed=" << seed << "):\n";
  }
  for (int i = 0; i < basis.dim(); ++i) {
    if (counts[i] == 0) continue;
    const double p = static_cast<double>(counts[i]) / static_cast<double>(total);
    if (format == OutputFormat::Records) {
      out << "record=freq order=" << basis.order_text(i) << " count=" << counts[i]
          << " p=" << format_real(p) << "\n";
    } else {
      out << "  " << basis.order_text(i) << "  " << counts[i] << "  " << format_real(p) << "\n";
    }
  }
  return out.str();
}

// Draws `samples` society-level outcomes for any constitution.
std::vector<int64_t> sample_outcomes(const Scenario& sc, const PreferenceBasis& basis,
                                     int samples) {
  std::vector<int64_t> counts(basis.dim(), 0);
  RngStream rng(sc.seed);
  switch (sc.constitution) {
  case ConstitutionKind::Qmr: {
    const auto outcome = qmr(scenario_profile(sc));
    for (int s = 0; s < samples; ++s) counts[rng.categorical(outcome.distribution)]++;
    break;
  }
  case ConstitutionKind::Qmr2: {
    const auto outcome = qmr2(scenario_profile(sc));
    for (int s = 0; s < samples; ++s) counts[rng.categorical(outcome.distribution)]++;
    break;
  }
  case ConstitutionKind::Qmr3: {
    // each election is one independent draw from the exact outcome
    // distribution (tie-break randomness included), so sample from that
    const auto dist = qmr3_distribution(scenario_profile(sc));
    for (int s = 0; s < samples; ++s) counts[rng.categorical(dist)]++;
    break;
  }
  case ConstitutionKind::ClassicalMr: {
    const auto votes = scenario_votes(sc, basis);
    const WeakOrder result =
        classical_mr(votes, basis.candidates().size(), sc.cycle_policy);
    counts[basis.index_of(result)] += samples;
    break;
  }
  }
  return counts;
}

} // namespace

std::string run_report(const Scenario& sc, OutputFormat format) {
  const PreferenceBasis basis = scenario_basis(sc);
  std::ostringstream out;
  switch (sc.constitution) {
  case ConstitutionKind::Qmr: {
    const Profile profile = scenario_profile(sc);
    out << meta_block(sc, basis, profile.num_voters(), format);
    const auto outcome = qmr(profile);
    out << distribution_block(outcome.distribution, basis, format, "exact distribution");
    break;
  }
  case ConstitutionKind::Qmr2: {
    const Profile profile = scenario_profile(sc);
    out << meta_block(sc, basis, profile.num_voters(), format);
    const auto outcome = qmr2(profile); // may throw RevoteRequired
    out << amplitude_block(*outcome.pure, basis, format);
    out << distribution_block(outcome.distribution, basis, format, "exact distribution");
    break;
  }
  case ConstitutionKind::Qmr3: {
    const Profile profile = scenario_profile(sc);
    out << meta_block(sc, basis, profile.num_voters(), format);
    const auto dist = qmr3_distribution(profile);
    out << distribution_block(dist, basis, format, "exact distribution");
    break;
  }
  case ConstitutionKind::ClassicalMr: {
    const auto votes = scenario_votes(sc, basis);
    out << meta_block(sc, basis, static_cast<int>(votes.size()), format);
    const WeakOrder result =
        classical_mr(votes, basis.candidates().size(), sc.cycle_policy); // may throw CycleError
    if (format == OutputFormat::Records) {
      out << "record=order order=" << format_order(result, basis.candidates()) << "\n";
    } else {
      out << "outcome: " << format_order(result, basis.candidates()) << "\n";
    }
    break;
  }
  }
  if (sc.samples > 0) {
    out << frequency_block(sample_outcomes(sc, basis, sc.samples), sc.samples, basis, format,
                           sc.seed);
  }
  return out.str();
}

std::string sample_report(const Scenario& sc, OutputFormat format, int samples) {
  if (samples <= 0) throw Error("sample count must be positive");
  const PreferenceBasis basis = scenario_basis(sc);
  std::ostringstream out;
  out << meta_block(sc, basis,
                    sc.has_joint() ? scenario_profile(sc).num_voters()
                                   : static_cast<int>(sc.voters.size()),
                    format);
  out << frequency_block(sample_outcomes(sc, basis, samples), samples, basis, format, sc.seed);
  return out.str();
}

// --- property checking -------------------------------------------------------

namespace {

std::string render_report(const PropertyReport& r, OutputFormat format) {
  if (format == OutputFormat::Text) return r.to_text() + "\n";
  std::ostringstream out;
  out << "record=check property=" << r.property << " result=" << (r.pass ? "pass" : "fail")
      << " profiles=" << r.profiles_checked;
  if (!r.voters.empty()) {
    out << " dictators=";
    bool first = true;
    for (const auto& v : r.voters) {
      if (!v.dictator) continue;
      if (!first) out << ",";
      out << v.voter;
      first = false;
    }
    if (first) out << "none";
  }
  out << "\n";
  if (r.counterexample) {
    out << "record=counterexample property=" << r.property << " detail=\""
        << r.counterexample->description << "\"\n";
  }
  return out.str();
}

} // namespace

CheckResult run_check(const CheckConfig& config) {
  if (config.num_candidates < 1 || config.num_candidates > 26) {
    throw Error("check supports 1..26 candidates");
  }
  std::vector<std::string> labels;
  for (int i = 0; i < config.num_candidates; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  const PreferenceBasis basis = enumerate_basis(CandidateSet(labels), config.mode);

  Constitution constitution;
  bool pure_only = false;
  if (config.constitution == "qmr") {
    constitution = make_qmr();
  } else if (config.constitution == "qmr2") {
    constitution = make_qmr2();
    pure_only = true;
  } else if (config.constitution == "qmr3") {
    constitution = make_qmr3();
  } else if (config.constitution == "classical-mr") {
    constitution = make_classical_mr_lifted();
    if (!config.exhaustive) {
      throw Error("classical-mr checking needs --exhaustive (basis-state profiles)");
    }
  } else if (config.constitution == "broken-constant") {
    constitution = make_broken_constant();
  } else {
    throw Error("unknown constitution '" + config.constitution + "'");
  }

  std::vector<Profile> family;
  std::string family_desc;
  if (config.exhaustive) {
    int64_t size = 1;
    for (int v = 0; v < config.num_voters; ++v) {
      size *= basis.dim();
      if (size > config.budget) {
        throw BudgetExceeded("exhaustive family has " + std::to_string(basis.dim()) + "^" +
                             std::to_string(config.num_voters) + " profiles, over the budget of " +
                             std::to_string(config.budget) + "; raise --budget to proceed");
      }
    }
    family = exhaustive_basis_profiles(basis, config.num_voters);
    family_desc = "exhaustive";
  } else if (config.random_count > 0) {
    if (config.random_count > config.budget) {
      throw BudgetExceeded("random family of " + std::to_string(config.random_count) +
                           " profiles is over the budget of " + std::to_string(config.budget));
    }
    family = random_profiles(basis, config.num_voters, config.random_count,
                             pure_only ? StateKind::Pure : StateKind::Both, config.seed);
    family_desc = "random(seed=" + std::to_string(config.seed) + ")";
  } else {
    throw Error("check needs --exhaustive or --random <count>");
  }

  CheckResult result;
  std::ostringstream out;
  if (config.format == OutputFormat::Records) {
    out << "record=check-meta constitution=" << config.constitution
        << " mode=" << basis_mode_name(config.mode) << " candidates=" << config.num_candidates
        << " voters=" << config.num_voters << " family=" << family_desc
        << " profiles=" << family.size() << "\n";
  } else {
    out << "checking " << config.constitution << " (" << basis_mode_name(config.mode) << ", M="
        << config.num_candidates << ", N=" << config.num_voters << ", " << family_desc
        << " family of " << family.size() << " profiles)\n";
  }
  result.all_pass = true;
  for (const auto& report :
       {check_unanimity(constitution, family), check_qiia(constitution, family),
        check_transitivity(constitution, family), check_dictatorship(constitution, family)}) {
    result.all_pass = result.all_pass && report.pass;
    out << render_report(report, config.format);
  }
  result.text = out.str();
  return result;
}

// --- named reproductions -------------------------------------------------------

namespace {

struct DemoWriter {
  std::ostringstream out;
  bool pass = true;

  void line(const std::string& what, double expected, double computed, double tolerance) {
    const double dev = std::abs(expected - computed);
    const bool ok = dev <= tolerance;
    pass = pass && ok;
    out << what << ": expected " << format_real(expected) << " computed "
        << format_real(computed) << " |dev| " << format_real(dev) << " tol "
        << format_real(tolerance) << (ok ? " ok" : " MISMATCH") << "\n";
  }

  void check(const std::string& what, bool ok) {
    pass = pass && ok;
    out << what << ": " << (ok ? "ok" : "MISMATCH") << "\n";
  }

  void note(const std::string& text) { out << text << "\n"; }
};

PreferenceBasis abc_basis(BasisMode mode) {
  return enumerate_basis(CandidateSet({"a", "b", "c"}), mode);
}

// interference demo profiles (three voters, candidates a, b, c)
Profile qmr2_profile_p(const PreferenceBasis& basis) {
  const double r = 1.0 / std::sqrt(2.0);
  return build_product_profile(
      {
          {{"a>b>c", 1.0}},
          {{"b>a>c", r}, {"a>c>b", r}},
          {{"b>a>c", r}, {"c>b>a", r}},
      },
      basis);
}

Profile qmr2_profile_p_prime(const PreferenceBasis& basis) {
  const double r = 1.0 / std::sqrt(2.0);
  return build_product_profile(
      {
          {{"a>b>c", 1.0}},
          {{"b>a>c", r}, {"a>c>b", r}},
          {{"b>a>c", -r}, {"c>b>a", r}},
      },
      basis);
}

// Two voters whose per-term superpositions cancel exactly: every product
// term ties all three pairs, so each maps to the same uniform
// superposition, and the amplitudes sum to zero.
Profile revote_profile(const PreferenceBasis& basis) {
  const double r = 1.0 / std::sqrt(2.0);
  return build_product_profile(
      {
          {{"a>b>c", r}, {"a>c>b", r}},
          {{"c>b>a", r}, {"b>c>a", -r}},
      },
      basis);
}

DemoResult demo_fig1(BasisMode mode) {
  DemoWriter w;
  const CandidateSet cands({"a", "b", "c", "d"});
  const PreferenceBasis basis = enumerate_basis(cands, mode);
  std::vector<WeakOrder> votes = {parse_order("b>a>c>d", cands), parse_order("a>c>b>d", cands)};
  const auto graph = build_majority_digraph(votes, 4);
  w.note("votes: b>a>c>d, a>c>b>d");
  w.note(to_dot(graph, cands));
  const int a = cands.index("a"), b = cands.index("b"), c = cands.index("c"),
            d = cands.index("d");
  w.check("two-way edge a<->b", graph.edge(a, b) && graph.edge(b, a));
  w.check("two-way edge b<->c", graph.edge(b, c) && graph.edge(c, b));
  w.check("one-way edge a->c", graph.edge(a, c) && !graph.edge(c, a));
  w.check("one-way edges into d", graph.edge(a, d) && graph.edge(b, d) && graph.edge(c, d) &&
                                      !graph.edge(d, a) && !graph.edge(d, b) && !graph.edge(d, c));
  const auto sccs = tarjan_scc(graph);
  w.check("components in preference order ({a,b,c},{d})",
          sccs.components == std::vector<std::vector<int>>{{a, b, c}, {d}});
  return {w.out.str(), w.pass};
}

DemoResult demo_eq6(BasisMode mode) {
  DemoWriter w;
  const CandidateSet cands({"a", "b", "c", "d"});
  const PreferenceBasis basis = enumerate_basis(cands, mode);
  const std::vector<int> tuple = {basis.index_of_text("b>a>c>d"), basis.index_of_text("a>c>b>d")};
  const DensityOperator rho = qmr_basis_term(tuple, basis);
  const auto diag = rho.diagonal();
  std::vector<std::string> expected_orders;
  double expected_weight = 0.0;
  if (mode == BasisMode::Strict) {
    expected_orders = {"a>b>c>d", "b>a>c>d", "a>c>b>d"};
    expected_weight = 1.0 / 3.0;
  } else {
    expected_orders = {"a>b>c>d", "b>a>c>d", "a>c>b>d", "a=b>c>d", "a>b=c>d"};
    expected_weight = 1.0 / 5.0;
  }
  double covered = 0.0;
  for (const auto& text : expected_orders) {
    const int idx = basis.index_of_text(text);
    w.line("weight(" + text + ")", expected_weight, diag[idx], tol::kRepro);
    covered += diag[idx];
  }
  w.line("weight outside the expected support", 0.0, rho.trace() - covered, tol::kRepro);
  return {w.out.str(), w.pass};
}

// Gates on the demo's reference values: the uniform outcome mixture and the
// absence of a dictator. The full evidence bundle (including the per-pair
// QIIA counterexample the exhaustive check finds) is printed alongside.
DemoResult demo_arrow(BasisMode mode) {
  const ArrowRecord record = arrow_disproof(mode);
  DemoWriter w;
  w.note(record.to_text());
  w.line("max deviation from uniform 1/" + std::to_string(record.dim), 0.0,
         record.max_uniform_deviation, tol::kRepro);
  w.check("no dictator among the three voters", record.dictatorship.pass);
  w.check("output is a valid transitive-support state", record.transitivity.pass);
  return {w.out.str(), w.pass};
}

DemoResult demo_qmr2_p(BasisMode mode) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  const auto outcome = qmr2(qmr2_profile_p(basis));
  w.line("p(b>a>c)", 2.0 / 3.0, outcome.distribution[basis.index_of_text("b>a>c")], tol::kRepro);
  w.line("p(a>b>c)", 1.0 / 6.0, outcome.distribution[basis.index_of_text("a>b>c")], tol::kRepro);
  w.line("p(a>c>b)", 1.0 / 6.0, outcome.distribution[basis.index_of_text("a>c>b")], tol::kRepro);
  return {w.out.str(), w.pass};
}

DemoResult demo_qmr2_p_prime(BasisMode mode) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  const auto outcome = qmr2(qmr2_profile_p_prime(basis));
  const StateVector& psi = *outcome.pure;
  const Complex a_abc = psi.amplitude(basis.index_of_text("a>b>c"));
  const Complex a_acb = psi.amplitude(basis.index_of_text("a>c>b"));
  const Complex a_bac = psi.amplitude(basis.index_of_text("b>a>c"));
  // global phase aligned on the a>b>c amplitude
  const double r = 1.0 / std::sqrt(2.0);
  const Complex phase = a_abc / std::abs(a_abc);
  w.line("|amp(a>b>c)|", r, std::abs(a_abc), tol::kRepro);
  w.line("amp(a>c>b) relative to amp(a>b>c)", -r, (a_acb / phase).real(), tol::kRepro);
  w.line("weight(b>a>c)", 0.0, std::norm(a_bac), tol::kRepro);
  return {w.out.str(), w.pass};
}

DemoResult demo_revote(BasisMode mode) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  bool revote = false;
  try {
    qmr2(revote_profile(basis));
  } catch (const RevoteRequired&) {
    revote = true;
  }
  w.note("profile: voter 1 = (|a>b>c> + |a>c>b>)/sqrt2, voter 2 = (|c>b>a> - |b>c>a>)/sqrt2");
  w.check("complete destructive interference forces a revote", revote);
  return {w.out.str(), w.pass};
}

DemoResult demo_opposition(BasisMode mode, int samples, uint64_t seed) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector pair =
      build_opposition_pair({{"a>b>c", r}, {"c>b>a", r}}, basis);
  RngStream rng(seed);
  int anti = 0;
  for (int s = 0; s < samples; ++s) {
    const auto tuple = decode_joint_index(sample(pair, rng), basis.dim(), 2);
    if (basis.order(tuple[1]) == reverse_order(basis.order(tuple[0]))) ++anti;
  }
  w.note("joint samples: " + std::to_string(samples));
  w.line("anti-correlated fraction", 1.0, static_cast<double>(anti) / samples, 0.0);
  return {w.out.str(), w.pass};
}

DemoResult demo_party_line(int samples, uint64_t seed) {
  DemoWriter w;
  // two candidates: the state reduces to a GHZ pair of branches
  const PreferenceBasis basis = enumerate_basis(CandidateSet({"a", "b"}), BasisMode::Strict);
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector state = build_party_line({{"a>b", r}, {"b>a", r}}, 3, basis);
  const int alpha = basis.index_of_text("a>b");
  const int beta = basis.index_of_text("b>a");
  w.line("amp(|aaa>)", r,
         std::abs(state.amplitude(encode_joint_index({alpha, alpha, alpha}, basis.dim()))),
         tol::kRepro);
  w.line("amp(|bbb>)", r,
         std::abs(state.amplitude(encode_joint_index({beta, beta, beta}, basis.dim()))),
         tol::kRepro);
  RngStream rng(seed);
  int unanimous = 0;
  for (int s = 0; s < samples; ++s) {
    const auto tuple = decode_joint_index(sample(state, rng), basis.dim(), 3);
    if (tuple[0] == tuple[1] && tuple[1] == tuple[2]) ++unanimous;
  }
  w.line("unanimous fraction over " + std::to_string(samples) + " samples", 1.0,
         static_cast<double>(unanimous) / samples, 0.0);
  return {w.out.str(), w.pass};
}

DemoResult demo_w_state(BasisMode mode, int samples, uint64_t seed) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  const Profile profile = build_profile(
      TacticSpec{TacticKind::WAnalog, {}, {}, 3, "a>b>c", "c>b>a"}, basis);
  const auto dist = qmr3_distribution(profile);
  w.line("analytic p(a>b>c)", 1.0, dist[basis.index_of_text("a>b>c")], tol::kRepro);
  w.line("analytic p(c>b>a)", 0.0, dist[basis.index_of_text("c>b>a")], 0.0);
  RngStream rng(seed);
  int beta_wins = 0;
  const WeakOrder beta = basis.order(basis.index_of_text("c>b>a"));
  for (int s = 0; s < samples; ++s) {
    if (qmr3_sample(profile, rng) == beta) ++beta_wins;
  }
  w.line("sampled c>b>a wins out of " + std::to_string(samples), 0.0,
         static_cast<double>(beta_wins), 0.0);
  return {w.out.str(), w.pass};
}

DemoResult demo_entangle_product(BasisMode mode, int samples, uint64_t seed) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  const double ca = std::sqrt(2.0 / 3.0), cb = std::sqrt(1.0 / 3.0);
  std::vector<OrderAmplitude> voter = {{"a>b>c", ca}, {"c>b>a", cb}};
  const Profile profile = build_product_profile({voter, voter, voter}, basis);
  const auto dist = qmr3_distribution(profile);
  w.line("analytic p(a>b>c)", 20.0 / 27.0, dist[basis.index_of_text("a>b>c")], tol::kRepro);
  w.line("analytic p(c>b>a)", 7.0 / 27.0, dist[basis.index_of_text("c>b>a")], tol::kRepro);
  RngStream rng(seed);
  int beta_wins = 0;
  const WeakOrder beta = basis.order(basis.index_of_text("c>b>a"));
  for (int s = 0; s < samples; ++s) {
    if (qmr3_sample(profile, rng) == beta) ++beta_wins;
  }
  // three-sigma band of a Bernoulli(7/27) mean over the sample count
  const double p = 7.0 / 27.0;
  const double band = 3.0 * std::sqrt(p * (1.0 - p) / samples);
  w.line("empirical p(c>b>a), n=" + std::to_string(samples), p,
         static_cast<double>(beta_wins) / samples, band);
  return {w.out.str(), w.pass};
}

DemoResult demo_compare_tactics(BasisMode mode) {
  DemoWriter w;
  const PreferenceBasis basis = abc_basis(mode);
  const double ca = std::sqrt(2.0 / 3.0), cb = std::sqrt(1.0 / 3.0);
  std::vector<OrderAmplitude> voter = {{"a>b>c", ca}, {"c>b>a", cb}};
  TacticSpec product{TacticKind::ProductProfile, {}, {voter, voter, voter}, 3, "", ""};
  TacticSpec entangled{TacticKind::WAnalog, {}, {}, 3, "a>b>c", "c>b>a"};
  const auto cmp = compare_tactics(product, entangled, ConstitutionKind::Qmr3, basis);
  w.line("total-variation distance", 7.0 / 27.0, cmp.tv_distance, tol::kRepro);
  return {w.out.str(), w.pass};
}

} // namespace

std::vector<std::string> demo_names() {
  return {"fig1",   "eq6",        "eq6-weak",   "arrow-disproof",   "qmr2-p",
          "qmr2-pprime", "revote", "opposition", "party-line", "w-state",
          "entangle-product", "compare-tactics"};
}

DemoResult run_demo(const std::string& name, int samples, BasisMode mode, uint64_t seed) {
  if (name == "fig1") return demo_fig1(mode);
  if (name == "eq6") return demo_eq6(BasisMode::Strict);
  if (name == "eq6-weak") return demo_eq6(BasisMode::Weak);
  if (name == "arrow-disproof") return demo_arrow(mode);
  if (name == "qmr2-p") return demo_qmr2_p(mode);
  if (name == "qmr2-pprime") return demo_qmr2_p_prime(mode);
  if (name == "revote") return demo_revote(mode);
  if (name == "opposition") return demo_opposition(mode, samples > 0 ? samples : 1000, seed);
  if (name == "party-line") return demo_party_line(samples > 0 ? samples : 1000, seed);
  if (name == "w-state") return demo_w_state(mode, samples > 0 ? samples : 10000, seed);
  if (name == "entangle-product") {
    return demo_entangle_product(mode, samples > 0 ? samples : 10000, seed);
  }
  if (name == "compare-tactics") return demo_compare_tactics(mode);
  throw Error("unknown demo '" + name + "'; names: fig1, eq6, eq6-weak, arrow-disproof, qmr2-p, "
              "qmr2-pprime, revote, opposition, party-line, w-state, entangle-product, "
              "compare-tactics");
}

} // namespace qvote
