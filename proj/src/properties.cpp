#include "qvote/properties.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qvote/common.hpp"

namespace qvote {

int pair_index(int a, int b, int num_candidates) {
  if (a == b || a < 0 || b < 0 || a >= num_candidates || b >= num_candidates) {
    throw Error("pair_index: bad candidate pair");
  }
  if (a > b) std::swap(a, b);
  // position of (a, b) among pairs listed row by row
  return a * num_candidates - a * (a + 1) / 2 + (b - a - 1);
}

std::vector<std::pair<int, int>> candidate_pairs(int num_candidates) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_candidates; ++a) {
    for (int b = a + 1; b < num_candidates; ++b) out.emplace_back(a, b);
  }
  return out;
}

SupportPattern support_pattern(const std::vector<double>& basis_weights,
                               const PreferenceBasis& basis) {
  const int m = basis.candidates().size();
  SupportPattern pattern;
  pattern.pairs.resize(candidate_pairs(m).size());
  for (const auto& [a, b] : candidate_pairs(m)) {
    double wgt = 0, wlt = 0, weq = 0;
    for (int i = 0; i < basis.dim(); ++i) {
      switch (basis.order(i).relation(a, b)) {
      case Rel::GT: wgt += basis_weights[i]; break;
      case Rel::LT: wlt += basis_weights[i]; break;
      case Rel::EQ: weq += basis_weights[i]; break;
      }
    }
    pattern.pairs[pair_index(a, b, m)] =
        SupportTriple{wgt > tol::kSupport, wlt > tol::kSupport, weq > tol::kSupport};
  }
  return pattern;
}

SupportPattern support_pattern(const DensityOperator& rho, const PreferenceBasis& basis) {
  return support_pattern(rho.diagonal(), basis);
}

SupportPattern support_pattern(const StateVector& psi, const PreferenceBasis& basis) {
  return support_pattern(born_distribution(psi), basis);
}

namespace {

// Support presence of an ordered pair (a, b) on the a>b subspace.
bool gt_support(const SupportPattern& pattern, int a, int b, int m) {
  const SupportTriple& t = pattern.pairs[pair_index(a, b, m)];
  return a < b ? t.gt : t.lt;
}

std::string pair_text(const PreferenceBasis& basis, int a, int b) {
  return basis.candidates().label(a) + ">" + basis.candidates().label(b);
}

struct EvaluatedProfile {
  SupportPattern society;
  std::vector<SupportPattern> voters;
};

std::vector<EvaluatedProfile> evaluate(const Constitution& constitution,
                                       const std::vector<Profile>& profiles) {
  std::vector<EvaluatedProfile> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) {
    EvaluatedProfile e;
    e.society = support_pattern(constitution(p).rho, p.basis());
    for (int v = 1; v <= p.num_voters(); ++v) {
      e.voters.push_back(support_pattern(p.marginal(v), p.basis()));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string family_note(size_t count) {
  return "verdict covers the checked family of " + std::to_string(count) +
         " profiles, not all states";
}

} // namespace

PropertyReport check_unanimity(const Constitution& constitution,
                               const std::vector<Profile>& profiles) {
  PropertyReport report;
  report.property = "unanimity";
  report.profiles_checked = static_cast<int>(profiles.size());
  report.family_note = family_note(profiles.size());
  const auto evaluated = evaluate(constitution, profiles);
  for (size_t pi = 0; pi < profiles.size(); ++pi) {
    const auto& basis = profiles[pi].basis();
    const int m = basis.candidates().size();
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        bool all = true, none = true;
        for (const auto& voter : evaluated[pi].voters) {
          if (gt_support(voter, a, b, m)) {
            none = false;
          } else {
            all = false;
          }
        }
        const bool soc = gt_support(evaluated[pi].society, a, b, m);
        if (all && !soc) {
          report.counterexample = Counterexample{
              {static_cast<int>(pi)},
              "profile " + std::to_string(pi) + ": every voter supports " +
                  pair_text(basis, a, b) + " but society does not"};
          return report;
        }
        if (none && soc) {
          report.counterexample = Counterexample{
              {static_cast<int>(pi)},
              "profile " + std::to_string(pi) + ": no voter supports " + pair_text(basis, a, b) +
                  " but society does"};
          return report;
        }
      }
    }
  }
  report.pass = true;
  return report;
}

PropertyReport check_qiia(const Constitution& constitution, const std::vector<Profile>& profiles) {
  PropertyReport report;
  report.property = "qiia";
  report.profiles_checked = static_cast<int>(profiles.size());
  report.family_note = family_note(profiles.size());
  const auto evaluated = evaluate(constitution, profiles);
  if (profiles.empty()) {
    report.pass = true;
    return report;
  }
  const auto& basis = profiles.front().basis();
  const int m = basis.candidates().size();
  for (const auto& [a, b] : candidate_pairs(m)) {
    const int pidx = pair_index(a, b, m);
    // key: the voters' support triples on this pair
    std::map<std::vector<std::tuple<bool, bool, bool>>, std::pair<size_t, SupportTriple>> groups;
    for (size_t pi = 0; pi < profiles.size(); ++pi) {
      std::vector<std::tuple<bool, bool, bool>> key;
      key.reserve(evaluated[pi].voters.size());
      for (const auto& voter : evaluated[pi].voters) {
        const auto& t = voter.pairs[pidx];
        key.emplace_back(t.gt, t.lt, t.eq);
      }
      const auto& soc = evaluated[pi].society.pairs[pidx];
      auto [it, inserted] = groups.emplace(std::move(key), std::make_pair(pi, soc));
      if (!inserted && !(it->second.second == soc)) {
        report.counterexample = Counterexample{
            {static_cast<int>(it->second.first), static_cast<int>(pi)},
            "profiles " + std::to_string(it->second.first) + " and " + std::to_string(pi) +
                " give every voter the same support triple on pair (" +
                basis.candidates().label(a) + "," + basis.candidates().label(b) +
                ") yet society's triple differs"};
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

PropertyReport check_transitivity(const Constitution& constitution,
                                  const std::vector<Profile>& profiles) {
  PropertyReport report;
  report.property = "transitivity";
  report.profiles_checked = static_cast<int>(profiles.size());
  report.family_note = family_note(profiles.size());
  for (size_t pi = 0; pi < profiles.size(); ++pi) {
    std::string fault;
    try {
      const SocietyOutcome outcome = constitution(profiles[pi]);
      const auto& rho = outcome.rho;
      if (rho.dim() != profiles[pi].basis().dim() || rho.arity() != 1) {
        fault = "output dimension does not match the preference basis";
      } else if (std::abs(rho.trace() - 1.0) > tol::kState) {
        fault = "output trace is " + format_real(rho.trace());
      } else if (rho.min_eigenvalue() < -tol::kState) {
        fault = "output has eigenvalue " + format_real(rho.min_eigenvalue());
      }
    } catch (const Error& e) {
      // an output the state types refuse to even construct
      fault = std::string("output rejected: ") + e.what();
    }
    if (!fault.empty()) {
      report.counterexample =
          Counterexample{{static_cast<int>(pi)}, "profile " + std::to_string(pi) + ": " + fault};
      return report;
    }
  }
  report.pass = true;
  return report;
}

PropertyReport check_dictatorship(const Constitution& constitution,
                                  const std::vector<Profile>& profiles) {
  PropertyReport report;
  report.property = "non-dictatorship";
  report.profiles_checked = static_cast<int>(profiles.size());
  report.family_note = family_note(profiles.size());
  if (profiles.empty()) {
    report.pass = true;
    return report;
  }
  const auto evaluated = evaluate(constitution, profiles);
  const int n = profiles.front().num_voters();
  const int m = profiles.front().basis().candidates().size();
  bool any_dictator = false;
  for (int voter = 0; voter < n; ++voter) {
    VoterVerdict verdict;
    verdict.voter = voter + 1;
    verdict.dictator = true;
    for (size_t pi = 0; pi < profiles.size() && verdict.dictator; ++pi) {
      for (int a = 0; a < m && verdict.dictator; ++a) {
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          const bool voter_has = gt_support(evaluated[pi].voters[voter], a, b, m);
          const bool soc_has = gt_support(evaluated[pi].society, a, b, m);
          if (voter_has != soc_has) {
            verdict.dictator = false;
            verdict.witness = "profile " + std::to_string(pi) + ", pair " +
                              pair_text(profiles[pi].basis(), a, b) + ": voter " +
                              (voter_has ? "has" : "lacks") + " support, society " +
                              (soc_has ? "has" : "lacks") + " it";
            break;
          }
        }
      }
    }
    any_dictator = any_dictator || verdict.dictator;
    report.voters.push_back(std::move(verdict));
  }
  report.pass = !any_dictator;
  if (any_dictator) {
    for (const auto& v : report.voters) {
      if (v.dictator) {
        report.counterexample = Counterexample{
            {}, "voter " + std::to_string(v.voter) + " dictates society's support pattern"};
        break;
      }
    }
  }
  return report;
}

std::string PropertyReport::to_text() const {
  std::string out = property + ": " + (pass ? "pass" : "FAIL") + " (" +
                    std::to_string(profiles_checked) + " profiles)";
  if (counterexample) {
    out += "\n  counterexample: " + counterexample->description;
  }
  for (const auto& v : voters) {
    out += "\n  voter " + std::to_string(v.voter) + ": " +
           (v.dictator ? "dictator" : "not a dictator");
    if (!v.witness.empty()) out += " (" + v.witness + ")";
  }
  out += "\n  note: " + family_note;
  return out;
}

// --- profile families -----------------------------------------------------

std::vector<Profile> exhaustive_basis_profiles(const PreferenceBasis& basis, int num_voters) {
  const int d = basis.dim();
  std::vector<Profile> out;
  int64_t total = 1;
  for (int v = 0; v < num_voters; ++v) total *= d;
  out.reserve(total);
  std::vector<int> tuple(num_voters, 0);
  while (true) {
    std::vector<VoterState> voters;
    voters.reserve(num_voters);
    for (int idx : tuple) voters.emplace_back(StateVector::basis_state(idx, d));
    out.push_back(Profile::product(basis, std::move(voters)));
    int v = num_voters - 1;
    while (v >= 0 && ++tuple[v] == d) tuple[v--] = 0;
    if (v < 0) break;
  }
  return out;
}

namespace {

// standard normal via Box-Muller on the portable uniform stream
double gaussian(RngStream& rng) {
  double u1 = rng.uniform01();
  while (u1 <= 0.0) u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace

StateVector random_pure_state(int dim, RngStream& rng) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gaussian(rng), gaussian(rng));
  v /= v.norm();
  return StateVector(std::move(v), 1, dim);
}

// Ginibre ensemble: G G^dag normalized to unit trace.
DensityOperator random_mixed_state(int dim, RngStream& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(gaussian(rng), gaussian(rng));
  }
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(std::move(m), 1, dim);
}

std::vector<Profile> random_profiles(const PreferenceBasis& basis, int num_voters, int count,
                                     StateKind kind, uint64_t seed) {
  RngStream root(seed);
  std::vector<Profile> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    RngStream stream = root.substream(i);
    std::vector<VoterState> voters;
    voters.reserve(num_voters);
    for (int v = 0; v < num_voters; ++v) {
      const bool pure = kind == StateKind::Pure ||
                        (kind == StateKind::Both && stream.uniform01() < 0.5);
      if (pure) {
        voters.emplace_back(random_pure_state(basis.dim(), stream));
      } else {
        voters.emplace_back(random_mixed_state(basis.dim(), stream));
      }
    }
    out.push_back(Profile::product(basis, std::move(voters)));
  }
  return out;
}

// --- constitutions packaged for the checkers -------------------------------

Constitution make_qmr() {
  return [](const Profile& p) { return qmr(p); };
}

Constitution make_qmr2() {
  return [](const Profile& p) { return qmr2(p); };
}

Constitution make_qmr3() {
  return [](const Profile& p) {
    auto dist = qmr3_distribution(p);
    DensityOperator rho = DensityOperator::from_diagonal(dist, 1, p.basis().dim());
    return SocietyOutcome{std::move(rho), std::nullopt, std::move(dist)};
  };
}

Constitution make_classical_mr_lifted() {
  return [](const Profile& p) {
    const PreferenceBasis& basis = p.basis();
    const int m = basis.candidates().size();
    std::vector<WeakOrder> votes;
    for (int v = 1; v <= p.num_voters(); ++v) {
      const auto w = p.dephased_weights(v);
      const auto it = std::max_element(w.begin(), w.end());
      if (*it < 1.0 - tol::kState) {
        throw Error("classical-mr lift requires basis-state profiles");
      }
      votes.push_back(basis.order(static_cast<int>(it - w.begin())));
    }
    const WeakOrder result = classical_mr(votes, m, CyclePolicy::AllEqual);
    // A tied result has no strict-basis element; represent it as the
    // uniform mixture over the basis orders refining it.
    std::vector<int> support;
    for (int i = 0; i < basis.dim(); ++i) {
      const WeakOrder& w = basis.order(i);
      bool refines = true;
      for (int a = 0; a < m && refines; ++a) {
        for (int b = a + 1; b < m && refines; ++b) {
          const Rel want = result.relation(a, b);
          if (want != Rel::EQ && w.relation(a, b) != want) refines = false;
          if (want == Rel::EQ && basis.mode() == BasisMode::Weak &&
              w.relation(a, b) != Rel::EQ) {
            refines = false;
          }
        }
      }
      if (refines) support.push_back(i);
    }
    std::vector<double> diag(basis.dim(), 0.0);
    for (int i : support) diag[i] = 1.0 / static_cast<double>(support.size());
    DensityOperator rho = DensityOperator::from_diagonal(diag, 1, basis.dim());
    auto dist = born_distribution(rho);
    return SocietyOutcome{std::move(rho), std::nullopt, std::move(dist)};
  };
}

Constitution make_broken_constant() {
  return [](const Profile& p) {
    StateVector pure = StateVector::basis_state(0, p.basis().dim());
    DensityOperator rho = DensityOperator::from_pure(pure);
    auto dist = born_distribution(rho);
    return SocietyOutcome{std::move(rho), std::move(pure), std::move(dist)};
  };
}

// --- the disproof ----------------------------------------------------------

ArrowRecord arrow_disproof(BasisMode mode) {
  const CandidateSet candidates({"a", "b", "c"});
  const PreferenceBasis basis = enumerate_basis(candidates, mode);
  const int d = basis.dim();

  ArrowRecord record;
  record.mode = mode;
  record.dim = d;

  // the cyclic profile: every pairwise majority points around the cycle
  std::vector<VoterState> voters;
  for (const char* text : {"a>b>c", "c>a>b", "b>c>a"}) {
    voters.emplace_back(StateVector::basis_state(basis.index_of_text(text), d));
  }
  const Profile cyclic = Profile::product(basis, std::move(voters));

  const SocietyOutcome outcome = qmr(cyclic);
  record.outcome_distribution = outcome.distribution;
  const double uniform = 1.0 / static_cast<double>(d);
  for (double p : outcome.distribution) {
    record.max_uniform_deviation = std::max(record.max_uniform_deviation, std::abs(p - uniform));
  }

  auto family = exhaustive_basis_profiles(basis, 3);
  const Constitution qmr_fn = make_qmr();
  record.unanimity = check_unanimity(qmr_fn, family);
  record.qiia = check_qiia(qmr_fn, family);
  record.transitivity = check_transitivity(qmr_fn, family);
  record.dictatorship = check_dictatorship(qmr_fn, family);
  record.conjecture_violated = record.unanimity.pass && record.qiia.pass &&
                               record.transitivity.pass && record.dictatorship.pass &&
                               record.max_uniform_deviation <= tol::kRepro;
  return record;
}

std::string ArrowRecord::to_text() const {
  std::string out = "arrow-disproof (" + std::string(basis_mode_name(mode)) + " mode, dim " +
                    std::to_string(dim) + ")\n";
  out += "cyclic profile outcome: uniform 1/" + std::to_string(dim) +
         ", max deviation " + format_real(max_uniform_deviation) + "\n";
  out += unanimity.to_text() + "\n";
  out += qiia.to_text() + "\n";
  out += transitivity.to_text() + "\n";
  out += dictatorship.to_text() + "\n";
  out += conjecture_violated
             ? "all three postulates hold on this family and nobody dictates\n"
             : "some postulate fails on this family (see the reports above)\n";
  return out;
}

} // namespace qvote
