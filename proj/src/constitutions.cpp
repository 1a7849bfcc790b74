#include "qvote/constitutions.hpp"

#include <algorithm>
#include <cmath>

namespace qvote {

namespace {

void check_state_shape(const VoterState& state, int dim) {
  const int arity = std::holds_alternative<StateVector>(state)
                        ? std::get<StateVector>(state).arity()
                        : std::get<DensityOperator>(state).arity();
  const int d = std::holds_alternative<StateVector>(state)
                    ? std::get<StateVector>(state).single_dim()
                    : std::get<DensityOperator>(state).single_dim();
  if (arity != 1) throw Error("per-voter states must have arity 1");
  if (d != dim) throw Error("voter state dimension does not match the basis");
  if (std::holds_alternative<StateVector>(state) && !std::get<StateVector>(state).is_unit()) {
    throw Error("voter states must be normalized");
  }
}

} // namespace

Profile::Profile(PreferenceBasis basis, std::vector<VoterState> voters,
                 std::optional<std::variant<StateVector, DensityOperator>> joint, int n)
    : basis_(std::move(basis)), voters_(std::move(voters)), joint_(std::move(joint)),
      num_voters_(n) {
  if (num_voters_ < 1) throw Error("profile needs at least one voter");
}

Profile Profile::product(PreferenceBasis basis, std::vector<VoterState> voters) {
  for (const auto& v : voters) check_state_shape(v, basis.dim());
  const int n = static_cast<int>(voters.size());
  return Profile(std::move(basis), std::move(voters), std::nullopt, n);
}

Profile Profile::entangled(PreferenceBasis basis, StateVector joint) {
  if (joint.single_dim() != basis.dim()) throw Error("joint state dimension mismatch");
  if (!joint.is_unit()) throw Error("joint state must be normalized");
  const int n = joint.arity();
  return Profile(std::move(basis), {}, std::move(joint), n);
}

Profile Profile::entangled(PreferenceBasis basis, DensityOperator joint) {
  if (joint.single_dim() != basis.dim()) throw Error("joint state dimension mismatch");
  const int n = joint.arity();
  return Profile(std::move(basis), {}, std::move(joint), n);
}

bool Profile::is_pure() const {
  if (is_product()) {
    return std::all_of(voters_.begin(), voters_.end(), [](const VoterState& v) {
      return std::holds_alternative<StateVector>(v);
    });
  }
  return std::holds_alternative<StateVector>(*joint_);
}

DensityOperator Profile::marginal(int voter) const {
  if (voter < 1 || voter > num_voters_) throw Error("voter index out of range");
  if (is_product()) {
    const VoterState& v = voters_[voter - 1];
    if (std::holds_alternative<StateVector>(v)) {
      return DensityOperator::from_pure(std::get<StateVector>(v));
    }
    return std::get<DensityOperator>(v);
  }
  if (std::holds_alternative<StateVector>(*joint_)) {
    return partial_trace(std::get<StateVector>(*joint_), voter);
  }
  return partial_trace(std::get<DensityOperator>(*joint_), voter);
}

std::vector<double> Profile::dephased_weights(int voter) const {
  return born_distribution(marginal(voter));
}

StateVector Profile::joint_pure() const {
  if (!is_pure()) throw NonPureInput("profile contains mixed states");
  if (is_product()) {
    std::vector<StateVector> parts;
    parts.reserve(voters_.size());
    for (const auto& v : voters_) parts.push_back(std::get<StateVector>(v));
    return tensor(parts);
  }
  return std::get<StateVector>(*joint_);
}

std::vector<double> Profile::joint_distribution() const {
  const int d = basis_.dim();
  if (!is_product()) {
    if (std::holds_alternative<StateVector>(*joint_)) {
      return born_distribution(std::get<StateVector>(*joint_));
    }
    return born_distribution(std::get<DensityOperator>(*joint_));
  }
  std::vector<double> dist(1, 1.0);
  for (int v = 1; v <= num_voters_; ++v) {
    const auto w = dephased_weights(v);
    std::vector<double> next(dist.size() * d, 0.0);
    for (size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] == 0.0) continue;
      for (int g = 0; g < d; ++g) next[i * d + g] = dist[i] * w[g];
    }
    dist = std::move(next);
  }
  return dist;
}

// --- classical majority rule -------------------------------------------

namespace {

struct PairTally {
  int gt = 0, lt = 0; // votes for a > b and b > a; EQ counts toward neither
};

std::vector<std::vector<PairTally>> tally_pairs(const std::vector<WeakOrder>& votes, int m) {
  std::vector<std::vector<PairTally>> t(m, std::vector<PairTally>(m));
  for (const auto& v : votes) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        switch (v.relation(a, b)) {
        case Rel::GT: t[a][b].gt++; break;
        case Rel::LT: t[a][b].lt++; break;
        case Rel::EQ: break;
        }
      }
    }
  }
  return t;
}

} // namespace

WeakOrder classical_mr(const std::vector<WeakOrder>& votes, int num_candidates,
                       CyclePolicy policy) {
  if (votes.empty()) throw Error("classical_mr: empty vote list");
  const auto graph = build_majority_digraph(votes, num_candidates);
  const auto sccs = tarjan_scc(graph);
  const auto tally = tally_pairs(votes, num_candidates);

  // A multi-member component is a legitimate tie tier only if each of its
  // pairs has exactly equal majority counts; any strict internal majority
  // means the component came from a cycle.
  bool is_weak_order = true;
  CycleReport report;
  for (const auto& comp : sccs.components) {
    if (comp.size() < 2) continue;
    bool all_tied = true;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (size_t j = i + 1; j < comp.size(); ++j) {
        const auto& t = tally[comp[i]][comp[j]];
        if (t.gt != t.lt) all_tied = false;
        report.involved_pairs.emplace_back(comp[i], comp[j]);
      }
    }
    if (!all_tied) is_weak_order = false;
  }
  if (!is_weak_order && policy == CyclePolicy::Error) {
    report.sccs = sccs;
    throw CycleError(std::move(report));
  }
  return WeakOrder(sccs.components, num_candidates);
}

// --- quantum majority rule ----------------------------------------------

std::vector<std::pair<int, int>> unanimous_pairs(const std::vector<WeakOrder>& votes,
                                                 int num_candidates) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_candidates; ++a) {
    for (int b = 0; b < num_candidates; ++b) {
      if (a == b) continue;
      bool all_gt = true;
      for (const auto& v : votes) {
        if (v.relation(a, b) != Rel::GT) {
          all_gt = false;
          break;
        }
      }
      if (all_gt) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> scc_consistent_orders(const std::vector<WeakOrder>& votes,
                                       const PreferenceBasis& basis) {
  const int m = basis.candidates().size();
  const auto graph = build_majority_digraph(votes, m);
  const auto sccs = tarjan_scc(graph);
  std::vector<int> block(m);
  for (int i = 0; i < static_cast<int>(sccs.components.size()); ++i) {
    for (int c : sccs.components[i]) block[c] = i;
  }
  std::vector<int> out;
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const WeakOrder& w = basis.order(idx);
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      for (int b = a + 1; b < m && ok; ++b) {
        if (block[a] == block[b]) continue; // inside one SCC anything goes
        const Rel want = block[a] < block[b] ? Rel::GT : Rel::LT;
        if (w.relation(a, b) != want) ok = false;
      }
    }
    if (ok) out.push_back(idx);
  }
  return out;
}

namespace {

std::vector<double> qmr_basis_term_diagonal(const std::vector<int>& order_indices,
                                            const PreferenceBasis& basis) {
  std::vector<WeakOrder> votes;
  votes.reserve(order_indices.size());
  for (int idx : order_indices) votes.push_back(basis.order(idx));

  std::vector<int> support = scc_consistent_orders(votes, basis);
  // unanimity projections, one pair at a time
  for (const auto& [a, b] : unanimous_pairs(votes, basis.candidates().size())) {
    std::vector<int> kept;
    for (int idx : support) {
      if (basis.order(idx).relation(a, b) == Rel::GT) kept.push_back(idx);
    }
    support = std::move(kept);
  }
  // Unanimous pairs are jointly satisfiable (they are cut out of total
  // orders), so the projections can never empty the support.
  if (support.empty()) {
    throw ZeroSupportError("unanimity projection emptied the QMR support");
  }
  std::vector<double> diag(basis.dim(), 0.0);
  const double w = 1.0 / static_cast<double>(support.size());
  for (int idx : support) diag[idx] = w;
  return diag;
}

} // namespace

DensityOperator qmr_basis_term(const std::vector<int>& order_indices,
                               const PreferenceBasis& basis) {
  return DensityOperator::from_diagonal(qmr_basis_term_diagonal(order_indices, basis), 1,
                                        basis.dim());
}

SocietyOutcome qmr(const Profile& profile) {
  const PreferenceBasis& basis = profile.basis();
  const int d = basis.dim();
  const int n = profile.num_voters();

  std::vector<std::vector<double>> weights(n);
  for (int v = 1; v <= n; ++v) weights[v - 1] = profile.dephased_weights(v);

  std::vector<double> diag(d, 0.0);
  std::vector<int> tuple(n, 0);
  // odometer over all basis tuples with nonzero product weight
  while (true) {
    double p = 1.0;
    for (int v = 0; v < n; ++v) {
      p *= weights[v][tuple[v]];
      if (p == 0.0) break;
    }
    if (p > 0.0) {
      const auto term = qmr_basis_term_diagonal(tuple, basis);
      for (int i = 0; i < d; ++i) diag[i] += p * term[i];
    }
    int v = n - 1;
    while (v >= 0 && ++tuple[v] == d) tuple[v--] = 0;
    if (v < 0) break;
  }
  DensityOperator rho = DensityOperator::from_diagonal(diag, 1, d);
  auto dist = born_distribution(rho);
  return SocietyOutcome{std::move(rho), std::nullopt, std::move(dist)};
}

SocietyOutcome qmr2(const Profile& profile) {
  if (!profile.is_pure()) {
    throw NonPureInput("qmr2 is defined on pure states only");
  }
  const PreferenceBasis& basis = profile.basis();
  const int d = basis.dim();
  const int n = profile.num_voters();
  const StateVector joint = profile.joint_pure();

  Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(d);
  for (int64_t t = 0; t < joint.dim(); ++t) {
    const Complex c = joint.amplitude(t);
    if (c == Complex(0.0, 0.0)) continue;
    const auto tuple = decode_joint_index(t, d, n);
    std::vector<WeakOrder> votes;
    votes.reserve(n);
    for (int idx : tuple) votes.push_back(basis.order(idx));
    const auto support = scc_consistent_orders(votes, basis);
    const Complex amp = c / std::sqrt(static_cast<double>(support.size()));
    for (int idx : support) xi(idx) += amp;
  }
  const double norm_sq = xi.squaredNorm();
  if (norm_sq <= tol::kSupport) {
    throw RevoteRequired();
  }
  xi /= std::sqrt(norm_sq);
  StateVector pure(std::move(xi), 1, d);
  DensityOperator rho = DensityOperator::from_pure(pure);
  auto dist = born_distribution(pure);
  return SocietyOutcome{std::move(rho), std::move(pure), std::move(dist)};
}

namespace {

// Tallies one joint outcome and spreads its probability over the plurality
// winners.
void add_outcome(std::vector<double>& dist, const std::vector<int>& tuple, double p) {
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  int best = 0;
  std::vector<int> winners;
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const int count = static_cast<int>(j - i);
    if (count > best) {
      best = count;
      winners.clear();
    }
    if (count == best) winners.push_back(sorted[i]);
    i = j;
  }
  const double share = p / static_cast<double>(winners.size());
  for (int w : winners) dist[w] += share;
}

} // namespace

std::vector<double> qmr3_distribution(const Profile& profile) {
  const int d = profile.basis().dim();
  const int n = profile.num_voters();
  const auto joint = profile.joint_distribution();
  std::vector<double> dist(d, 0.0);
  for (int64_t idx = 0; idx < static_cast<int64_t>(joint.size()); ++idx) {
    if (joint[idx] == 0.0) continue;
    add_outcome(dist, decode_joint_index(idx, d, n), joint[idx]);
  }
  return dist;
}

WeakOrder qmr3_sample(const Profile& profile, RngStream& rng) {
  const PreferenceBasis& basis = profile.basis();
  const int d = basis.dim();
  const int n = profile.num_voters();

  std::vector<int> tuple;
  if (profile.is_product()) {
    tuple.reserve(n);
    for (int v = 1; v <= n; ++v) {
      const auto w = profile.dephased_weights(v);
      tuple.push_back(rng.categorical(w));
    }
  } else {
    // a joint measurement keeps the correlations
    const auto joint = profile.joint_distribution();
    tuple = decode_joint_index(rng.categorical(joint), d, n);
  }

  std::vector<int> counts(d, 0);
  for (int idx : tuple) counts[idx]++;
  const int best = *std::max_element(counts.begin(), counts.end());
  std::vector<int> winners;
  for (int i = 0; i < d; ++i) {
    if (counts[i] == best) winners.push_back(i);
  }
  const int pick = winners.size() == 1
                       ? winners.front()
                       : winners[static_cast<size_t>(rng.uniform_below(winners.size()))];
  return basis.order(pick);
}

} // namespace qvote
