#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qvote/graphs.hpp"
#include "qvote/prefs.hpp"
#include "qvote/quantum.hpp"

namespace qvote {

// Society's input: per-voter states over one shared basis, or one joint
// (possibly entangled) state on the N-voter product basis.
using VoterState = std::variant<StateVector, DensityOperator>;

class Profile {
public:
  static Profile product(PreferenceBasis basis, std::vector<VoterState> voters);
  static Profile entangled(PreferenceBasis basis, StateVector joint);
  static Profile entangled(PreferenceBasis basis, DensityOperator joint);

  const PreferenceBasis& basis() const { return basis_; }
  int num_voters() const { return num_voters_; }
  bool is_product() const { return !voters_.empty(); }
  bool is_pure() const; // every voter pure, resp. pure joint state

  const std::vector<VoterState>& voters() const { return voters_; }

  // Voter's quantum preference: the given state (product case) or the
  // reduced state of the joint input. 1-based voter index.
  DensityOperator marginal(int voter) const;

  // Dephased per-voter basis weights p_i^gamma (diagonal of the marginal).
  std::vector<double> dephased_weights(int voter) const;

  // The joint state as a unit vector; throws NonPureInput when any input
  // is mixed.
  StateVector joint_pure() const;

  // Born probabilities of a joint preference-basis measurement, indexed by
  // the joint basis index (voter 1 most significant).
  std::vector<double> joint_distribution() const;

private:
  Profile(PreferenceBasis basis, std::vector<VoterState> voters,
          std::optional<std::variant<StateVector, DensityOperator>> joint, int n);

  PreferenceBasis basis_;
  std::vector<VoterState> voters_;
  std::optional<std::variant<StateVector, DensityOperator>> joint_;
  int num_voters_;
};

// Society's elected quantum preference plus its classical readout.
struct SocietyOutcome {
  DensityOperator rho;                // society's quantum preference (dim D)
  std::optional<StateVector> pure;    // set when the constitution yields a pure state
  std::vector<double> distribution;   // Born probabilities over basis indices
};

// Pairs that prevented a transitive majority outcome.
struct CycleReport {
  SccList sccs;
  std::vector<std::pair<int, int>> involved_pairs; // unordered, within multi-member SCCs
};

class CycleError : public Error {
public:
  explicit CycleError(CycleReport report)
      : Error("majority relation is cyclic"), report_(std::move(report)) {}
  const CycleReport& report() const { return report_; }

private:
  CycleReport report_;
};

enum class CyclePolicy { Error, AllEqual };

// Pairwise majority baseline. Returns the majority weak order when one
// exists (ties only where GT and LT counts match exactly); otherwise the
// cycle policy applies: Error throws CycleError, AllEqual ties every
// multi-member component.
WeakOrder classical_mr(const std::vector<WeakOrder>& votes, int num_candidates,
                       CyclePolicy policy);

// Basis orders compatible with the SCC block order of the given votes:
// across components the block order must be followed strictly; inside a
// component every ordering the basis admits is allowed.
std::vector<int> scc_consistent_orders(const std::vector<WeakOrder>& votes,
                                       const PreferenceBasis& basis);

// Ordered pairs (a, b) ranked a > b by every vote.
std::vector<std::pair<int, int>> unanimous_pairs(const std::vector<WeakOrder>& votes,
                                                 int num_candidates);

// The inner map of quantum majority rule on one tuple of basis elements:
// digraph -> SCC block order -> uniform mixture over compatible basis
// orders -> projection onto every unanimously agreed pair.
DensityOperator qmr_basis_term(const std::vector<int>& order_indices,
                               const PreferenceBasis& basis);

// Quantum majority rule. Entangled inputs are reduced to per-voter
// marginals (the joint correlations are deliberately discarded).
SocietyOutcome qmr(const Profile& profile);

// Interference variant: expands the pure joint state in the product basis,
// maps every term to an equal-amplitude superposition over its compatible
// orders, and sums. Throws RevoteRequired on complete destructive
// interference and NonPureInput for mixed inputs.
SocietyOutcome qmr2(const Profile& profile);

// Sampling variant: measure all voters jointly in the preference basis,
// then return the plurality preference, breaking frequency ties uniformly.
WeakOrder qmr3_sample(const Profile& profile, RngStream& rng);

// Exact outcome distribution of qmr3_sample over basis indices.
std::vector<double> qmr3_distribution(const Profile& profile);

} // namespace qvote
