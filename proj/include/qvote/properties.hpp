#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qvote/constitutions.hpp"

namespace qvote {

struct SupportTriple {
  bool gt = false, lt = false, eq = false;

  bool operator==(const SupportTriple&) const = default;
};

// Per unordered candidate pair (a < b): whether a state has weight above
// tol::kSupport on the a>b, a<b, and a=b subspaces.
struct SupportPattern {
  std::vector<SupportTriple> pairs; // indexed by pair_index(a, b, M)

  bool operator==(const SupportPattern&) const = default;
};

int pair_index(int a, int b, int num_candidates);
std::vector<std::pair<int, int>> candidate_pairs(int num_candidates);

SupportPattern support_pattern(const std::vector<double>& basis_weights,
                               const PreferenceBasis& basis);
SupportPattern support_pattern(const DensityOperator& rho, const PreferenceBasis& basis);
SupportPattern support_pattern(const StateVector& psi, const PreferenceBasis& basis);

using Constitution = std::function<SocietyOutcome(const Profile&)>;

struct Counterexample {
  std::vector<int> profile_indices; // into the checked family (1 or 2 entries)
  std::string description;
};

struct VoterVerdict {
  int voter = 0;
  bool dictator = false;
  std::string witness; // empty for dictators
};

struct PropertyReport {
  std::string property;
  bool pass = false;
  int profiles_checked = 0;
  std::string family_note; // the verdict only certifies this finite family
  std::optional<Counterexample> counterexample;
  std::vector<VoterVerdict> voters; // dictatorship check only

  std::string to_text() const;
};

// Quantum unanimity over a finite profile family: for every profile and
// ordered pair, all-voters-support implies society-supports, and
// no-voter-supports implies society-lacks-support.
PropertyReport check_unanimity(const Constitution& constitution,
                               const std::vector<Profile>& profiles);

// Quantum independence of irrelevant alternatives: per pair, society's
// support triple must be a function of the voters' support triples.
PropertyReport check_qiia(const Constitution& constitution, const std::vector<Profile>& profiles);

// Quantum transitivity: structural, so the check asserts output validity
// (shape, trace, PSD) for every profile.
PropertyReport check_transitivity(const Constitution& constitution,
                                  const std::vector<Profile>& profiles);

// Quantum dictatorship: per-voter verdicts; pass means no voter dictates
// society's support pattern across the whole family.
PropertyReport check_dictatorship(const Constitution& constitution,
                                  const std::vector<Profile>& profiles);

// --- profile families -----------------------------------------------------

// Every assignment of basis elements to voters: dim^N profiles, odometer
// order with voter N fastest.
std::vector<Profile> exhaustive_basis_profiles(const PreferenceBasis& basis, int num_voters);

enum class StateKind { Pure, Mixed, Both };

// Seeded random product profiles. Each voter state is drawn on a random
// support subset (so support patterns actually vary): a Haar-like random
// unit vector for pure states, a Ginibre-style density operator for mixed.
std::vector<Profile> random_profiles(const PreferenceBasis& basis, int num_voters, int count,
                                     StateKind kind, uint64_t seed);

StateVector random_pure_state(int dim, RngStream& rng);
DensityOperator random_mixed_state(int dim, RngStream& rng);

// --- the disproof ----------------------------------------------------------

// Runs quantum majority rule on the three-voter cyclic profile, checks the
// uniform outcome, and verifies all four postulates over the exhaustive
// basis family. Detects that the conjunction (transitivity + unanimity +
// QIIA + no dictator) is satisfiable.
struct ArrowRecord {
  BasisMode mode = BasisMode::Strict;
  int dim = 0;
  std::vector<double> outcome_distribution;
  double max_uniform_deviation = 0.0;
  PropertyReport unanimity, qiia, transitivity, dictatorship;
  bool conjecture_violated = false; // all three postulates hold, nobody dictates

  std::string to_text() const;
};

ArrowRecord arrow_disproof(BasisMode mode);

// Constitutions packaged for the checkers.
Constitution make_qmr();
Constitution make_qmr2();
Constitution make_qmr3();
// classical majority rule on basis-state profiles, cycles tied all-equal
Constitution make_classical_mr_lifted();
// deliberately broken: ignores the profile, returns the first basis state
Constitution make_broken_constant();

} // namespace qvote
