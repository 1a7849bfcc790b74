#pragma once

#include <string>
#include <vector>

#include "qvote/constitutions.hpp"

namespace qvote {

// Amplitude attached to one strict order, keyed by its text encoding.
struct OrderAmplitude {
  std::string order;
  Complex amplitude;
};

enum class TacticKind { PureVote, OppositionPair, PartyLine, WAnalog, ProductProfile };

const char* tactic_kind_name(TacticKind kind);

// Declarative description of one strategic-voting state; also the form the
// scenario files carry.
struct TacticSpec {
  TacticKind kind = TacticKind::PureVote;
  std::vector<OrderAmplitude> coeffs;              // pure-vote / pair / party-line
  std::vector<std::vector<OrderAmplitude>> voters; // product-profile
  int members = 3;                                 // party-line / w-analog arity
  std::string preferred, other;                    // w-analog orders
};

// Coefficients are renormalized when their squared magnitudes miss 1; a
// one-line note goes to stderr so hand-written fixtures stay honest.
StateVector build_pure_vote(const std::vector<OrderAmplitude>& coeffs,
                            const PreferenceBasis& basis);

// Two-voter entangled state pairing every order with its reversal: voter 1
// carries the keyed order, voter 2 votes oppositely.
StateVector build_opposition_pair(const std::vector<OrderAmplitude>& coeffs,
                                  const PreferenceBasis& basis);

// n-voter entangled state with perfectly correlated marginals.
StateVector build_party_line(const std::vector<OrderAmplitude>& coeffs, int members,
                             const PreferenceBasis& basis);

// Symmetric n-voter state with exactly one voter on `other` per term.
StateVector build_w_analog(const std::string& preferred, const std::string& other, int members,
                           const PreferenceBasis& basis);

Profile build_product_profile(const std::vector<std::vector<OrderAmplitude>>& per_voter,
                              const PreferenceBasis& basis);

// Profile for any tactic kind (entangled kinds wrap the joint state).
Profile build_profile(const TacticSpec& spec, const PreferenceBasis& basis);

struct TacticComparison {
  std::vector<double> distribution_a, distribution_b; // over basis indices
  double tv_distance = 0.0;
};

enum class ConstitutionKind { Qmr, Qmr2, Qmr3, ClassicalMr };

const char* constitution_kind_name(ConstitutionKind kind);

// Outcome distributions of two tactics under one constitution and their
// total-variation distance.
TacticComparison compare_tactics(const TacticSpec& a, const TacticSpec& b, ConstitutionKind kind,
                                 const PreferenceBasis& basis);

} // namespace qvote
