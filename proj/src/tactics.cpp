#include "qvote/tactics.hpp"

#include <cmath>
#include <iostream>

#include "qvote/common.hpp"

namespace qvote {

const char* tactic_kind_name(TacticKind kind) {
  switch (kind) {
  case TacticKind::PureVote: return "pure-vote";
  case TacticKind::OppositionPair: return "opposition-pair";
  case TacticKind::PartyLine: return "party-line";
  case TacticKind::WAnalog: return "w-analog";
  case TacticKind::ProductProfile: return "product-profile";
  }
  return "?";
}

const char* constitution_kind_name(ConstitutionKind kind) {
  switch (kind) {
  case ConstitutionKind::Qmr: return "qmr";
  case ConstitutionKind::Qmr2: return "qmr2";
  case ConstitutionKind::Qmr3: return "qmr3";
  case ConstitutionKind::ClassicalMr: return "classical-mr";
  }
  return "?";
}

namespace {

struct IndexedAmplitude {
  int index;
  Complex amplitude;
};

// Resolves order texts to strict basis indices and renormalizes.
std::vector<IndexedAmplitude> resolve_coeffs(const std::vector<OrderAmplitude>& coeffs,
                                             const PreferenceBasis& basis) {
  if (coeffs.empty()) throw Error("tactic needs at least one coefficient");
  std::vector<IndexedAmplitude> out;
  double norm_sq = 0.0;
  std::vector<bool> seen(basis.dim(), false);
  for (const auto& [text, amp] : coeffs) {
    const int idx = basis.index_of_text(text);
    if (!basis.order(idx).is_strict()) {
      throw Error("tactic coefficients must reference strict orders, got '" + text + "'");
    }
    if (seen[idx]) throw Error("duplicate coefficient for order '" + text + "'");
    seen[idx] = true;
    out.push_back({idx, amp});
    norm_sq += std::norm(amp);
  }
  if (norm_sq <= 0.0) throw Error("tactic coefficients are all zero");
  if (std::abs(norm_sq - 1.0) > tol::kState) {
    std::cerr << "note: tactic coefficients renormalized (sum |c|^2 = " << format_real(norm_sq)
              << ")\n";
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& c : out) c.amplitude *= scale;
  return out;
}

} // namespace

StateVector build_pure_vote(const std::vector<OrderAmplitude>& coeffs,
                            const PreferenceBasis& basis) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
  for (const auto& c : resolve_coeffs(coeffs, basis)) v(c.index) = c.amplitude;
  return StateVector(std::move(v), 1, basis.dim());
}

StateVector build_opposition_pair(const std::vector<OrderAmplitude>& coeffs,
                                  const PreferenceBasis& basis) {
  const int d = basis.dim();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(joint_dim(d, 2));
  for (const auto& c : resolve_coeffs(coeffs, basis)) {
    const int rev = basis.index_of(reverse_order(basis.order(c.index)));
    v(encode_joint_index({c.index, rev}, d)) = c.amplitude;
  }
  return StateVector(std::move(v), 2, d);
}

StateVector build_party_line(const std::vector<OrderAmplitude>& coeffs, int members,
                             const PreferenceBasis& basis) {
  if (members < 2) throw Error("party line needs at least two members");
  const int d = basis.dim();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(joint_dim(d, members));
  for (const auto& c : resolve_coeffs(coeffs, basis)) {
    v(encode_joint_index(std::vector<int>(members, c.index), d)) = c.amplitude;
  }
  return StateVector(std::move(v), members, d);
}

StateVector build_w_analog(const std::string& preferred, const std::string& other, int members,
                           const PreferenceBasis& basis) {
  if (members < 2) throw Error("w-analog needs at least two voters");
  const int alpha = basis.index_of_text(preferred);
  const int beta = basis.index_of_text(other);
  if (alpha == beta) throw Error("w-analog orders must differ");
  const int d = basis.dim();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(joint_dim(d, members));
  const double amp = 1.0 / std::sqrt(static_cast<double>(members));
  for (int pos = 0; pos < members; ++pos) {
    std::vector<int> tuple(members, alpha);
    tuple[pos] = beta;
    v(encode_joint_index(tuple, d)) = amp;
  }
  return StateVector(std::move(v), members, d);
}

Profile build_product_profile(const std::vector<std::vector<OrderAmplitude>>& per_voter,
                              const PreferenceBasis& basis) {
  if (per_voter.empty()) throw Error("product profile needs at least one voter");
  std::vector<VoterState> voters;
  voters.reserve(per_voter.size());
  for (const auto& coeffs : per_voter) voters.emplace_back(build_pure_vote(coeffs, basis));
  return Profile::product(basis, std::move(voters));
}

Profile build_profile(const TacticSpec& spec, const PreferenceBasis& basis) {
  switch (spec.kind) {
  case TacticKind::PureVote:
    return Profile::product(basis, {build_pure_vote(spec.coeffs, basis)});
  case TacticKind::OppositionPair:
    return Profile::entangled(basis, build_opposition_pair(spec.coeffs, basis));
  case TacticKind::PartyLine:
    return Profile::entangled(basis, build_party_line(spec.coeffs, spec.members, basis));
  case TacticKind::WAnalog:
    return Profile::entangled(basis,
                              build_w_analog(spec.preferred, spec.other, spec.members, basis));
  case TacticKind::ProductProfile:
    return build_product_profile(spec.voters, basis);
  }
  throw Error("unknown tactic kind");
}

TacticComparison compare_tactics(const TacticSpec& a, const TacticSpec& b, ConstitutionKind kind,
                                 const PreferenceBasis& basis) {
  const Profile pa = build_profile(a, basis);
  const Profile pb = build_profile(b, basis);
  if (pa.num_voters() != pb.num_voters()) {
    throw Error("compare_tactics: profiles have different voter counts");
  }
  auto outcome = [&](const Profile& p) -> std::vector<double> {
    switch (kind) {
    case ConstitutionKind::Qmr: return qmr(p).distribution;
    case ConstitutionKind::Qmr2: return qmr2(p).distribution;
    case ConstitutionKind::Qmr3: return qmr3_distribution(p);
    case ConstitutionKind::ClassicalMr:
      throw Error("compare_tactics: classical-mr takes classical votes, not tactic states");
    }
    throw Error("unknown constitution kind");
  };
  TacticComparison cmp;
  cmp.distribution_a = outcome(pa);
  cmp.distribution_b = outcome(pb);
  double tv = 0.0;
  for (size_t i = 0; i < cmp.distribution_a.size(); ++i) {
    tv += std::abs(cmp.distribution_a[i] - cmp.distribution_b[i]);
  }
  cmp.tv_distance = tv / 2.0;
  return cmp;
}

} // namespace qvote
