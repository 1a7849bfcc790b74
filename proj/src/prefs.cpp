#include "qvote/prefs.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qvote {

Rel swap_rel(Rel r) {
  switch (r) {
  case Rel::GT: return Rel::LT;
  case Rel::LT: return Rel::GT;
  case Rel::EQ: return Rel::EQ;
  }
  throw Error("swap_rel: bad relation");
}

const char* rel_name(Rel r) {
  switch (r) {
  case Rel::GT: return ">";
  case Rel::LT: return "<";
  case Rel::EQ: return "=";
  }
  return "?";
}

const char* basis_mode_name(BasisMode mode) {
  return mode == BasisMode::Strict ? "strict" : "weak";
}

namespace {

bool valid_label(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == '>' || c == '=' || c == ',' || c == ';' || c == '|' || c == '#' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

} // namespace

CandidateSet::CandidateSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("candidate set must not be empty");
  for (const auto& l : labels_) {
    if (!valid_label(l)) throw ParseError("invalid candidate label '" + l + "'");
  }
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw ParseError("duplicate candidate label");
  }
}

int CandidateSet::index(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw ParseError("unknown candidate '" + std::string(label) + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

WeakOrder::WeakOrder(const std::vector<std::vector<int>>& tiers, int num_candidates)
    : ranks_(num_candidates, -1), num_tiers_(static_cast<int>(tiers.size())) {
  if (num_candidates <= 0) throw Error("weak order needs at least one candidate");
  int seen = 0;
  for (int t = 0; t < num_tiers_; ++t) {
    if (tiers[t].empty()) throw ParseError("empty tier in preference");
    for (int c : tiers[t]) {
      if (c < 0 || c >= num_candidates) throw Error("candidate index out of range");
      if (ranks_[c] != -1) {
        throw ParseError("candidate appears twice in preference");
      }
      ranks_[c] = t;
      ++seen;
    }
  }
  if (seen != num_candidates) throw ParseError("preference does not cover every candidate");
}

std::vector<std::vector<int>> WeakOrder::tiers() const {
  std::vector<std::vector<int>> out(num_tiers_);
  for (int c = 0; c < num_candidates(); ++c) out[ranks_[c]].push_back(c);
  return out; // candidate indices ascend within each tier by construction
}

Rel WeakOrder::relation(int a, int b) const {
  if (a == b) throw Error("relation: candidates must differ");
  const int ra = ranks_.at(a), rb = ranks_.at(b);
  if (ra < rb) return Rel::GT;
  if (ra > rb) return Rel::LT;
  return Rel::EQ;
}

std::string WeakOrder::rank_key() const {
  std::string key;
  for (int r : ranks_) {
    key += std::to_string(r);
    key += ',';
  }
  return key;
}

WeakOrder reverse_order(const WeakOrder& order) {
  auto tiers = order.tiers();
  std::reverse(tiers.begin(), tiers.end());
  return WeakOrder(tiers, order.num_candidates());
}

std::string format_order(const WeakOrder& order, const CandidateSet& candidates) {
  if (order.num_candidates() != candidates.size()) {
    throw Error("format_order: candidate count mismatch");
  }
  std::string out;
  for (const auto& tier : order.tiers()) {
    if (!out.empty()) out += '>';
    for (size_t i = 0; i < tier.size(); ++i) {
      if (i > 0) out += '=';
      out += candidates.label(tier[i]);
    }
  }
  return out;
}

WeakOrder parse_order(std::string_view text, const CandidateSet& candidates) {
  std::vector<std::vector<int>> tiers;
  std::vector<bool> seen(candidates.size(), false);
  size_t pos = 0;
  std::vector<int> tier;
  std::string token;
  auto flush_token = [&]() {
    if (token.empty()) throw ParseError("malformed preference '" + std::string(text) + "'");
    const int c = candidates.index(token);
    if (seen[c]) throw ParseError("duplicate candidate '" + token + "' in preference");
    seen[c] = true;
    tier.push_back(c);
    token.clear();
  };
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (ch == '=') {
      flush_token();
    } else if (ch == '>') {
      flush_token();
      tiers.push_back(tier);
      tier.clear();
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError("whitespace inside preference '" + std::string(text) + "'");
    } else {
      token += ch;
    }
  }
  flush_token();
  tiers.push_back(tier);
  for (int c = 0; c < candidates.size(); ++c) {
    if (!seen[c]) {
      throw ParseError("preference '" + std::string(text) + "' is missing candidate '" +
                       candidates.label(c) + "'");
    }
  }
  return WeakOrder(tiers, candidates.size());
}

namespace {

// All ordered set partitions of `remaining`, appended to `prefix`.
void enumerate_weak(const std::vector<int>& remaining, std::vector<std::vector<int>>& prefix,
                    std::vector<WeakOrder>& out, int num_candidates) {
  if (remaining.empty()) {
    out.emplace_back(prefix, num_candidates);
    return;
  }
  const int n = static_cast<int>(remaining.size());
  // nonempty subsets as the next tier
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> tier, rest;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        tier.push_back(remaining[i]);
      } else {
        rest.push_back(remaining[i]);
      }
    }
    prefix.push_back(std::move(tier));
    enumerate_weak(rest, prefix, out, num_candidates);
    prefix.pop_back();
  }
}

} // namespace

PreferenceBasis::PreferenceBasis(CandidateSet candidates, BasisMode mode)
    : candidates_(std::move(candidates)), mode_(mode) {
  const int m = candidates_.size();
  if (mode_ == BasisMode::Strict) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::vector<int>> tiers;
      tiers.reserve(m);
      for (int c : perm) tiers.push_back({c});
      orders_.emplace_back(tiers, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> prefix;
    enumerate_weak(all, prefix, orders_, m);
  }
  std::sort(orders_.begin(), orders_.end(), [this](const WeakOrder& a, const WeakOrder& b) {
    return format_order(a, candidates_) < format_order(b, candidates_);
  });
  for (int i = 0; i < static_cast<int>(orders_.size()); ++i) {
    index_by_key_.emplace(orders_[i].rank_key(), i);
  }
}

int PreferenceBasis::index_of(const WeakOrder& order) const {
  auto it = index_by_key_.find(order.rank_key());
  if (it == index_by_key_.end()) {
    throw Error("preference '" + format_order(order, candidates_) + "' is not a basis element in " +
                basis_mode_name(mode_) + " mode");
  }
  return it->second;
}

PreferenceBasis enumerate_basis(const CandidateSet& candidates, BasisMode mode) {
  return PreferenceBasis(candidates, mode);
}

std::vector<int> subspace_indices(const PreferenceBasis& basis, int a, int b, Rel rel) {
  if (a == b) throw Error("subspace_indices: candidates must differ");
  std::vector<int> out;
  for (int i = 0; i < basis.dim(); ++i) {
    if (basis.order(i).relation(a, b) == rel) out.push_back(i);
  }
  return out;
}

} // namespace qvote
