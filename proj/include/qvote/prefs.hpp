#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qvote/errors.hpp"

namespace qvote {

// Relation of an ordered candidate pair (a, b) inside one preference.
enum class Rel { GT, LT, EQ };

Rel swap_rel(Rel r);
const char* rel_name(Rel r);

// The M candidates of an election. Labels are short tokens; the stored
// order is canonical (lexicographic) and index-stable for a whole run.
class CandidateSet {
public:
  explicit CandidateSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Throws ParseError for labels outside the set.
  int index(std::string_view label) const;

  bool operator==(const CandidateSet& other) const { return labels_ == other.labels_; }

private:
  std::vector<std::string> labels_;
};

// A classical preference: candidates partitioned into strictly ranked
// tiers, ties within a tier. Stored as the tier rank of each candidate.
class WeakOrder {
public:
  // tiers: most preferred first; members are candidate indices.
  WeakOrder(const std::vector<std::vector<int>>& tiers, int num_candidates);

  int num_candidates() const { return static_cast<int>(ranks_.size()); }
  int num_tiers() const { return num_tiers_; }
  int tier_of(int candidate) const { return ranks_.at(candidate); }

  // Tier lists with members sorted ascending (lexicographic by label).
  std::vector<std::vector<int>> tiers() const;

  // Requires a != b; both valid candidate indices.
  Rel relation(int a, int b) const;

  bool is_strict() const { return num_tiers_ == num_candidates(); }

  bool operator==(const WeakOrder& other) const { return ranks_ == other.ranks_; }

  // Stable map key ("2,0,1" for ranks).
  std::string rank_key() const;

private:
  std::vector<int> ranks_; // ranks_[candidate] = tier index, 0 = top
  int num_tiers_ = 0;
};

// Tier list reversed: "a>b=c>d" -> "d>b=c>a". Involution.
WeakOrder reverse_order(const WeakOrder& order);

// Canonical text encoding: tiers joined by '>', tier members joined by '='
// in label-lexicographic order, e.g. "c>a=b>d".
std::string format_order(const WeakOrder& order, const CandidateSet& candidates);
WeakOrder parse_order(std::string_view text, const CandidateSet& candidates);

enum class BasisMode { Strict, Weak };

const char* basis_mode_name(BasisMode mode);

// Indexed enumeration of every admissible classical preference for a
// candidate set. Index order is lexicographic by the canonical text
// encoding, so index assignments are reproducible across runs.
class PreferenceBasis {
public:
  PreferenceBasis(CandidateSet candidates, BasisMode mode);

  const CandidateSet& candidates() const { return candidates_; }
  BasisMode mode() const { return mode_; }
  int dim() const { return static_cast<int>(orders_.size()); }

  const WeakOrder& order(int index) const { return orders_.at(index); }
  const std::vector<WeakOrder>& orders() const { return orders_; }
  std::string order_text(int index) const { return format_order(orders_.at(index), candidates_); }

  // Throws Error if the order is not a basis element (e.g. tied order in
  // strict mode).
  int index_of(const WeakOrder& order) const;
  int index_of_text(std::string_view text) const { return index_of(parse_order(text, candidates_)); }

  bool operator==(const PreferenceBasis& other) const {
    return mode_ == other.mode_ && candidates_ == other.candidates_;
  }

private:
  CandidateSet candidates_;
  BasisMode mode_;
  std::vector<WeakOrder> orders_;
  std::unordered_map<std::string, int> index_by_key_;
};

PreferenceBasis enumerate_basis(const CandidateSet& candidates, BasisMode mode);

// Basis indices whose order relates (a, b) as rel. The GT/LT/EQ sets of a
// pair partition the basis.
std::vector<int> subspace_indices(const PreferenceBasis& basis, int a, int b, Rel rel);

} // namespace qvote
