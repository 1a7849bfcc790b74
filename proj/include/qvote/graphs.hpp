#pragma once

#include <string>
#include <vector>

#include "qvote/prefs.hpp"

namespace qvote {

// Candidate digraph of the pairwise-majority counting rule. adj[u][v] is
// the edge u -> v; a pair may carry one edge, two (a pairwise tie), and a
// self-loop never.
struct MajorityDigraph {
  int num_nodes = 0;
  std::vector<std::vector<bool>> adj;

  bool edge(int u, int v) const { return adj[u][v]; }
};

// Counting rule: per pair, a strict majority of GT vs LT votes yields one
// edge; equal counts (including 0-0, so all-EQ pairs too) yield edges both
// ways. EQ votes count toward neither direction.
MajorityDigraph build_majority_digraph(const std::vector<WeakOrder>& votes, int num_candidates);

// Strongly connected components in preference order: most-preferred
// component first (Tarjan's emission order reversed). The order is a
// topological order of the condensation.
struct SccList {
  std::vector<std::vector<int>> components; // members sorted ascending

  int component_of(int node) const;
};

SccList tarjan_scc(const MajorityDigraph& graph);

// DOT text export for documentation figures.
std::string to_dot(const MajorityDigraph& graph, const CandidateSet& candidates);

} // namespace qvote
