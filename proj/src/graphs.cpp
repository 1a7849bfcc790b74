#include "qvote/graphs.hpp"

#include <algorithm>

namespace qvote {

MajorityDigraph build_majority_digraph(const std::vector<WeakOrder>& votes, int num_candidates) {
  if (votes.empty()) throw Error("majority digraph needs at least one vote");
  for (const auto& v : votes) {
    if (v.num_candidates() != num_candidates) {
      throw Error("vote is over a different candidate set");
    }
  }
  MajorityDigraph g;
  g.num_nodes = num_candidates;
  g.adj.assign(num_candidates, std::vector<bool>(num_candidates, false));
  for (int a = 0; a < num_candidates; ++a) {
    for (int b = a + 1; b < num_candidates; ++b) {
      int gt = 0, lt = 0;
      for (const auto& v : votes) {
        switch (v.relation(a, b)) {
        case Rel::GT: ++gt; break;
        case Rel::LT: ++lt; break;
        case Rel::EQ: break;
        }
      }
      if (gt > lt) {
        g.adj[a][b] = true;
      } else if (lt > gt) {
        g.adj[b][a] = true;
      } else {
        g.adj[a][b] = true;
        g.adj[b][a] = true;
      }
    }
  }
  return g;
}

int SccList::component_of(int node) const {
  for (int i = 0; i < static_cast<int>(components.size()); ++i) {
    for (int m : components[i]) {
      if (m == node) return i;
    }
  }
  throw Error("node not in any component");
}

namespace {

struct TarjanState {
  const MajorityDigraph& g;
  std::vector<int> index, lowlink, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> emitted; // Tarjan emission order (sinks first)
  int next_index = 0;

  explicit TarjanState(const MajorityDigraph& graph)
      : g(graph), index(graph.num_nodes, -1), lowlink(graph.num_nodes, 0),
        on_stack(graph.num_nodes, false) {}

  void visit(int v) {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 0; w < g.num_nodes; ++w) { // canonical candidate order
      if (!g.adj[v][w]) continue;
      if (index[w] == -1) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> component;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      emitted.push_back(std::move(component));
    }
  }
};

} // namespace

SccList tarjan_scc(const MajorityDigraph& graph) {
  TarjanState state(graph);
  for (int v = 0; v < graph.num_nodes; ++v) {
    if (state.index[v] == -1) state.visit(v);
  }
  // Emission order lists sinks of the condensation first; preference order
  // is the reverse.
  std::reverse(state.emitted.begin(), state.emitted.end());
  return SccList{std::move(state.emitted)};
}

std::string to_dot(const MajorityDigraph& graph, const CandidateSet& candidates) {
  if (candidates.size() != graph.num_nodes) throw Error("to_dot: candidate count mismatch");
  std::string out = "digraph majority {\n";
  for (int v = 0; v < graph.num_nodes; ++v) {
    out += "  \"" + candidates.label(v) + "\";\n";
  }
  for (int u = 0; u < graph.num_nodes; ++u) {
    for (int v = 0; v < graph.num_nodes; ++v) {
      if (graph.adj[u][v]) {
        out += "  \"" + candidates.label(u) + "\" -> \"" + candidates.label(v) + "\";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

} // namespace qvote
