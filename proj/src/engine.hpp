#pragma once

// Internal allocation-light machinery shared by satisfaction, search and the
// bounded oracle. Graphs are flattened to integer triples against a session
// label table; the backtracking enumerator below is the single source of
// truth for morphism enumeration order (node_map lexicographic, then
// edge_map lexicographic, under declared node/edge order).

#include <functional>
#include <string>
#include <vector>

#include "nestcond/graph.hpp"

namespace nestcond::detail {

struct LabelTable {
  std::vector<std::string> names;

  int intern(const std::string& s) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == s) return i;
    names.push_back(s);
    return static_cast<int>(names.size()) - 1;
  }
  int find(const std::string& s) const {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == s) return i;
    return -1;
  }
};

struct IndexedGraph {
  int nodes = 0;
  struct IEdge {
    int src, label, tgt;
  };
  std::vector<IEdge> edges;
};

IndexedGraph index_graph(const Graph& g, LabelTable& table);

// raw morphism assignment: node/edge images as cod indices
struct Assignment {
  std::vector<int> n, e;
};

// Enumerates all h : P -> G extending the given partial assignment
// (-1 entries are free) in lexicographic order. Preassigned edges must have
// preassigned endpoints (callers derive preassignments from q;h = r, where
// this holds by construction); their consistency is validated up front.
// Returns true when the callback stopped the enumeration.
bool for_each_extension(const IndexedGraph& P, const IndexedGraph& G,
                        std::vector<int> pre_nodes, std::vector<int> pre_edges,
                        const std::function<bool(const Assignment&)>& fn);

void check_limits(const Graph& g, const EnumLimits& limits, const char* role);

}  // namespace nestcond::detail
