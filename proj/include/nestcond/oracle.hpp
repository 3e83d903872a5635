#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/cond_span.hpp"

namespace nestcond {

// Bounded host universe for the brute-force oracle: every graph over the
// given labels with at most max_nodes nodes and max_edges edges, where at
// most one edge occupies each (source, label, target) slot. Parallel-free
// hosts keep the sweep finite; verdicts are always relative to this
// universe and never claim more. Labels absent from the universe simply
// never occur in hosts, so pick labels covering the conditions of interest.
struct Universe {
  std::vector<std::string> labels = {"a", "b", "c"};
  int max_nodes = 4;
  int max_edges = 8;
  bool up_to_iso = true;

  friend bool operator==(const Universe&, const Universe&) = default;
};

// Non-owning view over either condition flavour, so entailment questions can
// mix arrow-based and span-based sides. The caller keeps the condition
// alive for as long as the view is used.
class ConditionRef {
 public:
  ConditionRef(const AbCondition& c) : ab_(&c) {}
  ConditionRef(const SbCondition& c) : sb_(&c) {}

  bool is_arrow() const { return ab_ != nullptr; }
  const AbCondition& arrow() const;
  const SbCondition& span() const;
  const Graph& root() const;

 private:
  const AbCondition* ab_ = nullptr;
  const SbCondition* sb_ = nullptr;
};

// Outcome of a bounded check. holds = true means no counterexample exists
// inside the universe (never a proof); otherwise graph/model carry the least
// counterexample in enumeration order (smallest host, then smallest model).
struct Verdict {
  bool holds = false;
  std::optional<Graph> graph;
  std::optional<GraphMorphism> model;
  Universe bound;
};

// Streams every host of the universe in the canonical order: node count
// ascending, then edge count ascending, then the edge-slot encoding
// ascending. Stops early when the callback returns true; the return value
// reports whether a callback stopped the stream.
bool for_each_graph(const Universe& u,
                    const std::function<bool(const Graph&)>& fn);

// Materialized stream, for universes small enough to hold in memory.
std::vector<Graph> enumerate_graphs(const Universe& u);

// All g : c.root -> G with g |= c, in enumerate_morphisms order.
std::vector<GraphMorphism> models(const AbCondition& c, const Graph& G,
                                  const EnumLimits& limits = {});
std::vector<GraphMorphism> models(const SbCondition& c, const Graph& G,
                                  const EnumLimits& limits = {});

// Does every model of the premise satisfy the conclusion, for every host in
// the universe? Premise and conclusion must share their root.
Verdict check_entailment(ConditionRef premise, ConditionRef conclusion,
                         const Universe& u = {});

// Batch form: answers all pairs in one sweep over the universe.
std::vector<Verdict> check_entailments(
    const std::vector<std::pair<ConditionRef, ConditionRef>>& pairs,
    const Universe& u = {});

// Both entailment directions; the counterexample reported is the least one
// across the failing direction checked first (b entails c, then c entails b).
Verdict check_equivalence(ConditionRef b, ConditionRef c,
                          const Universe& u = {});

}  // namespace nestcond
