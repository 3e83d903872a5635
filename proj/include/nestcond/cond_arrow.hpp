#pragma once

#include <optional>
#include <vector>

#include "nestcond/graph.hpp"

namespace nestcond {

struct AbBranch;

// Nested arrow-based condition over a root graph: a finite disjunction of
// branches, each an arrow out of the root paired with a negated child
// condition over the arrow's codomain. No branches means the condition is
// unsatisfiable over its root.
struct AbCondition {
  Graph root;
  std::vector<AbBranch> branches;

  AbCondition(Graph root_graph, std::vector<AbBranch> branch_list);

  std::size_t width() const { return branches.size(); }
  bool is_false() const { return branches.empty(); }

  friend bool operator==(const AbCondition&, const AbCondition&);
};

struct AbBranch {
  GraphMorphism arrow;  // root -> pattern
  AbCondition child;    // over the pattern

  AbBranch(GraphMorphism branch_arrow, AbCondition child_condition);

  friend bool operator==(const AbBranch&, const AbBranch&) = default;
};

// unsatisfiable / always-satisfied conditions over a root
AbCondition ab_false(Graph root);
AbCondition ab_true(Graph root);

// nesting depth: false has depth 0, a condition is 1 + max over children
int ab_depth(const AbCondition& c);

// g satisfies c iff some branch (a, c') admits h with a;h = g and h does not
// satisfy c'. dom(g) must equal the root of c. The limits cap pattern sizes;
// host graphs are capped generously (they only bound the search space
// through the pattern exponent).
bool satisfies_ab(const GraphMorphism& g, const AbCondition& c,
                  const EnumLimits& limits = {});

// first satisfying branch and factorisation in enumeration order
struct AbWitness {
  int branch;
  GraphMorphism h;
};

std::optional<AbWitness> witness_ab(const GraphMorphism& g,
                                    const AbCondition& c,
                                    const EnumLimits& limits = {});

}  // namespace nestcond
