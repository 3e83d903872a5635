#pragma once

#include <optional>

#include "nestcond/cond_arrow.hpp"

namespace nestcond {

// Root shifter for arrow-based conditions. Either the trivial shifter,
// which moves branchless conditions between arbitrary roots, or
// precomposition with a fixed arrow w : Y -> X, which sends each branch
// arrow a : X -> P to w;a : Y -> P. Every non-trivial source shifter is of
// the precompose shape, so the defining arrow is kept as checkable data.
class AbSourceShifter {
 public:
  static AbSourceShifter trivial(Graph from_root, Graph to_root);
  static AbSourceShifter precompose(GraphMorphism w);

  bool is_trivial() const { return !arrow_.has_value(); }
  const GraphMorphism& arrow() const;  // precompose only
  const Graph& from() const { return arrow_ ? arrow_->cod() : from_; }
  const Graph& to() const { return arrow_ ? arrow_->dom() : to_; }
  bool is_identity() const { return arrow_ && arrow_->is_identity(); }

  friend bool operator==(const AbSourceShifter& a, const AbSourceShifter& b);

 private:
  AbSourceShifter() = default;

  std::optional<GraphMorphism> arrow_;
  Graph from_, to_;  // explicit endpoints for the trivial shifter
};

// forward shifter F_v^s for v : A -> B with section s (s;v = id_B); shifts
// roots along v
AbSourceShifter make_forward_shifter(const GraphMorphism& v,
                                     const GraphMorphism& s);

// backward shifter B_v for an epi v : A -> B; shifts roots against v
AbSourceShifter make_backward_shifter(const GraphMorphism& v);

AbSourceShifter identity_shifter(const Graph& root);

// w;a for Precompose(w); the trivial shifter has no action on arrows
GraphMorphism apply_source_shifter(const AbSourceShifter& s,
                                   const GraphMorphism& a);

// shift every branch arrow, keeping the children; the trivial shifter moves
// only branchless conditions
AbCondition apply_root_shifter(const AbSourceShifter& s, const AbCondition& c);

// diagrammatic composite: first applied first; trivial absorbs
AbSourceShifter compose_shifters(const AbSourceShifter& u,
                                 const AbSourceShifter& v);

}  // namespace nestcond
