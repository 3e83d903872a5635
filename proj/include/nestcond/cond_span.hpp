#pragma once

#include <optional>
#include <vector>

#include "nestcond/colimits.hpp"
#include "nestcond/morph_common.hpp"

namespace nestcond {

struct SbBranch;

// Nested span-based condition: each branch relates the root to a pattern
// through a span, so patterns need not contain an image of the whole root.
struct SbCondition {
  Graph root;
  std::vector<SbBranch> branches;

  SbCondition(Graph root_graph, std::vector<SbBranch> branch_list);

  std::size_t width() const { return branches.size(); }
  bool is_false() const { return branches.empty(); }

  friend bool operator==(const SbCondition&, const SbCondition&);
};

struct SbBranch {
  Span span;          // up : interface -> root, down : interface -> pattern
  SbCondition child;  // over the pattern

  SbBranch(Span branch_span, SbCondition child_condition);

  const Graph& pattern() const { return span.down.cod(); }

  friend bool operator==(const SbBranch&, const SbBranch&) = default;
};

SbCondition sb_false(Graph root);
SbCondition sb_true(Graph root);
int sb_depth(const SbCondition& c);

// g satisfies c iff some branch has h : P -> G agreeing with g through the
// span (up;g = down;h) such that h does not satisfy the child.
bool satisfies_sb(const GraphMorphism& g, const SbCondition& c,
                  const EnumLimits& limits = {});

struct SbWitness {
  int branch;
  GraphMorphism h;
};

std::optional<SbWitness> witness_sb(const GraphMorphism& g,
                                    const SbCondition& c,
                                    const EnumLimits& limits = {});

// --- span shifters -------------------------------------------------------

// Elementary root-change step for span conditions. Each step is
// parameterised by a branch map v (and a section witness x where needed):
//   df: v : A -> B              spans <u,d> become <u;v, d>
//   rf: v : A -> B, x;v = id    spans pull back along the section x
//   db: v : B -> A epi          spans pull back along v
//   rb: v : B -> A, x;v = id    spans become <u;x, d>
// df/rf move the root along v (forward); db/rb move it against v (backward).
struct SpanShiftStep {
  enum class Kind { df, rf, db, rb };
  Kind kind;
  GraphMorphism v;
  std::optional<GraphMorphism> x;  // section for rf / rb

  bool forward() const { return kind == Kind::df || kind == Kind::rf; }
  const Graph& in_root() const;
  const Graph& out_root() const;

  friend bool operator==(const SpanShiftStep&, const SpanShiftStep&) = default;
};

SpanShiftStep df_step(GraphMorphism v);
SpanShiftStep rf_step(GraphMorphism v, GraphMorphism x);
SpanShiftStep db_step(GraphMorphism v);
SpanShiftStep rb_step(GraphMorphism v, GraphMorphism x);

// A root shifter for span conditions: either the trivial shifter (applies
// only to conditions without branches) or a non-empty chain of same-direction
// steps. Complete shifters (trivial, all-df, all-db) preserve models in both
// directions.
struct SpanShifter {
  std::vector<SpanShiftStep> steps;  // empty <=> trivial
  Graph from, to;

  static SpanShifter trivial(Graph from_root, Graph to_root);
  static SpanShifter of_steps(std::vector<SpanShiftStep> step_chain);

  bool is_trivial() const { return steps.empty(); }
  bool all_forward() const;
  bool all_backward() const;
  bool is_complete() const;

  friend bool operator==(const SpanShifter&, const SpanShifter&) = default;
};

SbCondition apply_span_step(const SpanShiftStep& s, const SbCondition& c);
SbCondition apply_span_shifter(const SpanShifter& s, const SbCondition& c);

// first applied first; trivial absorbs (widths stay zero through shifting)
SpanShifter compose_span_shifters(const SpanShifter& first,
                                  const SpanShifter& second);

// --- pattern shifts -------------------------------------------------------

// Witness that a branch span sc transports to sb along the pattern map v:
// a mediator k between the interfaces with k;sb.up = sc.up and
// k;sb.down = sc.down;v. The shift is conservative when the induced map
// from the pushout of (sc.down, k) onto sb's pattern is an isomorphism.
struct PatternShiftWitness {
  GraphMorphism k;
  bool conservative;
};

std::vector<PatternShiftWitness> pattern_shifts(const Span& sc, const Span& sb,
                                                const GraphMorphism& v,
                                                const EnumLimits& limits = {});

// first mediator in enumeration order, if any
std::optional<PatternShiftWitness> pattern_shift_check(
    const Span& sc, const Span& sb, const GraphMorphism& v,
    const EnumLimits& limits = {});

// recompute conservativity for a given mediator (clauses must already hold)
bool pattern_shift_conservative(const Span& sc, const Span& sb,
                                const GraphMorphism& v,
                                const GraphMorphism& k);

// --- condition morphisms --------------------------------------------------

struct SbMorphismBranch;

// Structural witness m : c -> b that b entails c, spans flavour. branch_map
// sends each b-branch to the c-branch it refines; each entry carries the
// pattern map, the interface mediator, a root shifter for the child and a
// recursive sub-witness. Checked, not trusted.
struct SbConditionMorphism {
  Mode mode = Mode::forward;
  std::vector<int> branch_map;
  std::vector<SbMorphismBranch> branches;

  friend bool operator==(const SbConditionMorphism&,
                         const SbConditionMorphism&);
};

struct SbMorphismBranch {
  GraphMorphism v;
  GraphMorphism k;
  bool conservative = false;  // informational; checkers recompute
  SpanShifter shifter;
  SbConditionMorphism sub;

  friend bool operator==(const SbMorphismBranch&,
                         const SbMorphismBranch&) = default;
};

// require_complete additionally flags a non-surjective branch map,
// non-conservative pattern shifts and incomplete shifters at every level
Validity check_sb_morphism(const SbConditionMorphism& m, const SbCondition& c,
                           const SbCondition& b, bool require_complete = false,
                           const EnumLimits& limits = {});

SbConditionMorphism identity_sb_morphism(const SbCondition& c, Mode mode);

// diagrammatic composite m;n for m : c -> b, n : b -> d
SbConditionMorphism compose_sb_morphisms(const SbConditionMorphism& m,
                                         const SbConditionMorphism& n);

// first morphism in deterministic candidate order, or nullopt. When
// want_complete is set, only complete morphisms are returned: surjective
// branch map, conservative pattern shifts, complete shifters all the way
// down. Complete morphisms witness equivalence rather than entailment.
std::optional<SbConditionMorphism> search_sb_morphism(
    const SbCondition& c, const SbCondition& b, Mode mode,
    bool want_complete = false, const SearchBudget& budget = {},
    const EnumLimits& limits = {});

// recomputed completeness of a (valid) morphism
bool is_complete_sb_morphism(const SbConditionMorphism& m,
                             const SbCondition& c, const SbCondition& b);

}  // namespace nestcond
