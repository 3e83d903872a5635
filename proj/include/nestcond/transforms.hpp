#pragma once

#include <optional>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/cond_span.hpp"
#include "nestcond/morph_arrow.hpp"

namespace nestcond {

// Arrow-to-span translation: every branch (a, c') becomes the span branch
// (<id_R, a>, to_span(c')). Roots and satisfaction are preserved.
SbCondition to_span(const AbCondition& c);

// Span-to-arrow translation: every branch (<u, d>, c') pushes its span out
// to a cospan (q1, q2) and becomes (q1, to_arrow(c' shifted along df(q2))).
// Thanks to the canonical pushout normalisation, to_arrow(to_span(c)) == c
// exactly, not merely up to isomorphism.
AbCondition to_arrow(const SbCondition& c);

// Translates a valid arrow-based witness m : c -> b into a span-based
// witness to_span(c) -> to_span(b): pattern maps carry over, interface
// mediators are identities, precompose shifters become single rf/db steps.
// The input witness must be valid for (c, b); invalid witnesses may throw.
SbConditionMorphism to_span_morphism(const AbConditionMorphism& m,
                                     const AbCondition& c,
                                     const AbCondition& b);

// Moves a condition over A to a condition over B along f : A -> B by
// post-composing every up-leg with f. Children are untouched.
SbCondition root_shift_sb(const SbCondition& c, const GraphMorphism& f);

// Moves a condition over B back to a condition over A along f : A -> B:
// each up-leg is replaced by the canonical pullback of (f, up), the down-leg
// is routed through the pullback. Children are untouched.
SbCondition root_backshift_sb(const SbCondition& c, const GraphMorphism& f);

// Interface change on a single branch along f : J -> I: both legs are
// pre-composed with f; the child is untouched.
SbBranch interface_backshift(const SbBranch& p, const GraphMorphism& f);

// Interface change on a single branch along f : I -> K: the new legs are
// the K-side pushout injections of (up, f) and (down, f); the child is
// root-shifted along the pattern-side injection of (down, f).
SbBranch interface_shift(const SbBranch& p, const GraphMorphism& f);

// Recursive structural isomorphism: a root iso under which some branch
// bijection commutes level by level (pattern isos for arrows, interface and
// pattern isos for spans, children matched recursively). Returns the first
// witnessing root iso in enumeration order.
std::optional<GraphMorphism> ab_condition_iso(const AbCondition& c,
                                              const AbCondition& d,
                                              const EnumLimits& limits = {});
std::optional<GraphMorphism> sb_condition_iso(const SbCondition& c,
                                              const SbCondition& d,
                                              const EnumLimits& limits = {});

}  // namespace nestcond
