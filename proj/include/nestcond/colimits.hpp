#pragma once

#include <optional>
#include <vector>

#include "nestcond/graph.hpp"

namespace nestcond {

// span A <-up- I -down-> B; both legs share their domain, the interface
struct Span {
  GraphMorphism up;
  GraphMorphism down;

  Span(GraphMorphism up_leg, GraphMorphism down_leg);
  const Graph& interface() const { return up.dom(); }

  friend bool operator==(const Span&, const Span&) = default;
};

// cospan A -left-> C <-right- B; both legs share their codomain
struct Cospan {
  GraphMorphism left;
  GraphMorphism right;

  Cospan(GraphMorphism left_leg, GraphMorphism right_leg);
  const Graph& apex() const { return left.cod(); }

  friend bool operator==(const Cospan&, const Cospan&) = default;
};

// composite of a non-empty chain of composable morphisms, left to right
GraphMorphism compose_path(const std::vector<GraphMorphism>& path);

// both paths compose to the same morphism (same endpoints, same maps)
bool commutes(const std::vector<GraphMorphism>& path1,
              const std::vector<GraphMorphism>& path2);

// pullback of the cospan f : A -> C <- B : g, projections p1 : Q -> A and
// p2 : Q -> B with p1;f = p2;g. The apex is normalised: when p2 would be an
// iso the result is (B, induced, id_B); when p1 would be, (A, id_A, induced);
// otherwise the apex is the pair graph with nodes "(a,b)" and edges
// "(e1,e2)" in lexicographic index order. In particular
// pullback(id_A, u) = (I, u, id_I) on the nose.
struct PullbackResult {
  Graph apex;
  GraphMorphism p1;
  GraphMorphism p2;
};

PullbackResult pullback(const GraphMorphism& f, const GraphMorphism& g);

// pushout of the span f : I -> A, g : I -> B, injections q1 : A -> Q and
// q2 : B -> Q with f;q1 = g;q2. Normalised like the pullback: when q2 would
// be an iso the result is (B, induced, id_B); when q1 would be,
// (A, id_A, induced); otherwise a quotient of the tagged disjoint union
// ("0:" = A side, "1:" = B side), each class named by its lexicographically
// least tagged member, classes ordered by first occurrence (A items first).
// In particular pushout(id_I, g) = (B, g, id_B).
struct PushoutResult {
  Graph apex;
  GraphMorphism q1;
  GraphMorphism q2;
};

PushoutResult pushout(const GraphMorphism& f, const GraphMorphism& g);

// span composition via pullback of the middle cospan; identities on either
// side compose exactly thanks to the pullback normalisation
Span compose_spans(const Span& s1, const Span& s2);

Span identity_span(const Graph& g);

// isomorphism of spans with equal endpoint graphs: an iso between the
// interfaces commuting with both legs, first in enumeration order
std::optional<GraphMorphism> span_iso(const Span& a, const Span& b,
                                      const EnumLimits& limits = {});

}  // namespace nestcond
