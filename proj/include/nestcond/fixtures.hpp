#pragma once

// Worked example conditions and host graphs used by the test-suite, the
// acceptance gate and the corpus generator. Everything here is small enough
// to check by hand; tests freeze the expected behaviour of these values.

#include <string>
#include <vector>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/cond_span.hpp"

namespace nestcond::fixtures {

Alphabet alphabet();  // {a, b, c}

Graph dx();  // single node x

// condition ladder over dx: c1 entails c2 entails c3 (strictly)
//   c1: a b-loop whose node has no outgoing a- and no outgoing c-edge
//   c2: a b-successor with no a-loop and no outgoing c-path of length 1
//   c3: an a-loop, or a b-successor without two c-successors that can merge
AbCondition c1();
AbCondition c2();
AbCondition c3();

// patterns shared with other tests
Graph p11();  // x with a b-loop
Graph p21();  // b-edge x -> y
Graph p31();  // x with an a-loop
Graph p32();  // b-edge x -> y (same shape as p21, distinct value)

// host graphs with known satisfaction rows for c1/c2/c3
Graph g1();  // b-cycle n1 <-> n2 with a c-loop on n1
Graph g2();  // b-cycle n1 <-> n2, a-loop on n1, c-edge n2 -> n3
Graph g3();  // single node with a b-loop

// condition pairs searched as m : c -> b (witnessing b entails c)
struct AbPair {
  AbCondition c;
  AbCondition b;
};

// admits a forward witness but no backward one
AbPair forward_only_pair();
// admits a backward witness but no forward one
AbPair backward_only_pair();

// span-based siblings of the ladder; satisfaction agrees with c1/c2/c3 on
// the fixture hosts
SbCondition b1();
SbCondition b2();
SbCondition b3();

// hand-built forward witness b2 -> b1 (b1 entails b2); checks valid
SbConditionMorphism b2_to_b1();

// worked formula pairs: first entails second except where tests say not
struct FolPair {
  std::string phi;
  std::string psi;
};

std::vector<FolPair> fol_pairs();

// compact span conditions for the same pairs, one quantifier block per
// nesting level; equivalent to encoding the texts but shallow enough for
// the structural morphism searches
struct FolCondPair {
  SbCondition phi;
  SbCondition psi;
};

std::vector<FolCondPair> fol_cond_pairs();

}  // namespace nestcond::fixtures
