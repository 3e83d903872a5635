#include "nestcond/fixtures.hpp"

namespace nestcond::fixtures {

Alphabet alphabet() { return Alphabet({"a", "b", "c"}); }

Graph dx() { return discrete_graph({"x"}); }

Graph p11() { return Graph({"x"}, {{"e1", "x", "b", "x"}}); }
Graph p21() { return Graph({"x", "y"}, {{"e1", "x", "b", "y"}}); }
Graph p31() { return Graph({"x"}, {{"e1", "x", "a", "x"}}); }
Graph p32() { return Graph({"x", "y"}, {{"e1", "x", "b", "y"}}); }

Graph g1() {
  return Graph({"n1", "n2"}, {{"e1", "n1", "b", "n2"},
                              {"e2", "n2", "b", "n1"},
                              {"e3", "n1", "c", "n1"}});
}

Graph g2() {
  return Graph({"n1", "n2", "n3"}, {{"e1", "n1", "b", "n2"},
                                    {"e2", "n2", "b", "n1"},
                                    {"e3", "n1", "a", "n1"},
                                    {"e4", "n2", "c", "n3"}});
}

Graph g3() { return Graph({"n1"}, {{"e1", "n1", "b", "n1"}}); }

AbCondition c1() {
  Graph P11 = p11();
  Graph P111({"x", "y"}, {{"e1", "x", "b", "x"}, {"e2", "x", "a", "y"}});
  Graph P112({"x", "y"}, {{"e1", "x", "b", "x"}, {"e2", "x", "c", "y"}});
  AbCondition c11(P11, {AbBranch(hom(P11, P111, {{"x", "x"}}), ab_false(P111)),
                        AbBranch(hom(P11, P112, {{"x", "x"}}), ab_false(P112))});
  return AbCondition(dx(),
                     {AbBranch(hom(dx(), P11, {{"x", "x"}}), std::move(c11))});
}

AbCondition c2() {
  Graph P21 = p21();
  Graph P211({"x", "y"}, {{"e1", "x", "b", "y"}, {"e2", "y", "a", "y"}});
  Graph P212({"x", "y", "z"}, {{"e1", "x", "b", "y"}, {"e2", "y", "c", "z"}});
  AbCondition c21(
      P21,
      {AbBranch(hom(P21, P211, {{"x", "x"}, {"y", "y"}}), ab_false(P211)),
       AbBranch(hom(P21, P212, {{"x", "x"}, {"y", "y"}}), ab_false(P212))});
  return AbCondition(dx(),
                     {AbBranch(hom(dx(), P21, {{"x", "x"}}), std::move(c21))});
}

AbCondition c3() {
  Graph P31 = p31();
  Graph P32 = p32();
  Graph P321({"x", "y", "v", "z"}, {{"e1", "x", "b", "y"},
                                    {"e2", "y", "c", "v"},
                                    {"e3", "y", "c", "z"}});
  Graph P3211({"x", "y", "z"}, {{"e1", "x", "b", "y"}, {"e2", "y", "c", "z"}});
  auto merge = hom(P321, P3211,
                   {{"x", "x"}, {"y", "y"}, {"v", "z"}, {"z", "z"}});
  AbCondition c321(P321, {AbBranch(std::move(merge), ab_false(P3211))});
  AbCondition c32(P32, {AbBranch(hom(P32, P321, {{"x", "x"}, {"y", "y"}}),
                                 std::move(c321))});
  return AbCondition(
      dx(), {AbBranch(hom(dx(), P31, {{"x", "x"}}), ab_false(P31)),
             AbBranch(hom(dx(), P32, {{"x", "x"}}), std::move(c32))});
}

AbPair forward_only_pair() {
  Graph R({"x", "z"}, {{"e1", "x", "a", "z"}});
  Graph A({"x", "y", "z"}, {{"e1", "x", "a", "y"}, {"e2", "x", "a", "z"}});
  Graph C({"x", "y", "z"},
          {{"e1", "x", "a", "y"}, {"e2", "x", "a", "z"}, {"e3", "z", "b", "x"}});
  Graph D({"x", "z"}, {{"e1", "x", "a", "z"}, {"e2", "z", "b", "x"}});
  // the R-edge lands on the second a-edge of A
  auto ra = GraphMorphism::from_names(R, A, {{"x", "x"}, {"z", "z"}},
                                      {{"e1", "e2"}});
  AbCondition c_inner(A, {AbBranch(hom(A, C, {{"x", "x"}, {"y", "y"}, {"z", "z"}}),
                                   ab_false(C))});
  AbCondition c(R, {AbBranch(std::move(ra), std::move(c_inner))});
  AbCondition b_inner(
      R, {AbBranch(hom(R, D, {{"x", "x"}, {"z", "z"}}), ab_false(D))});
  AbCondition b(R, {AbBranch(identity(R), std::move(b_inner))});
  return {std::move(c), std::move(b)};
}

AbPair backward_only_pair() {
  Graph R({"x", "y"}, {{"e1", "x", "a", "y"}});
  Graph P({"x", "y", "z"}, {{"e1", "x", "a", "y"}, {"e2", "z", "b", "z"}});
  Graph Q({"x", "y"},
          {{"e1", "x", "a", "y"}, {"e2", "y", "c", "x"}, {"e3", "y", "b", "y"}});
  Graph S({"x", "y"}, {{"e1", "x", "a", "y"}, {"e2", "y", "b", "y"}});
  Graph T({"x", "y", "z"},
          {{"e1", "x", "a", "y"}, {"e2", "z", "c", "x"}, {"e3", "y", "b", "y"}});
  AbCondition c_inner(
      P, {AbBranch(hom(P, Q, {{"x", "x"}, {"y", "y"}, {"z", "y"}}),
                   ab_false(Q))});
  AbCondition c(R, {AbBranch(hom(R, P, {{"x", "x"}, {"y", "y"}}),
                             std::move(c_inner))});
  AbCondition b_inner(
      S, {AbBranch(hom(S, T, {{"x", "x"}, {"y", "y"}}), ab_false(T))});
  AbCondition b(R, {AbBranch(hom(R, S, {{"x", "x"}, {"y", "y"}}),
                             std::move(b_inner))});
  return {std::move(c), std::move(b)};
}

namespace {

Graph dy() { return discrete_graph({"y"}); }

}  // namespace

SbCondition b1() {
  Graph P11 = p11();
  Graph Ay({"x", "y"}, {{"e1", "x", "a", "y"}});
  Graph Cy({"x", "y"}, {{"e1", "x", "c", "y"}});
  SbCondition child(
      P11,
      {SbBranch(Span(hom(dx(), P11, {{"x", "x"}}), hom(dx(), Ay, {{"x", "x"}})),
                sb_false(Ay)),
       SbBranch(Span(hom(dx(), P11, {{"x", "x"}}), hom(dx(), Cy, {{"x", "x"}})),
                sb_false(Cy))});
  return SbCondition(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), P11, {{"x", "x"}})),
                      std::move(child))});
}

SbCondition b2() {
  Graph P21 = p21();
  Graph Aloop({"y"}, {{"e1", "y", "a", "y"}});
  Graph Cyz({"y", "z"}, {{"e1", "y", "c", "z"}});
  SbCondition child(
      P21, {SbBranch(Span(hom(dy(), P21, {{"y", "y"}}),
                          hom(dy(), Aloop, {{"y", "y"}})),
                     sb_false(Aloop)),
            SbBranch(Span(hom(dy(), P21, {{"y", "y"}}),
                          hom(dy(), Cyz, {{"y", "y"}})),
                     sb_false(Cyz))});
  return SbCondition(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), P21, {{"x", "x"}})),
                      std::move(child))});
}

SbCondition b3() {
  Graph P31 = p31();
  Graph P32 = p32();
  Graph C2({"y", "v", "z"}, {{"e1", "y", "c", "v"}, {"e2", "y", "c", "z"}});
  Graph dvz = discrete_graph({"v", "z"});
  Graph dw = discrete_graph({"w"});
  SbCondition merged(
      C2, {SbBranch(Span(hom(dvz, C2, {{"v", "v"}, {"z", "z"}}),
                         hom(dvz, dw, {{"v", "w"}, {"z", "w"}})),
                    sb_false(dw))});
  SbCondition child(
      P32, {SbBranch(Span(hom(dy(), P32, {{"y", "y"}}),
                          hom(dy(), C2, {{"y", "y"}})),
                     std::move(merged))});
  return SbCondition(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), P31, {{"x", "x"}})),
                      sb_false(P31)),
             SbBranch(Span(identity(dx()), hom(dx(), P32, {{"x", "x"}})),
                      std::move(child))});
}

SbConditionMorphism b2_to_b1() {
  Graph P11 = p11();
  Graph P21 = p21();
  Graph Ay({"x", "y"}, {{"e1", "x", "a", "y"}});
  Graph Cy({"x", "y"}, {{"e1", "x", "c", "y"}});
  Graph Aloop({"y"}, {{"e1", "y", "a", "y"}});
  Graph Cyz({"y", "z"}, {{"e1", "y", "c", "z"}});

  auto v1 = hom(P21, P11, {{"x", "x"}, {"y", "x"}});
  auto va = hom(Ay, Aloop, {{"x", "y"}, {"y", "y"}});
  auto vc = hom(Cy, Cyz, {{"x", "y"}, {"y", "z"}});
  auto kxy = hom(dx(), dy(), {{"x", "y"}});

  SbConditionMorphism leaf{Mode::forward, {}, {}};
  SbConditionMorphism sub{
      Mode::forward,
      {0, 1},
      {SbMorphismBranch{va, kxy, false,
                        SpanShifter::of_steps({df_step(va)}), leaf},
       SbMorphismBranch{vc, kxy, false,
                        SpanShifter::of_steps({df_step(vc)}), leaf}}};
  return SbConditionMorphism{
      Mode::forward,
      {0},
      {SbMorphismBranch{v1, identity(dx()), false,
                        SpanShifter::of_steps({df_step(v1)}), std::move(sub)}}};
}

std::vector<FolPair> fol_pairs() {
  return {
      {"exists y. a(x,y)", "exists z,y. a(z,y)"},
      {"exists x. a(x,y) & !(exists z. b(y,z) | x=y)",
       "!exists x,z. c(x,y) & b(y,z)"},
      {"x=y & a(x,y) & !exists z. b(y,z)", "!exists z. b(x,z) & b(y,z)"},
      {"exists x. !exists y. a(x,y)", "!exists z,y. a(z,y)"},
      {"!a(x,x)", "!exists y. a(x,y)"},
  };
}

std::vector<FolCondPair> fol_cond_pairs() {
  Graph d0 = discrete_graph({});
  Graph dxy = discrete_graph({"x", "y"});
  Graph Axy({"x", "y"}, {{"e1", "x", "a", "y"}});
  Graph Azy({"z", "y"}, {{"e1", "z", "a", "y"}});

  // exists y. a(x,y)  --  one positive block, no negated subformula
  SbCondition phi1(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), Axy, {{"x", "x"}})),
                      sb_false(Axy))});
  // exists z,y. a(z,y) over the same root; the interface forgets x
  SbCondition psi1(dx(), {SbBranch(Span(hom(d0, dx(), {}), hom(d0, Azy, {})),
                                   sb_false(Azy))});

  // exists x. a(x,y) & !(exists z. b(y,z) | x=y)
  Graph Qb({"y", "z"}, {{"e1", "y", "b", "z"}});
  SbCondition phi2_child(
      Axy,
      {SbBranch(Span(hom(dy(), Axy, {{"y", "y"}}), hom(dy(), Qb, {{"y", "y"}})),
                sb_false(Qb)),
       SbBranch(Span(hom(dxy, Axy, {{"x", "x"}, {"y", "y"}}),
                     hom(dxy, dx(), {{"x", "x"}, {"y", "x"}})),
                sb_false(dx()))});
  SbCondition phi2(
      dy(), {SbBranch(Span(identity(dy()), hom(dy(), Axy, {{"y", "y"}})),
                      std::move(phi2_child))});
  // !exists x,z. c(x,y) & b(y,z)
  Graph Qcb({"x", "y", "z"}, {{"e1", "x", "c", "y"}, {"e2", "y", "b", "z"}});
  SbCondition psi2_inner(
      dy(), {SbBranch(Span(identity(dy()), hom(dy(), Qcb, {{"y", "y"}})),
                      sb_false(Qcb))});
  SbCondition psi2(dy(), {SbBranch(Span(identity(dy()), identity(dy())),
                                   std::move(psi2_inner))});

  // x=y & a(x,y) & !exists z. b(y,z): the block merges x and y onto a loop
  Graph Aloop({"x"}, {{"e1", "x", "a", "x"}});
  Graph Qbx({"x", "z"}, {{"e1", "x", "b", "z"}});
  SbCondition phi3_child(
      Aloop, {SbBranch(Span(hom(dx(), Aloop, {{"x", "x"}}),
                            hom(dx(), Qbx, {{"x", "x"}})),
                       sb_false(Qbx))});
  SbCondition phi3(
      dxy, {SbBranch(Span(identity(dxy),
                          hom(dxy, Aloop, {{"x", "x"}, {"y", "x"}})),
                     std::move(phi3_child))});
  // !exists z. b(x,z) & b(y,z)
  Graph Qbb({"x", "y", "z"}, {{"e1", "x", "b", "z"}, {"e2", "y", "b", "z"}});
  SbCondition psi3_inner(
      dxy, {SbBranch(Span(identity(dxy),
                          hom(dxy, Qbb, {{"x", "x"}, {"y", "y"}})),
                     sb_false(Qbb))});
  SbCondition psi3(dxy, {SbBranch(Span(identity(dxy), identity(dxy)),
                                  std::move(psi3_inner))});

  // exists x. !exists y. a(x,y)
  SbCondition phi4_child(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), Axy, {{"x", "x"}})),
                      sb_false(Axy))});
  SbCondition phi4(d0, {SbBranch(Span(identity(d0), hom(d0, dx(), {})),
                                 std::move(phi4_child))});
  // !exists z,y. a(z,y)
  SbCondition psi4_inner(
      d0, {SbBranch(Span(identity(d0), hom(d0, Azy, {})), sb_false(Azy))});
  SbCondition psi4(d0, {SbBranch(Span(identity(d0), identity(d0)),
                                 std::move(psi4_inner))});

  // !a(x,x)
  SbCondition phi5_inner(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), Aloop, {{"x", "x"}})),
                      sb_false(Aloop))});
  SbCondition phi5(dx(), {SbBranch(Span(identity(dx()), identity(dx())),
                                   std::move(phi5_inner))});
  // !exists y. a(x,y)
  SbCondition psi5_inner(
      dx(), {SbBranch(Span(identity(dx()), hom(dx(), Axy, {{"x", "x"}})),
                      sb_false(Axy))});
  SbCondition psi5(dx(), {SbBranch(Span(identity(dx()), identity(dx())),
                                   std::move(psi5_inner))});

  std::vector<FolCondPair> out;
  out.push_back({std::move(phi1), std::move(psi1)});
  out.push_back({std::move(phi2), std::move(psi2)});
  out.push_back({std::move(phi3), std::move(psi3)});
  out.push_back({std::move(phi4), std::move(psi4)});
  out.push_back({std::move(phi5), std::move(psi5)});
  return out;
}

}  // namespace nestcond::fixtures
