#include "nestcond/transforms.hpp"

#include <doctest.h>

#include "nestcond/colimits.hpp"
#include "nestcond/errors.hpp"
#include "nestcond/fixtures.hpp"
#include "nestcond/oracle.hpp"
#include "random_conditions.hpp"

using namespace nestcond;
namespace fx = nestcond::fixtures;

namespace {

Universe bound3() {
  Universe u;
  u.max_nodes = 3;
  u.max_edges = 6;
  return u;
}

std::vector<Graph> host_pool() { return {fx::g1(), fx::g2(), fx::g3()}; }

}  // namespace

TEST_CASE("translations preserve structure and invert exactly") {
  CHECK(to_span(ab_false(fx::dx())) == sb_false(fx::dx()));
  CHECK(to_arrow(sb_false(fx::dx())) == ab_false(fx::dx()));

  SbCondition nb1 = to_span(fx::c1());
  CHECK(nb1.root == fx::dx());
  REQUIRE(nb1.width() == 1);
  CHECK(nb1.branches[0].span.up == identity(fx::dx()));
  CHECK(nb1.branches[0].span.down == fx::c1().branches[0].arrow);
  CHECK(nb1.branches[0].pattern() == fx::p11());

  for (const AbCondition& c :
       {fx::c1(), fx::c2(), fx::c3(), ab_true(fx::dx()), ab_false(fx::dx()),
        fx::forward_only_pair().c, fx::forward_only_pair().b,
        fx::backward_only_pair().c, fx::backward_only_pair().b})
    CHECK(to_arrow(to_span(c)) == c);
}

TEST_CASE("translations preserve satisfaction on enumerated hosts") {
  std::vector<AbCondition> abs{fx::c1(), fx::c2(), fx::c3()};
  std::vector<SbCondition> sbs{fx::b1(), fx::b2(), fx::b3()};
  int checked = 0;
  Universe u;
  u.max_nodes = 2;
  u.max_edges = 2;
  u.up_to_iso = false;
  for_each_graph(u, [&](const Graph& H) {
    for (const GraphMorphism& g : enumerate_morphisms(fx::dx(), H)) {
      for (const AbCondition& c : abs)
        CHECK(satisfies_sb(g, to_span(c)) == satisfies_ab(g, c));
      for (const SbCondition& b : sbs)
        CHECK(satisfies_ab(g, to_arrow(b)) == satisfies_sb(g, b));
      ++checked;
    }
    return false;
  });
  CHECK(checked > 100);
}

TEST_CASE("arrow image of the derived span ladder") {
  // the span form of the middle rung translates onto the arrow form
  AbCondition ab2 = to_arrow(fx::b2());
  CHECK(!(ab2 == fx::c2()));  // pushout naming differs
  auto iso = ab_condition_iso(ab2, fx::c2());
  REQUIRE(iso);
  CHECK(iso->is_identity());

  // the top rung translates with a parallel-edge pattern: not isomorphic to
  // the arrow fixture, but equivalent on every bounded host
  AbCondition ab3 = to_arrow(fx::b3());
  CHECK(!ab_condition_iso(ab3, fx::c3()));
  CHECK(check_equivalence(ab3, fx::c3(), bound3()).holds);

  // entailment verdicts survive translation
  auto direct = check_entailments({{fx::b1(), fx::b2()}, {fx::b2(), fx::b1()}},
                                  bound3());
  auto translated = check_entailments(
      {{to_arrow(fx::b1()), to_arrow(fx::b2())},
       {to_arrow(fx::b2()), to_arrow(fx::b1())}},
      bound3());
  CHECK(direct[0].holds);
  CHECK(!direct[1].holds);
  CHECK(direct[0].holds == translated[0].holds);
  CHECK(direct[1].holds == translated[1].holds);
}

TEST_CASE("morphism lift produces valid span witnesses") {
  AbCondition c2 = fx::c2(), c3 = fx::c3();

  auto idm = identity_ab_morphism(c2);
  auto lifted_id = to_span_morphism(idm, c2, c2);
  CHECK(check_sb_morphism(lifted_id, to_span(c2), to_span(c2)).ok);

  auto m32 = search_ab_morphism(c3, c2, Mode::forward);
  REQUIRE(m32);
  auto sm = to_span_morphism(*m32, c3, c2);
  CHECK(check_sb_morphism(sm, to_span(c3), to_span(c2)).ok);
  CHECK(sm.branch_map == m32->branch_map);
  CHECK(sm.branches[0].k.is_identity());

  // lifting survives both shifter flavours of the example pairs
  fx::AbPair fwd = fx::forward_only_pair();
  auto mf = search_ab_morphism(fwd.c, fwd.b, Mode::forward);
  REQUIRE(mf);
  CHECK(check_sb_morphism(to_span_morphism(*mf, fwd.c, fwd.b), to_span(fwd.c),
                          to_span(fwd.b))
            .ok);

  fx::AbPair bwd = fx::backward_only_pair();
  auto mb = search_ab_morphism(bwd.c, bwd.b, Mode::backward);
  REQUIRE(mb);
  CHECK(check_sb_morphism(to_span_morphism(*mb, bwd.c, bwd.b), to_span(bwd.c),
                          to_span(bwd.b))
            .ok);

  // breaking the branch assignment breaks the lifted witness
  auto broken = sm;
  broken.branch_map[0] = 0;
  CHECK(!check_sb_morphism(broken, to_span(c3), to_span(c2)).ok);

  // the span search mirrors the arrow-level ladder facts
  CHECK(!search_sb_morphism(to_span(c2), to_span(fx::c1()), Mode::forward));
  CHECK(search_sb_morphism(to_span(c3), to_span(c2), Mode::forward));
}

TEST_CASE("root shift laws hold exactly and semantically") {
  SbCondition b2 = fx::b2();
  CHECK(root_shift_sb(b2, identity(fx::dx())) == b2);

  Graph dxy = discrete_graph({"x", "y"});
  GraphMorphism f = hom(fx::dx(), dxy, {{"x", "x"}});
  GraphMorphism g = hom(dxy, fx::p21(), {{"x", "x"}, {"y", "y"}});
  CHECK(root_shift_sb(b2, compose(f, g)) ==
        root_shift_sb(root_shift_sb(b2, f), g));
  CHECK_THROWS_AS(root_shift_sb(b2, g), DomainError);

  // f;g |= c exactly when g |= shifted c
  SbCondition shifted = root_shift_sb(b2, f);
  int transported = 0;
  for (const Graph& H : host_pool())
    for (const GraphMorphism& m : enumerate_morphisms(dxy, H)) {
      bool lhs = satisfies_sb(compose(f, m), b2);
      CHECK(lhs == satisfies_sb(m, shifted));
      if (lhs) ++transported;
    }
  CHECK(transported > 0);
}

TEST_CASE("root back-shift recovers along identities and preserves models") {
  SbCondition b2 = fx::b2();
  CHECK(root_backshift_sb(b2, identity(fx::dx())) == b2);
  CHECK_THROWS_AS(root_backshift_sb(b2, hom(fx::dx(), fx::p21(), {{"x", "x"}})),
                  DomainError);

  // models transport forward along f into the back-shifted condition
  Graph dxy = discrete_graph({"x", "y"});
  testgen::Rng rng(2026);
  GraphMorphism f = hom(fx::dx(), dxy, {{"x", "x"}});
  std::vector<SbCondition> conds{sb_true(dxy), testgen::random_sb(rng, dxy, 2),
                                 testgen::random_sb(rng, dxy, 2)};
  int transported = 0;
  for (const SbCondition& c : conds) {
    SbCondition back = root_backshift_sb(c, f);
    for (const Graph& H : host_pool())
      for (const GraphMorphism& m : enumerate_morphisms(dxy, H))
        if (satisfies_sb(m, c)) {
          CHECK(satisfies_sb(compose(f, m), back));
          ++transported;
        }
  }
  CHECK(transported > 0);

  // back-shifting along a composite factors through the stages, up to iso
  Graph dxyz = discrete_graph({"x", "y", "z"});
  GraphMorphism f2 = hom(dxyz, dxy, {{"x", "x"}, {"y", "y"}, {"z", "y"}});
  GraphMorphism g2 = hom(dxy, fx::dx(), {{"x", "x"}, {"y", "x"}});
  SbCondition over_dx = fx::b2();
  CHECK(sb_condition_iso(root_backshift_sb(over_dx, compose(f2, g2)),
                         root_backshift_sb(root_backshift_sb(over_dx, g2),
                                           f2)));

  // shifting up and back down is an equivalence, not an equality
  SbCondition roundtrip = root_backshift_sb(root_shift_sb(fx::b2(), f), f);
  CHECK(check_equivalence(roundtrip, fx::b2(), bound3()).holds);
}

TEST_CASE("interface shifts follow the companion equations") {
  // a branch with a non-trivial interface: the two-c-successor pattern
  SbBranch p = fx::b3().branches[1].child.branches[0];
  const Graph& R = p.span.up.cod();  // the b-edge pattern
  const Graph& I = p.span.interface();

  CHECK(interface_backshift(p, identity(I)) == p);
  CHECK(interface_shift(p, identity(I)) == p);
  CHECK_THROWS_AS(interface_backshift(p, hom(I, fx::p21(), {{"y", "y"}})),
                  DomainError);
  CHECK_THROWS_AS(interface_shift(p, hom(fx::dx(), I, {{"x", "y"}})),
                  DomainError);

  // widening the interface: p entails its back-shift, and an epi reflects
  Graph duv = discrete_graph({"u", "v"});
  GraphMorphism fep = hom(duv, I, {{"u", "y"}, {"v", "y"}});
  REQUIRE(is_epi(fep));
  SbCondition lone(R, {p});
  SbCondition backed(R, {interface_backshift(p, fep)});
  CHECK(check_entailment(lone, backed, bound3()).holds);
  CHECK(check_entailment(backed, lone, bound3()).holds);

  // a non-epi back-shift only preserves, it does not reflect
  Graph dempty = discrete_graph({});
  GraphMorphism fmono = hom(dempty, I, {});
  SbCondition forgot(R, {interface_backshift(p, fmono)});
  CHECK(check_entailment(lone, forgot, bound3()).holds);
  CHECK(!check_entailment(forgot, lone, bound3()).holds);

  // forward shift agrees with the root shift along the pushout injection
  Graph dyw = discrete_graph({"y", "w"});
  GraphMorphism f = hom(I, dyw, {{"y", "y"}});
  PushoutResult pou = pushout(p.span.up, f);
  SbCondition via_interface(pou.apex, {interface_shift(p, f)});
  SbCondition via_root = root_shift_sb(lone, pou.q1);
  CHECK(check_equivalence(via_interface, via_root, bound3()).holds);

  // and backing the root shift out again restores the branch
  CHECK(check_equivalence(root_backshift_sb(via_interface, pou.q1), lone,
                          bound3())
            .holds);
}

namespace {

// the unique arrow from a branch interface into the interface produced by
// shifting the root up along f and back down again
GraphMorphism roundtrip_mediator(const SbBranch& orig, const SbBranch& back) {
  std::vector<GraphMorphism> mediators;
  for (const GraphMorphism& e :
       enumerate_morphisms(orig.span.interface(), back.span.interface()))
    if (compose(e, back.span.up) == orig.span.up &&
        compose(e, back.span.down) == orig.span.down)
      mediators.push_back(e);
  REQUIRE(mediators.size() == 1);
  CHECK(is_mono(mediators[0]));
  CHECK(interface_backshift(back, mediators[0]) == orig);
  return mediators[0];
}

}  // namespace

TEST_CASE("shift and back-shift cancel through unique interface mediators") {
  Graph dxy = discrete_graph({"x", "y"});
  testgen::Rng rng(412);

  // along a mono the pullback collapses and the round trip is the identity
  GraphMorphism widen = hom(dxy, discrete_graph({"x", "y", "z"}),
                            {{"x", "x"}, {"y", "y"}});
  for (int trial = 0; trial < 4; ++trial) {
    SbCondition c = testgen::random_sb(rng, dxy, 2);
    SbCondition roundtrip = root_backshift_sb(root_shift_sb(c, widen), widen);
    CHECK(roundtrip == c);
    REQUIRE(roundtrip.width() == c.width());
    for (std::size_t i = 0; i < c.width(); ++i) {
      GraphMorphism e =
          roundtrip_mediator(c.branches[i], roundtrip.branches[i]);
      CHECK(e.is_identity());
      CHECK(is_epi(e));
    }
  }

  // a merging arrow widens the interfaces: the mediators still recover the
  // original branches exactly, but they stop being epi, and the round trip
  // keeps only the models that identify the merged roots
  GraphMorphism collapse = hom(dxy, fx::dx(), {{"x", "x"}, {"y", "x"}});
  Graph dxx = discrete_graph({"x"});
  SbCondition c(dxy,
                {SbBranch(Span(identity(dxy),
                               hom(dxy, fx::p21(), {{"x", "x"}, {"y", "y"}})),
                          sb_false(fx::p21())),
                 SbBranch(Span(hom(dxx, dxy, {{"x", "x"}}),
                               hom(dxx, fx::p11(), {{"x", "x"}})),
                          sb_false(fx::p11()))});
  SbCondition roundtrip = root_backshift_sb(root_shift_sb(c, collapse),
                                            collapse);
  REQUIRE(roundtrip.width() == c.width());
  for (std::size_t i = 0; i < c.width(); ++i) {
    GraphMorphism e = roundtrip_mediator(c.branches[i], roundtrip.branches[i]);
    CHECK(!is_epi(e));
  }
  auto back = check_entailment(roundtrip, c, bound3());
  CHECK(back.holds);
  auto forth = check_entailment(c, roundtrip, bound3());
  REQUIRE(!forth.holds);
  // a b-edge between distinct nodes separates the two
  REQUIRE(forth.model);
  CHECK(forth.model->node_image("x") != forth.model->node_image("y"));
}

TEST_CASE("condition isomorphism is structural") {
  auto self = ab_condition_iso(fx::c1(), fx::c1());
  REQUIRE(self);
  CHECK(self->is_identity());
  CHECK(!ab_condition_iso(fx::c1(), fx::c2()));
  CHECK(!ab_condition_iso(fx::c1(), ab_true(fx::dx())));

  // a renamed copy is isomorphic but not equal
  Graph du = discrete_graph({"u"});
  Graph q21({"u", "w"}, {{"d1", "u", "b", "w"}});
  Graph q211({"u", "w"}, {{"d1", "u", "b", "w"}, {"d2", "w", "a", "w"}});
  Graph q212({"u", "w", "t"},
             {{"d1", "u", "b", "w"}, {"d2", "w", "c", "t"}});
  AbCondition renamed(
      du,
      {AbBranch(hom(du, q21, {{"u", "u"}}),
                AbCondition(q21, {AbBranch(hom(q21, q211, {{"u", "u"},
                                                           {"w", "w"}}),
                                           ab_false(q211)),
                                  AbBranch(hom(q21, q212, {{"u", "u"},
                                                           {"w", "w"}}),
                                           ab_false(q212))}))});
  CHECK(!(renamed == fx::c2()));
  auto found = ab_condition_iso(renamed, fx::c2());
  REQUIRE(found);
  CHECK(found->node_image("u") == "x");

  auto sb_self = sb_condition_iso(fx::b1(), fx::b1());
  REQUIRE(sb_self);
  CHECK(sb_self->is_identity());
  CHECK(!sb_condition_iso(fx::b1(), fx::b2()));
  CHECK(sb_condition_iso(to_span(renamed), to_span(fx::c2())));
}

TEST_CASE("random conditions round-trip through the translations") {
  testgen::Rng rng(77);
  auto hosts = enumerate_graphs(Universe{{"a", "b", "c"}, 2, 2, true});
  int sat_hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph root = testgen::random_graph(rng, 2, 2);
    AbCondition c = testgen::random_ab(rng, root, 2);
    CHECK(to_arrow(to_span(c)) == c);
    if (trial % 4 != 0) continue;
    SbCondition nc = to_span(c);
    for (const Graph& H : hosts)
      for (const GraphMorphism& g : enumerate_morphisms(root, H)) {
        bool direct = satisfies_ab(g, c);
        CHECK(satisfies_sb(g, nc) == direct);
        if (direct) ++sat_hits;
      }
  }
  CHECK(sat_hits > 0);

  for (int trial = 0; trial < 25; ++trial) {
    Graph root = testgen::random_graph(rng, 2, 1);
    SbCondition b = testgen::random_sb(rng, root, 2);
    AbCondition ab = to_arrow(b);
    CHECK(ab.root == root);
    for (const Graph& H : hosts)
      for (const GraphMorphism& g : enumerate_morphisms(root, H))
        CHECK(satisfies_ab(g, ab) == satisfies_sb(g, b));
  }
}
