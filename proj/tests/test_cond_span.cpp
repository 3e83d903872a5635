#include "nestcond/cond_span.hpp"

#include <doctest.h>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/fixtures.hpp"

using namespace nestcond;
namespace fx = nestcond::fixtures;

namespace {

GraphMorphism at_node(const Graph& host, const std::string& node) {
  return hom(fx::dx(), host, {{"x", node}});
}

bool sat(const Graph& host, const std::string& node, const SbCondition& c) {
  return satisfies_sb(at_node(host, node), c);
}

Graph p11_plus_aloop() {
  return Graph({"x"}, {{"e1", "x", "b", "x"}, {"e2", "x", "a", "x"}});
}

}  // namespace

TEST_CASE("span condition construction validates roots") {
  Graph Ay({"x", "y"}, {{"e1", "x", "a", "y"}});
  Span s(hom(fx::dx(), fx::p11(), {{"x", "x"}}),
         hom(fx::dx(), Ay, {{"x", "x"}}));
  CHECK_THROWS_AS(SbBranch(s, sb_false(fx::p21())), DomainError);
  SbBranch good(s, sb_false(Ay));
  CHECK(good.pattern() == Ay);
  CHECK_THROWS_AS(SbCondition(fx::dx(),
                              {SbBranch(Span(identity(Ay), identity(Ay)),
                                        sb_false(Ay))}),
                  DomainError);
}

TEST_CASE("false and true span conditions behave at the extremes") {
  SbCondition f = sb_false(fx::dx());
  SbCondition t = sb_true(fx::dx());
  CHECK(f.is_false());
  CHECK(t.width() == 1);
  CHECK(sb_depth(f) == 0);
  CHECK(sb_depth(t) == 1);
  for (const auto& host : {fx::g1(), fx::g2(), fx::g3()})
    for (const auto& g : enumerate_morphisms(fx::dx(), host)) {
      CHECK_FALSE(satisfies_sb(g, f));
      CHECK(satisfies_sb(g, t));
    }

  CHECK(sb_depth(fx::b1()) == 2);
  CHECK(sb_depth(fx::b2()) == 2);
  CHECK(sb_depth(fx::b3()) == 3);

  CHECK_THROWS_AS(satisfies_sb(at_node(fx::g1(), "n1"), sb_false(fx::p21())),
                  DomainError);
}

TEST_CASE("span ladder satisfaction matches the arrow ladder") {
  struct Row {
    Graph host;
    std::string node;
    bool r1, r2, r3;
  };
  const std::vector<Row> table = {
      {fx::g1(), "n1", false, true, true},
      {fx::g1(), "n2", false, false, true},
      {fx::g2(), "n1", false, false, true},
      {fx::g2(), "n2", false, false, true},
      {fx::g2(), "n3", false, false, false},
      {fx::g3(), "n1", true, true, true},
  };
  SbCondition b1 = fx::b1(), b2 = fx::b2(), b3 = fx::b3();
  AbCondition c1 = fx::c1(), c2 = fx::c2(), c3 = fx::c3();
  for (const auto& row : table) {
    CAPTURE(row.node);
    CHECK(sat(row.host, row.node, b1) == row.r1);
    CHECK(sat(row.host, row.node, b2) == row.r2);
    CHECK(sat(row.host, row.node, b3) == row.r3);
    // the span ladder agrees with the arrow ladder pointwise
    GraphMorphism g = at_node(row.host, row.node);
    CHECK(satisfies_ab(g, c1) == row.r1);
    CHECK(satisfies_ab(g, c2) == row.r2);
    CHECK(satisfies_ab(g, c3) == row.r3);
  }
}

TEST_CASE("edge atoms over a discrete root test for single edges") {
  Graph dxy = discrete_graph({"x", "y"});
  Graph axy({"x", "y"}, {{"e1", "x", "a", "y"}});
  SbCondition atom(
      dxy, {SbBranch(Span(identity(dxy), hom(dxy, axy, {{"x", "x"}, {"y", "y"}})),
                     sb_false(axy))});
  for (const auto& host : {fx::g1(), fx::g2(), fx::g3()})
    for (const auto& g : enumerate_morphisms(dxy, host)) {
      bool expect = host.has_edge(g.node_image("x"), "a", g.node_image("y"));
      CHECK(satisfies_sb(g, atom) == expect);
    }
}

TEST_CASE("span witnesses commute through the span") {
  SbCondition b2 = fx::b2();
  GraphMorphism g = at_node(fx::g1(), "n1");
  auto w = witness_sb(g, b2);
  REQUIRE(w.has_value());
  CHECK(w->branch == 0);
  const Span& s = b2.branches[0].span;
  CHECK(commutes({s.up, g}, {s.down, w->h}));
  CHECK(w->h.node_image("x") == "n1");
  CHECK(w->h.node_image("y") == "n2");

  CHECK_FALSE(witness_sb(g, fx::b1()).has_value());
}

TEST_CASE("shift step factories enforce side conditions") {
  Graph dxy = discrete_graph({"x", "y"});
  GraphMorphism collapse = hom(dxy, fx::dx(), {{"x", "x"}, {"y", "x"}});
  GraphMorphism incl = hom(fx::dx(), dxy, {{"x", "x"}});

  CHECK_NOTHROW(df_step(collapse));
  CHECK_NOTHROW(db_step(collapse));  // epi
  CHECK_NOTHROW(rf_step(collapse, incl));
  CHECK_NOTHROW(rb_step(collapse, incl));

  // not epi
  CHECK_THROWS_AS(db_step(incl), DomainError);
  // x is not a section of v (wrong direction entirely)
  CHECK_THROWS_AS(rf_step(incl, collapse), DomainError);
  GraphMorphism v1 = hom(fx::p21(), fx::p11(), {{"x", "x"}, {"y", "x"}});
  CHECK(enumerate_sections(v1).empty());

  CHECK_THROWS_AS(SpanShifter::of_steps({}), DomainError);
  CHECK_THROWS_AS(SpanShifter::of_steps({df_step(collapse), db_step(collapse)}),
                  DomainError);
  CHECK_THROWS_AS(SpanShifter::of_steps({df_step(incl), df_step(incl)}),
                  DomainError);
  SpanShifter chain = SpanShifter::of_steps({df_step(incl), df_step(collapse)});
  CHECK(chain.from == fx::dx());
  CHECK(chain.to == fx::dx());
  CHECK(chain.all_forward());
  CHECK(chain.is_complete());
  CHECK_FALSE(SpanShifter::of_steps({rf_step(collapse, incl)}).is_complete());
}

TEST_CASE("elementary steps rewrite branch spans as documented") {
  GraphMorphism v1 = hom(fx::p21(), fx::p11(), {{"x", "x"}, {"y", "x"}});
  SbCondition child2 = fx::b2().branches[0].child;  // over p21
  SbCondition child1 = fx::b1().branches[0].child;  // over p11

  SUBCASE("df composes the up legs and leaves the rest alone") {
    SbCondition shifted = apply_span_step(df_step(v1), child2);
    CHECK(shifted.root == fx::p11());
    REQUIRE(shifted.width() == child2.width());
    for (std::size_t i = 0; i < child2.width(); ++i) {
      CHECK(shifted.branches[i].span.up ==
            compose(child2.branches[i].span.up, v1));
      CHECK(shifted.branches[i].span.down == child2.branches[i].span.down);
      CHECK(shifted.branches[i].child == child2.branches[i].child);
    }
  }

  SUBCASE("db pulls the up legs back") {
    SbCondition shifted = apply_span_step(db_step(v1), child1);
    CHECK(shifted.root == fx::p21());
    // the interface of the first branch becomes the two-point pair graph:
    // the up leg covers both nodes of p21, the down leg stays on x
    REQUIRE(shifted.width() == child1.width());
    const Span& s = shifted.branches[0].span;
    CHECK(s.interface().node_count() == 2);
    CHECK(s.up.cod() == fx::p21());
    CHECK(s.up.node_map() == std::vector<int>{0, 1});
    CHECK(s.down.node_map() == std::vector<int>{0, 0});
    // children are untouched
    CHECK(shifted.branches[0].child == child1.branches[0].child);
  }

  SUBCASE("steps over an identity are exact no-ops") {
    GraphMorphism idp = identity(fx::p11());
    CHECK(apply_span_step(df_step(idp), child1) == child1);
    CHECK(apply_span_step(db_step(idp), child1) == child1);
    CHECK(apply_span_step(rf_step(idp, idp), child1) == child1);
    CHECK(apply_span_step(rb_step(idp, idp), child1) == child1);
  }

  SUBCASE("root mismatch is rejected") {
    CHECK_THROWS_AS(apply_span_step(df_step(v1), child1), DomainError);
  }
}

TEST_CASE("trivial shifter moves only branchless conditions") {
  SpanShifter tr = SpanShifter::trivial(fx::p11(), fx::p21());
  CHECK(apply_span_shifter(tr, sb_false(fx::p11())) == sb_false(fx::p21()));
  CHECK_THROWS_AS(apply_span_shifter(tr, fx::b1().branches[0].child),
                  DomainError);
  CHECK_THROWS_AS(apply_span_shifter(tr, sb_false(fx::p21())), DomainError);
  CHECK(tr.is_trivial());
  CHECK(tr.is_complete());
}

TEST_CASE("shifter composition concatenates and absorbs") {
  GraphMorphism v1 = hom(fx::p21(), fx::p11(), {{"x", "x"}, {"y", "x"}});
  GraphMorphism t = hom(fx::p11(), p11_plus_aloop(), {{"x", "x"}});
  SpanShifter s1 = SpanShifter::of_steps({df_step(v1)});
  SpanShifter st = SpanShifter::of_steps({df_step(t)});

  SpanShifter both = compose_span_shifters(s1, st);
  CHECK(both.steps.size() == 2);
  CHECK(both.from == fx::p21());
  CHECK(both.to == p11_plus_aloop());
  SbCondition child2 = fx::b2().branches[0].child;  // over p21
  CHECK(apply_span_shifter(both, child2) ==
        apply_span_shifter(st, apply_span_shifter(s1, child2)));

  // trivial absorbs on either side
  SpanShifter tr = SpanShifter::trivial(fx::p11(), fx::dx());
  CHECK(compose_span_shifters(s1, tr) ==
        SpanShifter::trivial(fx::p21(), fx::dx()));
  CHECK(compose_span_shifters(SpanShifter::trivial(fx::dx(), fx::p21()), s1)
            .is_trivial());

  // identity steps drop out, making unit composition exact
  SpanShifter idf = SpanShifter::of_steps({df_step(identity(fx::p21()))});
  SpanShifter idf11 = SpanShifter::of_steps({df_step(identity(fx::p11()))});
  CHECK(compose_span_shifters(idf, s1) == s1);
  CHECK(compose_span_shifters(s1, idf11) == s1);
  CHECK(compose_span_shifters(idf, idf) == idf);

  CHECK_THROWS_AS(compose_span_shifters(s1, s1), DomainError);
  // endpoints meet but the directions disagree
  SpanShifter bwd = SpanShifter::of_steps({db_step(v1)});
  CHECK(bwd.from == fx::p11());
  CHECK_THROWS_AS(compose_span_shifters(s1, bwd), DomainError);
}

TEST_CASE("forward and backward step laws hold on fixture hosts") {
  GraphMorphism v1 = hom(fx::p21(), fx::p11(), {{"x", "x"}, {"y", "x"}});
  SbCondition child2 = fx::b2().branches[0].child;  // over p21
  SbCondition child1 = fx::b1().branches[0].child;  // over p11

  SUBCASE("df: g satisfies the shifted condition iff v;g satisfies it") {
    SbCondition shifted = apply_span_step(df_step(v1), child2);
    for (const auto& host : {fx::g1(), fx::g2(), fx::g3()})
      for (const auto& g : enumerate_morphisms(fx::p11(), host))
        CHECK(satisfies_sb(g, shifted) == satisfies_sb(compose(v1, g), child2));
  }

  SUBCASE("db along an epi: v;g satisfies the shifted condition iff g did") {
    REQUIRE(is_epi(v1));
    SbCondition shifted = apply_span_step(db_step(v1), child1);
    for (const auto& host : {fx::g1(), fx::g2(), fx::g3()})
      for (const auto& g : enumerate_morphisms(fx::p11(), host))
        CHECK(satisfies_sb(compose(v1, g), shifted) ==
              satisfies_sb(g, child1));
  }

  SUBCASE("rf along a section: satisfaction is carried forward") {
    Graph dxy = discrete_graph({"x", "y"});
    GraphMorphism v = hom(dxy, fx::dx(), {{"x", "x"}, {"y", "x"}});
    SbCondition c(
        dxy, {SbBranch(Span(identity(dxy),
                            hom(dxy, fx::p21(), {{"x", "x"}, {"y", "y"}})),
                       sb_false(fx::p21()))});
    for (const auto& x : enumerate_sections(v)) {
      SbCondition shifted = apply_span_step(rf_step(v, x), c);
      CHECK(shifted.root == fx::dx());
      for (const auto& host : {fx::g1(), fx::g2(), fx::g3()})
        for (const auto& g : enumerate_morphisms(fx::dx(), host)) {
          if (satisfies_sb(compose(v, g), c)) CHECK(satisfies_sb(g, shifted));
        }
    }
  }
}

TEST_CASE("pattern shifts find mediators with conservativity flags") {
  Span top1 = fx::b1().branches[0].span;
  Span top2 = fx::b2().branches[0].span;
  GraphMorphism v1 = hom(fx::p21(), fx::p11(), {{"x", "x"}, {"y", "x"}});

  SUBCASE("a span shifts to itself along the identity, conservatively") {
    auto ws = pattern_shifts(top1, top1, identity(fx::p11()));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].k.is_identity());
    CHECK(ws[0].conservative);
    auto first = pattern_shift_check(top1, top1, identity(fx::p11()));
    REQUIRE(first.has_value());
    CHECK(first->k == ws[0].k);
  }

  SUBCASE("spans with identity up legs shift iff the down legs factor") {
    auto ws = pattern_shifts(top2, top1, v1);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].k.is_identity());
    CHECK_FALSE(ws[0].conservative);  // the pattern collapses two nodes
  }

  SUBCASE("incompatible up legs admit no mediator") {
    Span sc(hom(fx::dx(), fx::p21(), {{"x", "x"}}), identity(fx::dx()));
    Span sb(hom(fx::dx(), fx::p21(), {{"x", "y"}}), identity(fx::dx()));
    CHECK(pattern_shifts(sc, sb, identity(fx::dx())).empty());
    CHECK_FALSE(pattern_shift_check(sc, sb, identity(fx::dx())).has_value());
  }

  SUBCASE("mediators compose along composed pattern maps") {
    Graph q = p11_plus_aloop();
    GraphMorphism a1 = hom(fx::dx(), fx::p21(), {{"x", "x"}});
    GraphMorphism t = hom(fx::p11(), q, {{"x", "x"}});
    GraphMorphism a2 = compose(a1, v1);
    GraphMorphism a3 = compose(a2, t);
    Span s1(identity(fx::dx()), a1);
    Span s2(identity(fx::dx()), a2);
    Span s3(identity(fx::dx()), a3);
    REQUIRE_FALSE(pattern_shifts(s1, s2, v1).empty());
    REQUIRE_FALSE(pattern_shifts(s2, s3, t).empty());
    auto composite = pattern_shifts(s1, s3, compose(v1, t));
    REQUIRE_FALSE(composite.empty());
    CHECK(composite[0].k ==
          compose(pattern_shifts(s1, s2, v1)[0].k,
                  pattern_shifts(s2, s3, t)[0].k));
  }
}

TEST_CASE("hand built ladder witness validates") {
  SbConditionMorphism m = fx::b2_to_b1();
  SbCondition b1 = fx::b1(), b2 = fx::b2();
  CHECK(check_sb_morphism(m, b2, b1).ok);

  // it is not complete: the top pattern shift merges the two pattern nodes
  Validity strict = check_sb_morphism(m, b2, b1, true);
  CHECK_FALSE(strict.ok);
  CHECK(strict.message.find("conservative") != std::string::npos);
  CHECK_FALSE(is_complete_sb_morphism(m, b2, b1));

  // direction and argument order matter
  CHECK_FALSE(check_sb_morphism(m, b1, b2).ok);
  SbConditionMorphism flipped = m;
  flipped.mode = Mode::backward;
  CHECK_FALSE(check_sb_morphism(flipped, b2, b1).ok);

  // tampered branch map is flagged
  SbConditionMorphism wild = m;
  wild.branch_map[0] = 3;
  Validity bad = check_sb_morphism(wild, b2, b1);
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("out of range") != std::string::npos);
}

TEST_CASE("identity witnesses validate, are complete, and compose exactly") {
  for (Mode mode : {Mode::forward, Mode::backward}) {
    CAPTURE(mode_name(mode));
    for (const auto& c : {fx::b1(), fx::b2(), fx::b3()}) {
      SbConditionMorphism id = identity_sb_morphism(c, mode);
      CHECK(check_sb_morphism(id, c, c).ok);
      CHECK(check_sb_morphism(id, c, c, true).ok);
      CHECK(is_complete_sb_morphism(id, c, c));
    }
  }

  SbConditionMorphism m = fx::b2_to_b1();
  CHECK(compose_sb_morphisms(identity_sb_morphism(fx::b2(), Mode::forward), m) ==
        m);
  CHECK(compose_sb_morphisms(m, identity_sb_morphism(fx::b1(), Mode::forward)) ==
        m);
  CHECK_THROWS_AS(
      compose_sb_morphisms(m, identity_sb_morphism(fx::b1(), Mode::backward)),
      DomainError);
}

TEST_CASE("search finds the ladder witnesses and respects direction") {
  SbCondition b1 = fx::b1(), b2 = fx::b2(), b3 = fx::b3();

  auto m21 = search_sb_morphism(b2, b1, Mode::forward);
  REQUIRE(m21.has_value());
  CHECK(check_sb_morphism(*m21, b2, b1).ok);
  CHECK(m21->branch_map == std::vector<int>{0});
  GraphMorphism v1 = hom(fx::p21(), fx::p11(), {{"x", "x"}, {"y", "x"}});
  CHECK(m21->branches[0].v == v1);
  CHECK(m21->branches[0].shifter == SpanShifter::of_steps({df_step(v1)}));
  CHECK_FALSE(is_complete_sb_morphism(*m21, b2, b1));

  auto m32 = search_sb_morphism(b3, b2, Mode::forward);
  REQUIRE(m32.has_value());
  CHECK(check_sb_morphism(*m32, b3, b2).ok);

  // entailment is strict, so nothing goes the other way
  CHECK_FALSE(search_sb_morphism(b1, b2, Mode::forward).has_value());
  CHECK_FALSE(search_sb_morphism(b1, b2, Mode::backward).has_value());
  CHECK_FALSE(search_sb_morphism(b2, b3, Mode::forward).has_value());
  CHECK_FALSE(search_sb_morphism(b2, b3, Mode::backward).has_value());

  // composite of the two searched witnesses spans the whole ladder
  SbConditionMorphism r = compose_sb_morphisms(*m32, *m21);
  CHECK(check_sb_morphism(r, b3, b1).ok);

  CHECK_THROWS_AS(search_sb_morphism(b3, b3, Mode::forward, false,
                                     SearchBudget{1}),
                  ResourceError);
  CHECK_THROWS_AS(search_sb_morphism(b2, sb_false(fx::p21()), Mode::forward),
                  DomainError);
}

TEST_CASE("complete search witnesses equivalence only") {
  SbCondition b1 = fx::b1(), b2 = fx::b2(), b3 = fx::b3();

  // self-equivalence: a complete witness exists in both modes
  for (Mode mode : {Mode::forward, Mode::backward}) {
    CAPTURE(mode_name(mode));
    for (const auto& c : {b1, b2, b3}) {
      auto found = search_sb_morphism(c, c, mode, true);
      REQUIRE(found.has_value());
      CHECK(check_sb_morphism(*found, c, c, true).ok);
      CHECK(is_complete_sb_morphism(*found, c, c));
      // the witness fixes every branch in place with identity pattern maps
      for (std::size_t i = 0; i < found->branch_map.size(); ++i) {
        CHECK(found->branch_map[i] == static_cast<int>(i));
        CHECK(found->branches[i].v.is_identity());
      }
    }
  }

  // strict entailment admits a witness but no complete one
  CHECK(search_sb_morphism(b2, b1, Mode::forward).has_value());
  CHECK_FALSE(search_sb_morphism(b2, b1, Mode::forward, true).has_value());
  CHECK_FALSE(search_sb_morphism(b3, b2, Mode::forward, true).has_value());
}
