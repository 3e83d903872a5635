#include <doctest.h>

#include "nestcond/colimits.hpp"

using namespace nestcond;

namespace {

Graph dx() { return discrete_graph({"x"}); }
Graph dxy() { return discrete_graph({"x", "y"}); }
Graph p11() { return Graph({"x"}, {{"e1", "x", "b", "x"}}); }
Graph p21() { return Graph({"x", "y"}, {{"e1", "x", "b", "y"}}); }

// mediator count for the pullback universal property, by brute force
int pullback_mediators(const PullbackResult& pb, const GraphMorphism& x,
                       const GraphMorphism& y) {
  int n = 0;
  for (const auto& m : enumerate_morphisms(x.dom(), pb.apex))
    if (compose(m, pb.p1) == x && compose(m, pb.p2) == y) ++n;
  return n;
}

int pushout_mediators(const PushoutResult& po, const GraphMorphism& x,
                      const GraphMorphism& y) {
  int n = 0;
  for (const auto& m : enumerate_morphisms(po.apex, x.cod()))
    if (compose(po.q1, m) == x && compose(po.q2, m) == y) ++n;
  return n;
}

}  // namespace

TEST_CASE("span and cospan validation") {
  auto u = hom(dx(), dxy(), {{"x", "x"}});
  auto d = hom(dx(), p11(), {{"x", "x"}});
  CHECK_NOTHROW(Span(u, d));
  CHECK_THROWS_AS(Span(u, hom(dxy(), dx(), {{"x", "x"}, {"y", "x"}})),
                  DomainError);
  CHECK_NOTHROW(Cospan(u, identity(dxy())));
  CHECK_THROWS_AS(Cospan(u, d), DomainError);
}

TEST_CASE("compose_path and commutes") {
  auto u = hom(dx(), dxy(), {{"x", "x"}});
  auto v = hom(dxy(), dx(), {{"x", "x"}, {"y", "x"}});
  CHECK(compose_path({u}) == u);
  CHECK(compose_path({u, v}) == identity(dx()));
  CHECK(commutes({u, v}, {identity(dx())}));
  CHECK(!commutes({v, u}, {identity(dxy())}));
  CHECK_THROWS_AS(compose_path({}), DomainError);
}

TEST_CASE("pullback along an identity is exact") {
  auto u = hom(dx(), p21(), {{"x", "y"}});
  auto pb = pullback(identity(p21()), u);
  CHECK(pb.apex == dx());
  CHECK(pb.p1 == u);
  CHECK(pb.p2.is_identity());

  auto pb2 = pullback(u, identity(p21()));
  CHECK(pb2.apex == dx());
  CHECK(pb2.p1.is_identity());
  CHECK(pb2.p2 == u);
}

TEST_CASE("pullback of disjoint inclusions is empty") {
  auto f = hom(dx(), dxy(), {{"x", "x"}});
  auto g = hom(discrete_graph({"y"}), dxy(), {{"y", "y"}});
  auto pb = pullback(f, g);
  CHECK(pb.apex.node_count() == 0);
  CHECK(pb.apex.edge_count() == 0);
}

TEST_CASE("pullback pair graph: kernel pair of a node collapse") {
  auto v = hom(dxy(), dx(), {{"x", "x"}, {"y", "x"}});
  auto pb = pullback(v, v);
  REQUIRE(pb.apex.node_count() == 4);
  CHECK(pb.apex.nodes() ==
        std::vector<std::string>{"(x,x)", "(x,y)", "(y,x)", "(y,y)"});
  CHECK(pb.p1.node_map() == std::vector<int>{0, 0, 1, 1});
  CHECK(pb.p2.node_map() == std::vector<int>{0, 1, 0, 1});
  CHECK(commutes({pb.p1, v}, {pb.p2, v}));
}

TEST_CASE("pullback with parallel edges") {
  Graph par({"u", "w"}, {{"p1", "u", "a", "w"}, {"p2", "u", "a", "w"}});
  Graph single({"x", "y"}, {{"e1", "x", "a", "y"}});
  auto c = GraphMorphism(par, single, {0, 1}, {0, 0});
  auto pb = pullback(c, c);
  CHECK(pb.apex.node_count() == 2);
  REQUIRE(pb.apex.edge_count() == 4);
  CHECK(pb.apex.edges()[1].id == "(p1,p2)");
  CHECK(commutes({pb.p1, c}, {pb.p2, c}));

  // universal property for every competing cone from small probes
  for (const Graph& probe : {dx(), single, par}) {
    for (const auto& x : enumerate_morphisms(probe, par))
      for (const auto& y : enumerate_morphisms(probe, par))
        if (compose(x, c) == compose(y, c))
          CHECK(pullback_mediators(pb, x, y) == 1);
  }
}

TEST_CASE("pushout along an identity is exact") {
  auto a = hom(dx(), p11(), {{"x", "x"}});
  auto po = pushout(identity(dx()), a);
  CHECK(po.apex == p11());
  CHECK(po.q1 == a);
  CHECK(po.q2.is_identity());

  auto po2 = pushout(a, identity(dx()));
  CHECK(po2.apex == p11());
  CHECK(po2.q1.is_identity());
  CHECK(po2.q2 == a);
}

TEST_CASE("pushout absorbing a collapse") {
  // pushing out a collapse against an identity keeps the collapsed side
  auto v = hom(dxy(), dx(), {{"x", "x"}, {"y", "x"}});
  auto po = pushout(v, identity(dxy()));
  CHECK(po.apex == dx());
  CHECK(po.q1.is_identity());
  CHECK(po.q2 == v);
}

TEST_CASE("pushout quotient of a genuine amalgamation") {
  // glue y of one discrete graph onto u of another
  auto f = hom(dx(), dxy(), {{"x", "y"}});
  auto g = hom(dx(), discrete_graph({"u", "w"}), {{"x", "u"}});
  auto po = pushout(f, g);
  CHECK(po.apex.nodes() == std::vector<std::string>{"0:x", "0:y", "1:w"});
  CHECK(po.q1.node_map() == std::vector<int>{0, 1});
  CHECK(po.q2.node_map() == std::vector<int>{1, 2});
  CHECK(commutes({f, po.q1}, {g, po.q2}));
  CHECK(pushout_mediators(po, compose(po.q1, identity(po.apex)),
                          compose(po.q2, identity(po.apex))) == 1);
}

TEST_CASE("pushout glueing two edges along their endpoints") {
  Graph a1({"s", "t"}, {{"e1", "s", "a", "t"}});
  Graph a2({"p", "q"}, {{"e2", "p", "a", "q"}});
  auto f = hom(dxy(), a1, {{"x", "s"}, {"y", "t"}});
  auto g = hom(dxy(), a2, {{"x", "p"}, {"y", "q"}});
  auto po = pushout(f, g);
  // nodes glue pairwise, edges stay apart: a parallel pair appears
  CHECK(po.apex.nodes() == std::vector<std::string>{"0:s", "0:t"});
  REQUIRE(po.apex.edge_count() == 2);
  CHECK(po.apex.edges()[0].id == "0:e1");
  CHECK(po.apex.edges()[1].id == "1:e2");
  CHECK(po.apex.edges()[0].src == "0:s");
  CHECK(po.apex.edges()[1].src == "0:s");
  CHECK(commutes({f, po.q1}, {g, po.q2}));

  // universal property against a one-edge cocone
  auto x = hom(a1, a1, {{"s", "s"}, {"t", "t"}});
  auto y = hom(a2, a1, {{"p", "s"}, {"q", "t"}});
  CHECK(compose(f, x) == compose(g, y));
  CHECK(pushout_mediators(po, x, y) == 1);
}

TEST_CASE("pushout merging edges through the interface") {
  // interface with an edge: both copies of the edge become one
  Graph ia({"x", "y"}, {{"i", "x", "a", "y"}});
  Graph a1({"s", "t"}, {{"e1", "s", "a", "t"}});
  auto f = GraphMorphism(ia, a1, {0, 1}, {0});
  auto po = pushout(f, f);
  // both directions bijective; the B-preferred normalisation applies
  CHECK(po.apex == a1);
  CHECK(po.q1.is_identity());
  CHECK(po.q2.is_identity());
}

TEST_CASE("span composition with identities is exact") {
  auto u = hom(dx(), p21(), {{"x", "y"}});
  auto d = hom(dx(), p11(), {{"x", "x"}});
  Span s(u, d);
  CHECK(compose_spans(identity_span(p21()), s) == s);
  CHECK(compose_spans(s, identity_span(p11())) == s);
}

TEST_CASE("span composition is associative up to iso") {
  auto u1 = hom(dx(), p21(), {{"x", "x"}});
  auto d1 = hom(dx(), dxy(), {{"x", "y"}});
  auto u2 = hom(dxy(), dxy(), {{"x", "x"}, {"y", "y"}});
  auto d2 = hom(dxy(), dx(), {{"x", "x"}, {"y", "x"}});
  auto u3 = hom(dx(), dx(), {{"x", "x"}});
  auto d3 = hom(dx(), p11(), {{"x", "x"}});
  Span s1(u1, d1), s2(u2, d2), s3(u3, d3);
  Span left = compose_spans(compose_spans(s1, s2), s3);
  Span right = compose_spans(s1, compose_spans(s2, s3));
  CHECK(span_iso(left, right).has_value());
  // and composition endpoints are checked
  CHECK_THROWS_AS(compose_spans(s1, s1), DomainError);
}

TEST_CASE("span_iso distinguishes legs") {
  auto u = hom(dx(), dxy(), {{"x", "x"}});
  auto u2 = hom(dx(), dxy(), {{"x", "y"}});
  auto d = hom(dx(), p11(), {{"x", "x"}});
  CHECK(span_iso(Span(u, d), Span(u, d)).has_value());
  CHECK(!span_iso(Span(u, d), Span(u2, d)).has_value());
}
