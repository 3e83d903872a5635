#include "nestcond/colimits.hpp"

#include <algorithm>
#include <numeric>

namespace nestcond {

Span::Span(GraphMorphism up_leg, GraphMorphism down_leg)
    : up(std::move(up_leg)), down(std::move(down_leg)) {
  if (!(up.dom() == down.dom()))
    throw DomainError("span legs must share their domain");
}

Cospan::Cospan(GraphMorphism left_leg, GraphMorphism right_leg)
    : left(std::move(left_leg)), right(std::move(right_leg)) {
  if (!(left.cod() == right.cod()))
    throw DomainError("cospan legs must share their codomain");
}

GraphMorphism compose_path(const std::vector<GraphMorphism>& path) {
  if (path.empty()) throw DomainError("cannot compose an empty path");
  GraphMorphism acc = path.front();
  for (std::size_t i = 1; i < path.size(); ++i) acc = compose(acc, path[i]);
  return acc;
}

bool commutes(const std::vector<GraphMorphism>& path1,
              const std::vector<GraphMorphism>& path2) {
  return compose_path(path1) == compose_path(path2);
}

namespace {

bool bijective(const std::vector<int>& map, std::size_t cod_size) {
  if (map.size() != cod_size) return false;
  std::vector<bool> hit(cod_size, false);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<int> invert(const std::vector<int>& map) {
  std::vector<int> inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

PullbackResult pullback(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod() == g.cod()))
    throw DomainError("pullback requires a cospan: cod(f) != cod(g)");
  const Graph& A = f.dom();
  const Graph& B = g.dom();

  // pair graph: all (a, b) with f(a) = g(b), lexicographic by index
  std::vector<std::pair<int, int>> nodes, edges;
  for (int i = 0; i < static_cast<int>(A.node_count()); ++i)
    for (int j = 0; j < static_cast<int>(B.node_count()); ++j)
      if (f.node_map()[i] == g.node_map()[j]) nodes.push_back({i, j});
  for (int i = 0; i < static_cast<int>(A.edge_count()); ++i)
    for (int j = 0; j < static_cast<int>(B.edge_count()); ++j)
      if (f.edge_map()[i] == g.edge_map()[j]) edges.push_back({i, j});

  std::vector<int> pn1, pn2, pe1, pe2;
  for (auto [i, j] : nodes) pn1.push_back(i), pn2.push_back(j);
  for (auto [i, j] : edges) pe1.push_back(i), pe2.push_back(j);

  if (bijective(pn2, B.node_count()) && bijective(pe2, B.edge_count())) {
    // apex is B itself; p1 is the induced map b -> its unique partner
    std::vector<int> inv_n = invert(pn2), inv_e = invert(pe2);
    std::vector<int> qn(B.node_count()), qe(B.edge_count());
    for (std::size_t j = 0; j < qn.size(); ++j) qn[j] = pn1[inv_n[j]];
    for (std::size_t j = 0; j < qe.size(); ++j) qe[j] = pe1[inv_e[j]];
    return {B, GraphMorphism(B, A, std::move(qn), std::move(qe)), identity(B)};
  }
  if (bijective(pn1, A.node_count()) && bijective(pe1, A.edge_count())) {
    std::vector<int> inv_n = invert(pn1), inv_e = invert(pe1);
    std::vector<int> qn(A.node_count()), qe(A.edge_count());
    for (std::size_t i = 0; i < qn.size(); ++i) qn[i] = pn2[inv_n[i]];
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = pe2[inv_e[i]];
    return {A, identity(A), GraphMorphism(A, B, std::move(qn), std::move(qe))};
  }

  auto node_at = [&](int i, int j) {
    auto it = std::find(nodes.begin(), nodes.end(), std::pair<int, int>{i, j});
    return static_cast<int>(it - nodes.begin());
  };
  std::vector<std::string> qnodes;
  for (auto [i, j] : nodes)
    qnodes.push_back("(" + A.nodes()[i] + "," + B.nodes()[j] + ")");
  std::vector<Edge> qedges;
  for (auto [i, j] : edges) {
    const Edge& ea = A.edges()[i];
    const Edge& eb = B.edges()[j];
    qedges.push_back(
        {"(" + ea.id + "," + eb.id + ")",
         qnodes[node_at(A.node_index(ea.src), B.node_index(eb.src))], ea.label,
         qnodes[node_at(A.node_index(ea.tgt), B.node_index(eb.tgt))]});
  }
  Graph apex(std::move(qnodes), std::move(qedges));
  GraphMorphism p1(apex, A, pn1, pe1);
  GraphMorphism p2(apex, B, pn2, pe2);
  return {std::move(apex), std::move(p1), std::move(p2)};
}

namespace {

// union-find with path compression; enough for tagged disjoint unions
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// classes in first-occurrence order; returns item -> class index
std::vector<int> classes_of(UnionFind& uf, int n, int& count) {
  std::vector<int> cls(n, -1);
  count = 0;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (cls[r] < 0) cls[r] = count++;
    cls[i] = cls[r];
  }
  return cls;
}

}  // namespace

PushoutResult pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom() == g.dom()))
    throw DomainError("pushout requires a span: dom(f) != dom(g)");
  const Graph& A = f.cod();
  const Graph& B = g.cod();
  const int an = static_cast<int>(A.node_count());
  const int ae = static_cast<int>(A.edge_count());
  const int bn = static_cast<int>(B.node_count());
  const int be = static_cast<int>(B.edge_count());

  UnionFind un(an + bn), ue(ae + be);
  for (std::size_t i = 0; i < f.node_map().size(); ++i)
    un.join(f.node_map()[i], an + g.node_map()[i]);
  for (std::size_t i = 0; i < f.edge_map().size(); ++i)
    ue.join(f.edge_map()[i], ae + g.edge_map()[i]);

  int ncls = 0, ecls = 0;
  std::vector<int> ncls_of = classes_of(un, an + bn, ncls);
  std::vector<int> ecls_of = classes_of(ue, ae + be, ecls);

  std::vector<int> q1n(ncls_of.begin(), ncls_of.begin() + an);
  std::vector<int> q2n(ncls_of.begin() + an, ncls_of.end());
  std::vector<int> q1e(ecls_of.begin(), ecls_of.begin() + ae);
  std::vector<int> q2e(ecls_of.begin() + ae, ecls_of.end());

  if (static_cast<int>(q2n.size()) == ncls && bijective(q2n, ncls) &&
      static_cast<int>(q2e.size()) == ecls && bijective(q2e, ecls)) {
    // apex is B itself; q1 is induced through the class structure
    std::vector<int> inv_n = invert(q2n), inv_e = invert(q2e);
    std::vector<int> rn(an), re(ae);
    for (int i = 0; i < an; ++i) rn[i] = inv_n[q1n[i]];
    for (int i = 0; i < ae; ++i) re[i] = inv_e[q1e[i]];
    return {B, GraphMorphism(A, B, std::move(rn), std::move(re)), identity(B)};
  }
  if (static_cast<int>(q1n.size()) == ncls && bijective(q1n, ncls) &&
      static_cast<int>(q1e.size()) == ecls && bijective(q1e, ecls)) {
    std::vector<int> inv_n = invert(q1n), inv_e = invert(q1e);
    std::vector<int> rn(bn), re(be);
    for (int j = 0; j < bn; ++j) rn[j] = inv_n[q2n[j]];
    for (int j = 0; j < be; ++j) re[j] = inv_e[q2e[j]];
    return {A, identity(A), GraphMorphism(B, A, std::move(rn), std::move(re))};
  }

  // genuine quotient of the tagged disjoint union
  auto tagged_node = [&](int i) {
    return i < an ? "0:" + A.nodes()[i] : "1:" + B.nodes()[i - an];
  };
  auto tagged_edge = [&](int i) {
    return i < ae ? "0:" + A.edges()[i].id : "1:" + B.edges()[i - ae].id;
  };
  std::vector<std::string> qnodes(ncls);
  for (int i = 0; i < an + bn; ++i) {
    std::string name = tagged_node(i);
    std::string& slot = qnodes[ncls_of[i]];
    if (slot.empty() || name < slot) slot = std::move(name);
  }
  std::vector<std::string> enames(ecls);
  std::vector<int> erep(ecls, -1);  // any member, for label and endpoints
  for (int i = 0; i < ae + be; ++i) {
    std::string name = tagged_edge(i);
    std::string& slot = enames[ecls_of[i]];
    if (slot.empty() || name < slot) slot = std::move(name);
    if (erep[ecls_of[i]] < 0) erep[ecls_of[i]] = i;
  }
  std::vector<Edge> qedges(ecls);
  for (int c = 0; c < ecls; ++c) {
    int i = erep[c];
    const Edge& e = i < ae ? A.edges()[i] : B.edges()[i - ae];
    const Graph& side = i < ae ? A : B;
    int off = i < ae ? 0 : an;
    qedges[c] = {enames[c], qnodes[ncls_of[off + side.node_index(e.src)]],
                 e.label, qnodes[ncls_of[off + side.node_index(e.tgt)]]};
  }
  Graph apex(std::move(qnodes), std::move(qedges));
  GraphMorphism q1(A, apex, std::move(q1n), std::move(q1e));
  GraphMorphism q2(B, apex, std::move(q2n), std::move(q2e));
  return {std::move(apex), std::move(q1), std::move(q2)};
}

Span compose_spans(const Span& s1, const Span& s2) {
  if (!(s1.down.cod() == s2.up.cod()))
    throw DomainError("span composition endpoint mismatch");
  PullbackResult pb = pullback(s1.down, s2.up);
  return Span(compose(pb.p1, s1.up), compose(pb.p2, s2.down));
}

Span identity_span(const Graph& g) {
  GraphMorphism id = identity(g);
  return Span(id, id);
}

std::optional<GraphMorphism> span_iso(const Span& a, const Span& b,
                                      const EnumLimits& limits) {
  if (!(a.up.cod() == b.up.cod()) || !(a.down.cod() == b.down.cod()))
    return std::nullopt;
  for (const auto& phi : enumerate_isos(a.interface(), b.interface(), limits))
    if (compose(phi, b.up) == a.up && compose(phi, b.down) == a.down)
      return phi;
  return std::nullopt;
}

}  // namespace nestcond
