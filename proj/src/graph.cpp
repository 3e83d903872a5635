#include "nestcond/graph.hpp"

#include <algorithm>
#include <set>

#include "engine.hpp"

namespace nestcond {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("alphabet label must be non-empty");
    if (!seen.insert(l).second)
      throw DomainError("duplicate alphabet label: " + l);
  }
}

bool Alphabet::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::set<std::string_view> node_names;
  for (const auto& n : nodes_) {
    if (n.empty()) throw DomainError("node name must be non-empty");
    if (!node_names.insert(n).second)
      throw DomainError("duplicate node name: " + n);
  }
  std::set<std::string_view> edge_ids;
  for (const auto& e : edges_) {
    if (e.id.empty()) throw DomainError("edge id must be non-empty");
    if (e.label.empty())
      throw DomainError("edge label must be non-empty: " + e.id);
    if (!edge_ids.insert(e.id).second)
      throw DomainError("duplicate edge id: " + e.id);
    if (!node_names.count(e.src))
      throw DomainError("edge " + e.id + " has undeclared source " + e.src);
    if (!node_names.count(e.tgt))
      throw DomainError("edge " + e.id + " has undeclared target " + e.tgt);
  }
}

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges,
             const Alphabet& labels)
    : Graph(std::move(nodes), std::move(edges)) {
  for (const auto& e : edges_)
    if (!labels.contains(e.label))
      throw DomainError("edge " + e.id + " uses label outside the alphabet: " +
                        e.label);
}

int Graph::node_index(std::string_view name) const {
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (nodes_[i] == name) return i;
  return -1;
}

int Graph::edge_index(std::string_view id) const {
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    if (edges_[i].id == id) return i;
  return -1;
}

bool Graph::has_edge(std::string_view src, std::string_view label,
                     std::string_view tgt) const {
  for (const auto& e : edges_)
    if (e.src == src && e.label == label && e.tgt == tgt) return true;
  return false;
}

std::vector<std::string> Graph::edge_labels() const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (std::find(out.begin(), out.end(), e.label) == out.end())
      out.push_back(e.label);
  return out;
}

Graph discrete_graph(std::vector<std::string> nodes) {
  return Graph(std::move(nodes), {});
}

GraphMorphism::GraphMorphism(Graph dom, Graph cod, std::vector<int> node_map,
                             std::vector<int> edge_map)
    : GraphMorphism(std::make_shared<const Graph>(std::move(dom)),
                    std::make_shared<const Graph>(std::move(cod)),
                    std::move(node_map), std::move(edge_map)) {}

GraphMorphism::GraphMorphism(std::shared_ptr<const Graph> dom,
                             std::shared_ptr<const Graph> cod,
                             std::vector<int> node_map,
                             std::vector<int> edge_map)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      node_map_(std::move(node_map)),
      edge_map_(std::move(edge_map)) {
  if (!dom_ || !cod_) throw DomainError("morphism endpoints must be non-null");
  if (node_map_.size() != dom_->node_count())
    throw DomainError("node map is not total");
  if (edge_map_.size() != dom_->edge_count())
    throw DomainError("edge map is not total");
  for (int img : node_map_)
    if (img < 0 || img >= static_cast<int>(cod_->node_count()))
      throw DomainError("node image out of range");
  for (std::size_t i = 0; i < edge_map_.size(); ++i) {
    int img = edge_map_[i];
    if (img < 0 || img >= static_cast<int>(cod_->edge_count()))
      throw DomainError("edge image out of range");
    const Edge& de = dom_->edges()[i];
    const Edge& ce = cod_->edges()[img];
    if (de.label != ce.label)
      throw DomainError("edge " + de.id + " image changes label");
    if (cod_->node_index(ce.src) != node_map_[dom_->node_index(de.src)] ||
        cod_->node_index(ce.tgt) != node_map_[dom_->node_index(de.tgt)])
      throw DomainError("edge " + de.id + " image breaks incidence");
  }
}

GraphMorphism GraphMorphism::from_names(
    Graph dom, Graph cod,
    const std::vector<std::pair<std::string, std::string>>& node_map,
    const std::vector<std::pair<std::string, std::string>>& edge_map) {
  std::vector<int> nm(dom.node_count(), -1), em(dom.edge_count(), -1);
  for (const auto& [from, to] : node_map) {
    int i = dom.node_index(from);
    if (i < 0) throw DomainError("node map mentions unknown node " + from);
    int j = cod.node_index(to);
    if (j < 0) throw DomainError("node image is not a codomain node: " + to);
    if (nm[i] >= 0) throw DomainError("node mapped twice: " + from);
    nm[i] = j;
  }
  for (const auto& [from, to] : edge_map) {
    int i = dom.edge_index(from);
    if (i < 0) throw DomainError("edge map mentions unknown edge " + from);
    int j = cod.edge_index(to);
    if (j < 0) throw DomainError("edge image is not a codomain edge: " + to);
    if (em[i] >= 0) throw DomainError("edge mapped twice: " + from);
    em[i] = j;
  }
  for (std::size_t i = 0; i < nm.size(); ++i)
    if (nm[i] < 0)
      throw DomainError("node map misses node " + dom.nodes()[i]);
  for (std::size_t i = 0; i < em.size(); ++i)
    if (em[i] < 0)
      throw DomainError("edge map misses edge " + dom.edges()[i].id);
  return GraphMorphism(std::move(dom), std::move(cod), std::move(nm),
                       std::move(em));
}

const std::string& GraphMorphism::node_image(std::string_view node) const {
  int i = dom_->node_index(node);
  if (i < 0) throw DomainError(std::string("unknown node: ") + std::string(node));
  return cod_->nodes()[node_map_[i]];
}

const std::string& GraphMorphism::edge_image(std::string_view edge) const {
  int i = dom_->edge_index(edge);
  if (i < 0) throw DomainError(std::string("unknown edge: ") + std::string(edge));
  return cod_->edges()[edge_map_[i]].id;
}

bool GraphMorphism::is_identity() const {
  if (dom_ != cod_ && !(*dom_ == *cod_)) return false;
  for (std::size_t i = 0; i < node_map_.size(); ++i)
    if (node_map_[i] != static_cast<int>(i)) return false;
  for (std::size_t i = 0; i < edge_map_.size(); ++i)
    if (edge_map_[i] != static_cast<int>(i)) return false;
  return true;
}

GraphMorphism identity(const Graph& g) {
  std::vector<int> nm(g.node_count()), em(g.edge_count());
  for (std::size_t i = 0; i < nm.size(); ++i) nm[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < em.size(); ++i) em[i] = static_cast<int>(i);
  auto shared = std::make_shared<const Graph>(g);
  return GraphMorphism(shared, shared, std::move(nm), std::move(em));
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod() == g.dom()))
    throw DomainError("composition endpoint mismatch: cod(f) != dom(g)");
  std::vector<int> nm(f.dom().node_count()), em(f.dom().edge_count());
  for (std::size_t i = 0; i < nm.size(); ++i)
    nm[i] = g.node_map()[f.node_map()[i]];
  for (std::size_t i = 0; i < em.size(); ++i)
    em[i] = g.edge_map()[f.edge_map()[i]];
  return GraphMorphism(f.dom_ptr(), g.cod_ptr(), std::move(nm), std::move(em));
}

GraphMorphism hom(const Graph& dom, const Graph& cod,
                  const std::vector<std::pair<std::string, std::string>>& nodes) {
  std::vector<int> nm(dom.node_count(), -1);
  for (const auto& [from, to] : nodes) {
    int i = dom.node_index(from);
    if (i < 0) throw DomainError("node map mentions unknown node " + from);
    int j = cod.node_index(to);
    if (j < 0) throw DomainError("node image is not a codomain node: " + to);
    nm[i] = j;
  }
  for (std::size_t i = 0; i < nm.size(); ++i)
    if (nm[i] < 0) throw DomainError("node map misses node " + dom.nodes()[i]);
  std::vector<int> em(dom.edge_count(), -1);
  for (std::size_t i = 0; i < em.size(); ++i) {
    const Edge& de = dom.edges()[i];
    int s = nm[dom.node_index(de.src)], t = nm[dom.node_index(de.tgt)];
    int found = -1;
    for (int j = 0; j < static_cast<int>(cod.edge_count()); ++j) {
      const Edge& ce = cod.edges()[j];
      if (ce.label == de.label && cod.node_index(ce.src) == s &&
          cod.node_index(ce.tgt) == t) {
        if (found >= 0)
          throw DomainError("edge image ambiguous for " + de.id +
                            "; give the edge map explicitly");
        found = j;
      }
    }
    if (found < 0)
      throw DomainError("no admissible image for edge " + de.id);
    em[i] = found;
  }
  return GraphMorphism(dom, cod, std::move(nm), std::move(em));
}

namespace detail {

IndexedGraph index_graph(const Graph& g, LabelTable& table) {
  IndexedGraph ig;
  ig.nodes = static_cast<int>(g.node_count());
  ig.edges.reserve(g.edge_count());
  for (const auto& e : g.edges())
    ig.edges.push_back({g.node_index(e.src), table.intern(e.label),
                        g.node_index(e.tgt)});
  return ig;
}

void check_limits(const Graph& g, const EnumLimits& limits, const char* role) {
  if (static_cast<int>(g.node_count()) > limits.max_nodes ||
      static_cast<int>(g.edge_count()) > limits.max_edges)
    throw ResourceError(std::string("graph exceeds enumeration cap (") + role +
                        ": " + std::to_string(g.node_count()) + " nodes, " +
                        std::to_string(g.edge_count()) + " edges; cap " +
                        std::to_string(limits.max_nodes) + "/" +
                        std::to_string(limits.max_edges) + ")");
}

namespace {

struct Walker {
  const IndexedGraph& P;
  const IndexedGraph& G;
  Assignment a;
  // edges whose endpoints become fully assigned at a given node position
  std::vector<std::vector<int>> due_edges;
  const std::function<bool(const Assignment&)>* fn = nullptr;

  bool edge_candidates_exist(int ei) const {
    const auto& pe = P.edges[ei];
    for (const auto& ge : G.edges)
      if (ge.label == pe.label && ge.src == a.n[pe.src] && ge.tgt == a.n[pe.tgt])
        return true;
    return false;
  }

  bool assign_edges(int ei) {
    if (ei == static_cast<int>(P.edges.size())) return (*fn)(a);
    if (a.e[ei] >= 0) return assign_edges(ei + 1);  // preassigned
    const auto& pe = P.edges[ei];
    for (int j = 0; j < static_cast<int>(G.edges.size()); ++j) {
      const auto& ge = G.edges[j];
      if (ge.label != pe.label || ge.src != a.n[pe.src] || ge.tgt != a.n[pe.tgt])
        continue;
      a.e[ei] = j;
      if (assign_edges(ei + 1)) return true;
    }
    a.e[ei] = -1;
    return false;
  }

  bool assign_nodes(int ni) {
    if (ni == P.nodes) return assign_edges(0);
    if (a.n[ni] >= 0) {
      for (int ei : due_edges[ni])
        if (a.e[ei] < 0 && !edge_candidates_exist(ei)) return false;
      return assign_nodes(ni + 1);
    }
    for (int v = 0; v < G.nodes; ++v) {
      a.n[ni] = v;
      bool feasible = true;
      for (int ei : due_edges[ni])
        if (a.e[ei] < 0 && !edge_candidates_exist(ei)) {
          feasible = false;
          break;
        }
      if (feasible && assign_nodes(ni + 1)) return true;
    }
    a.n[ni] = -1;
    return false;
  }
};

}  // namespace

bool for_each_extension(const IndexedGraph& P, const IndexedGraph& G,
                        std::vector<int> pre_nodes, std::vector<int> pre_edges,
                        const std::function<bool(const Assignment&)>& fn) {
  // validate preassigned edges: endpoints must be preassigned and consistent
  for (std::size_t ei = 0; ei < pre_edges.size(); ++ei) {
    int j = pre_edges[ei];
    if (j < 0) continue;
    const auto& pe = P.edges[ei];
    const auto& ge = G.edges[j];
    if (ge.label != pe.label) return false;
    if (pre_nodes[pe.src] != ge.src || pre_nodes[pe.tgt] != ge.tgt) return false;
  }
  Walker w{P, G, Assignment{std::move(pre_nodes), std::move(pre_edges)}, {}, &fn};
  w.due_edges.resize(std::max(P.nodes, 1));
  for (int ei = 0; ei < static_cast<int>(P.edges.size()); ++ei) {
    const auto& pe = P.edges[ei];
    w.due_edges[std::max(pe.src, pe.tgt)].push_back(ei);
  }
  return w.assign_nodes(0);
}

}  // namespace detail

namespace {

using detail::Assignment;
using detail::IndexedGraph;
using detail::LabelTable;

}  // namespace

std::vector<GraphMorphism> enumerate_morphisms(const Graph& dom,
                                               const Graph& cod,
                                               const EnumLimits& limits) {
  detail::check_limits(dom, limits, "domain");
  detail::check_limits(cod, limits, "codomain");
  LabelTable table;
  IndexedGraph P = detail::index_graph(dom, table);
  IndexedGraph G = detail::index_graph(cod, table);
  auto sd = std::make_shared<const Graph>(dom);
  auto sc = std::make_shared<const Graph>(cod);
  std::vector<GraphMorphism> out;
  detail::for_each_extension(
      P, G, std::vector<int>(P.nodes, -1), std::vector<int>(P.edges.size(), -1),
      [&](const Assignment& a) {
        out.push_back(GraphMorphism(sd, sc, a.n, a.e));
        return false;
      });
  return out;
}

bool for_each_factorisation(const GraphMorphism& q, const GraphMorphism& r,
                            const std::function<bool(const GraphMorphism&)>& fn,
                            const EnumLimits& limits) {
  if (!(q.dom() == r.dom()))
    throw DomainError("factorisation requires q and r to share their domain");
  detail::check_limits(q.cod(), limits, "domain");
  detail::check_limits(r.cod(), limits, "codomain");
  LabelTable table;
  IndexedGraph P = detail::index_graph(q.cod(), table);
  IndexedGraph G = detail::index_graph(r.cod(), table);
  std::vector<int> pn(P.nodes, -1), pe(P.edges.size(), -1);
  for (std::size_t i = 0; i < q.node_map().size(); ++i) {
    int& slot = pn[q.node_map()[i]];
    if (slot >= 0 && slot != r.node_map()[i]) return false;
    slot = r.node_map()[i];
  }
  for (std::size_t i = 0; i < q.edge_map().size(); ++i) {
    int& slot = pe[q.edge_map()[i]];
    if (slot >= 0 && slot != r.edge_map()[i]) return false;
    slot = r.edge_map()[i];
  }
  return detail::for_each_extension(
      P, G, std::move(pn), std::move(pe), [&](const Assignment& a) {
        return fn(GraphMorphism(q.cod_ptr(), r.cod_ptr(), a.n, a.e));
      });
}

namespace {

// backtracker for sections: s : cod(v) -> dom(v) with s;v = id
struct SectionWalker {
  const GraphMorphism& v;
  std::vector<int> sn, se;
  std::vector<GraphMorphism>* out;

  bool edges(std::size_t ei) {
    const Graph& B = v.cod();
    const Graph& A = v.dom();
    if (ei == B.edge_count()) {
      out->push_back(GraphMorphism(B, A, sn, se));
      return false;
    }
    const Edge& be = B.edges()[ei];
    int want_src = sn[B.node_index(be.src)], want_tgt = sn[B.node_index(be.tgt)];
    for (int j = 0; j < static_cast<int>(A.edge_count()); ++j) {
      if (v.edge_map()[j] != static_cast<int>(ei)) continue;
      const Edge& ae = A.edges()[j];
      if (A.node_index(ae.src) != want_src || A.node_index(ae.tgt) != want_tgt)
        continue;
      se[ei] = j;
      if (edges(ei + 1)) return true;
    }
    se[ei] = -1;
    return false;
  }

  bool nodes(std::size_t ni) {
    const Graph& B = v.cod();
    const Graph& A = v.dom();
    if (ni == B.node_count()) return edges(0);
    for (int j = 0; j < static_cast<int>(A.node_count()); ++j) {
      if (v.node_map()[j] != static_cast<int>(ni)) continue;
      sn[ni] = j;
      if (nodes(ni + 1)) return true;
    }
    sn[ni] = -1;
    return false;
  }
};

}  // namespace

std::vector<GraphMorphism> enumerate_sections(const GraphMorphism& v,
                                              const EnumLimits& limits) {
  detail::check_limits(v.dom(), limits, "domain");
  detail::check_limits(v.cod(), limits, "codomain");
  std::vector<GraphMorphism> out;
  SectionWalker w{v, std::vector<int>(v.cod().node_count(), -1),
                  std::vector<int>(v.cod().edge_count(), -1), &out};
  w.nodes(0);
  return out;
}

bool is_mono(const GraphMorphism& f) {
  std::vector<bool> nseen(f.cod().node_count(), false);
  for (int img : f.node_map()) {
    if (nseen[img]) return false;
    nseen[img] = true;
  }
  std::vector<bool> eseen(f.cod().edge_count(), false);
  for (int img : f.edge_map()) {
    if (eseen[img]) return false;
    eseen[img] = true;
  }
  return true;
}

bool is_epi(const GraphMorphism& f) {
  std::vector<bool> nseen(f.cod().node_count(), false);
  for (int img : f.node_map()) nseen[img] = true;
  for (bool b : nseen)
    if (!b) return false;
  std::vector<bool> eseen(f.cod().edge_count(), false);
  for (int img : f.edge_map()) eseen[img] = true;
  for (bool b : eseen)
    if (!b) return false;
  return true;
}

Classification classify(const GraphMorphism& f, const EnumLimits& limits) {
  Classification c;
  c.is_mono = is_mono(f);
  c.is_epi = is_epi(f);
  c.sections = enumerate_sections(f, limits);
  c.is_split_epi = !c.sections.empty();
  return c;
}

namespace {

// backtracker for isomorphisms: bijective on nodes and edges
struct IsoWalker {
  const Graph& g;
  const Graph& h;
  std::vector<int> nm, em;
  std::vector<bool> nused, eused;
  bool first_only;
  std::vector<GraphMorphism>* out;

  bool edges(std::size_t ei) {
    if (ei == g.edge_count()) {
      out->push_back(GraphMorphism(g, h, nm, em));
      return first_only;
    }
    const Edge& ge = g.edges()[ei];
    int want_src = nm[g.node_index(ge.src)], want_tgt = nm[g.node_index(ge.tgt)];
    for (int j = 0; j < static_cast<int>(h.edge_count()); ++j) {
      if (eused[j]) continue;
      const Edge& he = h.edges()[j];
      if (he.label != ge.label || h.node_index(he.src) != want_src ||
          h.node_index(he.tgt) != want_tgt)
        continue;
      em[ei] = j;
      eused[j] = true;
      if (edges(ei + 1)) return true;
      eused[j] = false;
    }
    em[ei] = -1;
    return false;
  }

  bool nodes(std::size_t ni) {
    if (ni == g.node_count()) return edges(0);
    for (int j = 0; j < static_cast<int>(h.node_count()); ++j) {
      if (nused[j]) continue;
      nm[ni] = j;
      nused[j] = true;
      if (nodes(ni + 1)) return true;
      nused[j] = false;
    }
    nm[ni] = -1;
    return false;
  }
};

std::vector<GraphMorphism> isos_impl(const Graph& g, const Graph& h,
                                     bool first_only,
                                     const EnumLimits& limits) {
  detail::check_limits(g, limits, "domain");
  detail::check_limits(h, limits, "codomain");
  std::vector<GraphMorphism> out;
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count())
    return out;
  IsoWalker w{g,
              h,
              std::vector<int>(g.node_count(), -1),
              std::vector<int>(g.edge_count(), -1),
              std::vector<bool>(h.node_count(), false),
              std::vector<bool>(h.edge_count(), false),
              first_only,
              &out};
  w.nodes(0);
  return out;
}

}  // namespace

std::optional<GraphMorphism> graph_iso(const Graph& g, const Graph& h,
                                       const EnumLimits& limits) {
  auto found = isos_impl(g, h, true, limits);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<GraphMorphism> enumerate_isos(const Graph& g, const Graph& h,
                                          const EnumLimits& limits) {
  return isos_impl(g, h, false, limits);
}

}  // namespace nestcond
