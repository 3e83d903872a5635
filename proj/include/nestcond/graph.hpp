#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestcond/errors.hpp"

namespace nestcond {

// Finite set of admissible edge labels, in declared order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  bool contains(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
};

struct Edge {
  std::string id;
  std::string src;
  std::string label;
  std::string tgt;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite edge-labelled directed multigraph with named nodes and edge ids.
// Node and edge order is the declared order; equality is structural and
// order-sensitive. Values are immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> nodes, std::vector<Edge> edges);
  Graph(std::vector<std::string> nodes, std::vector<Edge> edges,
        const Alphabet& labels);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // index of a node/edge name, -1 when absent. linear scan: graphs are tiny.
  int node_index(std::string_view name) const;
  int edge_index(std::string_view id) const;
  bool has_node(std::string_view name) const { return node_index(name) >= 0; }

  bool has_edge(std::string_view src, std::string_view label,
                std::string_view tgt) const;

  // all labels occurring on edges, in first-occurrence order
  std::vector<std::string> edge_labels() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
};

Graph discrete_graph(std::vector<std::string> nodes);

// Total structure-preserving map between graphs. Maps are stored as index
// vectors over the declared node/edge order of dom and cod. The endpoint
// graphs are shared, so copying a morphism is cheap; equality is structural.
class GraphMorphism {
 public:
  GraphMorphism(Graph dom, Graph cod, std::vector<int> node_map,
                std::vector<int> edge_map);
  GraphMorphism(std::shared_ptr<const Graph> dom,
                std::shared_ptr<const Graph> cod, std::vector<int> node_map,
                std::vector<int> edge_map);

  // construction from name->name maps (JSON form)
  static GraphMorphism from_names(
      Graph dom, Graph cod,
      const std::vector<std::pair<std::string, std::string>>& node_map,
      const std::vector<std::pair<std::string, std::string>>& edge_map);

  const Graph& dom() const { return *dom_; }
  const Graph& cod() const { return *cod_; }
  const std::shared_ptr<const Graph>& dom_ptr() const { return dom_; }
  const std::shared_ptr<const Graph>& cod_ptr() const { return cod_; }
  const std::vector<int>& node_map() const { return node_map_; }
  const std::vector<int>& edge_map() const { return edge_map_; }

  const std::string& node_image(std::string_view node) const;
  const std::string& edge_image(std::string_view edge) const;
  bool is_identity() const;

  friend bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
    return a.node_map_ == b.node_map_ && a.edge_map_ == b.edge_map_ &&
           (a.dom_ == b.dom_ || *a.dom_ == *b.dom_) &&
           (a.cod_ == b.cod_ || *a.cod_ == *b.cod_);
  }

 private:
  std::shared_ptr<const Graph> dom_, cod_;
  std::vector<int> node_map_, edge_map_;
};

GraphMorphism identity(const Graph& g);

// diagrammatic composition f;g — apply f first, then g
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

// morphism given by node images only; each edge image must be uniquely
// determined by the node images, otherwise DomainError
GraphMorphism hom(const Graph& dom, const Graph& cod,
                  const std::vector<std::pair<std::string, std::string>>& nodes);

// Soft caps for enumeration-heavy operations; exceeding them raises
// ResourceError rather than silently returning partial answers.
struct EnumLimits {
  int max_nodes = 6;
  int max_edges = 12;
};

// All morphisms dom -> cod in lexicographic order: by node_map (node index
// major, candidate cod index ascending), then by edge_map.
std::vector<GraphMorphism> enumerate_morphisms(const Graph& dom,
                                               const Graph& cod,
                                               const EnumLimits& limits = {});

// All h with q;h = r, where q : I -> P and r : I -> G, i.e. factorisations of
// r through q. Enumeration order agrees with enumerate_morphisms(P, G)
// restricted to the valid h. fn returning true stops the walk; the function
// returns whether it was stopped.
bool for_each_factorisation(const GraphMorphism& q, const GraphMorphism& r,
                            const std::function<bool(const GraphMorphism&)>& fn,
                            const EnumLimits& limits = {});

std::vector<GraphMorphism> enumerate_sections(const GraphMorphism& v,
                                              const EnumLimits& limits = {});

struct Classification {
  bool is_mono = false;
  bool is_epi = false;
  bool is_split_epi = false;
  std::vector<GraphMorphism> sections;  // all s with s;f = id
};

Classification classify(const GraphMorphism& f, const EnumLimits& limits = {});
bool is_mono(const GraphMorphism& f);
bool is_epi(const GraphMorphism& f);

// first isomorphism in enumeration order, or nullopt
std::optional<GraphMorphism> graph_iso(const Graph& g, const Graph& h,
                                       const EnumLimits& limits = {});
std::vector<GraphMorphism> enumerate_isos(const Graph& g, const Graph& h,
                                          const EnumLimits& limits = {});

}  // namespace nestcond
