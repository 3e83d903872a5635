#include "nestcond/cond_arrow.hpp"

#include <algorithm>

#include "sat_engine.hpp"

namespace nestcond {

AbCondition::AbCondition(Graph root_graph, std::vector<AbBranch> branch_list)
    : root(std::move(root_graph)), branches(std::move(branch_list)) {
  for (const auto& b : branches)
    if (!(b.arrow.dom() == root))
      throw DomainError("branch arrow domain differs from the condition root");
}

bool operator==(const AbCondition& a, const AbCondition& b) {
  return a.root == b.root && a.branches == b.branches;
}

AbBranch::AbBranch(GraphMorphism branch_arrow, AbCondition child_condition)
    : arrow(std::move(branch_arrow)), child(std::move(child_condition)) {
  if (!(child.root == arrow.cod()))
    throw DomainError("child root differs from the branch pattern");
}

AbCondition ab_false(Graph root) { return AbCondition(std::move(root), {}); }

AbCondition ab_true(Graph root) {
  GraphMorphism id = identity(root);
  AbCondition inner = ab_false(root);
  std::vector<AbBranch> bs;
  bs.push_back(AbBranch(std::move(id), std::move(inner)));
  return AbCondition(std::move(root), std::move(bs));
}

int ab_depth(const AbCondition& c) {
  int d = 0;
  for (const auto& b : c.branches) d = std::max(d, 1 + ab_depth(b.child));
  return d;
}

namespace detail {

CompiledAb compile_ab(const AbCondition& c, LabelTable& table) {
  CompiledAb out;
  out.root = index_graph(c.root, table);
  out.branches.reserve(c.branches.size());
  for (const auto& b : c.branches) {
    CompiledAb::Branch cb;
    cb.an = b.arrow.node_map();
    cb.ae = b.arrow.edge_map();
    cb.pat = index_graph(b.arrow.cod(), table);
    cb.child = std::make_unique<CompiledAb>(compile_ab(b.child, table));
    out.branches.push_back(std::move(cb));
  }
  return out;
}

bool sat_ab(const CompiledAb& c, const IndexedGraph& G,
            const std::vector<int>& gn, const std::vector<int>& ge) {
  for (const auto& b : c.branches) {
    // h must extend the forced values h(a(x)) = g(x)
    std::vector<int> pn(b.pat.nodes, -1), pe(b.pat.edges.size(), -1);
    bool consistent = true;
    for (std::size_t i = 0; i < b.an.size() && consistent; ++i) {
      int& slot = pn[b.an[i]];
      if (slot >= 0 && slot != gn[i]) consistent = false;
      slot = gn[i];
    }
    for (std::size_t i = 0; i < b.ae.size() && consistent; ++i) {
      int& slot = pe[b.ae[i]];
      if (slot >= 0 && slot != ge[i]) consistent = false;
      slot = ge[i];
    }
    if (!consistent) continue;
    bool found = for_each_extension(
        b.pat, G, std::move(pn), std::move(pe), [&](const Assignment& h) {
          return !sat_ab(*b.child, G, h.n, h.e);
        });
    if (found) return true;
  }
  return false;
}

}  // namespace detail

namespace {

void check_pattern_limits(const AbCondition& c, const EnumLimits& limits) {
  for (const auto& b : c.branches) {
    detail::check_limits(b.arrow.cod(), limits, "pattern");
    check_pattern_limits(b.child, limits);
  }
}

constexpr EnumLimits kHostLimits{32, 128};

}  // namespace

bool satisfies_ab(const GraphMorphism& g, const AbCondition& c,
                  const EnumLimits& limits) {
  if (!(g.dom() == c.root))
    throw DomainError("satisfaction requires dom(g) to equal the root");
  check_pattern_limits(c, limits);
  detail::check_limits(g.cod(), kHostLimits, "host");
  detail::LabelTable table;
  detail::CompiledAb cc = detail::compile_ab(c, table);
  detail::IndexedGraph G = detail::index_graph(g.cod(), table);
  return detail::sat_ab(cc, G, g.node_map(), g.edge_map());
}

std::optional<AbWitness> witness_ab(const GraphMorphism& g,
                                    const AbCondition& c,
                                    const EnumLimits& limits) {
  if (!(g.dom() == c.root))
    throw DomainError("satisfaction requires dom(g) to equal the root");
  check_pattern_limits(c, limits);
  detail::check_limits(g.cod(), kHostLimits, "host");
  detail::LabelTable table;
  detail::CompiledAb cc = detail::compile_ab(c, table);
  detail::IndexedGraph G = detail::index_graph(g.cod(), table);
  for (std::size_t bi = 0; bi < cc.branches.size(); ++bi) {
    const auto& b = cc.branches[bi];
    std::vector<int> pn(b.pat.nodes, -1), pe(b.pat.edges.size(), -1);
    bool consistent = true;
    for (std::size_t i = 0; i < b.an.size() && consistent; ++i) {
      int& slot = pn[b.an[i]];
      if (slot >= 0 && slot != g.node_map()[i]) consistent = false;
      slot = g.node_map()[i];
    }
    for (std::size_t i = 0; i < b.ae.size() && consistent; ++i) {
      int& slot = pe[b.ae[i]];
      if (slot >= 0 && slot != g.edge_map()[i]) consistent = false;
      slot = g.edge_map()[i];
    }
    if (!consistent) continue;
    std::optional<AbWitness> hit;
    detail::for_each_extension(
        b.pat, G, std::move(pn), std::move(pe),
        [&](const detail::Assignment& h) {
          if (detail::sat_ab(*b.child, G, h.n, h.e)) return false;
          hit = AbWitness{static_cast<int>(bi),
                          GraphMorphism(c.branches[bi].arrow.cod_ptr(),
                                        g.cod_ptr(), h.n, h.e)};
          return true;
        });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace nestcond
