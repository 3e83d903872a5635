#include "nestcond/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "nestcond/errors.hpp"

namespace nestcond {

const AbCondition& ConditionRef::arrow() const {
  if (!ab_) throw DomainError("condition view does not hold an arrow-based condition");
  return *ab_;
}

const SbCondition& ConditionRef::span() const {
  if (!sb_) throw DomainError("condition view does not hold a span-based condition");
  return *sb_;
}

const Graph& ConditionRef::root() const { return ab_ ? ab_->root : sb_->root; }

namespace {

// validated universe: labels sorted and deduplicated so slot numbering is
// independent of the order the caller listed them in
struct VU {
  std::vector<std::string> labels;
  int N = 0, E = 0, L = 0;
  bool iso = true;
};

VU validate_universe(const Universe& u) {
  if (u.max_nodes < 1)
    throw DomainError("the universe needs max_nodes of at least 1");
  if (u.max_edges < 0)
    throw DomainError("the universe needs a nonnegative max_edges");
  VU v;
  v.labels = u.labels;
  std::sort(v.labels.begin(), v.labels.end());
  v.labels.erase(std::unique(v.labels.begin(), v.labels.end()),
                 v.labels.end());
  v.N = u.max_nodes;
  v.E = u.max_edges;
  v.L = static_cast<int>(v.labels.size());
  v.iso = u.up_to_iso;
  if (static_cast<long long>(v.N) * v.N * v.L > 63)
    throw ResourceError(
        "universe exceeds 63 edge slots; shrink max_nodes or the label set");
  return v;
}

// hosts are encoded as bitmasks over edge slots: slot (s*L + l)*n + t holds
// the edge with source s, label l, target t. one bit per slot, so hosts are
// parallel-free by construction.
struct MaskHost {
  int n = 0, L = 0;
  unsigned long long bits = 0;

  bool edge(int s, int l, int t) const {
    return ((bits >> ((s * L + l) * n + t)) & 1ull) != 0;
  }
};

// binomials up to 63 fit in 64 bits
struct Binom {
  unsigned long long c[64][64] = {};
  Binom() {
    for (int i = 0; i < 64; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
  }
  unsigned long long operator()(int n, int k) const {
    return (k < 0 || k > n) ? 0 : c[n][k];
  }
};

const Binom& binom() {
  static const Binom b;
  return b;
}

// next mask with the same popcount (ascending numeric order)
unsigned long long next_comb(unsigned long long x) {
  unsigned long long c = x & (~x + 1), r = x + c;
  return r | (((x ^ r) >> 2) / c);
}

// idx-th mask with m bits, 0-based, ascending numeric order (= colex)
unsigned long long unrank_comb(int m, unsigned long long idx) {
  const Binom& C = binom();
  unsigned long long mask = 0;
  while (m > 0) {
    int h = m - 1;
    while (C(h + 1, m) <= idx) ++h;
    mask |= 1ull << h;
    idx -= C(h, m);
    --m;
  }
  return mask;
}

// slot images of every non-identity node permutation, for the canonical
// (= numerically least in its iso class) representative test
std::vector<std::vector<int>> slot_perms(int n, int L) {
  std::vector<std::vector<int>> out;
  if (n < 2) return out;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  while (std::next_permutation(p.begin(), p.end())) {
    std::vector<int> sp(static_cast<std::size_t>(n) * n * L);
    for (int s = 0; s < n; ++s)
      for (int l = 0; l < L; ++l)
        for (int t = 0; t < n; ++t)
          sp[(s * L + l) * n + t] = (p[s] * L + l) * n + p[t];
    out.push_back(std::move(sp));
  }
  return out;
}

bool canonical_mask(unsigned long long mask,
                    const std::vector<std::vector<int>>& sps) {
  for (const auto& sp : sps) {
    unsigned long long y = 0, x = mask;
    while (x) {
      int b = std::countr_zero(x);
      x &= x - 1;
      y |= 1ull << sp[b];
    }
    if (y < mask) return false;
  }
  return true;
}

Graph build_host_graph(int n, int L, unsigned long long mask,
                       const std::vector<std::string>& labels) {
  std::vector<std::string> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = "n" + std::to_string(i + 1);
  std::vector<Edge> edges;
  int k = 1;
  unsigned long long x = mask;
  while (x) {
    int slot = std::countr_zero(x);
    x &= x - 1;
    int t = slot % n, l = (slot / n) % L, s = slot / (n * L);
    edges.push_back({"e" + std::to_string(k++), nodes[s], labels[l], nodes[t]});
  }
  return Graph(nodes, edges);
}

// --- allocation-free satisfaction over mask hosts ------------------------
//
// every pattern is flattened to a node count plus its edges grouped by the
// later endpoint, so a backtracking node assignment can check each edge as
// soon as both ends are placed. hosts are simple, so a morphism is exactly
// a node assignment under which every pattern edge slot is occupied; edge
// images carry no extra information.

constexpr int kMaxPlanNodes = 63;

struct Plan {
  int nodes = 0;
  struct Due {
    int src, tgt, label;  // label -1: not in the universe, never matches
  };
  std::vector<Due> due;
  std::vector<int> start;  // nodes+1 offsets into due
};

int label_index(const std::string& s, const std::vector<std::string>& labels) {
  auto it = std::lower_bound(labels.begin(), labels.end(), s);
  if (it == labels.end() || *it != s) return -1;
  return static_cast<int>(it - labels.begin());
}

Plan build_plan(const Graph& g, const std::vector<std::string>& labels) {
  if (static_cast<int>(g.node_count()) > kMaxPlanNodes)
    throw ResourceError("pattern too large for the bounded oracle");
  Plan p;
  p.nodes = static_cast<int>(g.node_count());
  std::vector<std::vector<Plan::Due>> by(p.nodes);
  for (const Edge& e : g.edges()) {
    int s = g.node_index(e.src), t = g.node_index(e.tgt);
    by[static_cast<std::size_t>(std::max(s, t))].push_back(
        {s, t, label_index(e.label, labels)});
  }
  p.start.push_back(0);
  for (const auto& bucket : by) {
    p.due.insert(p.due.end(), bucket.begin(), bucket.end());
    p.start.push_back(static_cast<int>(p.due.size()));
  }
  return p;
}

// extends the partial assignment h over the plan's nodes; calls leaf() on
// every full assignment until it returns true. on success h holds the
// winning assignment.
template <class Leaf>
bool extend_plan(const Plan& p, const MaskHost& G, int* h, int k,
                 const Leaf& leaf) {
  if (k == p.nodes) return leaf();
  auto due_ok = [&] {
    for (int i = p.start[k]; i < p.start[k + 1]; ++i) {
      const Plan::Due& d = p.due[i];
      if (d.label < 0 || !G.edge(h[d.src], d.label, h[d.tgt])) return false;
    }
    return true;
  };
  if (h[k] >= 0) return due_ok() && extend_plan(p, G, h, k + 1, leaf);
  for (int cand = 0; cand < G.n; ++cand) {
    h[k] = cand;
    if (due_ok() && extend_plan(p, G, h, k + 1, leaf)) return true;
  }
  h[k] = -1;
  return false;
}

struct MAb {
  struct Br {
    std::vector<int> an;  // arrow node map: root index -> pattern index
    Plan pat;
    std::unique_ptr<MAb> child;
  };
  std::vector<Br> branches;
};

std::unique_ptr<MAb> compile_mask_ab(const AbCondition& c,
                                     const std::vector<std::string>& labels) {
  auto out = std::make_unique<MAb>();
  out->branches.reserve(c.branches.size());
  for (const AbBranch& b : c.branches) {
    MAb::Br br;
    br.an = b.arrow.node_map();
    br.pat = build_plan(b.arrow.cod(), labels);
    br.child = compile_mask_ab(b.child, labels);
    out->branches.push_back(std::move(br));
  }
  return out;
}

bool sat_ab_mask(const MAb& c, const MaskHost& G, const int* g) {
  for (const MAb::Br& b : c.branches) {
    int h[kMaxPlanNodes + 1];
    std::fill_n(h, b.pat.nodes, -1);
    bool consistent = true;
    for (std::size_t r = 0; r < b.an.size(); ++r) {
      int& slot = h[b.an[r]];
      if (slot >= 0 && slot != g[r]) {
        consistent = false;
        break;
      }
      slot = g[r];
    }
    if (!consistent) continue;
    if (extend_plan(b.pat, G, h, 0,
                    [&] { return !sat_ab_mask(*b.child, G, h); }))
      return true;
  }
  return false;
}

struct MSb {
  struct Br {
    std::vector<std::pair<int, int>> pin;  // (pattern index, root index)
    Plan pat;
    std::unique_ptr<MSb> child;
  };
  std::vector<Br> branches;
};

std::unique_ptr<MSb> compile_mask_sb(const SbCondition& c,
                                     const std::vector<std::string>& labels) {
  auto out = std::make_unique<MSb>();
  out->branches.reserve(c.branches.size());
  for (const SbBranch& b : c.branches) {
    MSb::Br br;
    const auto& un = b.span.up.node_map();
    const auto& dn = b.span.down.node_map();
    for (std::size_t i = 0; i < un.size(); ++i) br.pin.push_back({dn[i], un[i]});
    br.pat = build_plan(b.pattern(), labels);
    br.child = compile_mask_sb(b.child, labels);
    out->branches.push_back(std::move(br));
  }
  return out;
}

bool sat_sb_mask(const MSb& c, const MaskHost& G, const int* g) {
  for (const MSb::Br& b : c.branches) {
    int h[kMaxPlanNodes + 1];
    std::fill_n(h, b.pat.nodes, -1);
    bool consistent = true;
    for (const auto& [pi, ri] : b.pin) {
      int& slot = h[pi];
      if (slot >= 0 && slot != g[ri]) {
        consistent = false;
        break;
      }
      slot = g[ri];
    }
    if (!consistent) continue;
    if (extend_plan(b.pat, G, h, 0,
                    [&] { return !sat_sb_mask(*b.child, G, h); }))
      return true;
  }
  return false;
}

struct MCond {
  std::unique_ptr<MAb> ab;
  std::unique_ptr<MSb> sb;

  bool sat(const MaskHost& G, const int* g) const {
    return ab ? sat_ab_mask(*ab, G, g) : sat_sb_mask(*sb, G, g);
  }
};

MCond compile_cond(ConditionRef r, const std::vector<std::string>& labels) {
  MCond out;
  if (r.is_arrow())
    out.ab = compile_mask_ab(r.arrow(), labels);
  else
    out.sb = compile_mask_sb(r.span(), labels);
  return out;
}

// --- entailment sweep -----------------------------------------------------

struct PairComp {
  Graph root_graph;
  Plan root;
  MCond prem, concl;
  bool done = false;
  int cex_n = 0;
  unsigned long long cex_mask = 0;
  std::vector<int> cex_g;
};

// least refuting model on this host, if any; root models are enumerated in
// node-index-major lexicographic order, matching enumerate_morphisms
bool find_cex_on_host(const PairComp& p, const MaskHost& G,
                      std::vector<int>& gout) {
  int g[kMaxPlanNodes + 1];
  std::fill_n(g, p.root.nodes, -1);
  bool found = extend_plan(p.root, G, g, 0, [&] {
    return p.prem.sat(G, g) && !p.concl.sat(G, g);
  });
  if (found) gout.assign(g, g + p.root.nodes);
  return found;
}

struct Hit {
  unsigned long long idx = 0;
  unsigned long long mask = 0;
  std::vector<int> g;
};

void relax_min(std::atomic<unsigned long long>& a, unsigned long long v) {
  unsigned long long cur = a.load(std::memory_order_relaxed);
  while (v < cur &&
         !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// one worker walks [lo, hi) of the m-edge masks on n nodes and records, per
// still-open pair, the first counterexample inside its range
void scan_range(int n, int L, int m, unsigned long long lo,
                unsigned long long hi, bool iso,
                const std::vector<std::vector<int>>& sps,
                const std::vector<PairComp*>& open,
                std::vector<std::atomic<unsigned long long>>& best,
                std::vector<std::optional<Hit>>& hits) {
  MaskHost G{n, L, 0};
  std::vector<char> live(open.size(), 1);
  std::size_t live_count = open.size();
  std::vector<int> gbuf;
  unsigned long long mask = 0;
  for (unsigned long long idx = lo; idx < hi && live_count > 0; ++idx) {
    mask = (idx == lo) ? unrank_comb(m, idx) : next_comb(mask);
    if (iso && !canonical_mask(mask, sps)) continue;
    G.bits = mask;
    for (std::size_t p = 0; p < open.size(); ++p) {
      if (!live[p]) continue;
      if (best[p].load(std::memory_order_relaxed) < idx) {
        live[p] = 0;
        --live_count;
        continue;
      }
      if (find_cex_on_host(*open[p], G, gbuf)) {
        relax_min(best[p], idx);
        hits[p] = Hit{idx, mask, gbuf};
        live[p] = 0;
        --live_count;
      }
    }
  }
}

void scan_universe(const VU& vu, std::vector<PairComp>& pairs) {
  std::size_t pending = pairs.size();
  unsigned hw = std::thread::hardware_concurrency();
  unsigned T = std::clamp(hw, 1u, 16u);
  for (int n = 0; n <= vu.N && pending > 0; ++n) {
    int slots = n * n * vu.L;
    auto sps = vu.iso ? slot_perms(n, vu.L) : std::vector<std::vector<int>>();
    int mmax = std::min(vu.E, slots);
    for (int m = 0; m <= mmax && pending > 0; ++m) {
      unsigned long long total = binom()(slots, m);
      std::vector<PairComp*> open;
      for (PairComp& p : pairs)
        if (!p.done) open.push_back(&p);
      std::vector<std::atomic<unsigned long long>> best(open.size());
      for (auto& b : best) b.store(~0ull, std::memory_order_relaxed);
      unsigned workers = static_cast<unsigned>(
          std::min<unsigned long long>(T, total / 50'000 + 1));
      std::vector<std::vector<std::optional<Hit>>> hits(
          workers, std::vector<std::optional<Hit>>(open.size()));
      if (workers == 1) {
        scan_range(n, vu.L, m, 0, total, vu.iso, sps, open, best, hits[0]);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
          unsigned long long lo = total * w / workers;
          unsigned long long hi = total * (w + 1) / workers;
          pool.emplace_back([&, lo, hi, w] {
            scan_range(n, vu.L, m, lo, hi, vu.iso, sps, open, best, hits[w]);
          });
        }
        for (auto& t : pool) t.join();
      }
      for (std::size_t p = 0; p < open.size(); ++p) {
        const Hit* least = nullptr;
        for (unsigned w = 0; w < workers; ++w)
          if (hits[w][p] && (!least || hits[w][p]->idx < least->idx))
            least = &*hits[w][p];
        if (least) {
          open[p]->done = true;
          open[p]->cex_n = n;
          open[p]->cex_mask = least->mask;
          open[p]->cex_g = least->g;
          --pending;
        }
      }
    }
  }
}

PairComp compile_pair(ConditionRef premise, ConditionRef conclusion,
                      const VU& vu) {
  if (!(premise.root() == conclusion.root()))
    throw DomainError("entailment requires a common root");
  PairComp pc;
  pc.root_graph = premise.root();
  pc.root = build_plan(pc.root_graph, vu.labels);
  pc.prem = compile_cond(premise, vu.labels);
  pc.concl = compile_cond(conclusion, vu.labels);
  return pc;
}

Verdict pair_verdict(const PairComp& pc, const Universe& u, const VU& vu) {
  Verdict v;
  v.bound = u;
  if (!pc.done) {
    v.holds = true;
    return v;
  }
  v.holds = false;
  Graph host = build_host_graph(pc.cex_n, vu.L, pc.cex_mask, vu.labels);
  std::vector<std::pair<std::string, std::string>> nm;
  for (std::size_t i = 0; i < pc.root_graph.node_count(); ++i)
    nm.push_back({pc.root_graph.nodes()[i], host.nodes()[pc.cex_g[i]]});
  v.model = hom(pc.root_graph, host, nm);
  v.graph = std::move(host);
  return v;
}

}  // namespace

bool for_each_graph(const Universe& u,
                    const std::function<bool(const Graph&)>& fn) {
  VU vu = validate_universe(u);
  for (int n = 0; n <= vu.N; ++n) {
    int slots = n * n * vu.L;
    auto sps = vu.iso ? slot_perms(n, vu.L) : std::vector<std::vector<int>>();
    int mmax = std::min(vu.E, slots);
    for (int m = 0; m <= mmax; ++m) {
      unsigned long long total = binom()(slots, m);
      unsigned long long mask = 0;
      for (unsigned long long idx = 0; idx < total; ++idx) {
        mask = (idx == 0) ? unrank_comb(m, 0) : next_comb(mask);
        if (vu.iso && !canonical_mask(mask, sps)) continue;
        if (fn(build_host_graph(n, vu.L, mask, vu.labels))) return true;
      }
    }
  }
  return false;
}

std::vector<Graph> enumerate_graphs(const Universe& u) {
  std::vector<Graph> out;
  for_each_graph(u, [&](const Graph& g) {
    out.push_back(g);
    return false;
  });
  return out;
}

std::vector<GraphMorphism> models(const AbCondition& c, const Graph& G,
                                  const EnumLimits& limits) {
  std::vector<GraphMorphism> out;
  for (const GraphMorphism& g : enumerate_morphisms(c.root, G, limits))
    if (satisfies_ab(g, c, limits)) out.push_back(g);
  return out;
}

std::vector<GraphMorphism> models(const SbCondition& c, const Graph& G,
                                  const EnumLimits& limits) {
  std::vector<GraphMorphism> out;
  for (const GraphMorphism& g : enumerate_morphisms(c.root, G, limits))
    if (satisfies_sb(g, c, limits)) out.push_back(g);
  return out;
}

std::vector<Verdict> check_entailments(
    const std::vector<std::pair<ConditionRef, ConditionRef>>& pairs,
    const Universe& u) {
  VU vu = validate_universe(u);
  std::vector<PairComp> comp;
  comp.reserve(pairs.size());
  for (const auto& [premise, conclusion] : pairs)
    comp.push_back(compile_pair(premise, conclusion, vu));
  scan_universe(vu, comp);
  std::vector<Verdict> out;
  out.reserve(comp.size());
  for (const PairComp& pc : comp) out.push_back(pair_verdict(pc, u, vu));
  return out;
}

Verdict check_entailment(ConditionRef premise, ConditionRef conclusion,
                         const Universe& u) {
  return check_entailments({{premise, conclusion}}, u).front();
}

Verdict check_equivalence(ConditionRef b, ConditionRef c, const Universe& u) {
  auto both = check_entailments({{b, c}, {c, b}}, u);
  if (!both[0].holds) return both[0];
  if (!both[1].holds) return both[1];
  return both[0];
}

}  // namespace nestcond
