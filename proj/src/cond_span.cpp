#include "nestcond/cond_span.hpp"

#include <algorithm>

#include "sat_engine.hpp"

namespace nestcond {

SbCondition::SbCondition(Graph root_graph, std::vector<SbBranch> branch_list)
    : root(std::move(root_graph)), branches(std::move(branch_list)) {
  for (const auto& b : branches)
    if (!(b.span.up.cod() == root))
      throw DomainError("branch up-leg codomain differs from the root");
}

bool operator==(const SbCondition& a, const SbCondition& b) {
  return a.root == b.root && a.branches == b.branches;
}

SbBranch::SbBranch(Span branch_span, SbCondition child_condition)
    : span(std::move(branch_span)), child(std::move(child_condition)) {
  if (!(child.root == span.down.cod()))
    throw DomainError("child root differs from the branch pattern");
}

SbCondition sb_false(Graph root) { return SbCondition(std::move(root), {}); }

SbCondition sb_true(Graph root) {
  GraphMorphism id = identity(root);
  SbCondition inner = sb_false(root);
  std::vector<SbBranch> bs;
  bs.push_back(SbBranch(Span(id, id), std::move(inner)));
  return SbCondition(std::move(root), std::move(bs));
}

int sb_depth(const SbCondition& c) {
  int d = 0;
  for (const auto& b : c.branches) d = std::max(d, 1 + sb_depth(b.child));
  return d;
}

// --- satisfaction ----------------------------------------------------------

namespace detail {

CompiledSb compile_sb(const SbCondition& c, LabelTable& table) {
  CompiledSb out;
  out.root = index_graph(c.root, table);
  out.branches.reserve(c.branches.size());
  for (const auto& b : c.branches) {
    CompiledSb::Branch cb;
    cb.un = b.span.up.node_map();
    cb.ue = b.span.up.edge_map();
    cb.dn = b.span.down.node_map();
    cb.de = b.span.down.edge_map();
    cb.inodes = static_cast<int>(b.span.interface().node_count());
    cb.iedges = static_cast<int>(b.span.interface().edge_count());
    cb.pat = index_graph(b.pattern(), table);
    cb.child = std::make_unique<CompiledSb>(compile_sb(b.child, table));
    out.branches.push_back(std::move(cb));
  }
  return out;
}

bool sat_sb(const CompiledSb& c, const IndexedGraph& G,
            const std::vector<int>& gn, const std::vector<int>& ge) {
  for (const auto& b : c.branches) {
    // h must agree with g through the span: h(down(x)) = g(up(x))
    std::vector<int> pn(b.pat.nodes, -1), pe(b.pat.edges.size(), -1);
    bool consistent = true;
    for (int i = 0; i < b.inodes && consistent; ++i) {
      int& slot = pn[b.dn[i]];
      if (slot >= 0 && slot != gn[b.un[i]]) consistent = false;
      slot = gn[b.un[i]];
    }
    for (int i = 0; i < b.iedges && consistent; ++i) {
      int& slot = pe[b.de[i]];
      if (slot >= 0 && slot != ge[b.ue[i]]) consistent = false;
      slot = ge[b.ue[i]];
    }
    if (!consistent) continue;
    bool found = for_each_extension(
        b.pat, G, std::move(pn), std::move(pe), [&](const Assignment& h) {
          return !sat_sb(*b.child, G, h.n, h.e);
        });
    if (found) return true;
  }
  return false;
}

}  // namespace detail

namespace {

void check_pattern_limits(const SbCondition& c, const EnumLimits& limits) {
  for (const auto& b : c.branches) {
    detail::check_limits(b.pattern(), limits, "pattern");
    check_pattern_limits(b.child, limits);
  }
}

constexpr EnumLimits kHostLimits{32, 128};

}  // namespace

bool satisfies_sb(const GraphMorphism& g, const SbCondition& c,
                  const EnumLimits& limits) {
  if (!(g.dom() == c.root))
    throw DomainError("satisfaction requires dom(g) to equal the root");
  check_pattern_limits(c, limits);
  detail::check_limits(g.cod(), kHostLimits, "host");
  detail::LabelTable table;
  detail::CompiledSb cc = detail::compile_sb(c, table);
  detail::IndexedGraph G = detail::index_graph(g.cod(), table);
  return detail::sat_sb(cc, G, g.node_map(), g.edge_map());
}

std::optional<SbWitness> witness_sb(const GraphMorphism& g,
                                    const SbCondition& c,
                                    const EnumLimits& limits) {
  if (!(g.dom() == c.root))
    throw DomainError("satisfaction requires dom(g) to equal the root");
  check_pattern_limits(c, limits);
  detail::check_limits(g.cod(), kHostLimits, "host");
  detail::LabelTable table;
  detail::CompiledSb cc = detail::compile_sb(c, table);
  detail::IndexedGraph G = detail::index_graph(g.cod(), table);
  for (std::size_t bi = 0; bi < cc.branches.size(); ++bi) {
    const auto& b = cc.branches[bi];
    std::vector<int> pn(b.pat.nodes, -1), pe(b.pat.edges.size(), -1);
    bool consistent = true;
    for (int i = 0; i < b.inodes && consistent; ++i) {
      int& slot = pn[b.dn[i]];
      if (slot >= 0 && slot != g.node_map()[b.un[i]]) consistent = false;
      slot = g.node_map()[b.un[i]];
    }
    for (int i = 0; i < b.iedges && consistent; ++i) {
      int& slot = pe[b.de[i]];
      if (slot >= 0 && slot != g.edge_map()[b.ue[i]]) consistent = false;
      slot = g.edge_map()[b.ue[i]];
    }
    if (!consistent) continue;
    std::optional<SbWitness> hit;
    detail::for_each_extension(
        b.pat, G, std::move(pn), std::move(pe),
        [&](const detail::Assignment& h) {
          if (detail::sat_sb(*b.child, G, h.n, h.e)) return false;
          hit = SbWitness{static_cast<int>(bi),
                          GraphMorphism(c.branches[bi].span.down.cod_ptr(),
                                        g.cod_ptr(), h.n, h.e)};
          return true;
        });
    if (hit) return hit;
  }
  return std::nullopt;
}

// --- span shifters ---------------------------------------------------------

const Graph& SpanShiftStep::in_root() const {
  return forward() ? v.dom() : v.cod();
}

const Graph& SpanShiftStep::out_root() const {
  return forward() ? v.cod() : v.dom();
}

namespace {

std::string step_flaw(const SpanShiftStep& s) {
  using K = SpanShiftStep::Kind;
  if (s.kind == K::df) return "";
  if (s.kind == K::db)
    return is_epi(s.v) ? "" : "db step requires an epi";
  if (!s.x) return "section witness missing";
  if (!(s.x->dom() == s.v.cod()) || !(s.x->cod() == s.v.dom()))
    return "section endpoints do not match";
  if (!compose(*s.x, s.v).is_identity()) return "witness is not a section";
  return "";
}

SpanShiftStep make_step(SpanShiftStep::Kind kind, GraphMorphism v,
                        std::optional<GraphMorphism> x) {
  SpanShiftStep s{kind, std::move(v), std::move(x)};
  std::string flaw = step_flaw(s);
  if (!flaw.empty()) throw DomainError(flaw);
  return s;
}

}  // namespace

SpanShiftStep df_step(GraphMorphism v) {
  return make_step(SpanShiftStep::Kind::df, std::move(v), std::nullopt);
}

SpanShiftStep rf_step(GraphMorphism v, GraphMorphism x) {
  return make_step(SpanShiftStep::Kind::rf, std::move(v), std::move(x));
}

SpanShiftStep db_step(GraphMorphism v) {
  return make_step(SpanShiftStep::Kind::db, std::move(v), std::nullopt);
}

SpanShiftStep rb_step(GraphMorphism v, GraphMorphism x) {
  return make_step(SpanShiftStep::Kind::rb, std::move(v), std::move(x));
}

SpanShifter SpanShifter::trivial(Graph from_root, Graph to_root) {
  return SpanShifter{{}, std::move(from_root), std::move(to_root)};
}

SpanShifter SpanShifter::of_steps(std::vector<SpanShiftStep> step_chain) {
  if (step_chain.empty())
    throw DomainError("a step chain must be non-empty; use trivial instead");
  for (const auto& s : step_chain) {
    std::string flaw = step_flaw(s);
    if (!flaw.empty()) throw DomainError(flaw);
  }
  for (std::size_t i = 0; i + 1 < step_chain.size(); ++i) {
    if (!(step_chain[i].out_root() == step_chain[i + 1].in_root()))
      throw DomainError("step chain roots do not connect");
    if (step_chain[i].forward() != step_chain[i + 1].forward())
      throw DomainError("step chain mixes directions");
  }
  Graph from = step_chain.front().in_root();
  Graph to = step_chain.back().out_root();
  return SpanShifter{std::move(step_chain), std::move(from), std::move(to)};
}

bool SpanShifter::all_forward() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const SpanShiftStep& s) { return s.forward(); });
}

bool SpanShifter::all_backward() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const SpanShiftStep& s) { return !s.forward(); });
}

bool SpanShifter::is_complete() const {
  using K = SpanShiftStep::Kind;
  return std::all_of(steps.begin(), steps.end(), [](const SpanShiftStep& s) {
    return s.kind == K::df || s.kind == K::db;
  });
}

SbCondition apply_span_step(const SpanShiftStep& s, const SbCondition& c) {
  if (!(c.root == s.in_root()))
    throw DomainError("step does not start at the condition root");
  using K = SpanShiftStep::Kind;
  std::vector<SbBranch> out;
  out.reserve(c.branches.size());
  for (const auto& b : c.branches) {
    switch (s.kind) {
      case K::df:
        out.push_back(SbBranch(Span(compose(b.span.up, s.v), b.span.down),
                               b.child));
        break;
      case K::rb:
        out.push_back(SbBranch(Span(compose(b.span.up, *s.x), b.span.down),
                               b.child));
        break;
      case K::rf: {
        PullbackResult pb = pullback(*s.x, b.span.up);
        out.push_back(SbBranch(Span(pb.p1, compose(pb.p2, b.span.down)),
                               b.child));
        break;
      }
      case K::db: {
        PullbackResult pb = pullback(s.v, b.span.up);
        out.push_back(SbBranch(Span(pb.p1, compose(pb.p2, b.span.down)),
                               b.child));
        break;
      }
    }
  }
  return SbCondition(s.out_root(), std::move(out));
}

SbCondition apply_span_shifter(const SpanShifter& s, const SbCondition& c) {
  if (!(c.root == s.from))
    throw DomainError("shifter does not start at the condition root");
  if (s.is_trivial()) {
    if (!c.is_false())
      throw DomainError("the trivial shifter applies only to branchless conditions");
    return sb_false(s.to);
  }
  SbCondition acc = c;
  for (const auto& step : s.steps) acc = apply_span_step(step, acc);
  return acc;
}

SpanShifter compose_span_shifters(const SpanShifter& first,
                                  const SpanShifter& second) {
  if (!(first.to == second.from))
    throw DomainError("shifter composition endpoint mismatch");
  if (first.is_trivial() || second.is_trivial())
    return SpanShifter::trivial(first.from, second.to);
  bool fwd = first.steps.front().forward();
  if (fwd != second.steps.front().forward())
    throw DomainError("shifter composition mixes directions");
  // steps over an identity act as units, so drop them; this makes
  // composition with the identity shifter exact
  std::vector<SpanShiftStep> steps;
  for (const auto& chain : {&first.steps, &second.steps})
    for (const auto& s : *chain)
      if (!s.v.is_identity()) steps.push_back(s);
  if (steps.empty()) {
    GraphMorphism id = identity(first.from);
    steps.push_back(fwd ? df_step(id) : db_step(id));
  }
  return SpanShifter{std::move(steps), first.from, second.to};
}

// --- pattern shifts --------------------------------------------------------

bool pattern_shift_conservative(const Span& sc, const Span& sb,
                                const GraphMorphism& v,
                                const GraphMorphism& k) {
  PushoutResult po = pushout(sc.down, k);
  const Graph& target = v.cod();
  // mediator from the pushout onto the target pattern
  std::vector<int> fn(po.apex.node_count(), -1), fe(po.apex.edge_count(), -1);
  auto place = [](std::vector<int>& slots, int at, int value) {
    if (slots[at] >= 0 && slots[at] != value) return false;
    slots[at] = value;
    return true;
  };
  for (std::size_t i = 0; i < po.q1.node_map().size(); ++i)
    if (!place(fn, po.q1.node_map()[i], v.node_map()[i])) return false;
  for (std::size_t i = 0; i < po.q1.edge_map().size(); ++i)
    if (!place(fe, po.q1.edge_map()[i], v.edge_map()[i])) return false;
  for (std::size_t i = 0; i < po.q2.node_map().size(); ++i)
    if (!place(fn, po.q2.node_map()[i], sb.down.node_map()[i])) return false;
  for (std::size_t i = 0; i < po.q2.edge_map().size(); ++i)
    if (!place(fe, po.q2.edge_map()[i], sb.down.edge_map()[i])) return false;
  auto bij = [](const std::vector<int>& m, std::size_t n) {
    if (m.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : m) {
      if (x < 0 || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  };
  return bij(fn, target.node_count()) && bij(fe, target.edge_count());
}

std::vector<PatternShiftWitness> pattern_shifts(const Span& sc, const Span& sb,
                                                const GraphMorphism& v,
                                                const EnumLimits& limits) {
  std::vector<PatternShiftWitness> out;
  if (!(v.dom() == sc.down.cod()) || !(v.cod() == sb.down.cod())) return out;
  if (!(sc.up.cod() == sb.up.cod())) return out;
  GraphMorphism dcv = compose(sc.down, v);
  for (const auto& k : enumerate_morphisms(sc.interface(), sb.interface(),
                                           limits)) {
    if (!(compose(k, sb.up) == sc.up)) continue;
    if (!(compose(k, sb.down) == dcv)) continue;
    out.push_back({k, pattern_shift_conservative(sc, sb, v, k)});
  }
  return out;
}

std::optional<PatternShiftWitness> pattern_shift_check(
    const Span& sc, const Span& sb, const GraphMorphism& v,
    const EnumLimits& limits) {
  auto all = pattern_shifts(sc, sb, v, limits);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// --- condition morphisms ---------------------------------------------------

bool operator==(const SbConditionMorphism& a, const SbConditionMorphism& b) {
  return a.mode == b.mode && a.branch_map == b.branch_map &&
         a.branches == b.branches;
}

namespace {

std::string at(const std::string& path, std::string what) {
  return path.empty() ? what : path + ": " + what;
}

// full structural re-validation of certificate-supplied shifters
std::string shifter_flaw(const SpanShifter& s) {
  if (s.is_trivial()) return "";
  for (const auto& st : s.steps) {
    std::string flaw = step_flaw(st);
    if (!flaw.empty()) return flaw;
  }
  for (std::size_t i = 0; i + 1 < s.steps.size(); ++i) {
    if (s.steps[i].forward() != s.steps[i + 1].forward())
      return "step chain mixes directions";
    if (!(s.steps[i].out_root() == s.steps[i + 1].in_root()))
      return "step chain roots do not connect";
  }
  if (!(s.from == s.steps.front().in_root()) ||
      !(s.to == s.steps.back().out_root()))
    return "shifter endpoints disagree with its steps";
  return "";
}

// composite of step parameters, which must reproduce the branch map
GraphMorphism chain_composite(const SpanShifter& s, bool forward) {
  GraphMorphism acc = s.steps.front().v;
  for (std::size_t i = 1; i < s.steps.size(); ++i)
    acc = forward ? compose(acc, s.steps[i].v) : compose(s.steps[i].v, acc);
  return acc;
}

Validity check_sb_rec(const SbConditionMorphism& m, const SbCondition& c,
                      const SbCondition& b, Mode mode, bool complete,
                      const std::string& path, const EnumLimits& limits) {
  if (m.mode != mode)
    return Validity::bad(at(path, "mode differs from the enclosing witness"));
  if (!(c.root == b.root))
    return Validity::bad(at(path, "conditions are over different roots"));
  if (m.branch_map.size() != b.width() || m.branches.size() != b.width())
    return Validity::bad(at(path, "witness width differs from the target"));
  if (complete) {
    std::vector<bool> hit(c.width(), false);
    for (int j : m.branch_map)
      if (j >= 0 && j < static_cast<int>(c.width())) hit[j] = true;
    for (bool h : hit)
      if (!h)
        return Validity::bad(at(path, "branch map is not surjective"));
  }
  for (std::size_t i = 0; i < b.width(); ++i) {
    std::string here =
        at(path, "branch " + std::to_string(i + 1));
    int j = m.branch_map[i];
    if (j < 0 || j >= static_cast<int>(c.width()))
      return Validity::bad(here + ": branch map entry out of range");
    const SbBranch& cb = c.branches[j];
    const SbBranch& bb = b.branches[i];
    const SbMorphismBranch& br = m.branches[i];
    if (!(br.v.dom() == cb.pattern()) || !(br.v.cod() == bb.pattern()))
      return Validity::bad(here + ": pattern map endpoints do not match");
    if (!(br.k.dom() == cb.span.interface()) ||
        !(br.k.cod() == bb.span.interface()))
      return Validity::bad(here + ": interface mediator endpoints do not match");
    if (!(compose(br.k, bb.span.up) == cb.span.up))
      return Validity::bad(here + ": mediator breaks the up legs");
    if (!(compose(br.k, bb.span.down) == compose(cb.span.down, br.v)))
      return Validity::bad(here + ": mediator breaks the down legs");
    if (complete && !pattern_shift_conservative(cb.span, bb.span, br.v, br.k))
      return Validity::bad(here + ": pattern shift is not conservative");
    bool fwd = mode == Mode::forward;
    const Graph& shift_src = fwd ? cb.pattern() : bb.pattern();
    const Graph& shift_dst = fwd ? bb.pattern() : cb.pattern();
    std::string flaw = shifter_flaw(br.shifter);
    if (!flaw.empty()) return Validity::bad(here + ": " + flaw);
    if (complete && !br.shifter.is_complete())
      return Validity::bad(here + ": shifter is not complete");
    if (br.shifter.is_trivial()) {
      const SbCondition& shifted_child = fwd ? cb.child : bb.child;
      if (!shifted_child.is_false())
        return Validity::bad(
            here + ": trivial shifter on a condition with branches");
      if (!(br.shifter.from == shift_src) || !(br.shifter.to == shift_dst))
        return Validity::bad(here + ": trivial shifter endpoints do not match");
    } else {
      if (fwd ? !br.shifter.all_forward() : !br.shifter.all_backward())
        return Validity::bad(here + ": shifter direction disagrees with mode");
      if (!(chain_composite(br.shifter, fwd) == br.v))
        return Validity::bad(
            here + ": shifter steps do not compose to the pattern map");
    }
    Validity sub =
        fwd ? check_sb_rec(br.sub, bb.child,
                           apply_span_shifter(br.shifter, cb.child), mode,
                           complete, here, limits)
            : check_sb_rec(br.sub, apply_span_shifter(br.shifter, bb.child),
                           cb.child, mode, complete, here, limits);
    if (!sub.ok) return sub;
  }
  return Validity::good();
}

}  // namespace

Validity check_sb_morphism(const SbConditionMorphism& m, const SbCondition& c,
                           const SbCondition& b, bool require_complete,
                           const EnumLimits& limits) {
  return check_sb_rec(m, c, b, m.mode, require_complete, "", limits);
}

SbConditionMorphism identity_sb_morphism(const SbCondition& c, Mode mode) {
  SbConditionMorphism out;
  out.mode = mode;
  for (std::size_t i = 0; i < c.width(); ++i) {
    const SbBranch& br = c.branches[i];
    GraphMorphism v = identity(br.pattern());
    SpanShifter sh = SpanShifter::of_steps(
        {mode == Mode::forward ? df_step(v) : db_step(v)});
    out.branch_map.push_back(static_cast<int>(i));
    out.branches.push_back(SbMorphismBranch{
        v, identity(br.span.interface()), true, std::move(sh),
        identity_sb_morphism(br.child, mode)});
  }
  return out;
}

SbConditionMorphism compose_sb_morphisms(const SbConditionMorphism& m,
                                         const SbConditionMorphism& n) {
  if (m.mode != n.mode)
    throw DomainError("cannot compose witnesses of different modes");
  SbConditionMorphism out;
  out.mode = m.mode;
  for (std::size_t i = 0; i < n.branch_map.size(); ++i) {
    int j = n.branch_map[i];
    if (j < 0 || j >= static_cast<int>(m.branch_map.size()))
      throw DomainError("composition width mismatch");
    const SbMorphismBranch& mj = m.branches[j];
    const SbMorphismBranch& ni = n.branches[i];
    out.branch_map.push_back(m.branch_map[j]);
    SbMorphismBranch br{
        compose(mj.v, ni.v), compose(mj.k, ni.k),
        mj.conservative && ni.conservative,
        m.mode == Mode::forward ? compose_span_shifters(mj.shifter, ni.shifter)
                                : compose_span_shifters(ni.shifter, mj.shifter),
        compose_sb_morphisms(ni.sub, mj.sub)};
    out.branches.push_back(std::move(br));
  }
  return out;
}

namespace {

struct SbSearcher {
  Mode mode;
  bool complete;
  const SearchBudget& budget;
  const EnumLimits& limits;
  long long steps = 0;

  void tick() {
    if (++steps > budget.max_steps)
      throw ResourceError("morphism search budget exceeded");
  }

  std::optional<SbMorphismBranch> solve_branch(const SbBranch& cb,
                                               const SbBranch& bb) {
    bool fwd = mode == Mode::forward;
    for (const auto& v :
         enumerate_morphisms(cb.pattern(), bb.pattern(), limits)) {
      tick();
      auto ks = pattern_shifts(cb.span, bb.span, v, limits);
      const PatternShiftWitness* kw = nullptr;
      for (const auto& w : ks)
        if (!complete || w.conservative) {
          kw = &w;
          break;
        }
      if (!kw) continue;

      // trivial shifter: instant when the shifted side has no branches
      const SbCondition& shift_side = fwd ? cb.child : bb.child;
      const SbCondition& other_side = fwd ? bb.child : cb.child;
      if (shift_side.is_false()) {
        SpanShifter tr = fwd
            ? SpanShifter::trivial(cb.pattern(), bb.pattern())
            : SpanShifter::trivial(bb.pattern(), cb.pattern());
        auto sub = fwd ? search(other_side, sb_false(bb.pattern()))
                       : search(sb_false(cb.pattern()), other_side);
        if (sub)
          return SbMorphismBranch{v, kw->k, kw->conservative, std::move(tr),
                                  std::move(*sub)};
      }
      // complete elementary step (df forward / db backward)
      if (fwd || is_epi(v)) {
        SpanShifter sh =
            SpanShifter::of_steps({fwd ? df_step(v) : db_step(v)});
        auto sub = fwd
            ? search(bb.child, apply_span_shifter(sh, cb.child))
            : search(apply_span_shifter(sh, bb.child), cb.child);
        if (sub)
          return SbMorphismBranch{v, kw->k, kw->conservative, std::move(sh),
                                  std::move(*sub)};
      }
      // retraction-based step per section (never complete)
      if (!complete) {
        for (const auto& x : enumerate_sections(v, limits)) {
          tick();
          SpanShifter sh =
              SpanShifter::of_steps({fwd ? rf_step(v, x) : rb_step(v, x)});
          auto sub = fwd
              ? search(bb.child, apply_span_shifter(sh, cb.child))
              : search(apply_span_shifter(sh, bb.child), cb.child);
          if (sub)
            return SbMorphismBranch{v, kw->k, kw->conservative, std::move(sh),
                                    std::move(*sub)};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<SbConditionMorphism> search(const SbCondition& c,
                                            const SbCondition& b) {
    tick();
    if (!complete) {
      SbConditionMorphism out;
      out.mode = mode;
      for (const auto& bb : b.branches) {
        std::optional<SbMorphismBranch> found;
        int at = -1;
        for (std::size_t j = 0; j < c.width() && !found; ++j) {
          found = solve_branch(c.branches[j], bb);
          at = static_cast<int>(j);
        }
        if (!found) return std::nullopt;
        out.branch_map.push_back(at);
        out.branches.push_back(std::move(*found));
      }
      return out;
    }
    // complete mode: the branch map must be surjective, so choose it up
    // front and solve each branch under that choice
    std::vector<int> o(b.width(), 0);
    while (true) {
      bool surjective = true;
      std::vector<bool> hit(c.width(), false);
      for (int j : o) hit[j] = true;
      for (bool h : hit) surjective = surjective && h;
      if (surjective) {
        SbConditionMorphism out;
        out.mode = mode;
        bool all = true;
        for (std::size_t i = 0; i < b.width() && all; ++i) {
          auto found = solve_branch(c.branches[o[i]], b.branches[i]);
          if (!found) {
            all = false;
            break;
          }
          out.branch_map.push_back(o[i]);
          out.branches.push_back(std::move(*found));
        }
        if (all) return out;
      }
      // next assignment in lexicographic order
      if (b.width() == 0) {
        if (c.width() == 0) {
          SbConditionMorphism out;
          out.mode = mode;
          return out;
        }
        return std::nullopt;
      }
      std::size_t pos = b.width();
      while (pos > 0) {
        if (++o[pos - 1] < static_cast<int>(c.width())) break;
        o[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) return std::nullopt;
    }
  }
};

}  // namespace

std::optional<SbConditionMorphism> search_sb_morphism(
    const SbCondition& c, const SbCondition& b, Mode mode, bool want_complete,
    const SearchBudget& budget, const EnumLimits& limits) {
  if (!(c.root == b.root))
    throw DomainError("witness search needs conditions over a shared root");
  SbSearcher s{mode, want_complete, budget, limits};
  return s.search(c, b);
}

bool is_complete_sb_morphism(const SbConditionMorphism& m,
                             const SbCondition& c, const SbCondition& b) {
  return check_sb_morphism(m, c, b, true).ok;
}

}  // namespace nestcond
