#include "nestcond/transforms.hpp"

#include "nestcond/colimits.hpp"
#include "nestcond/errors.hpp"
#include "nestcond/shift_arrow.hpp"

namespace nestcond {

SbCondition to_span(const AbCondition& c) {
  std::vector<SbBranch> branches;
  branches.reserve(c.branches.size());
  for (const AbBranch& b : c.branches)
    branches.push_back(
        SbBranch(Span(identity(c.root), b.arrow), to_span(b.child)));
  return SbCondition(c.root, std::move(branches));
}

AbCondition to_arrow(const SbCondition& c) {
  std::vector<AbBranch> branches;
  branches.reserve(c.branches.size());
  for (const SbBranch& b : c.branches) {
    PushoutResult po = pushout(b.span.up, b.span.down);
    SbCondition moved = apply_span_shifter(
        SpanShifter::of_steps({df_step(po.q2)}), b.child);
    branches.push_back(AbBranch(po.q1, to_arrow(moved)));
  }
  return AbCondition(c.root, std::move(branches));
}

namespace {

// precompose shifters lift to single elementary steps: a forward section
// becomes an rf step over the pattern map, a backward epi becomes a db step
SpanShifter lift_shifter(const AbSourceShifter& s, Mode mode,
                         const GraphMorphism& v) {
  if (s.is_trivial()) return SpanShifter::trivial(s.from(), s.to());
  if (mode == Mode::forward) return SpanShifter::of_steps({rf_step(v, s.arrow())});
  return SpanShifter::of_steps({db_step(v)});
}

}  // namespace

SbConditionMorphism to_span_morphism(const AbConditionMorphism& m,
                                     const AbCondition& c,
                                     const AbCondition& b) {
  SbConditionMorphism out;
  out.mode = m.mode;
  out.branch_map = m.branch_map;
  out.branches.reserve(m.branches.size());
  GraphMorphism root_id = identity(c.root);
  for (std::size_t i = 0; i < m.branches.size(); ++i) {
    const AbMorphismBranch& br = m.branches[i];
    const AbBranch& bb = b.branches.at(i);
    const AbBranch& cb = c.branches.at(m.branch_map.at(i));
    SbMorphismBranch sbr{br.v, root_id,
                         pattern_shift_conservative(
                             Span(root_id, cb.arrow), Span(root_id, bb.arrow),
                             br.v, root_id),
                         lift_shifter(br.shifter, m.mode, br.v),
                         SbConditionMorphism{}};
    if (m.mode == Mode::forward)
      sbr.sub = to_span_morphism(br.sub, bb.child,
                                 apply_root_shifter(br.shifter, cb.child));
    else
      sbr.sub = to_span_morphism(
          br.sub, apply_root_shifter(br.shifter, bb.child), cb.child);
    out.branches.push_back(std::move(sbr));
  }
  return out;
}

SbCondition root_shift_sb(const SbCondition& c, const GraphMorphism& f) {
  if (!(f.dom() == c.root))
    throw DomainError("root shift needs f to start at the condition root");
  std::vector<SbBranch> branches;
  branches.reserve(c.branches.size());
  for (const SbBranch& b : c.branches)
    branches.push_back(
        SbBranch(Span(compose(b.span.up, f), b.span.down), b.child));
  return SbCondition(f.cod(), std::move(branches));
}

SbCondition root_backshift_sb(const SbCondition& c, const GraphMorphism& f) {
  if (!(f.cod() == c.root))
    throw DomainError("root back-shift needs f to end at the condition root");
  std::vector<SbBranch> branches;
  branches.reserve(c.branches.size());
  for (const SbBranch& b : c.branches) {
    PullbackResult pb = pullback(f, b.span.up);
    branches.push_back(
        SbBranch(Span(pb.p1, compose(pb.p2, b.span.down)), b.child));
  }
  return SbCondition(f.dom(), std::move(branches));
}

SbBranch interface_backshift(const SbBranch& p, const GraphMorphism& f) {
  if (!(f.cod() == p.span.interface()))
    throw DomainError(
        "interface back-shift needs f to end at the branch interface");
  return SbBranch(Span(compose(f, p.span.up), compose(f, p.span.down)),
                  p.child);
}

SbBranch interface_shift(const SbBranch& p, const GraphMorphism& f) {
  if (!(f.dom() == p.span.interface()))
    throw DomainError("interface shift needs f to start at the branch interface");
  PushoutResult pou = pushout(p.span.up, f);
  PushoutResult pod = pushout(p.span.down, f);
  return SbBranch(Span(pou.q2, pod.q2), root_shift_sb(p.child, pod.q1));
}

namespace {

std::vector<GraphMorphism> graph_isos(const Graph& a, const Graph& b,
                                      const EnumLimits& limits) {
  std::vector<GraphMorphism> out;
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
    return out;
  for (const GraphMorphism& m : enumerate_morphisms(a, b, limits))
    if (is_mono(m) && is_epi(m)) out.push_back(m);
  return out;
}

bool ab_iso_under(const AbCondition& c, const AbCondition& d,
                  const GraphMorphism& phi, const EnumLimits& limits);

// assign each c-branch an unused d-branch with a commuting pattern iso
bool ab_match(const AbCondition& c, const AbCondition& d,
              const GraphMorphism& phi, std::size_t i, std::vector<char>& used,
              const EnumLimits& limits) {
  if (i == c.branches.size()) return true;
  const AbBranch& cb = c.branches[i];
  for (std::size_t j = 0; j < d.branches.size(); ++j) {
    if (used[j]) continue;
    const AbBranch& db = d.branches[j];
    for (const GraphMorphism& psi :
         graph_isos(cb.arrow.cod(), db.arrow.cod(), limits)) {
      if (!(compose(cb.arrow, psi) == compose(phi, db.arrow))) continue;
      if (!ab_iso_under(cb.child, db.child, psi, limits)) continue;
      used[j] = 1;
      if (ab_match(c, d, phi, i + 1, used, limits)) return true;
      used[j] = 0;
    }
  }
  return false;
}

bool ab_iso_under(const AbCondition& c, const AbCondition& d,
                  const GraphMorphism& phi, const EnumLimits& limits) {
  if (c.branches.size() != d.branches.size()) return false;
  std::vector<char> used(d.branches.size(), 0);
  return ab_match(c, d, phi, 0, used, limits);
}

bool sb_iso_under(const SbCondition& c, const SbCondition& d,
                  const GraphMorphism& phi, const EnumLimits& limits);

bool sb_match(const SbCondition& c, const SbCondition& d,
              const GraphMorphism& phi, std::size_t i, std::vector<char>& used,
              const EnumLimits& limits) {
  if (i == c.branches.size()) return true;
  const SbBranch& cb = c.branches[i];
  for (std::size_t j = 0; j < d.branches.size(); ++j) {
    if (used[j]) continue;
    const SbBranch& db = d.branches[j];
    for (const GraphMorphism& kappa :
         graph_isos(cb.span.interface(), db.span.interface(), limits)) {
      if (!(compose(cb.span.up, phi) == compose(kappa, db.span.up))) continue;
      for (const GraphMorphism& psi :
           graph_isos(cb.pattern(), db.pattern(), limits)) {
        if (!(compose(cb.span.down, psi) == compose(kappa, db.span.down)))
          continue;
        if (!sb_iso_under(cb.child, db.child, psi, limits)) continue;
        used[j] = 1;
        if (sb_match(c, d, phi, i + 1, used, limits)) return true;
        used[j] = 0;
      }
    }
  }
  return false;
}

bool sb_iso_under(const SbCondition& c, const SbCondition& d,
                  const GraphMorphism& phi, const EnumLimits& limits) {
  if (c.branches.size() != d.branches.size()) return false;
  std::vector<char> used(d.branches.size(), 0);
  return sb_match(c, d, phi, 0, used, limits);
}

}  // namespace

std::optional<GraphMorphism> ab_condition_iso(const AbCondition& c,
                                              const AbCondition& d,
                                              const EnumLimits& limits) {
  for (const GraphMorphism& phi : graph_isos(c.root, d.root, limits))
    if (ab_iso_under(c, d, phi, limits)) return phi;
  return std::nullopt;
}

std::optional<GraphMorphism> sb_condition_iso(const SbCondition& c,
                                              const SbCondition& d,
                                              const EnumLimits& limits) {
  for (const GraphMorphism& phi : graph_isos(c.root, d.root, limits))
    if (sb_iso_under(c, d, phi, limits)) return phi;
  return std::nullopt;
}

}  // namespace nestcond
