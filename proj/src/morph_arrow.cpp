#include "nestcond/morph_arrow.hpp"

#include <string>

#include "nestcond/errors.hpp"

namespace nestcond {

bool operator==(const AbConditionMorphism& a, const AbConditionMorphism& b) {
  return a.mode == b.mode && a.branch_map == b.branch_map &&
         a.branches == b.branches;
}

namespace {

std::string at(const std::string& path, std::string what) {
  return path.empty() ? what : path + ": " + what;
}

Validity check_ab_rec(const AbConditionMorphism& m, const AbCondition& c,
                      const AbCondition& b, Mode mode,
                      const std::string& path) {
  if (m.mode != mode)
    return Validity::bad(at(path, "mode differs from the enclosing witness"));
  if (!(c.root == b.root))
    return Validity::bad(at(path, "conditions are over different roots"));
  if (m.branch_map.size() != b.width() || m.branches.size() != b.width())
    return Validity::bad(at(path, "witness width differs from the target"));
  for (std::size_t i = 0; i < b.width(); ++i) {
    std::string here = at(path, "branch " + std::to_string(i + 1));
    int j = m.branch_map[i];
    if (j < 0 || j >= static_cast<int>(c.width()))
      return Validity::bad(here + ": branch map entry out of range");
    const AbBranch& cb = c.branches[j];
    const AbBranch& bb = b.branches[i];
    const AbMorphismBranch& br = m.branches[i];
    const Graph& cp = cb.arrow.cod();
    const Graph& bp = bb.arrow.cod();
    if (!(br.v.dom() == cp) || !(br.v.cod() == bp))
      return Validity::bad(here + ": pattern map endpoints do not match");
    if (!(compose(cb.arrow, br.v) == bb.arrow))
      return Validity::bad(here +
                           ": branch arrows do not satisfy a^c;v = a^b");
    bool fwd = mode == Mode::forward;
    const Graph& shift_src = fwd ? cp : bp;
    const Graph& shift_dst = fwd ? bp : cp;
    if (!(br.shifter.from() == shift_src) ||
        !(br.shifter.to() == shift_dst))
      return Validity::bad(here + ": shifter endpoints do not match");
    if (br.shifter.is_trivial()) {
      const AbCondition& shifted_child = fwd ? cb.child : bb.child;
      if (!shifted_child.is_false())
        return Validity::bad(
            here + ": trivial shifter on a condition with branches");
    } else if (fwd) {
      if (!compose(br.shifter.arrow(), br.v).is_identity())
        return Validity::bad(
            here + ": shifter arrow is not a section of the pattern map");
    } else {
      if (!(br.shifter.arrow() == br.v))
        return Validity::bad(
            here + ": backward shifter must precompose the pattern map");
      if (!is_epi(br.v))
        return Validity::bad(here + ": pattern map is not epi");
    }
    Validity sub =
        fwd ? check_ab_rec(br.sub, bb.child,
                           apply_root_shifter(br.shifter, cb.child), mode,
                           here)
            : check_ab_rec(br.sub, apply_root_shifter(br.shifter, bb.child),
                           cb.child, mode, here);
    if (!sub.ok) return sub;
  }
  return Validity::good();
}

}  // namespace

Validity check_ab_morphism(const AbConditionMorphism& m, const AbCondition& c,
                           const AbCondition& b) {
  return check_ab_rec(m, c, b, m.mode, "");
}

AbConditionMorphism identity_ab_morphism(const AbCondition& c, Mode mode) {
  AbConditionMorphism out;
  out.mode = mode;
  for (std::size_t i = 0; i < c.width(); ++i) {
    const AbBranch& br = c.branches[i];
    out.branch_map.push_back(static_cast<int>(i));
    out.branches.push_back(
        AbMorphismBranch{identity(br.arrow.cod()),
                         identity_shifter(br.arrow.cod()),
                         identity_ab_morphism(br.child, mode)});
  }
  return out;
}

AbConditionMorphism compose_ab_morphisms(const AbConditionMorphism& m,
                                         const AbConditionMorphism& n) {
  if (m.mode != n.mode)
    throw DomainError("cannot compose witnesses of different modes");
  AbConditionMorphism out;
  out.mode = m.mode;
  for (std::size_t i = 0; i < n.branch_map.size(); ++i) {
    int j = n.branch_map[i];
    if (j < 0 || j >= static_cast<int>(m.branch_map.size()))
      throw DomainError("composition width mismatch");
    const AbMorphismBranch& mj = m.branches[j];
    const AbMorphismBranch& ni = n.branches[i];
    out.branch_map.push_back(m.branch_map[j]);
    out.branches.push_back(AbMorphismBranch{
        compose(mj.v, ni.v),
        m.mode == Mode::forward ? compose_shifters(mj.shifter, ni.shifter)
                                : compose_shifters(ni.shifter, mj.shifter),
        compose_ab_morphisms(ni.sub, mj.sub)});
  }
  return out;
}

namespace {

struct AbSearcher {
  Mode mode;
  const SearchBudget& budget;
  const EnumLimits& limits;
  long long steps = 0;

  void tick() {
    if (++steps > budget.max_steps)
      throw ResourceError("morphism search budget exceeded");
  }

  std::optional<AbMorphismBranch> solve_branch(const AbBranch& cb,
                                               const AbBranch& bb) {
    bool fwd = mode == Mode::forward;
    std::optional<AbMorphismBranch> found;
    for_each_factorisation(
        cb.arrow, bb.arrow,
        [&](const GraphMorphism& v) {
          tick();
          const Graph& cp = cb.arrow.cod();
          const Graph& bp = bb.arrow.cod();
          // trivial shifter: applicable when the shifted side is branchless
          const AbCondition& shift_side = fwd ? cb.child : bb.child;
          const AbCondition& other_side = fwd ? bb.child : cb.child;
          if (shift_side.is_false()) {
            AbSourceShifter tr = fwd ? AbSourceShifter::trivial(cp, bp)
                                     : AbSourceShifter::trivial(bp, cp);
            auto sub = fwd ? search(other_side, ab_false(bp))
                           : search(ab_false(cp), other_side);
            if (sub) {
              found = AbMorphismBranch{v, std::move(tr), std::move(*sub)};
              return true;
            }
          }
          if (fwd) {
            for (const auto& s : enumerate_sections(v, limits)) {
              tick();
              AbSourceShifter sh = AbSourceShifter::precompose(s);
              auto sub = search(bb.child, apply_root_shifter(sh, cb.child));
              if (sub) {
                found = AbMorphismBranch{v, std::move(sh), std::move(*sub)};
                return true;
              }
            }
          } else if (is_epi(v)) {
            AbSourceShifter sh = AbSourceShifter::precompose(v);
            auto sub = search(apply_root_shifter(sh, bb.child), cb.child);
            if (sub) {
              found = AbMorphismBranch{v, std::move(sh), std::move(*sub)};
              return true;
            }
          }
          return false;
        },
        limits);
    return found;
  }

  std::optional<AbConditionMorphism> search(const AbCondition& c,
                                            const AbCondition& b) {
    tick();
    AbConditionMorphism out;
    out.mode = mode;
    for (const auto& bb : b.branches) {
      std::optional<AbMorphismBranch> found;
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
};

}  // namespace

std::optional<AbConditionMorphism> search_ab_morphism(
    const AbCondition& c, const AbCondition& b, Mode mode,
    const SearchBudget& budget, const EnumLimits& limits) {
  if (!(c.root == b.root))
    throw DomainError("witness search needs conditions over a shared root");
  AbSearcher s{mode, budget, limits};
  return s.search(c, b);
}

}  // namespace nestcond
