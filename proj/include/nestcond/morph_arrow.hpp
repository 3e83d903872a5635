#pragma once

#include <optional>
#include <vector>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/morph_common.hpp"
#include "nestcond/shift_arrow.hpp"

namespace nestcond {

struct AbMorphismBranch;

// Structural witness m : c -> b that every model of b is also a model of c.
// branch_map assigns to each branch of b a branch of c; the per-branch data
// holds the pattern map, the root shifter used on the nested level, and a
// recursive witness between the children with the roles swapped.
struct AbConditionMorphism {
  Mode mode = Mode::forward;
  std::vector<int> branch_map;             // one entry per branch of b
  std::vector<AbMorphismBranch> branches;  // aligned with branch_map

  friend bool operator==(const AbConditionMorphism&,
                         const AbConditionMorphism&);
};

struct AbMorphismBranch {
  GraphMorphism v;          // c-pattern -> b-pattern, a^c;v = a^b
  AbSourceShifter shifter;  // forward: section-based for v; backward: v itself
  AbConditionMorphism sub;  // forward: b-child -> shifted c-child;
                            // backward: shifted b-child -> c-child

  friend bool operator==(const AbMorphismBranch&,
                         const AbMorphismBranch&) = default;
};

// recursive structural validation; the report pinpoints the first failing
// clause by branch path
Validity check_ab_morphism(const AbConditionMorphism& m, const AbCondition& c,
                           const AbCondition& b);

AbConditionMorphism identity_ab_morphism(const AbCondition& c,
                                         Mode mode = Mode::forward);

// diagrammatic composite of m : c -> d and n : d -> b
AbConditionMorphism compose_ab_morphisms(const AbConditionMorphism& m,
                                         const AbConditionMorphism& n);

// first witness in deterministic candidate order (branch index ascending,
// pattern maps in enumeration order, trivial shifter before section- or
// epi-based ones), or absent once the candidate space is exhausted
std::optional<AbConditionMorphism> search_ab_morphism(
    const AbCondition& c, const AbCondition& b, Mode mode,
    const SearchBudget& budget = {}, const EnumLimits& limits = {});

}  // namespace nestcond
