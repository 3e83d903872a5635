#include "nestcond/shift_arrow.hpp"

namespace nestcond {

AbSourceShifter AbSourceShifter::trivial(Graph from_root, Graph to_root) {
  AbSourceShifter s;
  s.from_ = std::move(from_root);
  s.to_ = std::move(to_root);
  return s;
}

AbSourceShifter AbSourceShifter::precompose(GraphMorphism w) {
  AbSourceShifter s;
  s.arrow_ = std::move(w);
  return s;
}

const GraphMorphism& AbSourceShifter::arrow() const {
  if (!arrow_) throw DomainError("the trivial shifter has no defining arrow");
  return *arrow_;
}

bool operator==(const AbSourceShifter& a, const AbSourceShifter& b) {
  if (a.is_trivial() != b.is_trivial()) return false;
  if (a.is_trivial()) return a.from_ == b.from_ && a.to_ == b.to_;
  return *a.arrow_ == *b.arrow_;
}

AbSourceShifter make_forward_shifter(const GraphMorphism& v,
                                     const GraphMorphism& s) {
  if (!(s.dom() == v.cod()) || !(s.cod() == v.dom()))
    throw DomainError("section endpoints do not match");
  if (!compose(s, v).is_identity())
    throw DomainError("witness is not a section");
  return AbSourceShifter::precompose(s);
}

AbSourceShifter make_backward_shifter(const GraphMorphism& v) {
  if (!is_epi(v)) throw DomainError("backward shifting requires an epi");
  return AbSourceShifter::precompose(v);
}

AbSourceShifter identity_shifter(const Graph& root) {
  return AbSourceShifter::precompose(identity(root));
}

GraphMorphism apply_source_shifter(const AbSourceShifter& s,
                                   const GraphMorphism& a) {
  if (s.is_trivial())
    throw DomainError("the trivial shifter does not act on arrows");
  if (!(a.dom() == s.from()))
    throw DomainError("arrow is not rooted at the shifter source");
  return compose(s.arrow(), a);
}

AbCondition apply_root_shifter(const AbSourceShifter& s, const AbCondition& c) {
  if (!(c.root == s.from()))
    throw DomainError("shifter does not start at the condition root");
  if (s.is_trivial()) {
    if (!c.is_false())
      throw DomainError("the trivial shifter applies only to branchless conditions");
    return ab_false(s.to());
  }
  std::vector<AbBranch> out;
  out.reserve(c.branches.size());
  for (const auto& b : c.branches)
    out.push_back(AbBranch(compose(s.arrow(), b.arrow), b.child));
  return AbCondition(s.to(), std::move(out));
}

AbSourceShifter compose_shifters(const AbSourceShifter& u,
                                 const AbSourceShifter& v) {
  if (!(u.to() == v.from()))
    throw DomainError("shifter composition endpoint mismatch");
  if (u.is_trivial() || v.is_trivial())
    return AbSourceShifter::trivial(u.from(), v.to());
  return AbSourceShifter::precompose(compose(v.arrow(), u.arrow()));
}

}  // namespace nestcond
