#pragma once

#include <string>
#include <vector>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/cond_span.hpp"

namespace nestcond {

// Formula of the first-order fragment over binary edge predicates:
//   true, false, l(x1,x2), x1=x2, and, or, not, exists.
// Immutable tree; equality is structural.
struct FolFormula {
  enum class Kind { truth, falsity, pred, eq, conj, disj, neg, exists };

  Kind kind = Kind::truth;
  std::string label;              // pred: the edge label
  std::string x1, x2;             // pred and eq operands
  std::vector<std::string> vars;  // exists: distinct bound variables
  std::vector<FolFormula> kids;   // conj/disj: two, neg/exists: one

  friend bool operator==(const FolFormula&, const FolFormula&) = default;
};

FolFormula fol_true();
FolFormula fol_false();
FolFormula fol_pred(std::string label, std::string x1, std::string x2);
FolFormula fol_eq(std::string x1, std::string x2);
FolFormula fol_and(FolFormula a, FolFormula b);
FolFormula fol_or(FolFormula a, FolFormula b);
FolFormula fol_not(FolFormula a);
// vars must be distinct; an empty list is allowed and binds nothing
FolFormula fol_exists(std::vector<std::string> vars, FolFormula body);

// free variables, sorted and unique
std::vector<std::string> free_vars(const FolFormula& phi);

// Concrete syntax:
//   f ::= true | false | l(x,y) | x=y | !f | f&f | f|f | (f)
//       | exists x,y. f | forall x,y. f
// ! binds tighter than &, & tighter than |; a quantifier body extends as
// far right as possible; forall is sugar for !exists.! . Identifiers are
// [A-Za-z_][A-Za-z0-9_]*; true/false/exists/forall are reserved.
// Throws DomainError naming the offending position.
FolFormula parse_fol(const std::string& text);

// Renders with minimal parentheses; parse_fol(to_string(f)) == f.
std::string to_string(const FolFormula& phi);

// Tarski semantics. The valuation is a morphism from a discrete graph whose
// nodes are the variables; l(x,y) holds iff some l-labelled edge runs from
// v(x) to v(y), and exists ranges over all nodes of v's codomain.
// Throws DomainError on a free variable missing from v.
bool eval_fol(const GraphMorphism& v, const FolFormula& phi);

// Encode as a span-based condition over the discrete graph on the union of
// the ambient set and the free variables, such that a valuation satisfies
// the condition exactly when it satisfies the formula. Bound variables must
// not clash with variables already in scope.
SbCondition encode(const FolFormula& phi,
                   std::vector<std::string> ambient = {});

// Formula satisfied by exactly the models of c; its free variables are the
// node names of c.root. Pattern node names are reused for the quantified
// variables when unambiguous, otherwise suffixed with the branch path.
FolFormula decode(const AbCondition& c);

}  // namespace nestcond
