#include "nestcond/fol.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nestcond/errors.hpp"
#include "nestcond/transforms.hpp"

namespace nestcond {

namespace {

using Kind = FolFormula::Kind;

FolFormula make(Kind k) {
  FolFormula f;
  f.kind = k;
  return f;
}

}  // namespace

FolFormula fol_true() { return make(Kind::truth); }

FolFormula fol_false() { return make(Kind::falsity); }

FolFormula fol_pred(std::string label, std::string x1, std::string x2) {
  FolFormula f = make(Kind::pred);
  f.label = std::move(label);
  f.x1 = std::move(x1);
  f.x2 = std::move(x2);
  return f;
}

FolFormula fol_eq(std::string x1, std::string x2) {
  FolFormula f = make(Kind::eq);
  f.x1 = std::move(x1);
  f.x2 = std::move(x2);
  return f;
}

FolFormula fol_and(FolFormula a, FolFormula b) {
  FolFormula f = make(Kind::conj);
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

FolFormula fol_or(FolFormula a, FolFormula b) {
  FolFormula f = make(Kind::disj);
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

FolFormula fol_not(FolFormula a) {
  FolFormula f = make(Kind::neg);
  f.kids.push_back(std::move(a));
  return f;
}

FolFormula fol_exists(std::vector<std::string> vars, FolFormula body) {
  std::set<std::string> seen;
  for (const std::string& v : vars)
    if (!seen.insert(v).second)
      throw DomainError("duplicate bound variable '" + v + "'");
  FolFormula f = make(Kind::exists);
  f.vars = std::move(vars);
  f.kids.push_back(std::move(body));
  return f;
}

namespace {

void collect_free(const FolFormula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind) {
    case Kind::truth:
    case Kind::falsity:
      return;
    case Kind::pred:
    case Kind::eq:
      if (!bound.count(f.x1)) out.insert(f.x1);
      if (!bound.count(f.x2)) out.insert(f.x2);
      return;
    case Kind::conj:
    case Kind::disj:
    case Kind::neg:
      for (const FolFormula& k : f.kids) collect_free(k, bound, out);
      return;
    case Kind::exists: {
      std::vector<std::string> added;
      for (const std::string& v : f.vars)
        if (bound.insert(v).second) added.push_back(v);
      collect_free(f.kids[0], bound, out);
      for (const std::string& v : added) bound.erase(v);
      return;
    }
  }
}

}  // namespace

std::vector<std::string> free_vars(const FolFormula& phi) {
  std::set<std::string> bound, out;
  collect_free(phi, bound, out);
  return {out.begin(), out.end()};
}

// --- parsing ---------------------------------------------------------------

namespace {

struct Token {
  enum Type { ident, kw_true, kw_false, kw_exists, kw_forall, lparen, rparen,
              comma, dot, amp, pipe, bang, equals, end };
  Type type;
  std::string text;
  std::size_t pos;  // 1-based character offset
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("syntax error at position " + std::to_string(tok_.pos) +
                      ": " + msg);
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                    text_[i_])))
      ++i_;
    tok_.pos = i_ + 1;
    if (i_ >= text_.size()) {
      tok_ = {Token::end, "", i_ + 1};
      return;
    }
    char c = text_[i_];
    auto single = [&](Token::Type t) {
      tok_ = {t, std::string(1, c), i_ + 1};
      ++i_;
    };
    switch (c) {
      case '(': return single(Token::lparen);
      case ')': return single(Token::rparen);
      case ',': return single(Token::comma);
      case '.': return single(Token::dot);
      case '&': return single(Token::amp);
      case '|': return single(Token::pipe);
      case '!': return single(Token::bang);
      case '=': return single(Token::equals);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
              text_[i_] == '_'))
        ++i_;
      std::string word = text_.substr(start, i_ - start);
      Token::Type t = Token::ident;
      if (word == "true") t = Token::kw_true;
      else if (word == "false") t = Token::kw_false;
      else if (word == "exists") t = Token::kw_exists;
      else if (word == "forall") t = Token::kw_forall;
      tok_ = {t, std::move(word), start + 1};
      return;
    }
    tok_ = {Token::end, std::string(1, c), i_ + 1};
    throw DomainError("syntax error at position " + std::to_string(i_ + 1) +
                      ": unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_{Token::end, "", 1};
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  FolFormula run() {
    FolFormula f = disjunction();
    if (lx_.peek().type != Token::end) lx_.fail("unexpected trailing input");
    return f;
  }

 private:
  FolFormula disjunction() {
    FolFormula f = conjunction();
    while (lx_.peek().type == Token::pipe) {
      lx_.take();
      f = fol_or(std::move(f), conjunction());
    }
    return f;
  }

  FolFormula conjunction() {
    FolFormula f = unary();
    while (lx_.peek().type == Token::amp) {
      lx_.take();
      f = fol_and(std::move(f), unary());
    }
    return f;
  }

  FolFormula unary() {
    switch (lx_.peek().type) {
      case Token::bang:
        lx_.take();
        return fol_not(unary());
      case Token::kw_exists:
      case Token::kw_forall:
        return quantifier();
      default:
        return atom();
    }
  }

  FolFormula quantifier() {
    bool universal = lx_.take().type == Token::kw_forall;
    std::vector<std::string> vars;
    vars.push_back(expect_ident("a bound variable"));
    while (lx_.peek().type == Token::comma) {
      lx_.take();
      vars.push_back(expect_ident("a bound variable"));
    }
    std::set<std::string> seen;
    for (const std::string& v : vars)
      if (!seen.insert(v).second)
        lx_.fail("duplicate bound variable '" + v + "'");
    if (lx_.peek().type != Token::dot) lx_.fail("expected '.'");
    lx_.take();
    // the body extends as far right as possible
    FolFormula body = disjunction();
    if (universal)
      return fol_not(fol_exists(std::move(vars), fol_not(std::move(body))));
    return fol_exists(std::move(vars), std::move(body));
  }

  FolFormula atom() {
    Token t = lx_.peek();
    switch (t.type) {
      case Token::kw_true:
        lx_.take();
        return fol_true();
      case Token::kw_false:
        lx_.take();
        return fol_false();
      case Token::lparen: {
        lx_.take();
        FolFormula f = disjunction();
        if (lx_.peek().type != Token::rparen) lx_.fail("expected ')'");
        lx_.take();
        return f;
      }
      case Token::ident: {
        std::string name = lx_.take().text;
        if (lx_.peek().type == Token::lparen) {
          lx_.take();
          std::string a = expect_ident("a variable");
          if (lx_.peek().type != Token::comma) lx_.fail("expected ','");
          lx_.take();
          std::string b = expect_ident("a variable");
          if (lx_.peek().type != Token::rparen) lx_.fail("expected ')'");
          lx_.take();
          return fol_pred(std::move(name), std::move(a), std::move(b));
        }
        if (lx_.peek().type == Token::equals) {
          lx_.take();
          return fol_eq(std::move(name), expect_ident("a variable"));
        }
        lx_.fail("expected '(' or '=' after identifier '" + name + "'");
      }
      default:
        lx_.fail("expected a formula");
    }
  }

  std::string expect_ident(const std::string& what) {
    if (lx_.peek().type != Token::ident) lx_.fail("expected " + what);
    return lx_.take().text;
  }

  Lexer lx_;
};

}  // namespace

FolFormula parse_fol(const std::string& text) { return Parser(text).run(); }

// --- printing ---------------------------------------------------------------

namespace {

// precedence: quantifiers 0 (their body runs right), | is 1, & is 2,
// ! and atoms are 3
int precedence(const FolFormula& f) {
  switch (f.kind) {
    case Kind::exists: return 0;
    case Kind::disj: return 1;
    case Kind::conj: return 2;
    default: return 3;
  }
}

void print(const FolFormula& f, int min_prec, std::string& out) {
  bool wrap = precedence(f) < min_prec;
  if (wrap) out += '(';
  switch (f.kind) {
    case Kind::truth: out += "true"; break;
    case Kind::falsity: out += "false"; break;
    case Kind::pred:
      out += f.label + "(" + f.x1 + "," + f.x2 + ")";
      break;
    case Kind::eq: out += f.x1 + "=" + f.x2; break;
    case Kind::conj:
      print(f.kids[0], 2, out);
      out += " & ";
      print(f.kids[1], 3, out);
      break;
    case Kind::disj:
      print(f.kids[0], 1, out);
      out += " | ";
      print(f.kids[1], 2, out);
      break;
    case Kind::neg:
      out += '!';
      print(f.kids[0], 3, out);
      break;
    case Kind::exists: {
      out += "exists ";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ',';
        out += f.vars[i];
      }
      out += ". ";
      print(f.kids[0], 0, out);
      break;
    }
  }
  if (wrap) out += ')';
}

}  // namespace

std::string to_string(const FolFormula& phi) {
  std::string out;
  print(phi, 0, out);
  return out;
}

// --- evaluation --------------------------------------------------------------

namespace {

using Env = std::unordered_map<std::string, std::string>;

bool assign_and_eval(const FolFormula& f, std::size_t i, Env& env,
                     const Graph& g);

bool eval(const FolFormula& f, Env& env, const Graph& g) {
  switch (f.kind) {
    case Kind::truth: return true;
    case Kind::falsity: return false;
    case Kind::pred: {
      auto a = env.find(f.x1), b = env.find(f.x2);
      if (a == env.end()) throw DomainError("unbound variable '" + f.x1 + "'");
      if (b == env.end()) throw DomainError("unbound variable '" + f.x2 + "'");
      return g.has_edge(a->second, f.label, b->second);
    }
    case Kind::eq: {
      auto a = env.find(f.x1), b = env.find(f.x2);
      if (a == env.end()) throw DomainError("unbound variable '" + f.x1 + "'");
      if (b == env.end()) throw DomainError("unbound variable '" + f.x2 + "'");
      return a->second == b->second;
    }
    case Kind::conj:
      return eval(f.kids[0], env, g) && eval(f.kids[1], env, g);
    case Kind::disj:
      return eval(f.kids[0], env, g) || eval(f.kids[1], env, g);
    case Kind::neg:
      return !eval(f.kids[0], env, g);
    case Kind::exists: {
      // depth-first over all assignments of the bound variables
      std::vector<std::pair<std::string, std::string>> saved;
      for (const std::string& v : f.vars) {
        auto it = env.find(v);
        if (it != env.end()) saved.push_back({v, it->second});
      }
      bool found = assign_and_eval(f, 0, env, g);
      for (const std::string& v : f.vars) env.erase(v);
      for (auto& [v, val] : saved) env[v] = val;
      return found;
    }
  }
  return false;
}

bool assign_and_eval(const FolFormula& f, std::size_t i, Env& env,
                     const Graph& g) {
  if (i == f.vars.size()) return eval(f.kids[0], env, g);
  for (const std::string& node : g.nodes()) {
    env[f.vars[i]] = node;
    if (assign_and_eval(f, i + 1, env, g)) return true;
  }
  return false;
}

}  // namespace

bool eval_fol(const GraphMorphism& v, const FolFormula& phi) {
  Env env;
  for (const std::string& n : v.dom().nodes()) env[n] = v.node_image(n);
  return eval(phi, env, v.cod());
}

// --- encoding ----------------------------------------------------------------

namespace {

std::vector<std::string> sorted_union(std::vector<std::string> a,
                                      const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

GraphMorphism discrete_inclusion(const Graph& small, const Graph& big) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& n : small.nodes()) pairs.push_back({n, n});
  return GraphMorphism::from_names(small, big, pairs, {});
}

SbCondition encode_at(const FolFormula& phi,
                      const std::vector<std::string>& xs);

// weaken a condition to the larger discrete root
SbCondition lift_to(SbCondition c, const Graph& root) {
  if (c.root == root) return c;
  GraphMorphism incl = discrete_inclusion(c.root, root);
  return root_shift_sb(c, incl);
}

SbCondition encode_minimal(const FolFormula& phi, const Graph& root) {
  return lift_to(encode_at(phi, free_vars(phi)), root);
}

SbCondition encode_at(const FolFormula& phi,
                      const std::vector<std::string>& xs) {
  Graph d = discrete_graph(xs);
  switch (phi.kind) {
    case Kind::falsity:
      return sb_false(d);
    case Kind::truth:
      return sb_true(d);
    case Kind::pred: {
      Graph pattern(xs, {Edge{"e1", phi.x1, phi.label, phi.x2}});
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const std::string& n : xs) pairs.push_back({n, n});
      GraphMorphism into =
          GraphMorphism::from_names(d, pattern, pairs, {});
      std::vector<SbBranch> bs;
      bs.push_back(SbBranch(Span(identity(d), std::move(into)),
                            sb_false(pattern)));
      return SbCondition(std::move(d), std::move(bs));
    }
    case Kind::eq: {
      if (phi.x1 == phi.x2) return sb_true(d);
      const std::string& rep = std::min(phi.x1, phi.x2);
      const std::string& drop = std::max(phi.x1, phi.x2);
      std::vector<std::string> rest;
      for (const std::string& n : xs)
        if (n != drop) rest.push_back(n);
      Graph q = discrete_graph(rest);
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const std::string& n : xs)
        pairs.push_back({n, n == drop ? rep : n});
      GraphMorphism quot = GraphMorphism::from_names(d, q, pairs, {});
      std::vector<SbBranch> bs;
      bs.push_back(SbBranch(Span(identity(d), std::move(quot)), sb_false(q)));
      return SbCondition(std::move(d), std::move(bs));
    }
    case Kind::conj:
      // De Morgan keeps the construction to a single binary connective
      return encode_at(fol_not(fol_or(fol_not(phi.kids[0]),
                                      fol_not(phi.kids[1]))),
                       xs);
    case Kind::disj: {
      SbCondition ca = encode_minimal(phi.kids[0], d);
      SbCondition cb = encode_minimal(phi.kids[1], d);
      std::vector<SbBranch> bs = std::move(ca.branches);
      for (SbBranch& b : cb.branches) bs.push_back(std::move(b));
      return SbCondition(std::move(d), std::move(bs));
    }
    case Kind::neg: {
      SbCondition inner = encode_minimal(phi.kids[0], d);
      std::vector<SbBranch> bs;
      bs.push_back(SbBranch(Span(identity(d), identity(d)),
                            std::move(inner)));
      return SbCondition(std::move(d), std::move(bs));
    }
    case Kind::exists: {
      for (const std::string& v : phi.vars)
        if (std::find(xs.begin(), xs.end(), v) != xs.end())
          throw DomainError("bound variable '" + v +
                            "' clashes with a variable already in scope");
      std::vector<std::string> wide = sorted_union(xs, phi.vars);
      Graph d2 = discrete_graph(wide);
      SbCondition child = encode_at(fol_not(phi.kids[0]), wide);
      std::vector<SbBranch> bs;
      bs.push_back(SbBranch(Span(identity(d), discrete_inclusion(d, d2)),
                            std::move(child)));
      return SbCondition(std::move(d), std::move(bs));
    }
  }
  throw DomainError("malformed formula");
}

}  // namespace

SbCondition encode(const FolFormula& phi, std::vector<std::string> ambient) {
  return encode_at(phi, sorted_union(std::move(ambient), free_vars(phi)));
}

// --- decoding ----------------------------------------------------------------

namespace {

bool used_name(const std::vector<std::string>& used, const std::string& n) {
  return std::find(used.begin(), used.end(), n) != used.end();
}

FolFormula conj_fold(std::vector<FolFormula> parts) {
  if (parts.empty()) return fol_true();
  FolFormula f = std::move(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    f = fol_and(std::move(f), std::move(parts[i]));
  return f;
}

FolFormula decode_impl(const AbCondition& c,
                       const std::vector<std::string>& naming,
                       const std::vector<std::string>& used,
                       std::vector<int>& path) {
  FolFormula result = fol_false();
  bool first = true;
  for (std::size_t bi = 0; bi < c.branches.size(); ++bi) {
    const AbBranch& br = c.branches[bi];
    const GraphMorphism& a = br.arrow;
    const Graph& p = a.cod();
    const Graph& r = a.dom();
    path.push_back(static_cast<int>(bi) + 1);

    // variables for the pattern: the section of a's image keeps root names,
    // the rest are fresh and will be quantified
    std::vector<int> rep(p.node_count(), -1);
    for (std::size_t ri = 0; ri < r.node_count(); ++ri) {
      int pi = a.node_map()[ri];
      if (rep[pi] < 0) rep[pi] = static_cast<int>(ri);
    }
    std::vector<std::string> nu(p.node_count());
    std::vector<std::string> scope = used;
    std::vector<std::string> fresh;
    for (std::size_t pi = 0; pi < p.node_count(); ++pi) {
      if (rep[pi] >= 0) {
        nu[pi] = naming[rep[pi]];
        continue;
      }
      std::string name = p.nodes()[pi];
      if (used_name(scope, name)) {
        name += "_";
        for (int step : path) name += std::to_string(step) + "_";
        name.pop_back();
        while (used_name(scope, name)) name += "_";
      }
      nu[pi] = name;
      fresh.push_back(name);
      scope.push_back(name);
    }

    std::vector<FolFormula> parts;
    // a non-injective branch arrow induces equalities between root names
    for (std::size_t ri = 0; ri < r.node_count(); ++ri) {
      int pi = a.node_map()[ri];
      if (static_cast<int>(ri) != rep[pi] && nu[pi] != naming[ri])
        parts.push_back(fol_eq(nu[pi], naming[ri]));
    }
    // edges beyond the image of the root are new atoms
    std::set<int> hit;
    for (std::size_t ei = 0; ei < r.edge_count(); ++ei)
      hit.insert(a.edge_map()[ei]);
    for (std::size_t ei = 0; ei < p.edge_count(); ++ei) {
      if (hit.count(static_cast<int>(ei))) continue;
      const Edge& e = p.edges()[ei];
      parts.push_back(fol_pred(e.label, nu[p.node_index(e.src)],
                               nu[p.node_index(e.tgt)]));
    }
    if (br.child.width() > 0)
      parts.push_back(fol_not(decode_impl(br.child, nu, scope, path)));

    FolFormula body = conj_fold(std::move(parts));
    if (!fresh.empty()) body = fol_exists(std::move(fresh), std::move(body));
    result = first ? std::move(body)
                   : fol_or(std::move(result), std::move(body));
    first = false;
    path.pop_back();
  }
  return result;
}

}  // namespace

FolFormula decode(const AbCondition& c) {
  std::vector<std::string> naming = c.root.nodes();
  std::vector<int> path;
  return decode_impl(c, naming, naming, path);
}

}  // namespace nestcond
