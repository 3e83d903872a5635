#pragma once

#include <string>

#include <json.hpp>

#include "nestcond/cond_arrow.hpp"
#include "nestcond/cond_span.hpp"
#include "nestcond/morph_arrow.hpp"
#include "nestcond/oracle.hpp"

namespace nestcond {

using json = nlohmann::json;

// All readers validate shape and semantics and throw DomainError with the
// offending field; writers are deterministic (sorted keys, declared orders).

// {"nodes":["x","y"],"edges":[{"id":"e1","src":"x","label":"a","tgt":"y"}]}
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"nodes":{"x":"u"},"edges":{"e1":"f1"}}; the standalone form carries
// "dom" and "cod" graphs, the context form takes them from the caller
json to_json(const GraphMorphism& f, bool with_endpoints = true);
GraphMorphism morphism_from_json(const json& j);
GraphMorphism morphism_from_json(const json& j, const Graph& dom,
                                 const Graph& cod);

// {"root":Graph,"branches":[{"arrow":Morphism,"pattern":Graph,
//  "child":AbCondition}]}; pattern must equal the arrow codomain
json to_json(const AbCondition& c);
AbCondition ab_condition_from_json(const json& j);

// {"root":Graph,"branches":[{"interface":Graph,"up":Morphism,
//  "down":Morphism,"pattern":Graph,"child":SbCondition}]}
json to_json(const SbCondition& c);
SbCondition sb_condition_from_json(const json& j);

// {"kind":"trivial","from":Graph,"to":Graph} or
// {"kind":"precompose","arrow":Morphism}
json to_json(const AbSourceShifter& s);
AbSourceShifter ab_shifter_from_json(const json& j);

// {"kind":"trivial","from":Graph,"to":Graph} or {"kind":"chain","steps":
//  [{"kind":"df"|"rf"|"db"|"rb","v":Morphism,"x":Morphism?}]}
json to_json(const SpanShifter& s);
SpanShifter span_shifter_from_json(const json& j);

// certificates: {"mode":"forward"|"backward","o":[1-based branch map],
//  "branches":[{"v":Morphism,"shifter":Shifter,"sub":Certificate}]};
// span certificates add "k" and "conservative" per branch. Morphisms in
// certificates are standalone so a certificate re-checks by itself.
json to_json(const AbConditionMorphism& m);
AbConditionMorphism ab_morphism_from_json(const json& j);
json to_json(const SbConditionMorphism& m);
SbConditionMorphism sb_morphism_from_json(const json& j);

// {"labels":[...],"max_nodes":n,"max_edges":n,"up_to_iso":bool}
json to_json(const Universe& u);
Universe universe_from_json(const json& j);

// {"verdict":"holds_within_bound"|"counterexample","bound":Universe,
//  "graph":Graph?,"model":Morphism?}
json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

// canonical file text: two-space indent, trailing newline
std::string json_text(const json& j);
json parse_json_text(const std::string& text);  // DomainError on bad syntax
json load_json_file(const std::string& path);   // ResourceError when unreadable
void save_json_file(const std::string& path, const json& j);

}  // namespace nestcond
