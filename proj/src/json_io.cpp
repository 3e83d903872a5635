#include "nestcond/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace nestcond {

namespace {

const json& field(const json& j, const char* name, const char* what) {
  if (!j.is_object())
    throw DomainError(std::string(what) + " must be a JSON object");
  auto it = j.find(name);
  if (it == j.end())
    throw DomainError(std::string(what) + " is missing field \"" + name +
                      "\"");
  return *it;
}

std::string str(const json& j, const std::string& what) {
  if (!j.is_string()) throw DomainError(what + " must be a string");
  return j.get<std::string>();
}

int integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DomainError(what + " must be an integer");
  return j.get<int>();
}

bool boolean(const json& j, const std::string& what) {
  if (!j.is_boolean()) throw DomainError(what + " must be a boolean");
  return j.get<bool>();
}

const json& array(const json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + " must be an array");
  return j;
}

std::vector<std::pair<std::string, std::string>> name_map(
    const json& j, const std::string& what) {
  if (!j.is_object()) throw DomainError(what + " must be an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, value] : j.items())
    out.emplace_back(key, str(value, what + "[\"" + key + "\"]"));
  return out;
}

json mode_to_json(Mode m) { return json(mode_name(m)); }

Mode mode_from_json(const json& j) {
  std::string s = str(j, "mode");
  if (s == "forward") return Mode::forward;
  if (s == "backward") return Mode::backward;
  throw DomainError("mode must be \"forward\" or \"backward\", got \"" + s +
                    "\"");
}

}  // namespace

json to_json(const Graph& g) {
  json nodes = json::array();
  for (const std::string& n : g.nodes()) nodes.push_back(n);
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(json{{"id", e.id},
                         {"src", e.src},
                         {"label", e.label},
                         {"tgt", e.tgt}});
  return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::string> nodes;
  for (const json& n : array(field(j, "nodes", "graph"), "graph nodes"))
    nodes.push_back(str(n, "graph node"));
  std::vector<Edge> edges;
  for (const json& e : array(field(j, "edges", "graph"), "graph edges"))
    edges.push_back(Edge{str(field(e, "id", "edge"), "edge id"),
                         str(field(e, "src", "edge"), "edge src"),
                         str(field(e, "label", "edge"), "edge label"),
                         str(field(e, "tgt", "edge"), "edge tgt")});
  return Graph(std::move(nodes), std::move(edges));
}

json to_json(const GraphMorphism& f, bool with_endpoints) {
  json nodes = json::object();
  for (std::size_t i = 0; i < f.dom().node_count(); ++i)
    nodes[f.dom().nodes()[i]] = f.cod().nodes()[f.node_map()[i]];
  json edges = json::object();
  for (std::size_t i = 0; i < f.dom().edge_count(); ++i)
    edges[f.dom().edges()[i].id] = f.cod().edges()[f.edge_map()[i]].id;
  json out{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (with_endpoints) {
    out["dom"] = to_json(f.dom());
    out["cod"] = to_json(f.cod());
  }
  return out;
}

GraphMorphism morphism_from_json(const json& j) {
  return morphism_from_json(
      j, graph_from_json(field(j, "dom", "standalone morphism")),
      graph_from_json(field(j, "cod", "standalone morphism")));
}

GraphMorphism morphism_from_json(const json& j, const Graph& dom,
                                 const Graph& cod) {
  if (j.contains("dom") && !(graph_from_json(j.at("dom")) == dom))
    throw DomainError("morphism \"dom\" disagrees with the context");
  if (j.contains("cod") && !(graph_from_json(j.at("cod")) == cod))
    throw DomainError("morphism \"cod\" disagrees with the context");
  return GraphMorphism::from_names(
      dom, cod, name_map(field(j, "nodes", "morphism"), "morphism nodes"),
      name_map(field(j, "edges", "morphism"), "morphism edges"));
}

json to_json(const AbCondition& c) {
  json branches = json::array();
  for (const AbBranch& br : c.branches)
    branches.push_back(json{{"arrow", to_json(br.arrow, false)},
                            {"pattern", to_json(br.arrow.cod())},
                            {"child", to_json(br.child)}});
  return json{{"root", to_json(c.root)}, {"branches", std::move(branches)}};
}

AbCondition ab_condition_from_json(const json& j) {
  Graph root = graph_from_json(field(j, "root", "condition"));
  std::vector<AbBranch> branches;
  for (const json& b : array(field(j, "branches", "condition"), "branches")) {
    Graph pattern = graph_from_json(field(b, "pattern", "branch"));
    GraphMorphism arrow =
        morphism_from_json(field(b, "arrow", "branch"), root, pattern);
    AbCondition child = ab_condition_from_json(field(b, "child", "branch"));
    if (!(child.root == pattern))
      throw DomainError("branch child root differs from the branch pattern");
    branches.push_back(AbBranch(std::move(arrow), std::move(child)));
  }
  return AbCondition(std::move(root), std::move(branches));
}

json to_json(const SbCondition& c) {
  json branches = json::array();
  for (const SbBranch& br : c.branches)
    branches.push_back(json{{"interface", to_json(br.span.interface())},
                            {"up", to_json(br.span.up, false)},
                            {"down", to_json(br.span.down, false)},
                            {"pattern", to_json(br.pattern())},
                            {"child", to_json(br.child)}});
  return json{{"root", to_json(c.root)}, {"branches", std::move(branches)}};
}

SbCondition sb_condition_from_json(const json& j) {
  Graph root = graph_from_json(field(j, "root", "condition"));
  std::vector<SbBranch> branches;
  for (const json& b : array(field(j, "branches", "condition"), "branches")) {
    Graph interface = graph_from_json(field(b, "interface", "branch"));
    Graph pattern = graph_from_json(field(b, "pattern", "branch"));
    GraphMorphism up =
        morphism_from_json(field(b, "up", "branch"), interface, root);
    GraphMorphism down =
        morphism_from_json(field(b, "down", "branch"), interface, pattern);
    SbCondition child = sb_condition_from_json(field(b, "child", "branch"));
    if (!(child.root == pattern))
      throw DomainError("branch child root differs from the branch pattern");
    branches.push_back(
        SbBranch(Span(std::move(up), std::move(down)), std::move(child)));
  }
  return SbCondition(std::move(root), std::move(branches));
}

json to_json(const AbSourceShifter& s) {
  if (s.is_trivial())
    return json{{"kind", "trivial"},
                {"from", to_json(s.from())},
                {"to", to_json(s.to())}};
  return json{{"kind", "precompose"}, {"arrow", to_json(s.arrow(), true)}};
}

AbSourceShifter ab_shifter_from_json(const json& j) {
  std::string kind = str(field(j, "kind", "shifter"), "shifter kind");
  if (kind == "trivial")
    return AbSourceShifter::trivial(
        graph_from_json(field(j, "from", "trivial shifter")),
        graph_from_json(field(j, "to", "trivial shifter")));
  if (kind == "precompose")
    return AbSourceShifter::precompose(
        morphism_from_json(field(j, "arrow", "precompose shifter")));
  throw DomainError("shifter kind must be \"trivial\" or \"precompose\"");
}

namespace {

const char* step_kind_name(SpanShiftStep::Kind k) {
  switch (k) {
    case SpanShiftStep::Kind::df: return "df";
    case SpanShiftStep::Kind::rf: return "rf";
    case SpanShiftStep::Kind::db: return "db";
    default: return "rb";
  }
}

}  // namespace

json to_json(const SpanShifter& s) {
  if (s.is_trivial())
    return json{{"kind", "trivial"},
                {"from", to_json(s.from)},
                {"to", to_json(s.to)}};
  json steps = json::array();
  for (const SpanShiftStep& st : s.steps) {
    json step{{"kind", step_kind_name(st.kind)}, {"v", to_json(st.v, true)}};
    if (st.x) step["x"] = to_json(*st.x, true);
    steps.push_back(std::move(step));
  }
  return json{{"kind", "chain"}, {"steps", std::move(steps)}};
}

SpanShifter span_shifter_from_json(const json& j) {
  std::string kind = str(field(j, "kind", "shifter"), "shifter kind");
  if (kind == "trivial")
    return SpanShifter::trivial(
        graph_from_json(field(j, "from", "trivial shifter")),
        graph_from_json(field(j, "to", "trivial shifter")));
  if (kind != "chain")
    throw DomainError("span shifter kind must be \"trivial\" or \"chain\"");
  std::vector<SpanShiftStep> steps;
  for (const json& st : array(field(j, "steps", "chain shifter"), "steps")) {
    std::string sk = str(field(st, "kind", "step"), "step kind");
    GraphMorphism v = morphism_from_json(field(st, "v", "step"));
    if (sk == "df") {
      steps.push_back(df_step(std::move(v)));
    } else if (sk == "db") {
      steps.push_back(db_step(std::move(v)));
    } else if (sk == "rf" || sk == "rb") {
      GraphMorphism x = morphism_from_json(field(st, "x", "step"));
      steps.push_back(sk == "rf" ? rf_step(std::move(v), std::move(x))
                                 : rb_step(std::move(v), std::move(x)));
    } else {
      throw DomainError("step kind must be one of df, rf, db, rb");
    }
  }
  return SpanShifter::of_steps(std::move(steps));
}

json to_json(const AbConditionMorphism& m) {
  json o = json::array();
  for (int j : m.branch_map) o.push_back(j + 1);
  json branches = json::array();
  for (const AbMorphismBranch& br : m.branches)
    branches.push_back(json{{"v", to_json(br.v, true)},
                            {"shifter", to_json(br.shifter)},
                            {"sub", to_json(br.sub)}});
  return json{{"mode", mode_to_json(m.mode)},
              {"o", std::move(o)},
              {"branches", std::move(branches)}};
}

AbConditionMorphism ab_morphism_from_json(const json& j) {
  AbConditionMorphism m;
  m.mode = mode_from_json(field(j, "mode", "certificate"));
  for (const json& e : array(field(j, "o", "certificate"), "branch map"))
    m.branch_map.push_back(integer(e, "branch map entry") - 1);
  for (const json& b :
       array(field(j, "branches", "certificate"), "branches"))
    m.branches.push_back(AbMorphismBranch{
        morphism_from_json(field(b, "v", "certificate branch")),
        ab_shifter_from_json(field(b, "shifter", "certificate branch")),
        ab_morphism_from_json(field(b, "sub", "certificate branch"))});
  if (m.branch_map.size() != m.branches.size())
    throw DomainError("certificate \"o\" and \"branches\" lengths differ");
  return m;
}

json to_json(const SbConditionMorphism& m) {
  json o = json::array();
  for (int j : m.branch_map) o.push_back(j + 1);
  json branches = json::array();
  for (const SbMorphismBranch& br : m.branches)
    branches.push_back(json{{"v", to_json(br.v, true)},
                            {"k", to_json(br.k, true)},
                            {"conservative", br.conservative},
                            {"shifter", to_json(br.shifter)},
                            {"sub", to_json(br.sub)}});
  return json{{"mode", mode_to_json(m.mode)},
              {"o", std::move(o)},
              {"branches", std::move(branches)}};
}

SbConditionMorphism sb_morphism_from_json(const json& j) {
  SbConditionMorphism m;
  m.mode = mode_from_json(field(j, "mode", "certificate"));
  for (const json& e : array(field(j, "o", "certificate"), "branch map"))
    m.branch_map.push_back(integer(e, "branch map entry") - 1);
  for (const json& b :
       array(field(j, "branches", "certificate"), "branches"))
    m.branches.push_back(SbMorphismBranch{
        morphism_from_json(field(b, "v", "certificate branch")),
        morphism_from_json(field(b, "k", "certificate branch")),
        boolean(field(b, "conservative", "certificate branch"),
                "conservative"),
        span_shifter_from_json(field(b, "shifter", "certificate branch")),
        sb_morphism_from_json(field(b, "sub", "certificate branch"))});
  if (m.branch_map.size() != m.branches.size())
    throw DomainError("certificate \"o\" and \"branches\" lengths differ");
  return m;
}

json to_json(const Universe& u) {
  json labels = json::array();
  for (const std::string& l : u.labels) labels.push_back(l);
  return json{{"labels", std::move(labels)},
              {"max_nodes", u.max_nodes},
              {"max_edges", u.max_edges},
              {"up_to_iso", u.up_to_iso}};
}

Universe universe_from_json(const json& j) {
  Universe u;
  u.labels.clear();
  for (const json& l : array(field(j, "labels", "universe"), "labels"))
    u.labels.push_back(str(l, "label"));
  u.max_nodes = integer(field(j, "max_nodes", "universe"), "max_nodes");
  u.max_edges = integer(field(j, "max_edges", "universe"), "max_edges");
  u.up_to_iso = boolean(field(j, "up_to_iso", "universe"), "up_to_iso");
  return u;
}

json to_json(const Verdict& v) {
  json out{{"verdict", v.holds ? "holds_within_bound" : "counterexample"},
           {"bound", to_json(v.bound)}};
  if (v.graph) out["graph"] = to_json(*v.graph);
  if (v.model) out["model"] = to_json(*v.model, true);
  return out;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  std::string verdict = str(field(j, "verdict", "verdict"), "verdict");
  if (verdict == "holds_within_bound") {
    v.holds = true;
  } else if (verdict == "counterexample") {
    v.holds = false;
  } else {
    throw DomainError(
        "verdict must be \"holds_within_bound\" or \"counterexample\"");
  }
  v.bound = universe_from_json(field(j, "bound", "verdict"));
  if (j.contains("graph")) v.graph = graph_from_json(j.at("graph"));
  if (j.contains("model")) v.model = morphism_from_json(j.at("model"));
  return v;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DomainError("malformed JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const DomainError&) {
    throw DomainError("malformed JSON in " + path);
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot open " + path + " for writing");
  out << json_text(j);
  if (!out) throw ResourceError("failed writing " + path);
}

}  // namespace nestcond
