#include "glc/report.hpp"

#include <charconv>
#include <set>

#include "glc/errors.hpp"
#include "glc/graph_io.hpp"

namespace glc {

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const Trail& t) {
  Json j;
  j["closed"] = t.closed();
  j["vertices"] = t.vertices;
  j["edges"] = t.edges;
  return j;
}

Json to_json(const EulerVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["method"] = v.method;
  if (v.cover) {
    j["subgraph"] = v.cover->subgraph;
    j["odd_vertices"] = v.cover->odd_vertices;
  }
  if (v.trail) j["trail"] = to_json(*v.trail);
  return j;
}

Json to_json(const QuantifiedVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["cases"] = v.cases;
  if (!v.holds) j["counterexample"] = v.counterexample;
  return j;
}

Json to_json(const Placement& p) {
  Json items = Json::array();
  for (const PlacementItem& it : p.items) items.push_back({{"edge", it.edge}, {"points", it.multiplicity}});
  return items;
}

Json to_json(const AcVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["cases"] = v.cases;
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  return j;
}

Json to_json(const ToughnessVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (!v.holds) {
    j["violating_set"] = v.violating_set;
    j["components"] = v.components;
  }
  return j;
}

Json to_json(const KConnectivityVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (v.cutting) {
    j["separator"] = v.cutting->separator;
    j["side_a"] = v.cutting->side_a;
    j["side_b"] = v.cutting->side_b;
    j["nontrivial"] = v.cutting->nontrivial;
  }
  return j;
}

Json to_json(const TopologicalCutPoints& c) {
  Json j;
  j["none"] = c.empty();
  j["vertices"] = c.vertices;
  j["bridges"] = c.bridges;
  return j;
}

Json to_json(const NecessaryReport& r) {
  Json j;
  j["n"] = r.n;
  Json checks = Json::array();
  for (const NecessaryCheck& c : r.checks) {
    Json x;
    x["level"] = c.level;
    x["property"] = c.property;
    x["target"] = c.target;
    x["status"] = c.status;
    if (!c.witness_edges.empty()) x["witness_edges"] = c.witness_edges;
    if (!c.witness_vertices.empty()) {
      x["witness_vertices"] = c.witness_vertices;
      x["components"] = c.components;
    }
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  j["conclusions"] = r.conclusions;
  return j;
}

Json to_json(const Spectrum& s) {
  Json j;
  j["depth"] = s.depth;
  j["values"] = s.values;
  j["stability_window"] = s.stability_window;
  return j;
}

Json to_json(const SeparationReport& r) {
  Json j;
  j["verdict"] = r.separated ? "separated" : "not separated";
  if (r.witness_value) {
    j["witness_value"] = *r.witness_value;
    j["witness_owner"] = r.witness_owner;
  }
  j["spectrum_f"] = to_json(r.spectrum_f);
  j["spectrum_g"] = to_json(r.spectrum_g);
  j["envelope_f"] = r.envelope_f;
  j["envelope_g"] = r.envelope_g;
  return j;
}

Json to_json(const std::vector<ManifestResult>& results) {
  Json arr = Json::array();
  for (const ManifestResult& r : results) {
    Json x;
    x["claim"] = r.claim;
    x["origin"] = r.origin;
    x["status"] = r.passed ? "pass" : "fail";
    if (!r.passed) x["detail"] = r.detail;
    arr.push_back(std::move(x));
  }
  return arr;
}

Json tower_summary(const Tower& t) {
  Json levels = Json::array();
  for (int k = 1; k <= t.depth(); ++k) {
    const Multigraph& g = t.level(k);
    std::set<int> degrees;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degrees.insert(g.degree_unchecked(v));
    Json x;
    x["level"] = k;
    x["vertices"] = g.vertex_count();
    x["edges"] = g.edge_count();
    x["degrees"] = std::vector<int>(degrees.begin(), degrees.end());
    x["regular"] = degrees.size() == 1;
    x["connected"] = g.is_connected();
    if (k >= 2) x["bonding_nice"] = check_nice(t.bondings[static_cast<std::size_t>(k - 2)]).nice();
    levels.push_back(std::move(x));
  }
  Json j;
  j["depth"] = t.depth();
  j["levels"] = std::move(levels);
  const std::string problem = tower_problem(t);
  j["audit"] = problem.empty() ? "pass" : problem;
  return j;
}

namespace {

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(what + ": '" + std::string(s) + "' is not an integer");
  }
  return value;
}

}  // namespace

Multigraph load_graph(const std::string& source) {
  constexpr std::string_view prefix = "preset:";
  if (source.rfind(prefix, 0) != 0) return read_graph_file(source);
  std::vector<std::string> parts;
  std::string_view rest = std::string_view(source).substr(prefix.size());
  while (true) {
    const auto colon = rest.find(':');
    parts.emplace_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  const PresetEntry& entry = find_preset(parts.front());
  std::vector<int> args;
  for (std::size_t i = 1; i < parts.size(); ++i) args.push_back(parse_int(parts[i], "preset parameter"));
  return build_preset(entry, args);
}

Template parse_template(const std::string& text) {
  if (text.rfind("K~", 0) == 0) return Template::ktilde(parse_int(std::string_view(text).substr(2), "template"));
  if (text.rfind("K", 0) == 0) return Template::complete(parse_int(std::string_view(text).substr(1), "template"));
  throw InputError("template '" + text + "' must look like K4 or K~6");
}

TowerSpec parse_tower_spec(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("tower spec: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", std::string()) != "tower") {
      throw InputError("tower spec: \"format\" must be \"tower\"");
    }
    if (doc.at("version").get<int>() != 1) throw InputError("tower spec: unsupported version");
    TowerSpec spec;
    const auto& base = doc.at("base");
    spec.base = base.is_string() ? load_graph(base.get<std::string>()) : parse_graph(base.dump());
    spec.depth = doc.at("depth").get<int>();
    if (spec.depth < 1) throw InputError("tower spec: depth must be at least 1");
    if (doc.contains("rule") == doc.contains("growth")) {
      throw InputError("tower spec: give exactly one of \"rule\" and \"growth\"");
    }
    if (doc.contains("rule")) {
      const auto& r = doc.at("rule");
      ExpansionRule rule;
      if (r.contains("every_vertex")) rule.every_vertex = parse_template(r.at("every_vertex").get<std::string>());
      if (r.contains("by_degree")) {
        for (const auto& [key, value] : r.at("by_degree").items()) {
          rule.by_degree[parse_int(key, "rule degree")] = parse_template(value.get<std::string>());
        }
      }
      spec.rule = std::move(rule);
    } else {
      const auto& g = doc.at("growth");
      GrowthFunction f;
      f.values = g.at("values").get<std::vector<int>>();
      const std::string kind = g.value("kind", std::string("ktilde"));
      if (kind == "ktilde") {
        spec.growth_kind = Template::Kind::KTilde;
      } else if (kind == "complete") {
        spec.growth_kind = Template::Kind::Complete;
        f.divisibility = 4;
      } else {
        throw InputError("tower spec: growth kind must be \"ktilde\" or \"complete\"");
      }
      if (g.contains("floor")) f.floor = g.at("floor").get<int>();
      f.validate();
      spec.growth = std::move(f);
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("tower spec: ") + e.what());
  }
}

Tower build_from_spec(const TowerSpec& spec) {
  if (spec.rule) return build_tower(spec.base, *spec.rule, spec.depth);
  return build_tower(spec.base, *spec.growth, spec.depth, spec.growth_kind);
}

}  // namespace glc
