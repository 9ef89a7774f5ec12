#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "glc/certifier.hpp"
#include "glc/connectivity.hpp"
#include "glc/presets.hpp"
#include "glc/tower.hpp"
#include "glc/trails.hpp"

namespace glc {

using Json = nlohmann::ordered_json;

/// Two-space indented JSON with a trailing newline.
std::string render(const Json& doc);

Json to_json(const Trail& t);
Json to_json(const EulerVerdict& v);
Json to_json(const QuantifiedVerdict& v);
Json to_json(const Placement& p);
Json to_json(const AcVerdict& v);
Json to_json(const ToughnessVerdict& v);
Json to_json(const KConnectivityVerdict& v);
Json to_json(const TopologicalCutPoints& c);
Json to_json(const NecessaryReport& r);
Json to_json(const Spectrum& s);
Json to_json(const SeparationReport& r);
Json to_json(const std::vector<ManifestResult>& results);

/// Level sizes, degree sets and bonding audits of a tower.
Json tower_summary(const Tower& t);

/// "preset:NAME" or "preset:NAME:A:B" builds a catalog preset; anything
/// else is read as a graph file.
Multigraph load_graph(const std::string& source);

/// Tower description:
///
///   {
///     "format": "tower",
///     "version": 1,
///     "base": "preset:figure_eight",
///     "rule": {"every_vertex": "K4"},
///     "depth": 3
///   }
///
/// "base" is a graph source string or an inline graph object. Instead of
/// "rule" ({"every_vertex": T} and/or {"by_degree": {"3": T}}, T = "K<m>" or
/// "K~<m>") a "growth" object {"values": [...], "kind": "ktilde"|"complete"}
/// may be given.
struct TowerSpec {
  Multigraph base;
  std::optional<ExpansionRule> rule;
  std::optional<GrowthFunction> growth;
  Template::Kind growth_kind = Template::Kind::KTilde;
  int depth = 0;
};

/// Throws InputError with a diagnostic on malformed specs.
TowerSpec parse_tower_spec(std::string_view text);
Template parse_template(const std::string& text);
Tower build_from_spec(const TowerSpec& spec);

}  // namespace glc
