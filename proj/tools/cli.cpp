#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "glc/combinatorics.hpp"
#include "glc/errors.hpp"
#include "glc/graph_io.hpp"
#include "glc/parallel.hpp"
#include "glc/report.hpp"

namespace glc::cli {

AppendixRun run_appendix(const std::string& graph_source, const std::vector<int>& anchors, int threads) {
  const Multigraph g = graph_source.empty() ? appendix_F() : load_graph(graph_source);
  if (g.vertex_count() != 16) throw InputError("appendix graph must have 16 vertices");
  const std::vector<EdgeId> eligible = appendix_eligible_edges(g);
  if (eligible.size() != 21) {
    throw InputError("appendix graph has " + std::to_string(eligible.size()) + " eligible edges; expected 21");
  }
  for (int a : anchors) {
    if (!g.has_vertex(a)) throw InputError("anchor " + std::to_string(a) + " is not a vertex");
  }
  const std::uint64_t total = binomial(21, 4);
  std::vector<char> ok(total, 0);
  parallel_for(total, threads, [&](std::uint64_t rank) {
    const std::vector<int> combo = unrank_combination(21, 4, rank);
    Placement p;
    for (int i : combo) p.items.push_back({eligible[static_cast<std::size_t>(i)], 1});
    ok[rank] = arc_through(g, p, anchors).holds;
  });
  AppendixRun run;
  run.total = total;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    if (ok[rank]) {
      ++run.successes;
      continue;
    }
    std::vector<int> edges;
    for (int i : unrank_combination(21, 4, rank)) edges.push_back(eligible[static_cast<std::size_t>(i)]);
    run.failures.push_back(std::move(edges));
  }
  return run;
}

namespace {

struct Common {
  int n = 2;
  int k = 1;
  int threads = 0;
  bool deterministic = false;
  bool exhaustive_sizes = false;
  std::uint64_t seed = 1;
  std::string out_path;
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int decision(bool holds) { return holds ? kTrue : kFalse; }

int check(const std::string& kind, const std::string& source, const Common& c, const std::vector<int>& anchors,
          std::ostream& out) {
  const Multigraph g = load_graph(source);
  const int threads = c.deterministic ? 1 : c.threads;
  Json doc;
  doc["kind"] = kind;
  doc["graph"] = source;
  bool holds = false;
  if (kind == "ac") {
    CertifierOptions opt;
    opt.threads = threads;
    opt.exhaustive_sizes = c.exhaustive_sizes;
    opt.anchors.assign(anchors.begin(), anchors.end());
    doc["n"] = c.n;
    const AcVerdict v = is_n_ac(g, c.n, opt);
    holds = v.holds;
    doc["verdict"] = to_json(v);
  } else if (kind == "cc") {
    CertifierOptions opt;
    opt.threads = threads;
    opt.exhaustive_sizes = c.exhaustive_sizes;
    doc["n"] = c.n;
    const QuantifiedVerdict v = is_n_cc(g, c.n, opt);
    holds = v.holds;
    doc["verdict"] = to_json(v);
  } else if (kind == "eulerian") {
    const EulerVerdict v = is_eulerian(g);
    holds = v.holds;
    doc["verdict"] = to_json(v);
  } else if (kind == "n-E" || kind == "n-oE") {
    QuantifierOptions opt;
    opt.threads = threads;
    opt.exhaustive_sizes = c.exhaustive_sizes;
    doc["n"] = c.n;
    const QuantifiedVerdict v = kind == "n-E" ? is_n_E(g, c.n, opt) : is_n_oE(g, c.n, opt);
    holds = v.holds;
    doc["verdict"] = to_json(v);
  } else if (kind == "tough") {
    doc["k"] = c.k;
    doc["n"] = c.n;
    const ToughnessVerdict v = is_tough(g, c.k, c.n);
    holds = v.holds;
    doc["verdict"] = to_json(v);
  } else if (kind == "k-connected") {
    doc["k"] = c.k;
    const KConnectivityVerdict v = is_k_connected(g, c.k);
    holds = v.holds;
    doc["verdict"] = to_json(v);
  } else if (kind == "cutpoints") {
    const TopologicalCutPoints cp = topological_cut_points(g);
    holds = cp.empty();
    doc["cut_vertices"] = cut_points(g);
    doc["verdict"] = to_json(cp);
  } else {
    throw InputError("unknown check kind '" + kind + "'");
  }
  doc["decision"] = holds;
  emit(out, c.out_path, render(doc));
  return decision(holds);
}

int repro_appendix(const std::string& source, const std::vector<int>& anchors, const Common& c, std::ostream& out) {
  const std::vector<VertexId> defaults = appendix_anchors();
  const bool expected = anchors == defaults && source.empty();
  const AppendixRun run = run_appendix(source, anchors, c.deterministic ? 1 : c.threads);
  Json doc;
  doc["anchors"] = anchors;
  doc["quadruples"] = run.total;
  doc["on_arc"] = run.successes;
  doc["failures"] = run.failures.size();
  doc["mode"] = expected ? "verification" : "exploratory";
  doc["summary"] = std::to_string(run.successes) + " lie on arc, " + std::to_string(run.failures.size()) + " failures";
  if (!run.failures.empty()) doc["failing_quadruples"] = run.failures;
  emit(out, c.out_path, render(doc));
  return expected && !run.failures.empty() ? kFalse : kTrue;
}

int expand(const std::string& spec_path, int depth_override, const std::string& dir, std::ostream& out) {
  TowerSpec spec = parse_tower_spec(read_text_file(spec_path));
  if (depth_override >= 0) {
    if (depth_override < 1) throw InputError("depth must be at least 1");
    spec.depth = depth_override;
  }
  const Tower t = build_from_spec(spec);
  Json summary = tower_summary(t);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (int k = 1; k <= t.depth(); ++k) {
      write_graph_file(std::filesystem::path(dir) / ("level_" + std::to_string(k) + ".json"), t.level(k));
      if (k >= 2) {
        write_text_file(std::filesystem::path(dir) / ("bonding_" + std::to_string(k) + ".txt"),
                        format_morphism(t.bondings[static_cast<std::size_t>(k - 2)]));
      }
    }
    write_text_file(std::filesystem::path(dir) / "summary.json", render(summary));
  }
  out << render(summary);
  return summary["audit"] == "pass" ? kTrue : kFalse;
}

int spectrum_cmd(const std::vector<int>& f, const std::vector<int>& g, int depth, const Common& c, std::ostream& out) {
  GrowthFunction gf;
  gf.values = f;
  GrowthFunction gg;
  gg.values = g;
  const SeparationReport r = spectra_separate(gf, gg, depth, c.deterministic ? 1 : c.threads);
  emit(out, c.out_path, render(to_json(r)));
  return kTrue;
}

int preset_cmd(const std::string& action, const std::string& name, const std::vector<int>& params, const Common& c,
               std::ostream& out) {
  if (action == "list") {
    Json arr = Json::array();
    for (const PresetEntry& e : preset_catalog()) {
      Json x;
      x["name"] = e.name;
      x["summary"] = e.summary;
      x["params"] = e.params;
      x["defaults"] = e.defaults;
      if (e.window_scale) x["scale"] = "window";
      arr.push_back(std::move(x));
    }
    emit(out, c.out_path, render(arr));
    return kTrue;
  }
  if (name.empty()) throw InputError("preset " + action + " needs a preset name");
  const PresetEntry& entry = find_preset(name);
  if (action == "build") {
    emit(out, c.out_path, format_graph(build_preset(entry, params)));
    return kTrue;
  }
  if (action == "manifest") {
    const auto results = run_manifest(entry);
    Json doc;
    doc["preset"] = entry.name;
    doc["defaults"] = entry.defaults;
    if (entry.window_scale) doc["scale"] = "window";
    doc["claims"] = to_json(results);
    emit(out, c.out_path, render(doc));
    for (const auto& r : results) {
      if (!r.passed) return kFalse;
    }
    return kTrue;
  }
  throw InputError("preset action must be list, build or manifest");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifiers and tower analytics for finite multigraphs", "glc"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--threads", c.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--deterministic", c.deterministic, "Single-threaded, byte-stable witnesses");
  app.add_option("--seed", c.seed, "Seed recorded for randomized suites");
  app.add_option("--out", c.out_path, "Write the report to a file");

  std::string kind, source;
  std::vector<int> anchors;
  auto* chk = app.add_subcommand("check", "Decide a property of a graph");
  chk->add_option("kind", kind, "ac|cc|eulerian|n-E|n-oE|tough|k-connected|cutpoints")->required();
  chk->add_option("graph", source, "Graph file or preset:NAME[:ARGS]")->required();
  chk->add_option("--n", c.n, "Number of points or edges")->check(CLI::PositiveNumber);
  chk->add_option("--k", c.k, "Toughness or connectivity parameter")->check(CLI::PositiveNumber);
  chk->add_option("--anchors", anchors, "Arc start vertices for ac")->delimiter(',');
  chk->add_flag("--exhaustive-sizes", c.exhaustive_sizes, "Also check every smaller size");

  std::string appendix_source;
  std::vector<int> appendix_anchor_list = appendix_anchors();
  auto* rep = app.add_subcommand("repro-appendix", "Four points on anchored arcs in the 16-vertex graph");
  rep->add_option("--anchors", appendix_anchor_list, "Arc start vertices")->delimiter(',');
  rep->add_option("--graph", appendix_source, "Replacement graph (consistency checked)");

  std::string spec_path, out_dir;
  int depth = -1;
  auto* exp = app.add_subcommand("expand", "Build a tower from a spec");
  exp->add_option("spec", spec_path, "Tower spec file")->required();
  exp->add_option("--depth", depth, "Override the spec depth");
  exp->add_option("--dir", out_dir, "Directory for level graphs and bonding tables");

  std::vector<int> f, g;
  int spec_depth = 3;
  auto* spe = app.add_subcommand("spectrum", "Compare the spectra of two growth towers");
  spe->add_option("--f", f, "Growth values of f")->delimiter(',')->required();
  spe->add_option("--g", g, "Growth values of g")->delimiter(',')->required();
  spe->add_option("--depth", spec_depth, "Tower depth");

  std::string action, preset_name;
  std::vector<int> params;
  auto* pre = app.add_subcommand("preset", "List, build or audit named constructions");
  pre->add_option("action", action, "list|build|manifest")->required();
  pre->add_option("name", preset_name, "Preset name");
  pre->add_option("params", params, "Integer parameters");

  std::string dot_source;
  auto* dot = app.add_subcommand("export-dot", "Write a graph in DOT");
  dot->add_option("graph", dot_source, "Graph file or preset:NAME[:ARGS]")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (*chk) return check(kind, source, c, anchors, out);
    if (*rep) return repro_appendix(appendix_source, appendix_anchor_list, c, out);
    if (*exp) return expand(spec_path, depth, out_dir, out);
    if (*spe) {
      if (spec_depth < 1) throw InputError("depth must be at least 1");
      return spectrum_cmd(f, g, spec_depth, c, out);
    }
    if (*pre) return preset_cmd(action, preset_name, params, c, out);
    if (*dot) {
      emit(out, c.out_path, to_dot(load_graph(dot_source)));
      return kTrue;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace glc::cli
