#include "glc/presets.hpp"

#include <algorithm>

#include "glc/connectivity.hpp"
#include "glc/errors.hpp"

namespace glc {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Adjacency lists exactly as published; vertex 0 is b, 15 is infinity.
const std::vector<std::vector<VertexId>>& appendix_adjacency() {
  static const std::vector<std::vector<VertexId>> adj = {
      {6, 8, 2},    {3, 2},       {1, 4, 0},   {1, 4, 5},   {2, 3, 6},     {3, 6, 7},
      {4, 5, 0},    {5, 8, 9},    {0, 7, 10},  {7, 10, 11}, {8, 9, 12},    {9, 12, 13},
      {10, 11, 14}, {11, 14, 15}, {12, 13, 15}, {13, 14}};
  return adj;
}

EdgeList ladder_edges(int n) {
  EdgeList edges;
  for (int j = -n; j <= n; ++j) {
    edges.emplace_back(ladder_id(n, 0, j), ladder_id(n, 1, j));
    if (j < n) {
      edges.emplace_back(ladder_id(n, 0, j), ladder_id(n, 0, j + 1));
      edges.emplace_back(ladder_id(n, 1, j), ladder_id(n, 1, j + 1));
    }
  }
  return edges;
}

EdgeList graph_C_edges(int n) {
  const VertexId a = 2 * (2 * n + 1);
  const VertexId b = a + 1;
  const auto same = [](std::pair<VertexId, VertexId> e, VertexId x, VertexId y) {
    return (e.first == x && e.second == y) || (e.first == y && e.second == x);
  };
  EdgeList edges;
  for (const auto& e : ladder_edges(n)) {
    if (same(e, ladder_id(n, 0, 0), ladder_id(n, 0, 1))) continue;
    if (same(e, ladder_id(n, 0, -3), ladder_id(n, 0, -2))) {
      edges.emplace_back(ladder_id(n, 0, -3), a);
      edges.emplace_back(a, ladder_id(n, 0, -2));
    } else if (same(e, ladder_id(n, 0, 3), ladder_id(n, 0, 4))) {
      edges.emplace_back(ladder_id(n, 0, 3), b);
      edges.emplace_back(b, ladder_id(n, 0, 4));
    } else {
      edges.push_back(e);
    }
  }
  edges.emplace_back(a, ladder_id(n, 0, 0));
  edges.emplace_back(ladder_id(n, 0, 1), b);
  return edges;
}

EdgeId find_edge(const Multigraph& g, VertexId x, VertexId y) {
  for (EdgeId e : g.incident(x)) {
    if (g.edge(e).other(x) == y) return e;
  }
  throw ConsistencyError("expected edge is missing");
}

ExpansionRule complete_rule(std::initializer_list<int> degrees, int N) {
  ExpansionRule r;
  for (int d : degrees) r.by_degree[d] = Template::complete(N);
  return r;
}

}  // namespace

Multigraph appendix_F() {
  const auto& adj = appendix_adjacency();
  EdgeList edges;
  for (VertexId a = 0; a < static_cast<VertexId>(adj.size()); ++a) {
    for (VertexId b : adj[static_cast<std::size_t>(a)]) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return Multigraph(static_cast<int>(adj.size()), edges);
}

std::vector<EdgeId> appendix_eligible_edges(const Multigraph& f) {
  if (f.vertex_count() != 16) throw InputError("appendix graph must have 16 vertices");
  std::vector<EdgeId> out;
  for (const Edge& e : f.edges()) {
    if (e.u != 15 && e.v != 15) out.push_back(e.id);
  }
  return out;
}

std::vector<VertexId> appendix_anchors() { return {15, 1}; }

Multigraph ladder_window(int n) {
  if (n < 1) throw InputError("ladder window needs n >= 1");
  return Multigraph(2 * (2 * n + 1), ladder_edges(n));
}

Multigraph graph_C_window(int n) {
  if (n < 4) throw InputError("graph C window needs n >= 4");
  return Multigraph(2 * (2 * n + 1) + 2, graph_C_edges(n));
}

AlphaAuxiliary alpha_auxiliary_detail(int n) {
  if (n < 5) throw InputError("auxiliary graph needs n >= 5");
  const int L = 2 * (2 * n + 1);
  EdgeList edges = ladder_edges(n);
  for (const auto& [x, y] : graph_C_edges(n)) edges.emplace_back(x + L, y + L);
  const auto cross = [&](int m, int j) {
    edges.emplace_back(ladder_id(n, m, j), L + ladder_id(n, m, j));
    return static_cast<EdgeId>(edges.size() - 1);
  };
  AlphaAuxiliary out;
  out.second_offset = L;
  out.f_plus = cross(0, n);
  out.f_minus = cross(0, -n);
  out.g_plus = cross(1, n);
  out.g_minus = cross(1, -n);
  out.graph = Multigraph(2 * L + 2, edges);
  out.e = find_edge(out.graph, L + ladder_id(n, 1, 0), L + ladder_id(n, 1, 1));
  for (int j = 1; j <= n; ++j) {
    out.upper_half.push_back(L + ladder_id(n, 0, j));
    out.upper_half.push_back(L + ladder_id(n, 1, j));
  }
  out.upper_half.push_back(L + L + 1);
  std::sort(out.upper_half.begin(), out.upper_half.end());
  return out;
}

Multigraph alpha_auxiliary(int n) { return alpha_auxiliary_detail(n).graph; }

Multigraph base_n_ac_odd(int n) {
  if (n < 3 || n % 2 == 0) throw InputError("base_n_ac_odd needs odd n >= 3");
  // v1 = 0, w1 = 1, w2 = 2, v2 = 3
  EdgeList edges{{0, 1}};
  for (int i = 0; i < n - 1; ++i) edges.emplace_back(1, 2);
  edges.emplace_back(2, 3);
  return Multigraph(4, edges);
}

Multigraph base_n_ac_even(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("base_n_ac_even needs even n >= 2");
  EdgeList edges;
  for (int i = 0; i < n - 1; ++i) edges.emplace_back(1, 2);
  edges.emplace_back(0, 1);
  edges.emplace_back(3, 1);
  return Multigraph(4, edges);
}

Multigraph base_n_cc_even(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("base_n_cc_even needs even n >= 2");
  return theta(n + 1);
}

Multigraph theta(int k) {
  if (k < 1) throw InputError("theta needs k >= 1");
  return Multigraph(2, EdgeList(static_cast<std::size_t>(k), {0, 1}));
}

Multigraph figure_eight() { return Multigraph(1, {{0, 0}, {0, 0}}); }

Multigraph loop_graph() { return Multigraph(1, {{0, 0}}); }

Tower n_ac_tower(int n, int depth) {
  if (n < 2) throw InputError("n-ac family needs n >= 2");
  if (n % 2 == 1) {
    const int N = large_complete_size(n);
    return build_tower(base_n_ac_odd(n), complete_rule({n, N - 1, N}, N), depth);
  }
  const int N = large_complete_size(n + 1);
  return build_tower(base_n_ac_even(n), complete_rule({n + 1, N - 1, N}, N), depth);
}

Tower n_cc_tower(int n, int depth) {
  const int N = large_complete_size(n + 1);
  return build_tower(base_n_cc_even(n), complete_rule({n + 1, N - 1, N}, N), depth);
}

Tower omega_cc_tower(int depth) {
  ExpansionRule r;
  r.every_vertex = Template::complete(4);
  return build_tower(figure_eight(), r, depth);
}

Tower max1_tower(int n, int depth) {
  if (n < 2) throw InputError("max1 tower needs n >= 2");
  const int N = large_complete_size(n);
  ExpansionRule r;
  r.every_vertex = Template::complete(N);
  Tower t = build_tower(complete_graph(N), r, depth);
  t.complete_size = N;
  return t;
}

GluedZ glued_Z_detail(int n, int depth) {
  if (n < 2) throw InputError("glued Z needs n >= 2");
  const Tower t = max1_tower(n, depth);
  const std::vector<VertexRay> rays = special_rays(t, n);
  const std::vector<Multigraph> copies(static_cast<std::size_t>(n + 1), t.level(depth));
  std::vector<std::vector<GlueMember>> classes;
  for (const VertexRay& r : rays) {
    std::vector<GlueMember> cls;
    for (int c = 0; c <= n; ++c) cls.push_back({c, r.vertices.back()});
    classes.push_back(std::move(cls));
  }
  GlueOutcome glued = glue(copies, classes);
  return {std::move(glued.graph), std::move(glued.class_vertices), n + 1};
}

Multigraph glued_Z(int n, int depth) { return glued_Z_detail(n, depth).graph; }

namespace {

std::string expect_counts(const Multigraph& g, int vertices, int edges) {
  if (g.vertex_count() == vertices && g.edge_count() == edges) return {};
  return "got " + std::to_string(g.vertex_count()) + " vertices and " + std::to_string(g.edge_count()) + " edges";
}

std::string expect_degrees(const Multigraph& g, const std::vector<int>& degrees) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree_unchecked(v) != degrees[static_cast<std::size_t>(v)]) {
      return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree_unchecked(v));
    }
  }
  return {};
}

std::string expect_regular(const Multigraph& g, int d) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree_unchecked(v) != d) return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree_unchecked(v));
  }
  return {};
}

std::string expect_connected(const Multigraph& g) { return g.is_connected() ? "" : "graph is disconnected"; }

ManifestItem counts(int v, int e) {
  return {std::to_string(v) + " vertices, " + std::to_string(e) + " edges", "computation",
          [=](const Multigraph& g) { return expect_counts(g, v, e); }};
}

ManifestItem connected() { return {"connected", "computation", expect_connected}; }

int arg(std::span<const int> args, std::size_t i) { return args[i]; }

std::vector<PresetEntry> make_catalog() {
  std::vector<PresetEntry> c;

  c.push_back({"appendix_F", "16-vertex graph of the four-point arc computation", {}, {}, false,
               [](std::span<const int>) { return appendix_F(); },
               {counts(16, 23),
                {"vertex 1 and vertex 15 have degree 2, the other fourteen degree 3", "construction",
                 [](const Multigraph& g) {
                   std::vector<int> d(16, 3);
                   d[1] = d[15] = 2;
                   return expect_degrees(g, d);
                 }},
                {"vertex 15 is adjacent to 13 and 14 only", "construction",
                 [](const Multigraph& g) {
                   std::vector<VertexId> nb;
                   for (EdgeId e : g.incident(15)) nb.push_back(g.edge(e).other(15));
                   std::sort(nb.begin(), nb.end());
                   return nb == std::vector<VertexId>{13, 14} ? "" : "vertex 15 has other neighbours";
                 }},
                {"21 eligible edges", "construction",
                 [](const Multigraph& g) {
                   const auto n = appendix_eligible_edges(g).size();
                   return n == 21 ? std::string{} : "got " + std::to_string(n);
                 }},
                connected()}});

  c.push_back({"ladder_window", "window {0,1} x [-n, n] of the double ladder", {"n"}, {2}, true,
               [](std::span<const int> a) { return ladder_window(arg(a, 0)); },
               {counts(10, 13), connected()}});

  c.push_back({"graph_C_window", "window of the ladder with a and b rerouting the left rail", {"n"}, {4}, true,
               [](std::span<const int> a) { return graph_C_window(arg(a, 0)); },
               {counts(20, 28),
                {"the middle rung (1,0)-(1,1) is the only bridge", "construction",
                 [](const Multigraph& g) {
                   const auto b = bridges(g);
                   if (b.size() != 1) return "found " + std::to_string(b.size()) + " bridges";
                   const Edge& e = g.edge(b.front());
                   const auto [x, y] = std::minmax(e.u, e.v);
                   return x == ladder_id(4, 1, 0) && y == ladder_id(4, 1, 1) ? std::string{}
                                                                             : std::string{"the bridge is elsewhere"};
                 }},
                {"3-regular away from the window ends", "construction",
                 [](const Multigraph& g) {
                   for (VertexId v = 0; v < g.vertex_count(); ++v) {
                     const bool end_row = v < 2 || (v >= 16 && v < 18);
                     if (!end_row && g.degree_unchecked(v) != 3) return "vertex " + std::to_string(v) + " is not cubic";
                   }
                   return std::string{};
                 }}}});

  c.push_back({"alpha_auxiliary", "ladder window joined to the modified window by f+, f-, g+, g-", {"n"}, {5}, true,
               [](std::span<const int> a) { return alpha_auxiliary(arg(a, 0)); },
               {counts(46, 69), connected(),
                {"the upper half of the modified copy has boundary {e, f+, g+}", "construction",
                 [](const Multigraph& g) {
                   const AlphaAuxiliary aux = alpha_auxiliary_detail(5);
                   if (!(aux.graph == g)) return std::string{"graph differs from the detailed build"};
                   EdgeCut cut = boundary_cut(g, aux.upper_half);
                   std::vector<EdgeId> want{aux.e, aux.f_plus, aux.g_plus};
                   std::sort(want.begin(), want.end());
                   std::sort(cut.cut_edges.begin(), cut.cut_edges.end());
                   return cut.cut_edges == want ? std::string{} : "boundary has " + std::to_string(cut.cut_edges.size()) + " edges";
                 }}}});

  c.push_back({"base_n_ac_odd", "v1-w1, n-1 parallel w1-w2, w2-v2 (n odd)", {"n"}, {3}, false,
               [](std::span<const int> a) { return base_n_ac_odd(arg(a, 0)); },
               {counts(4, 4),
                {"degrees 1, 3, 3, 1", "construction", [](const Multigraph& g) { return expect_degrees(g, {1, 3, 3, 1}); }}}});

  c.push_back({"base_n_ac_even", "n-1 parallel w1-w2, v1-w1, v2-w1 (n even)", {"n"}, {2}, false,
               [](std::span<const int> a) { return base_n_ac_even(arg(a, 0)); },
               {counts(4, 3),
                {"degrees 1, 3, 1, 1", "construction", [](const Multigraph& g) { return expect_degrees(g, {1, 3, 1, 1}); }}}});

  c.push_back({"base_n_cc_even", "two vertices, n+1 parallel edges (n even)", {"n"}, {2}, false,
               [](std::span<const int> a) { return base_n_cc_even(arg(a, 0)); },
               {counts(2, 3), {"3-regular", "construction", [](const Multigraph& g) { return expect_regular(g, 3); }}}});

  c.push_back({"theta", "two vertices, k parallel edges", {"k"}, {3}, false,
               [](std::span<const int> a) { return theta(arg(a, 0)); }, {counts(2, 3)}});

  c.push_back({"figure_eight", "one vertex, two loops", {}, {}, false,
               [](std::span<const int>) { return figure_eight(); },
               {counts(1, 2), {"degree 4", "construction", [](const Multigraph& g) { return expect_regular(g, 4); }}}});

  c.push_back({"loop", "one vertex, one loop", {}, {}, false, [](std::span<const int>) { return loop_graph(); },
               {counts(1, 1)}});

  c.push_back({"complete", "complete graph K_N", {"N"}, {5}, false,
               [](std::span<const int> a) { return complete_graph(arg(a, 0)); },
               {counts(5, 10), {"4-regular", "computation", [](const Multigraph& g) { return expect_regular(g, 4); }}}});

  c.push_back({"ac_family_level", "level `depth` of the n-ac family tower", {"n", "depth"}, {3, 2}, false,
               [](std::span<const int> a) { return n_ac_tower(arg(a, 0), arg(a, 1)).level(arg(a, 1)); },
               {counts(34, 244), connected()}});

  c.push_back({"cc_family_level", "level `depth` of the n-cc family tower (n even)", {"n", "depth"}, {2, 2}, false,
               [](std::span<const int> a) { return n_cc_tower(arg(a, 0), arg(a, 1)).level(arg(a, 1)); },
               {counts(32, 243), connected()}});

  c.push_back({"omega_cc_level", "level `depth` of the figure-eight K4 tower", {"depth"}, {3}, false,
               [](std::span<const int> a) { return omega_cc_tower(arg(a, 0)).level(arg(a, 0)); },
               {counts(16, 32), {"4-regular", "construction", [](const Multigraph& g) { return expect_regular(g, 4); }},
                connected()}});

  c.push_back({"glued_Z", "n+1 copies of the K_N tower level glued along n special rays", {"n", "depth"}, {2, 1},
               false, [](std::span<const int> a) { return glued_Z(arg(a, 0), arg(a, 1)); },
               {counts(32, 198),
                {"deleting the glue vertices leaves n+1 components", "construction",
                 [](const Multigraph& g) {
                   const GluedZ z = glued_Z_detail(2, 1);
                   if (!(z.graph == g)) return std::string{"graph differs from the detailed build"};
                   const int k = component_count_without(g, vertex_mask(g, z.glue_vertices));
                   return k == 3 ? std::string{} : "got " + std::to_string(k) + " components";
                 }},
                {"no cut vertices", "computation",
                 [](const Multigraph& g) { return cut_points(g).empty() ? "" : "found a cut vertex"; }}}});

  return c;
}

}  // namespace

const std::vector<PresetEntry>& preset_catalog() {
  static const std::vector<PresetEntry> catalog = make_catalog();
  return catalog;
}

const PresetEntry& find_preset(const std::string& name) {
  for (const PresetEntry& e : preset_catalog()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown preset '" + name + "'");
}

Multigraph build_preset(const PresetEntry& entry, std::span<const int> args) {
  if (args.size() > entry.params.size()) {
    throw InputError("preset " + entry.name + " takes " + std::to_string(entry.params.size()) + " parameters");
  }
  std::vector<int> full = entry.defaults;
  std::copy(args.begin(), args.end(), full.begin());
  return entry.build(full);
}

std::vector<ManifestResult> run_manifest(const PresetEntry& entry) {
  const Multigraph g = entry.build(entry.defaults);
  std::vector<ManifestResult> out;
  for (const ManifestItem& item : entry.manifest) {
    std::string problem = item.check(g);
    out.push_back({item.claim, item.origin, problem.empty(), std::move(problem)});
  }
  return out;
}

}  // namespace glc
