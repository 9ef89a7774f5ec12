#include "glc/certifier.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "glc/combinatorics.hpp"
#include "glc/errors.hpp"
#include "glc/parallel.hpp"
#include "glc/path_search.hpp"
#include "glc/tower.hpp"

namespace glc {

int Placement::total() const {
  int t = 0;
  for (const auto& item : items) t += item.multiplicity;
  return t;
}

void validate_placement(const Multigraph& g, const Placement& p) {
  if (p.items.empty()) throw InputError("placement is empty");
  std::set<EdgeId> seen;
  for (const auto& item : p.items) {
    if (!g.has_edge(item.edge)) throw InputError("placement names unknown edge " + std::to_string(item.edge));
    if (item.multiplicity < 1 || item.multiplicity > 2) throw InputError("placement multiplicity must be 1 or 2");
    if (!seen.insert(item.edge).second) throw InputError("placement repeats edge " + std::to_string(item.edge));
  }
}

SubdividedGraph subdivide_placement(const Multigraph& g, const Placement& p) {
  validate_placement(g, p);
  SubdividedGraph out;
  out.graph = g;
  out.edge_origin.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(out.edge_origin.begin(), out.edge_origin.end(), 0);
  for (const auto& item : p.items) {
    Subdivision s = subdivide_edge(out.graph, item.edge, item.multiplicity);
    std::vector<EdgeId> origin(s.edge_origin.size());
    for (std::size_t e = 0; e < origin.size(); ++e) {
      origin[e] = out.edge_origin[static_cast<std::size_t>(s.edge_origin[e])];
    }
    out.graph = std::move(s.graph);
    out.edge_origin = std::move(origin);
    out.inserted.push_back(std::move(s.inserted));
  }
  return out;
}

namespace {

// Decision-only search reused across many placements of one graph.
class ArcChecker {
 public:
  ArcChecker(const Multigraph& g, int max_total, std::span<const VertexId> anchors)
      : g_(g), base_(g, max_total), anchors_(anchors.begin(), anchors.end()) {
    parallel_.resize(static_cast<std::size_t>(g.edge_count()), 0);
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      int count = 0;
      for (EdgeId f : g.incident(e.u)) {
        const Edge& x = g.edge(f);
        if (!x.is_loop() && x.other(e.u) == e.v) ++count;
      }
      parallel_[static_cast<std::size_t>(e.id)] = count;
    }
  }

  /// items: (edge, multiplicity), applied in order.
  std::optional<std::vector<VertexId>> search(std::span<const std::pair<int, int>> items) {
    scratch_.assign(base_);
    required_.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto [e, mult] = items[i];
      const Edge& ed = g_.edge(e);
      VertexId prev = ed.u;
      for (int k = 0; k < mult; ++k) {
        const VertexId s = scratch_.add_vertex();
        scratch_.link(prev, s);
        required_.push_back(s);
        prev = s;
      }
      scratch_.link(prev, ed.v);
      if (!ed.is_loop()) {
        int placed_here = 0;
        for (const auto& [f, m] : items) {
          const Edge& x = g_.edge(f);
          if (!x.is_loop() && ((x.u == ed.u && x.v == ed.v) || (x.u == ed.v && x.v == ed.u))) ++placed_here;
        }
        if (placed_here == parallel_[static_cast<std::size_t>(e)]) scratch_.unlink(ed.u, ed.v);
      }
    }
    PathQuery q;
    q.required = required_;
    if (!anchors_.empty()) {
      q.starts = anchors_;
      return find_simple_path(scratch_, q);
    }
    // Both ends of a truncated arc are placed points; a point with a single
    // neighbour must be an end.
    starts_.clear();
    for (VertexId r : required_) {
      if (degree_in_scratch(r) <= 1) {
        starts_.assign(1, r);
        break;
      }
    }
    if (starts_.empty()) {
      starts_ = required_;
      if (starts_.size() >= 2) starts_.pop_back();
    }
    q.starts = starts_;
    return find_simple_path(scratch_, q);
  }

 private:
  int degree_in_scratch(VertexId v) const {
    int d = 0;
    const std::uint64_t* row = scratch_.row(v);
    for (std::size_t w = 0; w < scratch_.words(); ++w) d += std::popcount(row[w]);
    return d;
  }

  const Multigraph& g_;
  AdjacencyRows base_;
  AdjacencyRows scratch_;
  std::vector<VertexId> anchors_;
  std::vector<int> parallel_;
  std::vector<VertexId> required_;
  std::vector<VertexId> starts_;
};

std::vector<std::pair<int, int>> as_pairs(const Placement& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : p.items) out.emplace_back(item.edge, item.multiplicity);
  return out;
}

void check_anchors(const Multigraph& g, std::span<const VertexId> anchors) {
  for (VertexId a : anchors) {
    if (!g.has_vertex(a)) throw InputError("unknown anchor vertex " + std::to_string(a));
  }
}

}  // namespace

ArcVerdict arc_through(const Multigraph& g, const Placement& p, std::span<const VertexId> anchors) {
  validate_placement(g, p);
  check_anchors(g, anchors);
  require_connected(g, "arc_through");
  ArcChecker checker(g, p.total(), anchors);
  const auto items = as_pairs(p);
  auto path = checker.search(items);
  ArcVerdict out;
  if (!path) return out;
  out.holds = true;
  ArcWitness w;
  w.subdivided = subdivide_placement(g, p);
  w.vertices = std::move(*path);
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    const auto e = edge_between(w.subdivided.graph, w.vertices[i], w.vertices[i + 1]);
    if (!e) throw ConsistencyError("arc search produced a non-adjacent step");
    w.edges.push_back(*e);
  }
  out.witness = std::move(w);
  return out;
}

std::string arc_witness_problem(const Multigraph& g, const Placement& p, std::span<const VertexId> anchors,
                                const ArcWitness& w) {
  const SubdividedGraph fresh = subdivide_placement(g, p);
  if (!(fresh.graph == w.subdivided.graph)) return "subdivided graph does not match the placement";
  const Multigraph& h = fresh.graph;
  if (w.vertices.empty()) return "empty arc";
  if (w.edges.size() + 1 != w.vertices.size()) return "vertex and edge counts do not alternate";
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (!h.has_vertex(w.vertices[i])) return "unknown vertex on arc";
    if (!seen.insert(w.vertices[i]).second) return "arc repeats a vertex";
    if (i + 1 < w.vertices.size()) {
      const EdgeId e = w.edges[i];
      if (!h.has_edge(e)) return "unknown edge on arc";
      const Edge& ed = h.edge(e);
      const VertexId a = w.vertices[i];
      const VertexId b = w.vertices[i + 1];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return "arc step is not an edge";
    }
  }
  for (const auto& block : fresh.inserted) {
    for (VertexId s : block) {
      if (!seen.count(s)) return "arc misses placed point " + std::to_string(s);
    }
  }
  if (!anchors.empty()) {
    const bool ok = std::find(anchors.begin(), anchors.end(), w.vertices.front()) != anchors.end() ||
                    std::find(anchors.begin(), anchors.end(), w.vertices.back()) != anchors.end();
    if (!ok) return "no arc end lies in the anchor set";
  }
  return {};
}

namespace {

class CycleChecker {
 public:
  CycleChecker(const Multigraph& g, int max_edges) : g_(g), base_(g, max_edges) {
    parallel_.resize(static_cast<std::size_t>(g.edge_count()), 0);
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      for (EdgeId f : g.incident(e.u)) {
        const Edge& x = g.edge(f);
        if (!x.is_loop() && x.other(e.u) == e.v) ++parallel_[static_cast<std::size_t>(e.id)];
      }
    }
  }

  /// Vertex sequence of a cycle in the subdivided graph (first vertex is an
  /// end of F[0], the subdivision point of F[0] closes the cycle), or nullopt.
  std::optional<std::vector<VertexId>> search(std::span<const int> edges) {
    for (int e : edges) {
      if (g_.edge(e).is_loop()) {
        if (edges.size() == 1) return std::vector<VertexId>{g_.edge(e).u};
        return std::nullopt;
      }
    }
    scratch_.assign(base_);
    required_.clear();
    points_.clear();
    for (int e : edges) {
      const Edge& ed = g_.edge(e);
      const VertexId s = scratch_.add_vertex();
      scratch_.link(ed.u, s);
      scratch_.link(s, ed.v);
      points_.push_back(s);
      int placed_here = 0;
      for (int f : edges) {
        const Edge& x = g_.edge(f);
        if ((x.u == ed.u && x.v == ed.v) || (x.u == ed.v && x.v == ed.u)) ++placed_here;
      }
      if (placed_here == parallel_[static_cast<std::size_t>(e)]) scratch_.unlink(ed.u, ed.v);
    }
    const Edge& first = g_.edge(edges[0]);
    required_.assign(points_.begin() + 1, points_.end());
    const VertexId starts[1] = {first.u};
    const VertexId forbidden[1] = {points_[0]};
    PathQuery q;
    q.starts = starts;
    q.required = required_;
    q.end = first.v;
    q.forbidden = forbidden;
    auto path = find_simple_path(scratch_, q);
    if (!path) return std::nullopt;
    path->push_back(points_[0]);
    path->push_back(first.u);
    return path;
  }

  const std::vector<VertexId>& points() const { return points_; }

 private:
  const Multigraph& g_;
  AdjacencyRows base_;
  AdjacencyRows scratch_;
  std::vector<int> parallel_;
  std::vector<VertexId> required_;
  std::vector<VertexId> points_;
};

std::vector<EdgeId> checked_edge_set(const Multigraph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) throw InputError("cycle_through: F must be nonempty");
  std::set<EdgeId> seen;
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) throw InputError("unknown edge " + std::to_string(e));
    if (!seen.insert(e).second) throw InputError("edge " + std::to_string(e) + " listed twice");
  }
  return {edges.begin(), edges.end()};
}

}  // namespace

CycleVerdict cycle_through(const Multigraph& g, std::span<const EdgeId> required) {
  const std::vector<EdgeId> f = checked_edge_set(g, required);
  require_connected(g, "cycle_through");
  CycleChecker checker(g, static_cast<int>(f.size()));
  const auto path = checker.search(f);
  CycleVerdict out;
  if (!path) return out;
  out.holds = true;
  Trail cycle;
  if (path->size() == 1) {
    cycle.vertices = {path->front(), path->front()};
    cycle.edges = {f.front()};
    out.witness = std::move(cycle);
    return out;
  }
  // Collapse subdivision points back onto their edges.
  const int n = g.vertex_count();
  std::vector<char> in_f(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : f) in_f[static_cast<std::size_t>(e)] = 1;
  cycle.vertices.push_back((*path)[0]);
  for (std::size_t i = 1; i < path->size(); ++i) {
    const VertexId x = (*path)[i];
    if (x >= n) {
      cycle.edges.push_back(f[static_cast<std::size_t>(x - n)]);
      continue;
    }
    const VertexId prev = (*path)[i - 1];
    if (prev < n) {
      EdgeId chosen = -1;
      for (EdgeId e : g.incident(prev)) {
        const Edge& ed = g.edge(e);
        if (!ed.is_loop() && !in_f[static_cast<std::size_t>(e)] && ed.other(prev) == x) {
          chosen = e;
          break;
        }
      }
      if (chosen < 0) throw ConsistencyError("cycle search stepped along a missing edge");
      cycle.edges.push_back(chosen);
    }
    cycle.vertices.push_back(x);
  }
  out.witness = std::move(cycle);
  return out;
}

std::string cycle_witness_problem(const Multigraph& g, std::span<const EdgeId> required, const Trail& cycle) {
  if (auto p = trail_problem(g, cycle); !p.empty()) return p;
  if (!cycle.closed()) return "cycle is not closed";
  std::set<VertexId> seen(cycle.vertices.begin(), cycle.vertices.end() - 1);
  if (seen.size() + 1 != cycle.vertices.size()) return "cycle repeats a vertex";
  const std::set<EdgeId> used(cycle.edges.begin(), cycle.edges.end());
  for (EdgeId e : required) {
    if (!used.count(e)) return "cycle misses edge " + std::to_string(e);
  }
  return {};
}

AcVerdict is_n_ac(const Multigraph& g, int n, const CertifierOptions& opt) {
  if (n < 1) throw InputError("n must be positive");
  require_connected(g, "is_n_ac");
  check_anchors(g, opt.anchors);
  AcVerdict out;
  const int m = g.edge_count();
  const int top = std::min(n, 2 * m);
  const int bottom = opt.exhaustive_sizes ? 1 : top;
  for (int total = std::max(bottom, 1); total <= top; ++total) {
    const PlacementSpace space(m, total);
    const auto hit = first_failure(space.size(), opt.threads, 4096,
                                   [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
                                     ArcChecker checker(g, total, opt.anchors);
                                     PlacementSpace::Cursor c = space.at(b);
                                     std::vector<std::pair<int, int>> items;
                                     for (std::uint64_t i = b; i < e; ++i) {
                                       space.materialize(c, items);
                                       if (!checker.search(items)) return i;
                                       space.advance(c);
                                     }
                                     return std::nullopt;
                                   });
    out.cases += hit ? *hit + 1 : space.size();
    if (hit) {
      std::vector<std::pair<int, int>> items;
      space.materialize(space.at(*hit), items);
      Placement p;
      for (auto [e, k] : items) p.items.push_back({e, k});
      out.counterexample = std::move(p);
      return out;
    }
  }
  out.holds = true;
  return out;
}

QuantifiedVerdict is_n_cc(const Multigraph& g, int n, const CertifierOptions& opt) {
  if (n < 1) throw InputError("n must be positive");
  require_connected(g, "is_n_cc");
  QuantifiedVerdict out;
  const int m = g.edge_count();
  const int top = std::min(n, m);
  const int bottom = opt.exhaustive_sizes ? 1 : top;
  for (int size = std::max(bottom, 1); size <= top; ++size) {
    const std::uint64_t count = binomial(m, size);
    const auto hit = first_failure(count, opt.threads, 1024,
                                   [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
                                     CycleChecker checker(g, size);
                                     std::vector<int> combo = unrank_combination(m, size, b);
                                     for (std::uint64_t i = b; i < e; ++i, next_combination(combo, m)) {
                                       if (!checker.search(combo)) return i;
                                     }
                                     return std::nullopt;
                                   });
    out.cases += hit ? *hit + 1 : count;
    if (hit) {
      const auto combo = unrank_combination(m, size, *hit);
      out.counterexample.assign(combo.begin(), combo.end());
      return out;
    }
  }
  out.holds = true;
  return out;
}

NecessaryReport necessary_report(const Tower& t, int n, const NecessaryOptions& opt) {
  if (n < 1) throw InputError("n must be positive");
  NecessaryReport rep;
  rep.n = n;
  const std::string ns = std::to_string(n);
  QuantifierOptions qopt;
  qopt.threads = opt.threads;
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    const Multigraph& g = *t.levels[k];
    const int level = static_cast<int>(k) + 1;
    if (opt.check_cc) {
      NecessaryCheck tough{level, "tough(1," + std::to_string(n - 1) + ")", "cc", "skipped", {}, {}, 0};
      if (!rep.limit_not_cc && n >= 2) {
        const ToughnessVerdict v = is_tough(g, 1, n - 1);
        tough.status = v.holds ? "pass" : "fail";
        tough.witness_vertices = v.violating_set;
        tough.components = v.components;
        if (!v.holds) rep.limit_not_cc = true;
      }
      if (n >= 2) rep.checks.push_back(tough);
      NecessaryCheck euler{level, ns + "-E", "cc", "skipped", {}, {}, 0};
      if (!rep.limit_not_cc) {
        const QuantifiedVerdict v = is_n_E(g, n, qopt);
        euler.status = v.holds ? "pass" : "fail";
        euler.witness_edges = v.counterexample;
        if (!v.holds) rep.limit_not_cc = true;
      }
      rep.checks.push_back(euler);
    }
    if (opt.check_ac) {
      NecessaryCheck open{level, ns + "-oE", "ac", "skipped", {}, {}, 0};
      if (!rep.limit_not_ac) {
        const QuantifiedVerdict v = is_n_oE(g, n, qopt);
        open.status = v.holds ? "pass" : "fail";
        open.witness_edges = v.counterexample;
        if (!v.holds) rep.limit_not_ac = true;
      }
      rep.checks.push_back(open);
    }
  }
  const std::string depth = std::to_string(t.levels.size());
  if (opt.check_cc) {
    rep.conclusions.push_back(rep.limit_not_cc ? "limit not " + ns + "-cc"
                                               : "no " + ns + "-cc obstruction up to level " + depth);
  }
  if (opt.check_ac) {
    rep.conclusions.push_back(rep.limit_not_ac ? "limit not " + ns + "-ac"
                                               : "no " + ns + "-ac obstruction up to level " + depth);
  }
  return rep;
}

TwoCcReport is_2cc_equiv_report(const Multigraph& g) {
  require_connected(g, "is_2cc_equiv_report");
  TwoCcReport rep;
  if (g.edge_count() == 0) {
    rep.two_cc = true;
  } else {
    const QuantifiedVerdict v = is_n_cc(g, 2);
    rep.two_cc = v.holds;
    rep.counterexample = v.counterexample;
  }
  rep.cut_vertices = cut_points(g);
  rep.cut_points = topological_cut_points(g);
  rep.agree = rep.two_cc == rep.cut_points.empty();
  if (!rep.agree) {
    throw ConsistencyError("2-cc verdict disagrees with the cut-point scan");
  }
  return rep;
}

}  // namespace glc
