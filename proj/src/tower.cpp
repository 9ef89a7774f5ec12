#include "glc/tower.hpp"

#include <algorithm>
#include <functional>

#include "glc/errors.hpp"
#include "glc/parallel.hpp"

namespace glc {

std::string to_string(const Template& t) {
  return (t.kind == Template::Kind::Complete ? "K" : "K~") + std::to_string(t.size);
}

const Template* ExpansionRule::for_degree(int degree) const {
  if (every_vertex) return &*every_vertex;
  const auto it = by_degree.find(degree);
  return it == by_degree.end() ? nullptr : &it->second;
}

ExpansionOutcome expand_once(const GraphPtr& gp, const ExpansionRule& rule) {
  const Multigraph& g = *gp;
  const int n = g.vertex_count();
  ExpansionRecord rec;
  rec.fibres.resize(static_cast<std::size_t>(n));
  rec.corners.resize(static_cast<std::size_t>(n));
  rec.templates.resize(static_cast<std::size_t>(n));

  std::vector<VertexId> base(static_cast<std::size_t>(n));
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree_unchecked(v);
    const Template* t = rule.for_degree(d);
    base[static_cast<std::size_t>(v)] = next;
    if (!t) {
      rec.fibres[static_cast<std::size_t>(v)] = {next};
      rec.corners[static_cast<std::size_t>(v)] = next++;
      continue;
    }
    if (t->size < 1) throw RuleError("template size must be positive", v);
    if (d > t->size) {
      throw RuleError("vertex " + std::to_string(v) + " has " + std::to_string(d) + " edge ends but " + to_string(*t) +
                          " has only " + std::to_string(t->size) + " vertices",
                      v);
    }
    if (t->kind == Template::Kind::KTilde && (t->size - d) % 2 != 0) {
      throw RuleError("vertex " + std::to_string(v) + " of degree " + std::to_string(d) + " leaves an odd number of " +
                          to_string(*t) + " vertices to pair",
                      v);
    }
    rec.templates[static_cast<std::size_t>(v)] = *t;
    for (int i = 0; i < t->size; ++i) rec.fibres[static_cast<std::size_t>(v)].push_back(next + i);
    rec.corners[static_cast<std::size_t>(v)] = next + t->size - 1;
    next += t->size;
  }

  // Edge ends in edge-id order; a loop contributes two consecutive ends.
  std::vector<int> next_end(static_cast<std::size_t>(n), 0);
  auto attach = [&](VertexId v) {
    const int slot = next_end[static_cast<std::size_t>(v)]++;
    return rec.templates[static_cast<std::size_t>(v)] ? base[static_cast<std::size_t>(v)] + slot : base[static_cast<std::size_t>(v)];
  };
  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<EdgeImage> edge_map;
  ends.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const VertexId a = attach(e.u);
    const VertexId b = attach(e.v);
    ends.emplace_back(a, b);
    edge_map.push_back(EdgeImage::to_edge(e.id));
  }
  std::vector<VertexId> vertex_map(static_cast<std::size_t>(next));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId x : rec.fibres[static_cast<std::size_t>(v)]) vertex_map[static_cast<std::size_t>(x)] = v;
    const auto& t = rec.templates[static_cast<std::size_t>(v)];
    if (!t) continue;
    const VertexId b = base[static_cast<std::size_t>(v)];
    for (int i = 0; i < t->size; ++i) {
      for (int j = i + 1; j < t->size; ++j) {
        ends.emplace_back(b + i, b + j);
        edge_map.push_back(EdgeImage::to_vertex(v));
      }
    }
    if (t->kind == Template::Kind::KTilde) {
      for (int i = g.degree_unchecked(v); i + 1 < t->size; i += 2) {
        ends.emplace_back(b + i, b + i + 1);
        edge_map.push_back(EdgeImage::to_vertex(v));
      }
    }
  }
  GraphPtr h = share(Multigraph(next, ends));
  GraphMorphism bonding(h, gp, std::move(vertex_map), std::move(edge_map));
  const NicenessReport nice = check_nice(bonding);
  if (!nice.nice()) throw ConsistencyError("expansion produced a bonding map that is not nice");
  return {h, std::move(bonding), std::move(rec)};
}

void GrowthFunction::validate() const {
  if (values.empty()) throw InputError("growth function is empty");
  if (divisibility != 2 && divisibility != 4) throw InputError("growth divisibility must be 2 or 4");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw InputError("growth values must be positive");
    if (i > 0 && values[i] <= values[i - 1]) throw InputError("growth function must be strictly increasing");
    if (values[i] % divisibility != 0) {
      throw InputError("growth value " + std::to_string(values[i]) + " is not divisible by " + std::to_string(divisibility));
    }
  }
  if (floor && values.front() < *floor) {
    throw InputError("growth function starts below its floor " + std::to_string(*floor));
  }
}

std::vector<int> GrowthFunction::envelope() const {
  std::vector<int> out;
  for (int v : values) {
    out.push_back(v - 1);
    out.push_back(v);
  }
  return out;
}

namespace {

Tower build_with(const Multigraph& g1, int depth, const std::function<ExpansionRule(int)>& rule_for_step) {
  if (depth < 1) throw InputError("tower depth must be at least 1");
  Tower t;
  t.levels.push_back(share(g1));
  for (int k = 1; k < depth; ++k) {
    try {
      ExpansionOutcome out = expand_once(t.levels.back(), rule_for_step(k));
      t.levels.push_back(out.graph);
      t.bondings.push_back(std::move(out.bonding));
      t.expansions.push_back(std::move(out.record));
    } catch (const RuleError& e) {
      throw RuleError(std::string(e.what()) + " (level " + std::to_string(k) + ")", e.vertex(), k);
    }
  }
  return t;
}

std::optional<int> uniform_complete_size(const ExpansionRule& rule) {
  std::optional<int> size;
  auto take = [&](const Template& t) {
    if (t.kind != Template::Kind::Complete || (size && *size != t.size)) return false;
    size = t.size;
    return true;
  };
  if (rule.every_vertex && !take(*rule.every_vertex)) return std::nullopt;
  for (const auto& [d, t] : rule.by_degree) {
    if (!take(t)) return std::nullopt;
  }
  return size;
}

}  // namespace

Tower single_level_tower(const Multigraph& g) {
  Tower t;
  t.levels.push_back(share(g));
  return t;
}

Tower build_tower(const Multigraph& g1, const ExpansionRule& rule, int depth) {
  Tower t = build_with(g1, depth, [&](int) { return rule; });
  t.complete_size = uniform_complete_size(rule);
  return t;
}

Tower build_tower(const Multigraph& g1, const GrowthFunction& f, int depth, Template::Kind kind) {
  f.validate();
  if (depth - 1 > static_cast<int>(f.values.size())) {
    throw InputError("growth function has " + std::to_string(f.values.size()) + " values; depth " +
                     std::to_string(depth) + " needs " + std::to_string(depth - 1));
  }
  Tower t = build_with(g1, depth, [&](int k) {
    ExpansionRule r;
    r.every_vertex = Template{kind, f.values[static_cast<std::size_t>(k - 1)]};
    return r;
  });
  t.growth = f;
  return t;
}

std::string tower_problem(const Tower& t) {
  if (t.levels.empty()) return "tower has no levels";
  if (t.bondings.size() + 1 != t.levels.size()) return "bonding count does not match level count";
  for (std::size_t k = 0; k < t.bondings.size(); ++k) {
    const GraphMorphism& m = t.bondings[k];
    if (m.domain_ptr() != t.levels[k + 1] || m.codomain_ptr() != t.levels[k]) {
      return "bonding " + std::to_string(k + 1) + " does not connect consecutive levels";
    }
    const NicenessReport r = check_nice(m);
    if (!r.nice()) return "bonding " + std::to_string(k + 1) + " is not nice";
  }
  // Every edge of the deepest level must map through all bondings to an
  // edge or a vertex, consistently with its endpoints.
  const Multigraph& top = *t.levels.back();
  for (const Edge& e : top.edges()) {
    VertexId a = e.u;
    VertexId b = e.v;
    std::optional<EdgeId> as_edge = e.id;
    for (std::size_t k = t.bondings.size(); k-- > 0;) {
      const GraphMorphism& m = t.bondings[k];
      if (as_edge) {
        const EdgeImage img = m.map_edge(*as_edge);
        if (img.collapses()) as_edge.reset();
        else as_edge = img.target;
      }
      a = m.map_vertex(a);
      b = m.map_vertex(b);
      if (as_edge) {
        const Edge& image = t.bondings[k].codomain().edge(*as_edge);
        if (!((image.u == a && image.v == b) || (image.u == b && image.v == a))) {
          return "edge " + std::to_string(e.id) + " loses incidence at level " + std::to_string(k + 1);
        }
      } else if (a != b) {
        return "collapsed edge " + std::to_string(e.id) + " has separated ends at level " + std::to_string(k + 1);
      }
    }
  }
  return {};
}

namespace {

// A path from a to b inside the fibre of x avoiding `blocked` vertices and
// `used` edges: the direct template edge if present, else breadth-first.
std::optional<std::vector<std::pair<EdgeId, VertexId>>> fibre_path(const Multigraph& h, const GraphMorphism& pi,
                                                                   VertexId x, VertexId a, VertexId b,
                                                                   const std::vector<char>& blocked,
                                                                   const std::vector<char>& used) {
  auto inside = [&](EdgeId e) {
    const EdgeImage img = pi.map_edge(e);
    return img.collapses() && img.target == x && !used[static_cast<std::size_t>(e)];
  };
  for (EdgeId e : h.incident(a)) {
    if (inside(e) && !h.edge(e).is_loop() && h.edge(e).other(a) == b) return std::vector<std::pair<EdgeId, VertexId>>{{e, b}};
  }
  std::vector<EdgeId> via(static_cast<std::size_t>(h.vertex_count()), -2);
  std::vector<VertexId> queue{a};
  via[static_cast<std::size_t>(a)] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId y = queue[head];
    if (y == b) break;
    for (EdgeId e : h.incident(y)) {
      if (!inside(e)) continue;
      const VertexId z = h.edge(e).other(y);
      if (via[static_cast<std::size_t>(z)] != -2 || (z != b && blocked[static_cast<std::size_t>(z)])) continue;
      via[static_cast<std::size_t>(z)] = e;
      queue.push_back(z);
    }
  }
  if (via[static_cast<std::size_t>(b)] == -2) return std::nullopt;
  std::vector<std::pair<EdgeId, VertexId>> steps;
  for (VertexId y = b; y != a;) {
    const EdgeId e = via[static_cast<std::size_t>(y)];
    steps.emplace_back(e, y);
    y = h.edge(e).other(y);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

Trail lift_cycle(const Tower& t, int level, const Trail& cycle) {
  if (level < 1 || level >= t.depth()) throw InputError("lift_cycle: level " + std::to_string(level) + " has no successor");
  const Multigraph& g = t.level(level);
  const Multigraph& h = t.level(level + 1);
  const GraphMorphism& pi = t.bondings[static_cast<std::size_t>(level - 1)];
  if (auto p = trail_problem(g, cycle); !p.empty()) throw InputError("lift_cycle: " + p);
  if (!cycle.closed()) throw InputError("lift_cycle: trail is not closed");

  // Each edge keeps its id; orient its lift along the trail.
  struct Step {
    EdgeId edge;
    VertexId enter;
    VertexId leave;
  };
  std::vector<Step> steps;
  for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
    const EdgeId e = cycle.edges[i];
    const auto pre = pi.preimage_edge(e);
    if (!pre) throw LiftingError("edge " + std::to_string(e) + " has no unique preimage");
    const Edge& lifted = h.edge(*pre);
    const VertexId from = cycle.vertices[i];
    if (lifted.is_loop()) throw LiftingError("edge " + std::to_string(e) + " lifts to a loop");
    if (pi.map_vertex(lifted.u) == from) steps.push_back({*pre, lifted.u, lifted.v});
    else steps.push_back({*pre, lifted.v, lifted.u});
  }

  std::vector<char> blocked(static_cast<std::size_t>(h.vertex_count()), 0);
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  for (const Step& s : steps) {
    if (blocked[static_cast<std::size_t>(s.enter)]++ || blocked[static_cast<std::size_t>(s.leave)]++) {
      throw LiftingError("two trail edges meet at the same lifted vertex");
    }
    used[static_cast<std::size_t>(s.edge)] = 1;
  }

  Trail out;
  out.vertices.push_back(steps.front().enter);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    out.edges.push_back(s.edge);
    out.vertices.push_back(s.leave);
    const Step& nxt = steps[(i + 1) % steps.size()];
    const VertexId x = cycle.vertices[i + 1];
    auto path = fibre_path(h, pi, x, s.leave, nxt.enter, blocked, used);
    if (!path) {
      throw LiftingError("no path inside the fibre of vertex " + std::to_string(x) + " joins consecutive trail edges");
    }
    for (auto [e, y] : *path) {
      used[static_cast<std::size_t>(e)] = 1;
      if (y != nxt.enter) blocked[static_cast<std::size_t>(y)] = 1;
      out.edges.push_back(e);
      out.vertices.push_back(y);
    }
  }
  return out;
}

std::string ray_problem(const Tower& t, const VertexRay& r) {
  if (static_cast<int>(r.vertices.size()) != t.depth()) return "ray length differs from tower depth";
  for (int k = 1; k <= t.depth(); ++k) {
    if (!t.level(k).has_vertex(r.vertices[static_cast<std::size_t>(k - 1)])) return "ray leaves level " + std::to_string(k);
  }
  for (std::size_t k = 0; k < t.bondings.size(); ++k) {
    if (t.bondings[k].map_vertex(r.vertices[k + 1]) != r.vertices[k]) {
      return "ray is not compatible with bonding " + std::to_string(k + 1);
    }
  }
  return {};
}

RayConnectivity ray_edge_connectivity(const Tower& t, const VertexRay& a, const VertexRay& b, int window) {
  if (auto p = ray_problem(t, a); !p.empty()) throw InputError(p);
  if (auto p = ray_problem(t, b); !p.empty()) throw InputError(p);
  if (window < 1) throw InputError("stability window must be positive");
  RayConnectivity out;
  for (int k = 1; k <= t.depth(); ++k) {
    const VertexId x = a.vertices[static_cast<std::size_t>(k - 1)];
    const VertexId y = b.vertices[static_cast<std::size_t>(k - 1)];
    if (x == y) {
      if (out.distinguished) throw ConsistencyError("rays merge again after separating");
      continue;
    }
    if (!out.distinguished) {
      out.distinguished = true;
      out.first_level = k;
    }
    const int value = edge_connectivity_value(t.level(k), x, y);
    if (!out.values.empty() && value > out.values.back()) {
      throw ConsistencyError("ray edge connectivity increased from level " + std::to_string(k - 1) + " to " +
                             std::to_string(k));
    }
    out.values.push_back(value);
  }
  if (!out.distinguished) return out;
  out.last_value = out.values.back();
  const int w = static_cast<int>(out.values.size());
  out.stable = w >= window &&
               std::all_of(out.values.end() - window, out.values.end(), [&](int v) { return v == out.last_value; });
  return out;
}

TowerSpectrum tower_spectrum(const Tower& t, const TowerSpectrumOptions& opt) {
  if (!t.growth) throw InputError("tower_spectrum needs a tower built from a growth function");
  TowerSpectrum out;
  for (int k = 1; k <= t.depth(); ++k) {
    if (t.level(k).vertex_count() < 2) {
      out.levels.emplace_back();
      continue;
    }
    out.levels.push_back(spectrum(t.level(k), opt.threads));
  }
  // Level-k value lookup for Claim 2.
  auto value_at = [&](int k, VertexId v, VertexId w) {
    if (v > w) std::swap(v, w);
    const int n = t.level(k).vertex_count();
    // Pairs are stored row by row: (0,1..n-1), (1,2..n-1), ...
    const std::size_t idx = static_cast<std::size_t>(v) * static_cast<std::size_t>(n) -
                            static_cast<std::size_t>(v) * static_cast<std::size_t>(v + 1) / 2 +
                            static_cast<std::size_t>(w - v - 1);
    return out.levels[static_cast<std::size_t>(k - 1)].pairs[idx].value;
  };
  for (int k = 1; k < t.depth(); ++k) {
    const GraphMorphism& pi = t.bondings[static_cast<std::size_t>(k - 1)];
    const int fk = t.growth->values[static_cast<std::size_t>(k - 1)];
    for (const PairConnectivity& p : out.levels[static_cast<std::size_t>(k)].pairs) {
      const VertexId a = pi.map_vertex(p.v);
      const VertexId b = pi.map_vertex(p.w);
      if (a == b) {
        ++out.same_fibre_pairs;
        if (p.value != fk - 1 && p.value != fk) out.violations.push_back({k + 1, p.v, p.w, p.value, "same-fibre"});
      } else {
        ++out.separated_pairs;
        if (p.value != value_at(k, a, b)) out.violations.push_back({k + 1, p.v, p.w, p.value, "separated"});
      }
    }
  }
  out.deepest.depth = t.depth();
  out.deepest.values = out.levels.back().spectrum.values;
  for (int v : out.deepest.values) {
    int run = 0;
    for (int k = t.depth(); k >= 1; --k) {
      const auto& vals = out.levels[static_cast<std::size_t>(k - 1)].spectrum.values;
      if (!std::binary_search(vals.begin(), vals.end(), v)) break;
      ++run;
    }
    out.deepest.stability_window.push_back(run);
  }
  if (opt.strict && !out.violations.empty()) {
    const ClaimViolation& v = out.violations.front();
    throw ConsistencyError(v.claim + " claim violated at level " + std::to_string(v.level) + " by pair (" +
                           std::to_string(v.v) + ", " + std::to_string(v.w) + ") with value " + std::to_string(v.value));
  }
  return out;
}

SeparationReport spectra_separate(const GrowthFunction& f, const GrowthFunction& g, int depth, int threads) {
  f.validate();
  g.validate();
  const Multigraph loop(1, {{0, 0}});
  const Tower tf = build_tower(loop, f, depth);
  const Tower tg = build_tower(loop, g, depth);
  TowerSpectrumOptions opt;
  opt.threads = threads;
  SeparationReport rep;
  rep.spectrum_f = tower_spectrum(tf, opt).deepest;
  rep.spectrum_g = tower_spectrum(tg, opt).deepest;
  rep.envelope_f = f.envelope();
  rep.envelope_g = g.envelope();
  auto excluded = [](int v, const GrowthFunction& h, const std::vector<int>& env) {
    return v <= h.values.back() && std::find(env.begin(), env.end(), v) == env.end();
  };
  for (int v : rep.spectrum_f.values) {
    if (excluded(v, g, rep.envelope_g)) {
      rep.separated = true;
      rep.witness_value = v;
      rep.witness_owner = "f";
      return rep;
    }
  }
  for (int v : rep.spectrum_g.values) {
    if (excluded(v, f, rep.envelope_f)) {
      rep.separated = true;
      rep.witness_value = v;
      rep.witness_owner = "g";
      return rep;
    }
  }
  return rep;
}

std::vector<VertexRay> special_rays(const Tower& t, int count) {
  if (count < 0) throw InputError("ray count must be nonnegative");
  if (count == 0) return {};
  std::optional<int> size = t.complete_size;
  for (const ExpansionRecord& rec : t.expansions) {
    for (const auto& tmpl : rec.templates) {
      if (!tmpl) continue;
      if (tmpl->kind != Template::Kind::Complete) throw ConstructionError("special rays need complete templates");
      if (size && *size != tmpl->size) throw ConstructionError("special rays need a single template size");
      size = tmpl->size;
    }
  }
  if (!size) throw ConstructionError("tower records no complete template size");
  const int target = *size - 1;
  std::vector<VertexRay> rays;
  const Multigraph& g1 = t.level(1);
  for (VertexId v = 0; v < g1.vertex_count() && static_cast<int>(rays.size()) < count; ++v) {
    if (g1.degree_unchecked(v) != target) continue;
    VertexRay r{{v}};
    bool ok = true;
    for (int k = 1; k < t.depth() && ok; ++k) {
      const VertexId next = t.expansions[static_cast<std::size_t>(k - 1)].corners[static_cast<std::size_t>(r.vertices.back())];
      ok = t.level(k + 1).degree_unchecked(next) == target;
      r.vertices.push_back(next);
    }
    if (ok) rays.push_back(std::move(r));
  }
  if (static_cast<int>(rays.size()) < count) {
    throw ConstructionError("only " + std::to_string(rays.size()) + " rays keep degree " + std::to_string(target) +
                            " at every level; " + std::to_string(count) + " requested");
  }
  return rays;
}

}  // namespace glc
