#include "glc/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "glc/combinatorics.hpp"
#include "glc/errors.hpp"
#include "glc/parallel.hpp"

namespace glc {

namespace {

// Directed arcs in pairs (a, a^1), each the residual reverse of the other.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  int add_arc_pair(int a, int b, int cap_ab, int cap_ba) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(b);
    cap_.push_back(cap_ab);
    to_.push_back(a);
    cap_.push_back(cap_ba);
    flow_.push_back(0);
    flow_.push_back(0);
    out_[static_cast<std::size_t>(a)].push_back(id);
    out_[static_cast<std::size_t>(b)].push_back(id + 1);
    return id;
  }

  int residual(int arc) const { return cap_[static_cast<std::size_t>(arc)] - flow_[static_cast<std::size_t>(arc)]; }
  int flow(int arc) const { return flow_[static_cast<std::size_t>(arc)]; }

  /// Unit augmentations along shortest residual paths, up to `limit`.
  int max_flow(int s, int t, int limit) {
    int total = 0;
    std::vector<int> parent_arc(out_.size());
    std::vector<int> queue;
    queue.reserve(out_.size());
    while (limit < 0 || total < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      queue.assign(1, s);
      parent_arc[static_cast<std::size_t>(s)] = -2;
      bool reached = false;
      for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
        const int x = queue[head];
        for (int arc : out_[static_cast<std::size_t>(x)]) {
          const int y = to_[static_cast<std::size_t>(arc)];
          if (parent_arc[static_cast<std::size_t>(y)] != -1 || residual(arc) <= 0) continue;
          parent_arc[static_cast<std::size_t>(y)] = arc;
          if (y == t) {
            reached = true;
            break;
          }
          queue.push_back(y);
        }
      }
      if (!reached) break;
      for (int y = t; y != s;) {
        const int arc = parent_arc[static_cast<std::size_t>(y)];
        ++flow_[static_cast<std::size_t>(arc)];
        --flow_[static_cast<std::size_t>(arc ^ 1)];
        y = to_[static_cast<std::size_t>(arc ^ 1)];
      }
      ++total;
    }
    return total;
  }

  std::vector<char> residual_reach(int s) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int arc : out_[static_cast<std::size_t>(x)]) {
        const int y = to_[static_cast<std::size_t>(arc)];
        if (!seen[static_cast<std::size_t>(y)] && residual(arc) > 0) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> flow_;
};

void check_pair(const Multigraph& g, VertexId v, VertexId w) {
  if (!g.has_vertex(v) || !g.has_vertex(w)) throw InputError("edge connectivity: unknown vertex");
  if (v == w) throw InputError("edge connectivity: endpoints must differ");
}

// Arc pair 2e/2e+1 carries edge e; loops get a dead pair to keep the indexing.
FlowNetwork edge_network(const Multigraph& g) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const int cap = e.is_loop() ? 0 : 1;
    net.add_arc_pair(e.u, e.v, cap, cap);
  }
  return net;
}

std::vector<std::vector<EdgeId>> decompose_paths(const Multigraph& g, const FlowNetwork& net, VertexId v,
                                                 VertexId w, int value) {
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  // Net flow leaving x along e.
  auto leaves = [&](EdgeId e, VertexId x) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    return x == ed.u ? net.flow(2 * e) > 0 : net.flow(2 * e + 1) > 0;
  };
  std::vector<std::vector<EdgeId>> paths;
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int p = 0; p < value; ++p) {
    std::vector<EdgeId> walk;
    std::vector<VertexId> at{v};
    position[static_cast<std::size_t>(v)] = 0;
    VertexId x = v;
    while (x != w) {
      EdgeId next = -1;
      for (EdgeId e : g.incident(x)) {
        if (!used[static_cast<std::size_t>(e)] && leaves(e, x)) {
          next = e;
          break;
        }
      }
      if (next < 0) throw ConsistencyError("flow decomposition stalled");
      used[static_cast<std::size_t>(next)] = 1;
      const VertexId y = g.edge(next).other(x);
      if (position[static_cast<std::size_t>(y)] >= 0) {
        // Drop the flow cycle just closed.
        const std::size_t keep = static_cast<std::size_t>(position[static_cast<std::size_t>(y)]);
        for (std::size_t i = keep + 1; i < at.size(); ++i) position[static_cast<std::size_t>(at[i])] = -1;
        at.resize(keep + 1);
        walk.resize(keep);
      } else {
        walk.push_back(next);
        position[static_cast<std::size_t>(y)] = static_cast<int>(at.size());
        at.push_back(y);
      }
      x = y;
    }
    for (VertexId u : at) position[static_cast<std::size_t>(u)] = -1;
    paths.push_back(std::move(walk));
  }
  return paths;
}

}  // namespace

EdgeConnectivity edge_connectivity(const Multigraph& g, VertexId v, VertexId w) {
  check_pair(g, v, w);
  FlowNetwork net = edge_network(g);
  EdgeConnectivity out;
  out.value = net.max_flow(v, w, -1);
  const std::vector<char> side = net.residual_reach(v);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (side[static_cast<std::size_t>(x)]) out.source_side.push_back(x);
  }
  for (const Edge& e : g.edges()) {
    if (!e.is_loop() && side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) {
      out.min_cut.push_back(e.id);
    }
  }
  out.paths = decompose_paths(g, net, v, w, out.value);
  return out;
}

int edge_connectivity_value(const Multigraph& g, VertexId v, VertexId w, int cap) {
  check_pair(g, v, w);
  FlowNetwork net = edge_network(g);
  return net.max_flow(v, w, cap);
}

SpectrumTable spectrum(const Multigraph& g, int threads) {
  if (g.vertex_count() < 2) throw InputError("spectrum: need at least two vertices");
  require_connected(g, "spectrum");
  SpectrumTable table;
  const int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = v + 1; w < n; ++w) table.pairs.push_back({v, w, 0});
  }
  parallel_for(table.pairs.size(), threads, [&](std::uint64_t i) {
    PairConnectivity& p = table.pairs[static_cast<std::size_t>(i)];
    p.value = edge_connectivity_value(g, p.v, p.w);
  });
  for (const auto& p : table.pairs) table.spectrum.values.push_back(p.value);
  std::sort(table.spectrum.values.begin(), table.spectrum.values.end());
  table.spectrum.values.erase(std::unique(table.spectrum.values.begin(), table.spectrum.values.end()),
                              table.spectrum.values.end());
  table.spectrum.stability_window.assign(table.spectrum.values.size(), 1);
  return table;
}

std::vector<VertexId> cut_points(const Multigraph& g) {
  require_connected(g, "cut_points");
  std::vector<VertexId> out;
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    removed[static_cast<std::size_t>(v)] = 1;
    if (component_count_without(g, removed) > 1) out.push_back(v);
    removed[static_cast<std::size_t>(v)] = 0;
  }
  return out;
}

std::vector<EdgeId> bridges(const Multigraph& g) {
  // Iterative lowpoint search; parallel edges are told apart by edge id.
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int counter = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        const Edge& ed = g.edge(e);
        if (ed.is_loop() || e == f.via) continue;
        const VertexId y = ed.other(f.v);
        if (order[static_cast<std::size_t>(y)] < 0) {
          order[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = counter++;
          stack.push_back({y, e, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], order[static_cast<std::size_t>(y)]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId parent = stack.back().v;
        low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
        if (low[static_cast<std::size_t>(done.v)] > order[static_cast<std::size_t>(parent)]) out.push_back(done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TopologicalCutPoints topological_cut_points(const Multigraph& g) {
  require_connected(g, "topological_cut_points");
  TopologicalCutPoints out;
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    removed[static_cast<std::size_t>(v)] = 1;
    // Each loop at v becomes its own open arc once v is gone.
    if (component_count_without(g, removed) + g.loop_count(v) >= 2) out.vertices.push_back(v);
    removed[static_cast<std::size_t>(v)] = 0;
  }
  out.bridges = bridges(g);
  return out;
}

namespace {

// Internally vertex-disjoint s-t paths, capped at `limit`; on a shortfall
// fills the separating vertex set.
int vertex_flow(const Multigraph& g, VertexId s, VertexId t, int limit, std::vector<VertexId>* separator) {
  const int n = g.vertex_count();
  const int big = std::numeric_limits<int>::max() / 4;
  FlowNetwork net(2 * n);
  for (VertexId v = 0; v < n; ++v) {
    const int cap = (v == s || v == t) ? big : 1;
    net.add_arc_pair(2 * v, 2 * v + 1, cap, 0);
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    net.add_arc_pair(2 * e.u + 1, 2 * e.v, big, 0);
    net.add_arc_pair(2 * e.v + 1, 2 * e.u, big, 0);
  }
  const int value = net.max_flow(2 * s + 1, 2 * t, limit);
  if (separator && value < limit) {
    const std::vector<char> reach = net.residual_reach(2 * s + 1);
    for (VertexId v = 0; v < n; ++v) {
      if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) separator->push_back(v);
    }
  }
  return value;
}

KCutting cutting_from_separator(const Multigraph& g, std::vector<VertexId> separator) {
  const std::vector<int> labels = component_labels(g, vertex_mask(g, separator));
  KCutting c;
  c.separator = separator;
  // Side A is Y plus the component of the lowest surviving vertex (label 0).
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int l = labels[static_cast<std::size_t>(v)];
    if (l < 0) {
      c.side_a.push_back(v);
      c.side_b.push_back(v);
    } else if (l == 0) {
      c.side_a.push_back(v);
    } else {
      c.side_b.push_back(v);
    }
  }
  c.nontrivial = c.side_a.size() > separator.size() && c.side_b.size() > separator.size();
  return c;
}

}  // namespace

KConnectivityVerdict is_k_connected(const Multigraph& g, int k) {
  if (k < 1) throw InputError("is_k_connected: k must be positive");
  if (g.vertex_count() < k) throw InputError("is_k_connected: fewer than k vertices");
  KConnectivityVerdict out;
  if (!g.is_connected()) {
    out.cutting = cutting_from_separator(g, {});
    return out;
  }
  const int n = g.vertex_count();
  std::vector<char> adjacent(static_cast<std::size_t>(n), 0);
  // Any separator of size < k misses one of the first k vertices, and that
  // vertex is separated from some later vertex.
  for (VertexId s = 0; s < k && s < n; ++s) {
    std::fill(adjacent.begin(), adjacent.end(), 0);
    for (EdgeId e : g.incident(s)) adjacent[static_cast<std::size_t>(g.edge(e).other(s))] = 1;
    for (VertexId t = s + 1; t < n; ++t) {
      if (adjacent[static_cast<std::size_t>(t)]) continue;
      std::vector<VertexId> separator;
      if (vertex_flow(g, s, t, k, &separator) < k) {
        out.cutting = cutting_from_separator(g, std::move(separator));
        return out;
      }
    }
  }
  out.holds = true;
  return out;
}

ToughnessVerdict is_tough(const Multigraph& g, int k, int n) {
  if (k < 1 || n < 1) throw InputError("is_tough: k and n must be positive");
  require_connected(g, "is_tough");
  const int v = g.vertex_count();
  std::vector<char> removed(static_cast<std::size_t>(v), 0);
  for (int size = 1; size <= std::min(n, v); ++size) {
    std::vector<int> combo = unrank_combination(v, size, 0);
    do {
      for (int x : combo) removed[static_cast<std::size_t>(x)] = 1;
      const int comps = component_count_without(g, removed);
      for (int x : combo) removed[static_cast<std::size_t>(x)] = 0;
      if (static_cast<long long>(k) * comps > size) {
        return {false, std::vector<VertexId>(combo.begin(), combo.end()), comps};
      }
    } while (next_combination(combo, v));
  }
  return {true, {}, 0};
}

}  // namespace glc
