#include "glc/trails.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "glc/combinatorics.hpp"
#include "glc/errors.hpp"
#include "glc/kernels.hpp"
#include "glc/parallel.hpp"

namespace glc {

std::string trail_problem(const Multigraph& g, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1) return "vertex and edge counts do not alternate";
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (VertexId v : t.vertices) {
    if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (!g.has_edge(e)) return "unknown edge " + std::to_string(e);
    if (seen[static_cast<std::size_t>(e)]++) return "edge " + std::to_string(e) + " repeats";
    const Edge& ed = g.edge(e);
    const VertexId a = t.vertices[i];
    const VertexId b = t.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) {
      return "edge " + std::to_string(e) + " does not join consecutive vertices";
    }
  }
  return {};
}

Trail euler_trail(const Multigraph& g, std::span<const EdgeId> subgraph) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeId>> adj(n);
  std::vector<int> deg(n, 0);
  for (EdgeId e : subgraph) {
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.u)].push_back(e);
    if (!ed.is_loop()) adj[static_cast<std::size_t>(ed.v)].push_back(e);
    deg[static_cast<std::size_t>(ed.u)] += 1;
    deg[static_cast<std::size_t>(ed.v)] += 1;
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  VertexId start = -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] % 2 == 1) {
      start = v;
      break;
    }
  }
  if (start < 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (deg[static_cast<std::size_t>(v)] > 0) {
        start = v;
        break;
      }
    }
  }
  Trail out;
  if (start < 0) {
    // No edges: the trivial trail sitting at one vertex.
    if (g.vertex_count() > 0) out.vertices.push_back(0);
    return out;
  }

  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::pair<VertexId, EdgeId>> stack{{start, -1}};
  std::vector<std::pair<VertexId, EdgeId>> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    auto& list = adj[static_cast<std::size_t>(v)];
    auto& pos = next[static_cast<std::size_t>(v)];
    while (pos < list.size() && used[static_cast<std::size_t>(list[pos])]) ++pos;
    if (pos < list.size()) {
      const EdgeId e = list[pos];
      used[static_cast<std::size_t>(e)] = 1;
      stack.emplace_back(g.edge(e).other(v), e);
    } else {
      circuit.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != subgraph.size() + 1) throw InputError("euler_trail: edge set is not connected");
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    out.vertices.push_back(circuit[i].first);
    if (i > 0) out.edges.push_back(circuit[i].second);
  }
  return out;
}

namespace {

int odd_vertex_count(const Multigraph& g, std::span<const EdgeId> edges) {
  // Incidence rows XOR-reduced over the selected edges give the parity vector.
  const std::size_t words = static_cast<std::size_t>((g.vertex_count() + 63) / 64);
  const std::size_t select_words = static_cast<std::size_t>((g.edge_count() + 63) / 64);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.edge_count()) * words, 0);
  for (const Edge& e : g.edges()) {
    std::uint64_t* row = rows.data() + static_cast<std::size_t>(e.id) * words;
    row[static_cast<std::size_t>(e.u) >> 6] ^= std::uint64_t{1} << (e.u & 63);
    row[static_cast<std::size_t>(e.v) >> 6] ^= std::uint64_t{1} << (e.v & 63);
  }
  std::vector<std::uint64_t> select(select_words, 0);
  for (EdgeId e : edges) select[static_cast<std::size_t>(e) >> 6] |= std::uint64_t{1} << (e & 63);
  std::vector<std::uint64_t> parity(words, 0);
  const kernels::RowOps& ops = kernels::active();
  ops.xor_rows(rows.data(), words, select.data(), select_words, parity.data());
  return static_cast<int>(ops.popcount(parity.data(), words));
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

// Largest graph the branch-and-bound stage accepts.
constexpr int kExhaustiveEdgeLimit = 48;

class CoverSearch {
 public:
  CoverSearch(const Multigraph& g, std::span<const EdgeId> required, int max_odd)
      : g_(g), max_odd_(max_odd), required_(required.begin(), required.end()) {
    in_f_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : required_) {
      if (!g.has_edge(e)) throw InputError("unknown edge " + std::to_string(e));
      if (in_f_[static_cast<std::size_t>(e)]++) throw InputError("edge " + std::to_string(e) + " listed twice");
    }
  }

  EulerVerdict run() {
    require_connected(g_, "Eulerian cover search");
    if (required_.empty()) return success({}, "trivial");
    std::vector<EdgeId> all(static_cast<std::size_t>(g_.edge_count()));
    std::iota(all.begin(), all.end(), 0);
    if (odd_vertex_count(g_, all) <= max_odd_) return success(all, "whole-graph");
    if (g_.edge_count() <= kExhaustiveEdgeLimit) return exhaustive();
    if (auto stitched = stitch()) return success(*stitched, "stitched");
    if (odd_cut_refutes()) return failure("odd-cut");
    throw SearchLimitError("Eulerian cover search: graph with " + std::to_string(g_.edge_count()) +
                           " edges is beyond the exhaustive bound and no shortcut applied");
  }

 private:
  EulerVerdict success(std::vector<EdgeId> h, const char* method) {
    std::sort(h.begin(), h.end());
    EulerVerdict v;
    v.holds = true;
    v.method = method;
    EulerCover cover;
    cover.subgraph = h;
    cover.required = required_;
    std::sort(cover.required.begin(), cover.required.end());
    cover.odd_vertices = odd_vertex_count(g_, h);
    v.trail = euler_trail(g_, h);
    v.cover = std::move(cover);
    return v;
  }

  EulerVerdict failure(const char* method) {
    EulerVerdict v;
    v.method = method;
    return v;
  }

  // Branch over the optional non-loop edges in id order, excluding first so
  // the first witness found tends to be small.
  EulerVerdict exhaustive() {
    const int n = g_.vertex_count();
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!in_f_[static_cast<std::size_t>(e)] && !g_.edge(e).is_loop()) optional_.push_back(e);
    }
    parity_.assign(static_cast<std::size_t>(n), 0);
    touches_f_.assign(static_cast<std::size_t>(n), 0);
    for (EdgeId e : required_) {
      const Edge& ed = g_.edge(e);
      touches_f_[static_cast<std::size_t>(ed.u)] = touches_f_[static_cast<std::size_t>(ed.v)] = 1;
      if (!ed.is_loop()) {
        parity_[static_cast<std::size_t>(ed.u)] ^= 1;
        parity_[static_cast<std::size_t>(ed.v)] ^= 1;
      }
    }
    last_optional_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < optional_.size(); ++i) {
      const Edge& ed = g_.edge(optional_[i]);
      last_optional_[static_cast<std::size_t>(ed.u)] = last_optional_[static_cast<std::size_t>(ed.v)] = static_cast<int>(i);
    }
    int fixed_odd = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (last_optional_[static_cast<std::size_t>(v)] < 0 && parity_[static_cast<std::size_t>(v)]) ++fixed_odd;
    }
    state_.assign(optional_.size(), 0);
    if (fixed_odd <= max_odd_ && branch(0, fixed_odd)) {
      std::vector<EdgeId> h = required_;
      for (std::size_t i = 0; i < optional_.size(); ++i) {
        if (state_[i] == 1) h.push_back(optional_[i]);
      }
      return success(h, "exhaustive");
    }
    return failure("exhaustive");
  }

  // state_: 0 undecided, 1 included, 2 excluded.
  bool branch(std::size_t i, int fixed_odd) {
    if (i == optional_.size()) return chosen_connected(false);
    const Edge& ed = g_.edge(optional_[i]);
    for (int choice : {2, 1}) {
      state_[i] = static_cast<char>(choice);
      if (choice == 1) {
        parity_[static_cast<std::size_t>(ed.u)] ^= 1;
        parity_[static_cast<std::size_t>(ed.v)] ^= 1;
      }
      int odd = fixed_odd;
      for (VertexId x : {ed.u, ed.v}) {
        if (last_optional_[static_cast<std::size_t>(x)] == static_cast<int>(i) && parity_[static_cast<std::size_t>(x)]) ++odd;
      }
      const bool ok = odd <= max_odd_ && (choice == 1 || chosen_connected(true));
      if (ok && branch(i + 1, odd)) return true;
      if (choice == 1) {
        parity_[static_cast<std::size_t>(ed.u)] ^= 1;
        parity_[static_cast<std::size_t>(ed.v)] ^= 1;
      }
    }
    state_[i] = 0;
    return false;
  }

  // With `optimistic`, undecided edges count as present: the required edges
  // must still be able to end up in one component. Otherwise the chosen
  // subgraph itself must be connected.
  bool chosen_connected(bool optimistic) {
    DisjointSets ds(g_.vertex_count());
    std::vector<char> touched(touches_f_);
    for (EdgeId e : required_) ds.unite(g_.edge(e).u, g_.edge(e).v);
    for (std::size_t i = 0; i < optional_.size(); ++i) {
      if (state_[i] == 1 || (optimistic && state_[i] == 0)) {
        const Edge& ed = g_.edge(optional_[i]);
        ds.unite(ed.u, ed.v);
        if (state_[i] == 1) touched[static_cast<std::size_t>(ed.u)] = touched[static_cast<std::size_t>(ed.v)] = 1;
      }
    }
    int root = -1;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!touched[static_cast<std::size_t>(v)]) continue;
      const int r = ds.find(v);
      if (root < 0) root = r;
      else if (r != root) return false;
    }
    return true;
  }

  // Links the required edges one after another by shortest paths through
  // unused edges, trying orders until one succeeds.
  std::optional<std::vector<EdgeId>> stitch() {
    std::vector<EdgeId> order = required_;
    std::sort(order.begin(), order.end());
    int attempts = 0;
    do {
      for (int flip = 0; flip < 2; ++flip) {
        if (auto h = stitch_order(order, flip == 1)) return h;
      }
    } while (++attempts < 720 && std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
  }

  std::optional<std::vector<EdgeId>> stitch_order(const std::vector<EdgeId>& order, bool flip) {
    std::vector<char> used(static_cast<std::size_t>(g_.edge_count()), 0);
    std::vector<char> pending(in_f_);
    std::vector<EdgeId> h;
    auto take = [&](EdgeId e) {
      used[static_cast<std::size_t>(e)] = 1;
      pending[static_cast<std::size_t>(e)] = 0;
      h.push_back(e);
    };
    const Edge& first = g_.edge(order.front());
    const VertexId start = flip ? first.v : first.u;
    VertexId cur = first.other(start);
    take(first.id);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Edge& ed = g_.edge(order[i]);
      if (used[static_cast<std::size_t>(ed.id)]) continue;
      auto path = shortest_path(cur, {ed.u, ed.v}, used, pending);
      if (!path) return std::nullopt;
      for (EdgeId e : path->first) take(e);
      take(ed.id);
      cur = ed.other(path->second);
    }
    if (max_odd_ == 0 && cur != start) {
      auto back = shortest_path(cur, {start, start}, used, pending);
      if (!back) return std::nullopt;
      for (EdgeId e : back->first) take(e);
    }
    return h;
  }

  // BFS over edges neither used nor still-pending required ones.
  std::optional<std::pair<std::vector<EdgeId>, VertexId>> shortest_path(VertexId from, std::pair<VertexId, VertexId> targets,
                                                                       const std::vector<char>& used,
                                                                       const std::vector<char>& pending) const {
    std::vector<EdgeId> via(static_cast<std::size_t>(g_.vertex_count()), -2);
    std::vector<VertexId> queue{from};
    via[static_cast<std::size_t>(from)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      if (x == targets.first || x == targets.second) {
        std::vector<EdgeId> path;
        for (VertexId y = x; via[static_cast<std::size_t>(y)] >= 0;) {
          const EdgeId e = via[static_cast<std::size_t>(y)];
          path.push_back(e);
          y = g_.edge(e).other(y);
        }
        std::reverse(path.begin(), path.end());
        return std::make_pair(std::move(path), x);
      }
      for (EdgeId e : g_.incident(x)) {
        if (used[static_cast<std::size_t>(e)] || pending[static_cast<std::size_t>(e)]) continue;
        const VertexId y = g_.edge(e).other(x);
        if (via[static_cast<std::size_t>(y)] != -2) continue;
        via[static_cast<std::size_t>(y)] = e;
        queue.push_back(y);
      }
    }
    return std::nullopt;
  }

  // Each component C of g minus F has its whole boundary inside F, so H
  // meets the boundary in |dC| edges and C must hold an odd vertex of H
  // whenever |dC| is odd.
  bool odd_cut_refutes() const {
    std::vector<char> none(static_cast<std::size_t>(g_.vertex_count()), 0);
    DisjointSets ds(g_.vertex_count());
    for (const Edge& e : g_.edges()) {
      if (!in_f_[static_cast<std::size_t>(e.id)]) ds.unite(e.u, e.v);
    }
    std::vector<int> boundary(static_cast<std::size_t>(g_.vertex_count()), 0);
    for (EdgeId e : required_) {
      const Edge& ed = g_.edge(e);
      const int a = ds.find(ed.u);
      const int b = ds.find(ed.v);
      if (a == b) continue;
      ++boundary[static_cast<std::size_t>(a)];
      ++boundary[static_cast<std::size_t>(b)];
    }
    const auto odd = std::count_if(boundary.begin(), boundary.end(), [](int c) { return c % 2 == 1; });
    return odd > max_odd_;
  }

  const Multigraph& g_;
  int max_odd_;
  std::vector<EdgeId> required_;
  std::vector<char> in_f_;
  std::vector<EdgeId> optional_;
  std::vector<char> parity_;
  std::vector<char> touches_f_;
  std::vector<int> last_optional_;
  std::vector<char> state_;
};

QuantifiedVerdict quantify(const Multigraph& g, int n, int max_odd, const QuantifierOptions& opt) {
  if (n < 1) throw InputError("n must be positive");
  require_connected(g, "Eulerian quantifier");
  QuantifiedVerdict out;
  const int m = g.edge_count();
  std::vector<EdgeId> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  if (odd_vertex_count(g, all) <= max_odd) {
    // H = g works for every F.
    out.holds = true;
    return out;
  }
  const int top = std::min(n, m);
  const int bottom = opt.exhaustive_sizes ? 1 : top;
  for (int size = bottom; size <= top; ++size) {
    const std::uint64_t count = binomial(m, size);
    const auto hit = first_failure(count, opt.threads, 256, [&](std::uint64_t b, std::uint64_t e) -> std::optional<std::uint64_t> {
      std::vector<int> combo = unrank_combination(m, size, b);
      for (std::uint64_t i = b; i < e; ++i, next_combination(combo, m)) {
        if (!CoverSearch(g, combo, max_odd).run().holds) return i;
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

}  // namespace

EulerVerdict is_eulerian(const Multigraph& g) {
  require_connected(g, "is_eulerian");
  EulerVerdict v;
  v.method = "whole-graph";
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (g.degree_unchecked(x) % 2 != 0) return v;
  }
  std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
  std::iota(all.begin(), all.end(), 0);
  v.holds = true;
  v.cover = EulerCover{all, {}, 0};
  v.trail = euler_trail(g, all);
  return v;
}

EulerVerdict check_edges_E(const Multigraph& g, std::span<const EdgeId> required) {
  return CoverSearch(g, required, 0).run();
}

EulerVerdict check_edges_oE(const Multigraph& g, std::span<const EdgeId> required) {
  return CoverSearch(g, required, 2).run();
}

QuantifiedVerdict is_n_E(const Multigraph& g, int n, const QuantifierOptions& opt) { return quantify(g, n, 0, opt); }

QuantifiedVerdict is_n_oE(const Multigraph& g, int n, const QuantifierOptions& opt) { return quantify(g, n, 2, opt); }

namespace {

struct MatchingContext {
  int N;
  std::vector<char> blocked;  // per K_N edge id: in M or already used
  std::vector<char> required;

  EdgeId id(VertexId a, VertexId b) const { return complete_edge_id(N, a, b); }
  bool free(VertexId a, VertexId b) const { return a != b && !blocked[static_cast<std::size_t>(id(a, b))]; }
};

void validate_request(const MatchingTrailRequest& r) {
  if (r.n < 0) throw InputError("n must be nonnegative");
  if (r.N < 4 * r.n + 4) {
    throw PreconditionError("complete_matching_trail needs N >= 4n+4 (N=" + std::to_string(r.N) +
                            ", n=" + std::to_string(r.n) + ")");
  }
  auto check_vertex = [&](VertexId x) {
    if (x < 0 || x >= r.N) throw InputError("vertex " + std::to_string(x) + " is not in K_N");
  };
  check_vertex(r.from);
  check_vertex(r.to);
  if (r.closed && r.from != r.to) throw InputError("closed trail: start and end must coincide");
  if (!r.closed && r.from == r.to) throw InputError("open trail needs distinct ends; request the closed variant");
  std::vector<char> matched(static_cast<std::size_t>(r.N), 0);
  std::set<EdgeId> in_m;
  for (auto [a, b] : r.matching) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw InputError("matching contains a loop");
    if (matched[static_cast<std::size_t>(a)]++ || matched[static_cast<std::size_t>(b)]++) {
      throw InputError("M is not a matching: a vertex is covered twice");
    }
    in_m.insert(complete_edge_id(r.N, a, b));
  }
  if (static_cast<int>(r.required.size()) > r.n) throw InputError("more required edges than n");
  std::set<EdgeId> seen;
  for (auto [a, b] : r.required) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw InputError("required edge is a loop");
    const EdgeId e = complete_edge_id(r.N, a, b);
    if (in_m.count(e)) throw InputError("required edge lies in M");
    if (!seen.insert(e).second) throw InputError("required edge listed twice");
  }
}

// Connects `from` to `to` by a direct free edge, or through the lowest-id
// common neighbour outside `avoid`.
bool connect(MatchingContext& ctx, Trail& t, VertexId from, VertexId to, std::initializer_list<VertexId> avoid) {
  auto step = [&](VertexId a, VertexId b) {
    const EdgeId e = ctx.id(a, b);
    ctx.blocked[static_cast<std::size_t>(e)] = 1;
    t.edges.push_back(e);
    t.vertices.push_back(b);
  };
  if (from == to) return true;
  if (ctx.free(from, to)) {
    step(from, to);
    return true;
  }
  for (VertexId z = 0; z < ctx.N; ++z) {
    if (z == from || z == to || std::find(avoid.begin(), avoid.end(), z) != avoid.end()) continue;
    if (ctx.free(from, z) && ctx.free(z, to)) {
      step(from, z);
      step(z, to);
      return true;
    }
  }
  return false;
}

std::optional<Trail> greedy_matching_trail(const MatchingTrailRequest& r) {
  MatchingContext ctx{r.N, std::vector<char>(static_cast<std::size_t>(r.N * (r.N - 1) / 2), 0), {}};
  for (auto [a, b] : r.matching) ctx.blocked[static_cast<std::size_t>(ctx.id(a, b))] = 1;
  Trail t;
  t.vertices.push_back(r.from);
  VertexId cur = r.from;
  for (auto [x, y] : r.required) {
    const EdgeId e = ctx.id(x, y);
    if (ctx.blocked[static_cast<std::size_t>(e)]) continue;  // already crossed on the way
    if (cur == y) std::swap(x, y);
    // Block e while approaching so the connector cannot consume it.
    ctx.blocked[static_cast<std::size_t>(e)] = 1;
    const bool ok = connect(ctx, t, cur, x, {y});
    ctx.blocked[static_cast<std::size_t>(e)] = 0;
    if (!ok) return std::nullopt;
    ctx.blocked[static_cast<std::size_t>(e)] = 1;
    t.edges.push_back(e);
    t.vertices.push_back(y);
    cur = y;
  }
  const VertexId target = r.closed ? r.from : r.to;
  if (!connect(ctx, t, cur, target, {})) return std::nullopt;
  return t;
}

// Depth-first search over all trails from `from`; used only below the
// lemma's range, where K_N is small.
class TrailEnumerator {
 public:
  explicit TrailEnumerator(const MatchingTrailRequest& r) : r_(r), used_(static_cast<std::size_t>(r.N * (r.N - 1) / 2), 0) {
    for (auto [a, b] : r.matching) used_[static_cast<std::size_t>(complete_edge_id(r.N, a, b))] = 1;
    for (auto [a, b] : r.required) required_.push_back(complete_edge_id(r.N, a, b));
  }

  std::optional<Trail> run() {
    trail_.vertices.assign(1, r_.from);
    trail_.edges.clear();
    if (dfs(r_.from)) return trail_;
    return std::nullopt;
  }

 private:
  bool covered() const {
    return std::all_of(required_.begin(), required_.end(), [&](EdgeId e) {
      return std::find(trail_.edges.begin(), trail_.edges.end(), e) != trail_.edges.end();
    });
  }

  bool dfs(VertexId cur) {
    if (++nodes_ > kBudget) throw SearchLimitError("matching trail enumeration exceeded its budget");
    const VertexId target = r_.closed ? r_.from : r_.to;
    if (cur == target && covered() && (!r_.closed || !trail_.edges.empty() || required_.empty())) return true;
    for (VertexId y = 0; y < r_.N; ++y) {
      if (y == cur) continue;
      const EdgeId e = complete_edge_id(r_.N, cur, y);
      if (used_[static_cast<std::size_t>(e)]) continue;
      used_[static_cast<std::size_t>(e)] = 1;
      trail_.edges.push_back(e);
      trail_.vertices.push_back(y);
      if (dfs(y)) return true;
      trail_.edges.pop_back();
      trail_.vertices.pop_back();
      used_[static_cast<std::size_t>(e)] = 0;
    }
    return false;
  }

  static constexpr long kBudget = 50'000'000;
  const MatchingTrailRequest& r_;
  std::vector<char> used_;
  std::vector<EdgeId> required_;
  Trail trail_;
  long nodes_ = 0;
};

}  // namespace

std::optional<Trail> complete_matching_trail(const MatchingTrailRequest& req) {
  validate_request(req);
  if (auto t = greedy_matching_trail(req)) return t;
  if (req.n >= 2) throw ConsistencyError("greedy stitching failed inside the lemma's range");
  return TrailEnumerator(req).run();
}

std::string matching_trail_problem(const MatchingTrailRequest& req, const Trail& t) {
  const Multigraph kn = complete_graph(req.N);
  if (auto p = trail_problem(kn, t); !p.empty()) return p;
  if (t.vertices.front() != req.from) return "trail does not start at the requested vertex";
  const VertexId target = req.closed ? req.from : req.to;
  if (t.vertices.back() != target) return "trail does not end at the requested vertex";
  std::set<EdgeId> edges(t.edges.begin(), t.edges.end());
  for (auto [a, b] : req.matching) {
    if (edges.count(complete_edge_id(req.N, a, b))) return "trail uses a matching edge";
  }
  for (auto [a, b] : req.required) {
    if (!edges.count(complete_edge_id(req.N, a, b))) return "trail misses a required edge";
  }
  return {};
}

}  // namespace glc
