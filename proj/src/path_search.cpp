#include "glc/path_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "glc/errors.hpp"
#include "glc/kernels.hpp"

namespace glc {

AdjacencyRows::AdjacencyRows(const Multigraph& g, int spare) : n_(g.vertex_count()) {
  capacity_ = n_ + spare;
  if (capacity_ > kMaxVertices) {
    throw SearchLimitError("path search supports at most " + std::to_string(kMaxVertices) + " vertices");
  }
  words_ = static_cast<std::size_t>(std::max(1, (capacity_ + 63) / 64));
  // Round up to a power of two so the search can use a fixed-width set.
  words_ = std::bit_ceil(words_);
  rows_.assign(static_cast<std::size_t>(capacity_) * words_, 0);
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) link(e.u, e.v);
  }
}

void AdjacencyRows::link(VertexId a, VertexId b) {
  rows_[static_cast<std::size_t>(a) * words_ + (static_cast<std::size_t>(b) >> 6)] |= std::uint64_t{1} << (b & 63);
  rows_[static_cast<std::size_t>(b) * words_ + (static_cast<std::size_t>(a) >> 6)] |= std::uint64_t{1} << (a & 63);
}

void AdjacencyRows::unlink(VertexId a, VertexId b) {
  rows_[static_cast<std::size_t>(a) * words_ + (static_cast<std::size_t>(b) >> 6)] &= ~(std::uint64_t{1} << (b & 63));
  rows_[static_cast<std::size_t>(b) * words_ + (static_cast<std::size_t>(a) >> 6)] &= ~(std::uint64_t{1} << (a & 63));
}

VertexId AdjacencyRows::add_vertex() {
  if (n_ >= capacity_) throw SearchLimitError("path search: no spare vertex capacity");
  const VertexId v = n_++;
  std::fill_n(rows_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * words_), words_, 0);
  return v;
}

void AdjacencyRows::assign(const AdjacencyRows& base) {
  n_ = base.n_;
  capacity_ = base.capacity_;
  words_ = base.words_;
  rows_.resize(base.rows_.size());
  std::copy(base.rows_.begin(), base.rows_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(n_) * words_),
            rows_.begin());
}

namespace {

template <std::size_t W>
struct Set {
  std::array<std::uint64_t, W> w{};

  void set(VertexId v) { w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) { w[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(VertexId v) const { return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
  bool any() const {
    for (auto x : w) if (x) return true;
    return false;
  }
  Set operator&(const Set& o) const { Set r; for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i]; return r; }
  Set operator|(const Set& o) const { Set r; for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i]; return r; }
  Set operator~() const { Set r; for (std::size_t i = 0; i < W; ++i) r.w[i] = ~w[i]; return r; }
  Set and_not(const Set& o) const { Set r; for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i]; return r; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t bits = w[i];
      while (bits) {
        f(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }
};

template <std::size_t W>
class Searcher {
 public:
  Searcher(const AdjacencyRows& adj, const PathQuery& q) : adj_(adj), query_(q) {
    for (VertexId v = 0; v < adj.vertex_count(); ++v) all_.set(v);
    for (VertexId v : q.forbidden) all_.reset(v);
    if (q.end) {
      end_ = *q.end;
      end_bit_.set(end_);
    }
  }

  std::optional<std::vector<VertexId>> run() {
    Set<W> required;
    for (VertexId r : query_.required) required.set(r);
    if (end_ >= 0) required.reset(end_);
    for (VertexId s : query_.starts) {
      if (!all_.test(s)) continue;
      if (end_ >= 0 && s == end_) {
        // A one-vertex path can end where it starts only if nothing else is needed.
        if (required.and_not(bit(s)).any()) continue;
        return std::vector<VertexId>{s};
      }
      path_.assign(1, s);
      Set<W> visited;
      visited.set(s);
      if (dfs(s, visited, required.and_not(visited))) return path_;
    }
    return std::nullopt;
  }

 private:
  static Set<W> bit(VertexId v) { Set<W> s; s.set(v); return s; }
  static int popcount(const Set<W>& s) {
    int c = 0;
    for (auto x : s.w) c += std::popcount(x);
    return c;
  }

  Set<W> row(VertexId v) const {
    Set<W> s;
    const std::uint64_t* r = adj_.row(v);
    for (std::size_t i = 0; i < W; ++i) s.w[i] = r[i];
    return s;
  }

  Set<W> neighbours_of(const Set<W>& frontier) const {
    if constexpr (W == 1) {
      Set<W> out;
      frontier.for_each([&](VertexId v) { out.w[0] |= adj_.row(v)[0]; });
      return out;
    } else {
      Set<W> out;
      kernels::active().union_rows(adj_.data(), W, frontier.w.data(), W, out.w.data());
      return out;
    }
  }

  /// Vertices reachable from `from` moving only through `allowed`.
  Set<W> reach(VertexId from, const Set<W>& allowed) const {
    Set<W> seen = bit(from);
    Set<W> frontier = seen;
    while (frontier.any()) {
      frontier = neighbours_of(frontier).and_not(seen) & allowed;
      seen = seen | frontier;
    }
    return seen;
  }

  bool finish_at_end(VertexId cur, const Set<W>& visited) {
    // Shortest completion; any suffix works once everything required is on the path.
    const Set<W> allowed = (all_.and_not(visited)) | end_bit_;
    std::vector<VertexId> parent(static_cast<std::size_t>(adj_.vertex_count()), -1);
    Set<W> seen = bit(cur);
    std::vector<VertexId> queue{cur};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      if (x == end_) break;
      const Set<W> next = row(x).and_not(seen) & allowed;
      next.for_each([&](VertexId y) {
        seen.set(y);
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      });
    }
    if (!seen.test(end_) || cur == end_) return cur == end_;
    std::vector<VertexId> tail;
    for (VertexId x = end_; x != cur; x = parent[static_cast<std::size_t>(x)]) tail.push_back(x);
    path_.insert(path_.end(), tail.rbegin(), tail.rend());
    return true;
  }

  // Every remaining required vertex must lie on some simple path from cur to
  // the target. With a virtual edge cur-target added, those are exactly the
  // vertices of the block holding that edge.
  bool blocks_allow(VertexId cur, const Set<W>& open, const Set<W>& remaining) {
    const int n = adj_.vertex_count();
    const VertexId target = end_;
    const Set<W> inside = open | bit(cur) | end_bit_;
    disc_.assign(static_cast<std::size_t>(n), -1);
    low_.assign(static_cast<std::size_t>(n), 0);
    stack_.clear();
    block_ = Set<W>{};
    int clock = 0;
    bool found = false;

    auto neighbours = [&](VertexId v, auto&& f) {
      (row(v) & inside).for_each(f);
      if (v == cur) f(target);
      else if (v == target) f(cur);
    };

    auto visit = [&](auto&& self, VertexId u, VertexId parent) -> void {
      disc_[static_cast<std::size_t>(u)] = low_[static_cast<std::size_t>(u)] = clock++;
      stack_.push_back(u);
      bool skipped_parent = false;
      neighbours(u, [&](VertexId w) {
        if (found) return;
        if (w == parent && !skipped_parent) {
          skipped_parent = true;
          return;
        }
        auto& lu = low_[static_cast<std::size_t>(u)];
        if (disc_[static_cast<std::size_t>(w)] >= 0) {
          lu = std::min(lu, disc_[static_cast<std::size_t>(w)]);
          return;
        }
        self(self, w, u);
        if (found) return;
        lu = std::min(lu, low_[static_cast<std::size_t>(w)]);
        if (low_[static_cast<std::size_t>(w)] >= disc_[static_cast<std::size_t>(u)]) {
          Set<W> popped;
          bool has_cur = false;
          for (;;) {
            const VertexId x = stack_.back();
            stack_.pop_back();
            if (x == cur) has_cur = true;
            popped.set(x);
            if (x == w) break;
          }
          if (u == target && has_cur) {
            block_ = popped;
            found = true;
          }
        }
      });
    };
    visit(visit, target, -1);
    return found && !remaining.and_not(block_).any();
  }

  // Open-ended case. A simple path leaving cur runs down one branch of the
  // block-cut tree rooted at cur, so the blocks holding the remaining
  // required vertices must all sit on a single root-to-leaf chain.
  bool chain_allows(VertexId cur, const Set<W>& open, const Set<W>& remaining) {
    const int n = adj_.vertex_count();
    const Set<W> inside = open | bit(cur);
    disc_.assign(static_cast<std::size_t>(n), -1);
    low_.assign(static_cast<std::size_t>(n), 0);
    home_.assign(static_cast<std::size_t>(n), -1);
    stack_.clear();
    attach_.clear();
    int clock = 0;

    auto visit = [&](auto&& self, VertexId u, VertexId parent) -> void {
      disc_[static_cast<std::size_t>(u)] = low_[static_cast<std::size_t>(u)] = clock++;
      stack_.push_back(u);
      (row(u) & inside).for_each([&](VertexId w) {
        auto& lu = low_[static_cast<std::size_t>(u)];
        if (w == parent) return;
        if (disc_[static_cast<std::size_t>(w)] >= 0) {
          lu = std::min(lu, disc_[static_cast<std::size_t>(w)]);
          return;
        }
        self(self, w, u);
        lu = std::min(lu, low_[static_cast<std::size_t>(w)]);
        if (low_[static_cast<std::size_t>(w)] >= disc_[static_cast<std::size_t>(u)]) {
          const int block = static_cast<int>(attach_.size());
          attach_.push_back(u);
          for (;;) {
            const VertexId x = stack_.back();
            stack_.pop_back();
            home_[static_cast<std::size_t>(x)] = block;
            if (x == w) break;
          }
        }
      });
    };
    visit(visit, cur, -1);

    auto up = [&](int block) {
      const VertexId a = attach_[static_cast<std::size_t>(block)];
      return a == cur ? -1 : home_[static_cast<std::size_t>(a)];
    };
    depth_.assign(attach_.size(), -1);
    auto depth = [&](int block) {
      int d = 0;
      for (int b = block; b >= 0; b = up(b)) {
        if (depth_[static_cast<std::size_t>(b)] >= 0) {
          d += depth_[static_cast<std::size_t>(b)];
          break;
        }
        ++d;
      }
      return depth_[static_cast<std::size_t>(block)] = d;
    };
    int deepest = -1;
    int best = -1;
    bool unreachable = false;
    remaining.for_each([&](VertexId r) {
      const int b = home_[static_cast<std::size_t>(r)];
      if (b < 0) {
        unreachable = true;
        return;
      }
      const int d = depth(b);
      if (d > best) {
        best = d;
        deepest = b;
      }
    });
    if (unreachable) return false;
    if (deepest < 0) return true;
    on_chain_.assign(attach_.size(), 0);
    for (int b = deepest; b >= 0; b = up(b)) on_chain_[static_cast<std::size_t>(b)] = 1;
    bool ok = true;
    remaining.for_each([&](VertexId r) {
      if (!on_chain_[static_cast<std::size_t>(home_[static_cast<std::size_t>(r)])]) ok = false;
    });
    return ok;
  }

  bool dfs(VertexId cur, Set<W>& visited, const Set<W>& remaining) {
    if (!remaining.any()) {
      if (end_ < 0) return true;
      return finish_at_end(cur, visited);
    }
    const Set<W> open = all_.and_not(visited).and_not(end_bit_);
    const Set<W> reachable = reach(cur, open | bit(cur));
    if (remaining.and_not(reachable).any()) return false;
    if (end_ >= 0 && !(row(end_) & reachable).any()) return false;
    // A required vertex in the middle of the path needs two usable
    // neighbours; only the final vertex of an open-ended path may have one.
    const Set<W> usable = open | bit(cur) | end_bit_;
    bool dead = false;
    int single = 0;
    remaining.for_each([&](VertexId r) {
      const int degree = popcount(row(r) & usable);
      if (degree == 0 || (end_ >= 0 && degree < 2) || (degree == 1 && ++single > 1)) dead = true;
    });
    if (dead) return false;
    if (end_ >= 0 ? !blocks_allow(cur, open, remaining) : !chain_allows(cur, open, remaining)) return false;

    const Set<W> candidates = row(cur) & open;
    bool found = false;
    candidates.for_each([&](VertexId nb) {
      if (found) return;
      visited.set(nb);
      path_.push_back(nb);
      Set<W> rest = remaining;
      rest.reset(nb);
      if (dfs(nb, visited, rest)) {
        found = true;
        return;
      }
      path_.pop_back();
      visited.reset(nb);
    });
    return found;
  }

  const AdjacencyRows& adj_;
  const PathQuery& query_;
  Set<W> all_;
  Set<W> end_bit_;
  VertexId end_ = -1;
  std::vector<VertexId> path_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<VertexId> stack_;
  Set<W> block_;
  std::vector<int> home_;
  std::vector<VertexId> attach_;
  std::vector<int> depth_;
  std::vector<char> on_chain_;
};

}  // namespace

std::optional<std::vector<VertexId>> find_simple_path(const AdjacencyRows& adj, const PathQuery& q) {
  switch (adj.words()) {
    case 1: return Searcher<1>(adj, q).run();
    case 2: return Searcher<2>(adj, q).run();
    case 4: return Searcher<4>(adj, q).run();
    case 8: return Searcher<8>(adj, q).run();
    default: throw SearchLimitError("path search: unsupported row width");
  }
}

std::optional<EdgeId> edge_between(const Multigraph& g, VertexId a, VertexId b, EdgeId skip) {
  for (EdgeId e : g.incident(a)) {
    const Edge& x = g.edge(e);
    if (e != skip && !x.is_loop() && x.other(a) == b) return e;
  }
  return std::nullopt;
}

}  // namespace glc
