#include "glc/multigraph.hpp"

#include <algorithm>
#include <string>

#include "glc/errors.hpp"

namespace glc {

Multigraph::Multigraph(int vertex_count,
                       const std::vector<std::pair<VertexId, VertexId>>& endpoints)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
  degree_.assign(static_cast<std::size_t>(vertex_count), 0);
  edges_.reserve(endpoints.size());
  for (const auto& [u, v] : endpoints) {
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    if (!has_vertex(u) || !has_vertex(v)) {
      throw InputError("edge " + std::to_string(id) + " has an undeclared endpoint");
    }
    edges_.push_back(Edge{id, u, v});
    incidence_[static_cast<std::size_t>(u)].push_back(id);
    degree_[static_cast<std::size_t>(u)] += 1;
    if (u != v) incidence_[static_cast<std::size_t>(v)].push_back(id);
    degree_[static_cast<std::size_t>(v)] += 1;
  }
}

int Multigraph::loop_count(VertexId v) const {
  int loops = 0;
  for (EdgeId e : incident(v)) loops += edge(e).is_loop() ? 1 : 0;
  return loops;
}

bool Multigraph::is_connected() const {
  if (vertex_count_ == 0) return false;
  const std::vector<char> none(static_cast<std::size_t>(vertex_count_), 0);
  return component_count_without(*this, none) == 1;
}

Multigraph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<std::pair<VertexId, VertexId>> ends;
  ends.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) ends.emplace_back(i, j);
  }
  return Multigraph(n, ends);
}

EdgeId complete_edge_id(int n, VertexId i, VertexId j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n || i == j) throw InputError("not an edge of the complete graph");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int degree(const Multigraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  return g.degree_unchecked(v);
}

void require_connected(const Multigraph& g, const char* what) {
  if (!g.is_connected()) throw InputError(std::string(what) + ": graph is not connected");
}

std::vector<char> vertex_mask(const Multigraph& g, std::span<const VertexId> vertices) {
  std::vector<char> mask(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

namespace {

int cut_size_of_mask(const Multigraph& g, const std::vector<char>& in) {
  int size = 0;
  for (const Edge& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) ++size;
  }
  return size;
}

}  // namespace

EdgeCut boundary_cut(const Multigraph& g, std::span<const VertexId> side) {
  const auto in = vertex_mask(g, side);
  const auto members = std::count(in.begin(), in.end(), 1);
  if (members == 0 || members == g.vertex_count()) {
    throw InputError("boundary_cut needs a proper nonempty vertex subset");
  }
  EdgeCut cut;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in[static_cast<std::size_t>(v)]) cut.source_side.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) {
      cut.cut_edges.push_back(e.id);
    }
  }
  return cut;
}

int cut_size(const Multigraph& g, std::span<const VertexId> side) {
  return cut_size_of_mask(g, vertex_mask(g, side));
}

SubmodularityReport check_submodularity(const Multigraph& g, std::span<const VertexId> a,
                                        std::span<const VertexId> b) {
  const auto ma = vertex_mask(g, a);
  const auto mb = vertex_mask(g, b);
  const auto proper = [&](const std::vector<char>& m) {
    const auto k = std::count(m.begin(), m.end(), 1);
    return k > 0 && k < g.vertex_count();
  };
  if (!proper(ma) || !proper(mb)) {
    throw InputError("check_submodularity needs proper nonempty subsets");
  }
  const std::size_t n = ma.size();
  std::vector<char> both(n), either(n), a_only(n), b_only(n);
  for (std::size_t i = 0; i < n; ++i) {
    both[i] = ma[i] && mb[i];
    either[i] = ma[i] || mb[i];
    a_only[i] = ma[i] && !mb[i];
    b_only[i] = mb[i] && !ma[i];
  }
  // Empty or full sets have an empty boundary, so degenerate terms give 0.
  SubmodularityReport r;
  r.cut_a = cut_size_of_mask(g, ma);
  r.cut_b = cut_size_of_mask(g, mb);
  r.cut_intersection = cut_size_of_mask(g, both);
  r.cut_union = cut_size_of_mask(g, either);
  r.cut_a_minus_b = cut_size_of_mask(g, a_only);
  r.cut_b_minus_a = cut_size_of_mask(g, b_only);
  const int lhs = r.cut_a + r.cut_b;
  r.pass = lhs >= r.cut_intersection + r.cut_union && lhs >= r.cut_a_minus_b + r.cut_b_minus_a;
  return r;
}

Subdivision subdivide_edge(const Multigraph& g, EdgeId e, int times) {
  if (!g.has_edge(e)) throw InputError("unknown edge " + std::to_string(e));
  if (times != 1 && times != 2) throw InputError("subdivide_edge: times must be 1 or 2");

  std::vector<std::pair<VertexId, VertexId>> ends;
  ends.reserve(static_cast<std::size_t>(g.edge_count() + times));
  for (const Edge& x : g.edges()) ends.emplace_back(x.u, x.v);

  Subdivision out;
  const Edge old = g.edge(e);
  VertexId prev = old.u;
  for (int i = 0; i < times; ++i) out.inserted.push_back(g.vertex_count() + i);
  out.edge_origin.resize(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId i = 0; i < g.edge_count(); ++i) out.edge_origin[static_cast<std::size_t>(i)] = i;

  ends[static_cast<std::size_t>(e)] = {prev, out.inserted.front()};
  prev = out.inserted.front();
  for (int i = 1; i < times; ++i) {
    ends.emplace_back(prev, out.inserted[static_cast<std::size_t>(i)]);
    out.edge_origin.push_back(e);
    prev = out.inserted[static_cast<std::size_t>(i)];
  }
  ends.emplace_back(prev, old.v);
  out.edge_origin.push_back(e);

  out.graph = Multigraph(g.vertex_count() + times, ends);
  return out;
}

GlueOutcome glue(std::span<const Multigraph> copies,
                 const std::vector<std::vector<GlueMember>>& classes) {
  GlueOutcome out;
  // Offsets into the disjoint union.
  std::vector<int> offset(copies.size() + 1, 0);
  for (std::size_t c = 0; c < copies.size(); ++c) {
    offset[c + 1] = offset[c] + copies[c].vertex_count();
  }
  const int union_size = offset.back();
  std::vector<int> class_of(static_cast<std::size_t>(union_size), -1);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const GlueMember& m : classes[k]) {
      if (m.copy < 0 || static_cast<std::size_t>(m.copy) >= copies.size() ||
          !copies[static_cast<std::size_t>(m.copy)].has_vertex(m.vertex)) {
        throw InputError("glue: class member refers to an unknown copy or vertex");
      }
      auto& slot = class_of[static_cast<std::size_t>(offset[static_cast<std::size_t>(m.copy)] + m.vertex)];
      if (slot != -1) throw InputError("glue: vertex appears in more than one class");
      slot = static_cast<int>(k);
    }
  }

  // Glued ids are assigned in union order; a class takes the id of its first
  // member in that order.
  std::vector<VertexId> image(static_cast<std::size_t>(union_size), -1);
  out.class_vertices.assign(classes.size(), -1);
  VertexId next = 0;
  for (int x = 0; x < union_size; ++x) {
    const int k = class_of[static_cast<std::size_t>(x)];
    if (k < 0) {
      image[static_cast<std::size_t>(x)] = next++;
    } else {
      auto& cv = out.class_vertices[static_cast<std::size_t>(k)];
      if (cv < 0) cv = next++;
      image[static_cast<std::size_t>(x)] = cv;
    }
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (out.class_vertices[k] < 0) throw InputError("glue: empty identification class");
  }

  std::vector<std::pair<VertexId, VertexId>> ends;
  out.vertex_maps.resize(copies.size());
  for (std::size_t c = 0; c < copies.size(); ++c) {
    auto& map = out.vertex_maps[c];
    for (VertexId v = 0; v < copies[c].vertex_count(); ++v) {
      map.push_back(image[static_cast<std::size_t>(offset[c] + v)]);
    }
    for (const Edge& e : copies[c].edges()) {
      ends.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    }
  }
  out.graph = Multigraph(next, ends);
  return out;
}

std::vector<int> component_labels(const Multigraph& g, const std::vector<char>& removed) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, -1);
  std::vector<VertexId> stack;
  int next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (removed[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (removed[static_cast<std::size_t>(y)] || label[static_cast<std::size_t>(y)] >= 0) continue;
        label[static_cast<std::size_t>(y)] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  return label;
}

int component_count_without(const Multigraph& g, const std::vector<char>& removed) {
  const auto labels = component_labels(g, removed);
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  return count;
}

}  // namespace glc
