#include "glc/morphism.hpp"

#include <string>

#include "glc/errors.hpp"

namespace glc {

GraphMorphism::GraphMorphism(GraphPtr domain, GraphPtr codomain, std::vector<VertexId> vertex_map,
                             std::vector<EdgeImage> edge_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (!domain_ || !codomain_) throw InputError("morphism needs a domain and a codomain");
  if (vertex_map_.size() != static_cast<std::size_t>(domain_->vertex_count()) ||
      edge_map_.size() != static_cast<std::size_t>(domain_->edge_count())) {
    throw InputError("morphism maps are not total");
  }
  for (VertexId x : vertex_map_) {
    if (!codomain_->has_vertex(x)) throw InputError("vertex map leaves the codomain");
  }
  for (const Edge& e : domain_->edges()) {
    const EdgeImage& im = edge_map_[static_cast<std::size_t>(e.id)];
    const VertexId a = map_vertex(e.u);
    const VertexId b = map_vertex(e.v);
    if (im.collapses()) {
      if (!codomain_->has_vertex(im.target) || a != im.target || b != im.target) {
        throw InputError("edge " + std::to_string(e.id) + " collapses to a vertex its ends do not map to");
      }
    } else {
      if (!codomain_->has_edge(im.target)) throw InputError("edge map leaves the codomain");
      const Edge& f = codomain_->edge(im.target);
      if (!((f.u == a && f.v == b) || (f.u == b && f.v == a))) {
        throw InputError("edge " + std::to_string(e.id) + " is not mapped incidence-preservingly");
      }
    }
  }
}

GraphMorphism GraphMorphism::identity(GraphPtr g) {
  std::vector<VertexId> vm(static_cast<std::size_t>(g->vertex_count()));
  for (VertexId v = 0; v < g->vertex_count(); ++v) vm[static_cast<std::size_t>(v)] = v;
  std::vector<EdgeImage> em;
  for (EdgeId e = 0; e < g->edge_count(); ++e) em.push_back(EdgeImage::to_edge(e));
  return GraphMorphism(g, g, std::move(vm), std::move(em));
}

std::optional<EdgeId> GraphMorphism::preimage_edge(EdgeId e) const {
  std::optional<EdgeId> found;
  for (EdgeId d = 0; d < domain_->edge_count(); ++d) {
    const EdgeImage& im = edge_map_[static_cast<std::size_t>(d)];
    if (!im.collapses() && im.target == e) {
      if (found) return std::nullopt;
      found = d;
    }
  }
  return found;
}

std::vector<VertexId> GraphMorphism::fibre(VertexId x) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < domain_->vertex_count(); ++v) {
    if (map_vertex(v) == x) out.push_back(v);
  }
  return out;
}

NicenessReport check_nice(const GraphMorphism& m) {
  NicenessReport r;
  const Multigraph& dom = m.domain();
  const Multigraph& cod = m.codomain();

  std::vector<int> vertex_hits(static_cast<std::size_t>(cod.vertex_count()), 0);
  for (VertexId v = 0; v < dom.vertex_count(); ++v) ++vertex_hits[static_cast<std::size_t>(m.map_vertex(v))];
  for (VertexId x = 0; x < cod.vertex_count(); ++x) {
    if (vertex_hits[static_cast<std::size_t>(x)] == 0) {
      r.vertex_surjective = false;
      if (!r.missed_vertex) r.missed_vertex = x;
    }
  }

  std::vector<int> edge_hits(static_cast<std::size_t>(cod.edge_count()), 0);
  for (const EdgeImage& im : m.edge_map()) {
    if (!im.collapses()) ++edge_hits[static_cast<std::size_t>(im.target)];
  }
  for (EdgeId e = 0; e < cod.edge_count(); ++e) {
    if (edge_hits[static_cast<std::size_t>(e)] != 1) {
      r.edge_bijective = false;
      if (!r.bad_edge) r.bad_edge = e;
    }
  }

  // Fibre of x: domain vertices over x joined by the edges collapsed onto x.
  // Union-find over domain vertices using collapsed edges only.
  std::vector<VertexId> parent(static_cast<std::size_t>(dom.vertex_count()));
  for (VertexId v = 0; v < dom.vertex_count(); ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](VertexId v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : dom.edges()) {
    if (m.map_edge(e.id).collapses()) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  }
  std::vector<VertexId> root_of(static_cast<std::size_t>(cod.vertex_count()), -1);
  for (VertexId v = 0; v < dom.vertex_count(); ++v) {
    const VertexId x = m.map_vertex(v);
    const VertexId root = find(v);
    auto& slot = root_of[static_cast<std::size_t>(x)];
    if (slot < 0) {
      slot = root;
    } else if (slot != root) {
      r.monotone = false;
      if (!r.disconnected_fibre) r.disconnected_fibre = x;
    }
  }
  return r;
}

std::vector<int> partition_index(const Multigraph& g, const VertexPartition& p) {
  std::vector<int> block(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) throw InputError("partition has an empty block");
    for (VertexId v : p.blocks[b]) {
      if (!g.has_vertex(v)) throw InputError("partition names unknown vertex " + std::to_string(v));
      auto& slot = block[static_cast<std::size_t>(v)];
      if (slot != -1) throw InputError("partition blocks overlap at vertex " + std::to_string(v));
      slot = static_cast<int>(b);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (block[static_cast<std::size_t>(v)] < 0) {
      throw InputError("partition does not cover vertex " + std::to_string(v));
    }
  }
  return block;
}

QuotientOutcome quotient(const GraphPtr& g, const VertexPartition& p) {
  const auto block = partition_index(*g, p);

  // Each block must be connected through its own edges.
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    std::vector<char> removed(static_cast<std::size_t>(g->vertex_count()), 1);
    for (VertexId v : p.blocks[b]) removed[static_cast<std::size_t>(v)] = 0;
    if (component_count_without(*g, removed) != 1) {
      throw MultiCutError("partition block " + std::to_string(b) + " induces a disconnected subgraph");
    }
  }

  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<EdgeId> provenance;
  std::vector<EdgeImage> edge_map;
  for (const Edge& e : g->edges()) {
    const int bu = block[static_cast<std::size_t>(e.u)];
    const int bv = block[static_cast<std::size_t>(e.v)];
    if (bu == bv) {
      edge_map.push_back(EdgeImage::to_vertex(bu));
    } else {
      edge_map.push_back(EdgeImage::to_edge(static_cast<EdgeId>(ends.size())));
      ends.emplace_back(bu, bv);
      provenance.push_back(e.id);
    }
  }
  auto q = share(Multigraph(static_cast<int>(p.blocks.size()), ends));
  std::vector<VertexId> vertex_map(block.begin(), block.end());
  GraphMorphism m(g, q, std::move(vertex_map), std::move(edge_map));
  return QuotientOutcome{q, std::move(m), std::move(provenance)};
}

}  // namespace glc
