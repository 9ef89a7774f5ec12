#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "glc/morphism.hpp"
#include "glc/multigraph.hpp"

namespace glc {

inline constexpr int kGraphFormatVersion = 1;

/// Canonical text form:
///
///   {
///     "format": "multigraph",
///     "version": 1,
///     "vertices": [0, 1, 2],
///     "edges": [
///       [0, 0, 1],
///       [1, 1, 1]
///     ]
///   }
///
/// Emission is byte-stable; parsing accepts any JSON with the same fields.
std::string format_graph(const Multigraph& g);

/// Throws InputError with a diagnostic on malformed input or non-dense ids.
Multigraph parse_graph(std::string_view text);

Multigraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Multigraph& g);

/// Undirected DOT; parallel edges are repeated and loops are self-edges.
std::string to_dot(const Multigraph& g, std::string_view name = "G");

/// Bonding-map table: one row per domain vertex and per domain edge.
std::string format_morphism(const GraphMorphism& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace glc
