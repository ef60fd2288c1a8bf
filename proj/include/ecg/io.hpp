#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "ecg/edge_weights.hpp"
#include "ecg/graph.hpp"
#include "ecg/partition.hpp"

namespace ecg {

// Malformed or inconsistent input data (file contents, not API misuse).
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

enum class Indexing { zero_based, one_based };

// Edge-list reader. Lines are "u v" or "u v w", whitespace separated;
// '#' and '%' start comment lines. Vertex count is 1 + max id seen after
// normalization, so id gaps become isolated vertices. With weighted ==
// false a third column is ignored and every edge gets w = 1.
Graph load_edge_list(std::istream& in, Indexing indexing, bool weighted);

// Partition reader: one "vertex cluster" pair per line, every vertex in
// 0..max covered exactly once. One-based vertex ids match LFR community
// files. Cluster labels are compacted to dense values.
Partition load_partition(std::istream& in, Indexing indexing);

// Per-vertex 0/1 flags, "vertex flag" per line, full coverage required.
std::vector<std::uint8_t> load_mask(std::istream& in, Indexing indexing);

// All writers emit deterministic, byte-stable text: vertices ascending,
// edges in (u, v) lexicographic order, reals with six decimal places.
void write_partition(const Partition& p, std::ostream& out);
void write_mask(const std::vector<std::uint8_t>& mask, std::ostream& out);
void write_edge_list(const Graph& g, std::ostream& out, bool weighted);
void write_weighted_edges(const Graph& g, const EdgeWeightMap& w, std::ostream& out);

// DOT export; pen width is proportional to the edge weight and the
// highlighted vertex (if any) is drawn double-circled. `names` swaps the
// printed vertex ids (sub-graphs keep their original ids this way).
void write_dot(const Graph& g, const EdgeWeightMap& w, std::optional<VertexId> highlight,
               std::ostream& out, const std::vector<VertexId>* names = nullptr);

} // namespace ecg
