#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blockselect {

using Vertex = std::int32_t;
using Count = std::int64_t;

struct Edge {
    Vertex u;
    Vertex v; // u < v

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct LoadOptions {
    bool one_indexed = false;
    bool drop_duplicates = false;
};

// Immutable simple undirected graph. Vertex ids are dense 0..n-1; the id
// each vertex had in its source file is kept in original_ids().
class Graph {
  public:
    Graph() = default;

    // Builds from 0-based endpoints. Throws InputError on self-loops,
    // duplicates or out-of-range endpoints.
    Graph(Vertex n, std::vector<Edge> edges, std::vector<std::int64_t> original_ids = {});

    Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
    Count num_edges() const { return static_cast<Count>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex u) const { return adjacency_[static_cast<std::size_t>(u)]; }
    Count degree(Vertex u) const { return static_cast<Count>(adjacency_[static_cast<std::size_t>(u)].size()); }
    const std::vector<Count> &degrees() const { return degrees_; }
    Count max_degree() const;

    const std::vector<std::int64_t> &original_ids() const { return original_ids_; }

    bool has_edge(Vertex u, Vertex v) const;

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Count> degrees_;
    std::vector<std::int64_t> original_ids_;
};

// Parses a whitespace-delimited edge list ('#' comments, LF or CRLF).
// Sparse id sets are compacted in first-seen order; a dense id range is
// kept as is.
Graph load_edge_list(std::istream &in, const LoadOptions &options = {});
Graph load_edge_list_file(const std::string &path, const LoadOptions &options = {});

// Writes "u v" lines with 0-based dense ids.
void write_edge_list(std::ostream &out, const Graph &g);

// Induced subgraph on the largest connected component; ties go to the
// component holding the smallest vertex id. Ids are recompacted in order.
Graph largest_component(const Graph &g);

// Per-vertex label file: "vertex label" lines, vertex ids in the graph's
// original id space.
std::vector<std::int32_t> load_vertex_labels(std::istream &in, const Graph &g);

} // namespace blockselect
