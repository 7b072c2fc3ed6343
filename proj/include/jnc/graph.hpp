#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jnc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed (CSR) adjacency form.
///
/// Neighbor lists are strictly ascending, symmetric, and free of self-loops.
/// Optional labels map dense indices back to the tokens of the source file.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Original label, or the decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;

  // Throws std::invalid_argument unless labels.size() == num_vertices().
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::size_t num_edges_ = 0;
  std::vector<std::string> labels_;
};

struct ParsedEdgeList {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
  // Set when a canonical "# n=<n> m=<m>" header was found; tokens are then
  // dense indices and `labels` is empty.
  bool canonical = false;
  std::size_t declared_vertices = 0;

  std::size_t num_vertices() const { return canonical ? declared_vertices : labels.size(); }
};

// Whitespace-separated "u v" lines; '#' and '%' lines are comments. Extra
// tokens after the first two are ignored. Throws ParseError.
ParsedEdgeList parse_edge_list(std::istream& in);
ParsedEdgeList parse_edge_list_text(const std::string& text);

// Drops self-loops and merges parallel edges. Throws std::out_of_range if an
// endpoint is >= n.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

// parse + build, with labels attached for non-canonical input.
Graph graph_from_parsed(const ParsedEdgeList& parsed);
Graph read_edge_list_file(const std::string& path, ParsedEdgeList* report = nullptr);

// "# n=<n> m=<m>" followed by one "u v" line per edge, u < v, sorted.
void write_canonical(std::ostream& out, const Graph& g);
std::string to_canonical_string(const Graph& g);

struct ComponentInfo {
  std::vector<std::uint32_t> component_id;
  std::vector<std::size_t> component_sizes;
  bool is_connected = true;
};

ComponentInfo connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_index;  // new index -> old index
};

// Ties go to the component holding the smallest vertex index. Labels are
// carried over. Throws std::invalid_argument on an empty graph.
InducedSubgraph largest_connected_component(const Graph& g);

// Bounds-checked degree; throws std::out_of_range.
std::size_t degree(const Graph& g, Vertex i);

double local_clustering(const Graph& g, Vertex v);
double average_clustering(const Graph& g);

}  // namespace jnc
