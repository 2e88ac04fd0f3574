// graph.hpp - simple undirected graphs, Laplacians and elementary metrics.

#ifndef CHIPFIRE_GRAPH_HPP
#define CHIPFIRE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace chipfire {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrc {
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  EmptyGraph,
  Disconnected,
  Malformed,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once, canonicalized with u < v and sorted
/// lexicographically. Adjacency lists are sorted.
class Graph {
 public:
  /// Builds a graph, rejecting out-of-range endpoints, self-loops and
  /// duplicate edges ((u,v) and (v,u) count as the same edge).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::int64_t degree(Vertex v) const { return static_cast<std::int64_t>(neighbors(v).size()); }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

  /// O(log d) adjacency test.
  bool adjacent(Vertex u, Vertex v) const;

  /// Same vertex count, edge set replaced by its complement.
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::int64_t> degrees_;
};

/// n x n symmetric integer matrix: degree on the diagonal, -1 for edges.
using LaplacianMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

LaplacianMatrix laplacian(const Graph& g);

/// Laplacian as a double matrix, for the numerical routines.
Eigen::MatrixXd laplacian_real(const Graph& g);

bool is_connected(const Graph& g);

/// Largest BFS distance over all ordered vertex pairs. Throws
/// GraphError(Disconnected) on a disconnected graph.
std::int64_t diameter(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source);

struct DegreeExtremes {
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
};

DegreeExtremes degree_extremes(const Graph& g);

/// True when all degrees agree; the common degree goes to `degree_out`.
bool is_regular(const Graph& g, std::int64_t* degree_out = nullptr);

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// Lines whose first non-blank character is '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace chipfire

#endif  // CHIPFIRE_GRAPH_HPP
