#include "chipfire/graph.hpp"

#include <algorithm>
#include <queue>

namespace chipfire {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  if (n == 0) {
    throw GraphError(GraphErrc::EmptyGraph, "graph must have at least one vertex");
  }
  Graph g;
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw GraphError(GraphErrc::VertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw GraphError(GraphErrc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError(GraphErrc::DuplicateEdge, "duplicate edge (" + std::to_string(dup->first) +
                                                   "," + std::to_string(dup->second) + ")");
  }

  g.adjacency_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  g.degrees_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_[i].begin(), g.adjacency_[i].end());
    g.degrees_[i] = static_cast<std::int64_t>(g.adjacency_[i].size());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::complement() const {
  const auto n = vertex_count();
  std::vector<Edge> comp;
  comp.reserve(n * (n - 1) / 2 - edge_count());
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
      if (!adjacent(u, v)) comp.emplace_back(u, v);
    }
  }
  return from_edge_list(n, comp);
}

LaplacianMatrix laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  LaplacianMatrix L = LaplacianMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) L(i, i) = g.degrees()[static_cast<std::size_t>(i)];
  for (auto [u, v] : g.edges()) {
    L(u, v) = -1;
    L(v, u) = -1;
  }
  return L;
}

Eigen::MatrixXd laplacian_real(const Graph& g) { return laplacian(g).cast<double>(); }

std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::queue<Vertex> frontier;
  dist.at(static_cast<std::size_t>(source)) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t d) { return d < 0; });
}

std::int64_t diameter(const Graph& g) {
  std::int64_t best = 0;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.vertex_count(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d < 0) throw GraphError(GraphErrc::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

DegreeExtremes degree_extremes(const Graph& g) {
  auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
  return {*lo, *hi};
}

bool is_regular(const Graph& g, std::int64_t* degree_out) {
  auto ext = degree_extremes(g);
  if (ext.min_degree != ext.max_degree) return false;
  if (degree_out) *degree_out = ext.min_degree;
  return true;
}

}  // namespace chipfire
