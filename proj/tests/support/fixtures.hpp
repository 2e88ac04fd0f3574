// fixtures.hpp - shared graph suites for tests.

#ifndef CHIPFIRE_TESTS_FIXTURES_HPP
#define CHIPFIRE_TESTS_FIXTURES_HPP

#include <vector>

#include "chipfire/chipfire.hpp"
#include "oracles.hpp"

namespace fixtures {

inline oracle::AdjMatrix adjacency_of(const chipfire::Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(u, v);
  return oracle::adjacency(g.vertex_count(), e);
}

inline chipfire::Graph path(int n) {
  std::vector<chipfire::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return chipfire::Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

/// Every named generator at desk scale.
inline std::vector<chipfire::GeneratedGraph> generator_suite() {
  using namespace chipfire;
  return {petersen(),    schlafli(),    paley(5),      paley(13),     paley(29),   paley(109),
          triangular(4), triangular(5), triangular(21), complete(2),  complete(4), complete(7),
          cycle(5),      cycle(6),      cycle(9),       gnp(12, 0.4, 1), gnp(20, 0.3, 2), gnp(30, 0.5, 42)};
}

/// The strongly regular fixtures with closed-form checks.
inline std::vector<chipfire::GeneratedGraph> srg_suite() {
  using namespace chipfire;
  return {petersen(), schlafli(), paley(13), paley(109), triangular(5), triangular(21)};
}

}  // namespace fixtures

#endif  // CHIPFIRE_TESTS_FIXTURES_HPP
