// bounds.hpp - upper bounds on the length of a terminating chip-firing game.
//
// Every bound is reported with its inputs and an applicability flag;
// inapplicable bounds stay in the table so a caller can see why they were
// skipped.

#ifndef CHIPFIRE_BOUNDS_HPP
#define CHIPFIRE_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/spectral.hpp"
#include "chipfire/srg.hpp"

namespace chipfire {

enum class BoundName {
  Tardos,
  BLS,
  MainImplicit,
  CorollaryF,
  VertexTransitive,
  BlsBetter,
  DenseRegular,
  Srg,
};

const char* to_string(BoundName b);

struct BoundReport {
  BoundName name = BoundName::Tardos;
  double value = 0.0;
  std::int64_t floor_value = 0;
  bool applicable = true;
  std::string reason;  // why inapplicable; empty otherwise
  std::map<std::string, double> inputs_used;
};

/// Display rounding: floor, after absorbing round-off of at most
/// 1e-9 * max(1, |value|) so an exact integer computed in floating point
/// (e.g. 140 - 2e-14) is not pushed down to the next integer.
std::int64_t floor_bound(double value);

class BoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// N is the chip count throughout; n the vertex count.

/// s <= n N D, D the diameter.
BoundReport tardos(std::int64_t n, std::int64_t N, std::int64_t D);

/// s <= 2 n N / lambda2. Throws BoundError if lambda2 <= 0.
BoundReport bls(std::int64_t n, std::int64_t N, double lambda2);

/// s <= n (f (Delta - 1) + o (2N - Delta + 1)). Throws BoundError if f < o
/// beyond round-off or o < 0.
BoundReport main_implicit(std::int64_t n, std::int64_t N, std::int64_t max_degree, double f, double o);

/// s <= 2 n N f.
BoundReport corollary_f(std::int64_t n, std::int64_t N, double f);

/// s <= 2 (n-1) N / lambda2, applicable when the diagonal of L^dagger is
/// uniform (every vertex-transitive graph has that property).
BoundReport vertex_transitive(std::int64_t n, std::int64_t N, double lambda2, bool diag_uniform);

/// s <= 2 n N (lambda2 + lambda_n (n-1)/n - delta) / (lambda2 lambda_n).
BoundReport bls_better(std::int64_t n, std::int64_t N, double lambda2, double lambda_n, std::int64_t min_degree);

/// o <= f / (2d - n + 3) + 2 / n^2 for a d-regular graph with d > n/2 - 1.
/// Throws BoundError when the density precondition fails.
double dense_regular_o(std::int64_t n, std::int64_t d, double f);

/// s <= n(d-1)/lambda2 + N/(lambda2 eps n) + 4N/n with d = (1/2 + eps) n,
/// 0 < eps < 1/2. Reported inapplicable when 2d <= n or d >= n.
BoundReport dense_regular_s(std::int64_t n, std::int64_t N, std::int64_t d, double lambda2);

/// s <= n (k-1)/(k-2) + 2 (2N - k + 1) / c. Throws BoundError if k <= 2 or c < 1.
BoundReport srg_bound(std::int64_t n, std::int64_t k, std::int64_t c, std::int64_t N);

/// Everything about a graph the bounds need, computed once.
struct GraphAnalysis {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t diameter = 0;
  DegreeExtremes degrees;
  std::optional<std::int64_t> regular_degree;
  spectral::Spectrum spectrum;
  spectral::PinvData pinv;
  bool diag_uniform = false;
  std::optional<srg::SrgParams> srg;
};

/// Requires a connected graph with at least two vertices.
GraphAnalysis analyze(const Graph& g);

struct BoundTable {
  std::vector<BoundReport> all;  // one entry per BoundName, in enum order
  BoundReport best;

  const BoundReport& get(BoundName name) const;
};

/// Bounds excluded from best-bound selection. The dense-regular duration
/// bound is reported but not used as a cutoff: its middle term carries an
/// extra 1/n relative to what the Main Implicit Bound plus the relative
/// o-estimate give (N f / eps), so it is not certified as an upper bound.
bool eligible_for_best(BoundName name);

BoundTable bound_table(const GraphAnalysis& a, std::int64_t N);

/// analyze + bound_table.
BoundTable best_bound(const Graph& g, std::int64_t N);

}  // namespace chipfire

#endif  // CHIPFIRE_BOUNDS_HPP
