#include "chipfire/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace chipfire {

namespace {

double as_d(std::int64_t v) { return static_cast<double>(v); }

BoundReport make(BoundName name, double value, std::map<std::string, double> inputs) {
  BoundReport r;
  r.name = name;
  r.value = value;
  r.floor_value = floor_bound(value);
  r.applicable = true;
  r.inputs_used = std::move(inputs);
  return r;
}

BoundReport inapplicable(BoundName name, std::string reason, std::map<std::string, double> inputs) {
  BoundReport r;
  r.name = name;
  r.applicable = false;
  r.reason = std::move(reason);
  r.inputs_used = std::move(inputs);
  return r;
}

}  // namespace

const char* to_string(BoundName b) {
  switch (b) {
    case BoundName::Tardos: return "Tardos";
    case BoundName::BLS: return "BLS";
    case BoundName::MainImplicit: return "MainImplicit";
    case BoundName::CorollaryF: return "CorollaryF";
    case BoundName::VertexTransitive: return "VertexTransitive";
    case BoundName::BlsBetter: return "BlsBetter";
    case BoundName::DenseRegular: return "DenseRegular";
    case BoundName::Srg: return "Srg";
  }
  return "?";
}

std::int64_t floor_bound(double value) {
  const double slack = 1e-9 * std::max(1.0, std::abs(value));
  return static_cast<std::int64_t>(std::floor(value + slack));
}

BoundReport tardos(std::int64_t n, std::int64_t N, std::int64_t D) {
  return make(BoundName::Tardos, as_d(n) * as_d(N) * as_d(D), {{"n", as_d(n)}, {"N", as_d(N)}, {"D", as_d(D)}});
}

BoundReport bls(std::int64_t n, std::int64_t N, double lambda2) {
  if (!(lambda2 > 0.0)) throw BoundError("bls: lambda2 must be positive");
  return make(BoundName::BLS, 2.0 * as_d(n) * as_d(N) / lambda2,
              {{"n", as_d(n)}, {"N", as_d(N)}, {"lambda2", lambda2}});
}

BoundReport main_implicit(std::int64_t n, std::int64_t N, std::int64_t max_degree, double f, double o) {
  if (o < 0.0 || f < o - 1e-12 * std::max(1.0, f)) {
    throw BoundError("main_implicit: requires f >= o >= 0");
  }
  const double Delta = as_d(max_degree);
  const double value = as_d(n) * (f * (Delta - 1.0) + o * (2.0 * as_d(N) - Delta + 1.0));
  return make(BoundName::MainImplicit, value,
              {{"n", as_d(n)}, {"N", as_d(N)}, {"Delta", Delta}, {"f", f}, {"o", o}});
}

BoundReport corollary_f(std::int64_t n, std::int64_t N, double f) {
  return make(BoundName::CorollaryF, 2.0 * as_d(n) * as_d(N) * f, {{"n", as_d(n)}, {"N", as_d(N)}, {"f", f}});
}

BoundReport vertex_transitive(std::int64_t n, std::int64_t N, double lambda2, bool diag_uniform) {
  std::map<std::string, double> in{{"n", as_d(n)}, {"N", as_d(N)}, {"lambda2", lambda2}};
  if (!diag_uniform) return inapplicable(BoundName::VertexTransitive, "diagonal of L^dagger is not uniform", in);
  if (!(lambda2 > 0.0)) throw BoundError("vertex_transitive: lambda2 must be positive");
  return make(BoundName::VertexTransitive, 2.0 * as_d(n - 1) * as_d(N) / lambda2, std::move(in));
}

BoundReport bls_better(std::int64_t n, std::int64_t N, double lambda2, double lambda_n, std::int64_t min_degree) {
  if (!(lambda2 > 0.0)) throw BoundError("bls_better: lambda2 must be positive");
  const double nn = as_d(n);
  const double f_bound = (lambda2 + lambda_n * (nn - 1.0) / nn - as_d(min_degree)) / (lambda2 * lambda_n);
  return make(BoundName::BlsBetter, 2.0 * nn * as_d(N) * f_bound,
              {{"n", nn}, {"N", as_d(N)}, {"lambda2", lambda2}, {"lambdaN", lambda_n}, {"delta", as_d(min_degree)}});
}

double dense_regular_o(std::int64_t n, std::int64_t d, double f) {
  // d > n/2 - 1  <=>  2d - n + 2 > 0
  if (2 * d - n + 2 <= 0) throw BoundError("dense_regular_o: requires d > n/2 - 1");
  return f / as_d(2 * d - n + 3) + 2.0 / (as_d(n) * as_d(n));
}

BoundReport dense_regular_s(std::int64_t n, std::int64_t N, std::int64_t d, double lambda2) {
  const double eps = as_d(d) / as_d(n) - 0.5;
  std::map<std::string, double> in{{"n", as_d(n)}, {"N", as_d(N)}, {"k", as_d(d)}, {"lambda2", lambda2}, {"eps", eps}};
  if (2 * d <= n || d >= n) return inapplicable(BoundName::DenseRegular, "needs n/2 < d < n", std::move(in));
  if (!(lambda2 > 0.0)) throw BoundError("dense_regular_s: lambda2 must be positive");
  const double nn = as_d(n);
  const double value = nn * as_d(d - 1) / lambda2 + as_d(N) / (lambda2 * eps * nn) + 4.0 * as_d(N) / nn;
  return make(BoundName::DenseRegular, value, std::move(in));
}

BoundReport srg_bound(std::int64_t n, std::int64_t k, std::int64_t c, std::int64_t N) {
  if (k <= 2) throw BoundError("srg_bound: requires k > 2");
  if (c < 1) throw BoundError("srg_bound: requires c >= 1");
  const double value = as_d(n) * as_d(k - 1) / as_d(k - 2) + 2.0 * as_d(2 * N - k + 1) / as_d(c);
  return make(BoundName::Srg, value, {{"n", as_d(n)}, {"N", as_d(N)}, {"k", as_d(k)}, {"c", as_d(c)}});
}

GraphAnalysis analyze(const Graph& g) {
  if (g.vertex_count() < 2) throw BoundError("analyze: need at least two vertices");
  if (!is_connected(g)) throw GraphError(GraphErrc::Disconnected, "analyze: graph is disconnected");
  GraphAnalysis a;
  a.n = static_cast<std::int64_t>(g.vertex_count());
  a.m = static_cast<std::int64_t>(g.edge_count());
  a.diameter = diameter(g);
  a.degrees = degree_extremes(g);
  if (a.degrees.min_degree == a.degrees.max_degree) a.regular_degree = a.degrees.min_degree;
  a.spectrum = spectral::eigendecompose(laplacian(g));
  a.pinv = spectral::pinv_spectral(a.spectrum);
  a.diag_uniform = spectral::diag_uniform(a.pinv, 1e-9);
  a.srg = srg::recognize(g);
  return a;
}

const BoundReport& BoundTable::get(BoundName name) const {
  for (const auto& r : all) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(std::string("bound table has no ") + to_string(name));
}

bool eligible_for_best(BoundName name) { return name != BoundName::DenseRegular; }

BoundTable bound_table(const GraphAnalysis& a, std::int64_t N) {
  const double l2 = a.spectrum.lambda2();
  const double ln = a.spectrum.lambda_max();
  BoundTable t;
  t.all.push_back(tardos(a.n, N, a.diameter));
  t.all.push_back(bls(a.n, N, l2));
  t.all.push_back(main_implicit(a.n, N, a.degrees.max_degree, a.pinv.f, a.pinv.o));
  t.all.push_back(corollary_f(a.n, N, a.pinv.f));
  t.all.push_back(vertex_transitive(a.n, N, l2, a.diag_uniform));
  t.all.push_back(bls_better(a.n, N, l2, ln, a.degrees.min_degree));
  if (a.regular_degree) {
    t.all.push_back(dense_regular_s(a.n, N, *a.regular_degree, l2));
  } else {
    t.all.push_back(inapplicable(BoundName::DenseRegular, "graph is not regular", {{"n", static_cast<double>(a.n)}}));
  }
  if (a.srg && a.srg->k > 2 && a.srg->c >= 1) {
    t.all.push_back(srg_bound(a.n, a.srg->k, a.srg->c, N));
  } else {
    t.all.push_back(inapplicable(BoundName::Srg, a.srg ? "SRG with k <= 2" : "graph is not strongly regular",
                                 {{"n", static_cast<double>(a.n)}}));
  }

  const BoundReport* best = nullptr;
  for (const auto& r : t.all) {
    if (!r.applicable || !eligible_for_best(r.name)) continue;
    if (!best || r.value < best->value) best = &r;
  }
  t.best = *best;  // Tardos is always applicable
  return t;
}

BoundTable best_bound(const Graph& g, std::int64_t N) { return bound_table(analyze(g), N); }

}  // namespace chipfire
