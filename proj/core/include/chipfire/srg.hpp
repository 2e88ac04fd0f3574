// srg.hpp - strongly regular graph parameters and exact closed forms.
//
// Everything here is exact. The adjacency eigenvalues theta and tau are
// quadratic surds in general, but every closed form for the Laplacian
// pseudo-inverse only needs theta + tau = a - c and
// (k - theta)(k - tau) = n c, both integers.

#ifndef CHIPFIRE_SRG_HPP
#define CHIPFIRE_SRG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chipfire/graph.hpp"

namespace chipfire::srg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

/// SRG(n, k, a, c): k-regular on n vertices, adjacent pairs share a common
/// neighbours, non-adjacent pairs share c.
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t a = 0;
  std::int64_t c = 0;

  std::int64_t d() const noexcept { return a - c; }
  /// (a - c)^2 + 4 (k - c); theta and tau are (d +- sqrt(disc)) / 2.
  std::int64_t disc() const noexcept { return d() * d() + 4 * (k - c); }

  bool is_pentagon() const noexcept { return n == 5 && k == 2 && a == 0 && c == 1; }
  bool is_complete() const noexcept { return k == n - 1; }

  /// Rejects negative entries and k >= n; does not check feasibility.
  static SrgParams make(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t c);

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Parameters of g when it is strongly regular, verified through
/// A^2 = kI + aA + c(J - I - A) in integer arithmetic. Complete and
/// edgeless graphs are rejected (c or a would be undefined).
std::optional<SrgParams> recognize(const Graph& g);

/// rational + coeff * sqrt(radicand), radicand >= 0 and squarefree-agnostic.
/// A perfect-square radicand is folded into the rational part.
struct QuadraticSurd {
  Rational rational;
  Rational coeff;
  Integer radicand;

  bool is_rational() const { return coeff == 0 || radicand == 0; }
  double to_double() const;
  int sign() const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

  static QuadraticSurd of(const Rational& r) { return {r, 0, 0}; }
};

struct ThetaTau {
  QuadraticSurd theta;
  QuadraticSurd tau;
  bool rational = false;
};

ThetaTau theta_tau(const SrgParams& p);

/// The three distinct entry values of L^dagger for a connected SRG.
struct ExactLdagEntries {
  Rational diag;
  Rational adj;
  Rational nonadj;

  Rational f() const { return diag; }
  Rational o() const;
};

/// Requires c >= 1 (connected, non-complete).
ExactLdagEntries ldag_entries(const SrgParams& p);

enum class CheckStatus { Pass, Fail, Skipped };

struct LemmaCheck {
  std::string name;
  std::string statement;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  /// k == 2a - c + 3, which only the pentagon attains.
  bool taylor_equality = false;

  bool all_passed() const;
  const LemmaCheck* find(const std::string& name) const;
};

/// Runs every parameter identity and inequality a connected non-complete
/// SRG must satisfy. Failures are reported, not thrown, so infeasible
/// parameter sets can be diagnosed.
LemmaReport lemma_suite(const SrgParams& p);

struct FoEstimates {
  Rational f_bound;  // 1 / (k - 2)
  Rational o_bound;  // 2 / (n c)
};

/// Throws std::invalid_argument when k <= 2, c == 0 or the graph is complete.
FoEstimates fo_estimates(const SrgParams& p);

const char* to_string(CheckStatus s);

}  // namespace chipfire::srg

#endif  // CHIPFIRE_SRG_HPP
