#include "chipfire/srg.hpp"

#include <cmath>
#include <stdexcept>

namespace chipfire::srg {

namespace {

Integer isqrt_exact_or_neg(const Integer& v) {
  if (v < 0) return -1;
  Integer r = boost::multiprecision::sqrt(v);
  return r * r == v ? r : Integer(-1);
}

QuadraticSurd normalized(QuadraticSurd s) {
  if (s.coeff == 0 || s.radicand == 0) {
    s.coeff = 0;
    s.radicand = 0;
    return s;
  }
  if (Integer root = isqrt_exact_or_neg(s.radicand); root >= 0) {
    s.rational += s.coeff * Rational(root);
    s.coeff = 0;
    s.radicand = 0;
  }
  return s;
}

Integer common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return y.is_rational() ? Integer(0) : y.radicand;
  if (y.is_rational() || x.radicand == y.radicand) return x.radicand;
  throw std::domain_error("quadratic surds with different radicands");
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

SrgParams SrgParams::make(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t c) {
  if (n < 1 || k < 0 || a < 0 || c < 0 || k >= n) {
    throw std::invalid_argument("invalid SRG parameters (" + str(n) + "," + str(k) + "," + str(a) +
                                "," + str(c) + ")");
  }
  return {n, k, a, c};
}

std::optional<SrgParams> recognize(const Graph& g) {
  std::int64_t k = 0;
  if (!is_regular(g, &k)) return std::nullopt;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (k == 0 || k == n - 1) return std::nullopt;

  const auto L = laplacian(g);
  const LaplacianMatrix A = LaplacianMatrix::Identity(n, n) * k - L;
  const LaplacianMatrix A2 = A * A;

  std::optional<std::int64_t> a;
  std::optional<std::int64_t> c;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      auto& slot = A(i, j) != 0 ? a : c;
      if (!slot) slot = A2(i, j);
    }
  }
  // Not complete and not edgeless, so both pair types exist.
  const LaplacianMatrix J = LaplacianMatrix::Ones(n, n);
  const LaplacianMatrix I = LaplacianMatrix::Identity(n, n);
  const LaplacianMatrix rhs = k * I + (*a) * A + (*c) * (J - I - A);
  if (A2 != rhs) return std::nullopt;
  return SrgParams{n, k, *a, *c};
}

double QuadraticSurd::to_double() const {
  double v = rational.convert_to<double>();
  if (!is_rational()) v += coeff.convert_to<double>() * std::sqrt(radicand.convert_to<double>());
  return v;
}

int QuadraticSurd::sign() const {
  auto sgn = [](const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
  const auto s = normalized(*this);
  if (s.is_rational()) return sgn(s.rational);
  const int rs = sgn(s.rational);
  const int cs = sgn(s.coeff);
  if (rs == 0 || rs == cs) return cs;
  const Rational lhs = s.rational * s.rational;
  const Rational rhs = s.coeff * s.coeff * Rational(s.radicand);
  if (lhs > rhs) return rs;
  if (lhs < rhs) return cs;
  return 0;
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Integer rad = common_radicand(x, y);
  return normalized({x.rational + y.rational, x.coeff + y.coeff, rad});
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Integer rad = common_radicand(x, y);
  return normalized({x.rational - y.rational, x.coeff - y.coeff, rad});
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Integer rad = common_radicand(x, y);
  const Rational xc = x.is_rational() ? Rational(0) : x.coeff;
  const Rational yc = y.is_rational() ? Rational(0) : y.coeff;
  return normalized({x.rational * y.rational + xc * yc * Rational(rad),
                     x.rational * yc + xc * y.rational, rad});
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  const auto a = normalized(x);
  const auto b = normalized(y);
  return a.rational == b.rational && a.coeff == b.coeff && a.radicand == b.radicand;
}

ThetaTau theta_tau(const SrgParams& p) {
  const Rational half(1, 2);
  const Rational d(p.d());
  const Integer disc(p.disc());
  ThetaTau out;
  out.theta = normalized({d * half, half, disc});
  out.tau = normalized({d * half, -half, disc});
  out.rational = out.theta.is_rational();
  return out;
}

Rational ExactLdagEntries::o() const {
  const Rational x = boost::multiprecision::abs(adj);
  const Rational y = boost::multiprecision::abs(nonadj);
  return x > y ? x : y;
}

ExactLdagEntries ldag_entries(const SrgParams& p) {
  if (p.c < 1 || p.is_complete()) {
    throw std::invalid_argument("closed-form L^dagger needs a connected non-complete SRG (c >= 1)");
  }
  const Integer n(p.n);
  const Integer k(p.k);
  const Integer d(p.d());
  // n (k - theta)(k - tau) = n^2 c
  const Integer den = n * n * Integer(p.c);
  ExactLdagEntries e;
  e.diag = Rational(k * (n - 2) - (n - 1) * d, den);
  e.adj = Rational(n - 2 * k + d, den);
  e.nonadj = Rational(d - 2 * k, den);
  return e;
}

bool LemmaReport::all_passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

const LemmaCheck* LemmaReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

LemmaReport lemma_suite(const SrgParams& p) {
  LemmaReport rep;
  auto add = [&rep](std::string name, std::string statement, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), std::move(statement),
                          ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  };
  const auto [n, k, a, c] = p;
  const std::int64_t d = p.d();
  const auto tt = theta_tau(p);
  const auto K = QuadraticSurd::of(Rational(k));
  const QuadraticSurd gap_product = (K - tt.theta) * (K - tt.tau);

  add("connected_c", "c >= 1", c >= 1, "c=" + str(c));
  add("eigenvalue_signs", "theta > 0 > tau", tt.theta.sign() > 0 && tt.tau.sign() < 0,
      "theta~" + std::to_string(tt.theta.to_double()) + " tau~" + std::to_string(tt.tau.to_double()));

  const QuadraticSurd sum = tt.theta + tt.tau;
  add("eigenvalue_sum", "theta + tau = a - c", sum == QuadraticSurd::of(Rational(d)),
      "theta+tau=" + to_string(sum.rational));

  const std::int64_t via_degree = k * (k - d - 1) + c;
  add("gap_product_degree", "(k-theta)(k-tau) = k(k-d-1) + c",
      gap_product == QuadraticSurd::of(Rational(via_degree)),
      "lhs=" + to_string(gap_product.rational) + " rhs=" + str(via_degree));
  add("gap_product_nc", "(k-theta)(k-tau) = n c", gap_product == QuadraticSurd::of(Rational(n * c)),
      "lhs=" + to_string(gap_product.rational) + " rhs=" + str(n * c));

  add("feasibility", "k(k-a-1) = (n-k-1) c", k * (k - a - 1) == (n - k - 1) * c,
      "lhs=" + str(k * (k - a - 1)) + " rhs=" + str((n - k - 1) * c));

  // Taylor-Levingstone: k >= 2a - c + 3, equality exactly for the pentagon.
  const std::int64_t taylor_rhs = 2 * a - c + 3;
  rep.taylor_equality = (k == taylor_rhs);
  add("taylor_levingstone", "k >= 2a - c + 3, equality iff pentagon",
      k >= taylor_rhs && (rep.taylor_equality == p.is_pentagon()),
      "k=" + str(k) + " 2a-c+3=" + str(taylor_rhs) + (rep.taylor_equality ? " (equality)" : ""));

  if (p.is_pentagon() || p.is_complete()) {
    rep.checks.push_back({"d_upper", "d <= (k-5)/2 unless G is K_n or C_5", CheckStatus::Skipped,
                          p.is_pentagon() ? "pentagon" : "complete graph"});
  } else {
    add("d_upper", "d <= (k-5)/2 unless G is K_n or C_5", 2 * d <= k - 5,
        "2d=" + str(2 * d) + " k-5=" + str(k - 5));
  }

  add("n_minus_k_lower", "2(n-k) >= -d", 2 * (n - k) >= -d,
      "2(n-k)=" + str(2 * (n - k)) + " -d=" + str(-d));
  return rep;
}

FoEstimates fo_estimates(const SrgParams& p) {
  if (p.k <= 2) throw std::invalid_argument("f/o estimates need k > 2");
  if (p.c < 1 || p.is_complete()) throw std::invalid_argument("f/o estimates need a connected non-complete SRG");
  return {Rational(1, p.k - 2), Rational(2, p.n * p.c)};
}

}  // namespace chipfire::srg
