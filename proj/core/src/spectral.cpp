#include "chipfire/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

namespace chipfire::spectral {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& A) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (i != j) sum += A(i, j) * A(i, j);
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing A(p,q); A stays symmetric, V accumulates.
void rotate(Eigen::MatrixXd& A, Eigen::MatrixXd& V, Eigen::Index p, Eigen::Index q) {
  const double apq = A(p, q);
  const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Eigen::Index n = A.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = A(k, p);
    const double akq = A(k, q);
    A(k, p) = A(p, k) = c * akp - s * akq;
    A(k, q) = A(q, k) = s * akp + c * akq;
  }
  A(p, p) -= t * apq;
  A(q, q) += t * apq;
  A(p, q) = A(q, p) = 0.0;

  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = V(k, p);
    const double vkq = V(k, q);
    V(k, p) = c * vkp - s * vkq;
    V(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

double Spectrum::scale() const { return std::max(1.0, size() > 0 ? std::abs(lambda_max()) : 1.0); }

Spectrum eigendecompose(const Eigen::MatrixXd& symmetric, const JacobiOptions& opts) {
  if (symmetric.rows() != symmetric.cols()) throw SpectralError("eigendecompose: matrix not square");
  const double asym = (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff();
  if (asym > 0.0) throw SpectralError("eigendecompose: matrix not symmetric");

  const Eigen::Index n = symmetric.rows();
  Eigen::MatrixXd A = symmetric;
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(n, n);
  const double target = opts.rel_tol * symmetric.norm();

  int sweep = 0;
  while (off_diagonal_norm(A) > target) {
    if (sweep == opts.max_sweeps) {
      throw SpectralError("eigendecompose: no convergence after " + std::to_string(sweep) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = std::abs(A(p, q));
        if (apq == 0.0) continue;
        // Below rounding level of both diagonal entries: drop instead of rotating.
        const double g = 100.0 * apq;
        if (sweep > 3 && std::abs(A(p, p)) + g == std::abs(A(p, p)) && std::abs(A(q, q)) + g == std::abs(A(q, q))) {
          A(p, q) = A(q, p) = 0.0;
          continue;
        }
        rotate(A, V, p, q);
      }
    }
    ++sweep;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&A](Eigen::Index i, Eigen::Index j) { return A(i, i) < A(j, j); });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = A(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    out.eigenvectors.col(i) = V.col(order[static_cast<std::size_t>(i)]);
  }
  out.sweeps = sweep;
  return out;
}

Spectrum eigendecompose(const LaplacianMatrix& L, const JacobiOptions& opts) {
  return eigendecompose(Eigen::MatrixXd(L.cast<double>()), opts);
}

double reconstruction_residual(const Spectrum& s, const Eigen::MatrixXd& A) {
  const Eigen::MatrixXd R = s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.transpose();
  return (R - A).cwiseAbs().maxCoeff();
}

PinvData summarize(Eigen::MatrixXd ldag) {
  PinvData out;
  const Eigen::Index n = ldag.rows();
  const double tie = 1e-12 * std::max(1.0, ldag.cwiseAbs().maxCoeff());
  out.f = ldag(0, 0);
  for (Eigen::Index i = 1; i < n; ++i) {
    if (ldag(i, i) > out.f + tie) {
      out.f = ldag(i, i);
      out.f_witness = i;
    }
  }
  out.o = n > 1 ? std::abs(ldag(0, 1)) : 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(ldag(i, j)) > out.o + tie) {
        out.o = std::abs(ldag(i, j));
        out.o_witness = {i, j};
      }
    }
  }
  out.ldag = std::move(ldag);
  return out;
}

PinvData pinv_spectral(const Spectrum& spec, double zero_tol) {
  const Eigen::Index n = spec.size();
  if (n < 2) throw SpectralError("pinv_spectral: need at least two vertices");
  if (spec.lambda2() < zero_tol) {
    throw SpectralError("pinv_spectral: lambda_2 is zero, graph is disconnected");
  }
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) {
    const auto q = spec.eigenvectors.col(i);
    X.noalias() += (1.0 / spec.eigenvalues(i)) * q * q.transpose();
  }
  X = 0.5 * (X + X.transpose()).eval();
  return summarize(std::move(X));
}

Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& A) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  // Pivots at round-off level mean A is singular (a disconnected graph).
  const double floor = 1e-12 * static_cast<double>(n) * A.diagonal().cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < n; ++j) {
    double pivot = A(j, j);
    for (Eigen::Index k = 0; k < j; ++k) pivot -= G(j, k) * G(j, k);
    if (!(pivot > floor)) {
      throw SpectralError("cholesky: matrix is not positive definite (pivot " + std::to_string(j) + ")");
    }
    const double root = std::sqrt(pivot);
    G(j, j) = root;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double v = A(i, j);
      for (Eigen::Index k = 0; k < j; ++k) v -= G(i, k) * G(j, k);
      G(i, j) = v / root;
    }
  }
  return G;
}

Eigen::MatrixXd cholesky_solve(const Eigen::MatrixXd& G, const Eigen::MatrixXd& B) {
  const Eigen::Index n = G.rows();
  Eigen::MatrixXd Y = B;
  // Forward substitution G Y = B.
  for (Eigen::Index col = 0; col < Y.cols(); ++col) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double v = Y(i, col);
      for (Eigen::Index k = 0; k < i; ++k) v -= G(i, k) * Y(k, col);
      Y(i, col) = v / G(i, i);
    }
    // Back substitution G^T X = Y.
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      double v = Y(i, col);
      for (Eigen::Index k = i + 1; k < n; ++k) v -= G(k, i) * Y(k, col);
      Y(i, col) = v / G(i, i);
    }
  }
  return Y;
}

PinvData pinv_shift(const LaplacianMatrix& L, double c) {
  if (!(c > 0.0)) throw SpectralError("pinv_shift: shift constant must be positive");
  const Eigen::Index n = L.rows();
  if (n < 2) throw SpectralError("pinv_shift: need at least two vertices");
  const Eigen::MatrixXd T = L.cast<double>() + Eigen::MatrixXd::Constant(n, n, c);
  const Eigen::MatrixXd G = cholesky_lower(T);
  Eigen::MatrixXd X = cholesky_solve(G, Eigen::MatrixXd::Identity(n, n));
  X.array() -= 1.0 / (c * static_cast<double>(n) * static_cast<double>(n));
  X = 0.5 * (X + X.transpose()).eval();
  return summarize(std::move(X));
}

double default_shift(const Spectrum& spec) {
  return spec.lambda_max() / static_cast<double>(spec.size());
}

bool PenroseResiduals::within_tolerance(std::size_t n) const {
  const double product_tol = 1e-8 * static_cast<double>(n);
  return lxl <= product_tol && xlx <= product_tol && lx_asymmetry <= 1e-9 && xl_asymmetry <= 1e-9;
}

PenroseResiduals penrose_residuals(const Eigen::MatrixXd& L, const Eigen::MatrixXd& X) {
  const Eigen::MatrixXd LX = L * X;
  const Eigen::MatrixXd XL = X * L;
  PenroseResiduals r;
  r.lxl = (LX * L - L).cwiseAbs().maxCoeff();
  r.xlx = (XL * X - X).cwiseAbs().maxCoeff();
  r.lx_asymmetry = (LX - LX.transpose()).cwiseAbs().maxCoeff();
  r.xl_asymmetry = (XL - XL.transpose()).cwiseAbs().maxCoeff();
  return r;
}

double max_row_sum(const Eigen::MatrixXd& X) { return X.rowwise().sum().cwiseAbs().maxCoeff(); }

bool diag_uniform(const PinvData& p, double tol) {
  const auto d = p.ldag.diagonal();
  return d.maxCoeff() - d.minCoeff() <= tol;
}

DiagBound golub_meurant_diag_bound(double lambda2, double lambda_n, std::size_t n,
                                   std::span<const std::int64_t> degrees) {
  if (!(lambda2 > 0.0)) throw std::invalid_argument("golub_meurant_diag_bound: lambda2 must be positive");
  const double nn = static_cast<double>(n);
  const double head = lambda2 + lambda_n * (nn - 1.0) / nn;
  const double denom = lambda2 * lambda_n;
  DiagBound out;
  out.per_vertex.reserve(degrees.size());
  std::int64_t min_degree = degrees.empty() ? 0 : degrees[0];
  for (auto d : degrees) {
    out.per_vertex.push_back((head - static_cast<double>(d)) / denom);
    min_degree = std::min(min_degree, d);
  }
  out.f_bound = (head - static_cast<double>(min_degree)) / denom;
  return out;
}

bool is_strictly_diagonally_dominant(const Eigen::MatrixXd& T) {
  for (Eigen::Index i = 0; i < T.rows(); ++i) {
    const double off = T.row(i).cwiseAbs().sum() - std::abs(T(i, i));
    if (!(off < std::abs(T(i, i)))) return false;
  }
  return true;
}

bool sdd_inverse_dominance_check(const Eigen::MatrixXd& T, const Eigen::MatrixXd& Tinv, double tol) {
  if (!is_strictly_diagonally_dominant(T)) {
    throw std::invalid_argument("sdd_inverse_dominance_check: matrix is not strictly diagonally dominant");
  }
  const Eigen::Index n = T.rows();
  const Eigen::VectorXd row_abs = T.cwiseAbs().rowwise().sum();
  const double slack = tol * std::max(1.0, Tinv.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    double ratio = 0.0;
    for (Eigen::Index l = 0; l < n; ++l) {
      if (l == i) continue;
      const double all = std::abs(T(l, l));
      const double rest = row_abs(l) - all - std::abs(T(l, i));
      ratio = std::max(ratio, std::abs(T(l, i)) / (all - rest));
    }
    const double cap = ratio * std::abs(Tinv(i, i)) + slack;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i && std::abs(Tinv(j, i)) > cap) return false;
    }
  }
  return true;
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& M) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) out << ' ';
      out << M(i, j);
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(prec);
}

}  // namespace chipfire::spectral
