// spectral.hpp - Laplacian spectrum and Moore-Penrose pseudo-inverse.
//
// Two independent routes to L^dagger are provided: the spectral sum over
// the nonzero eigenpairs, and the shifted inverse (L + cJ)^{-1} - J/(c n^2)
// through a dense Cholesky factorization. Callers cross-check one against
// the other.

#ifndef CHIPFIRE_SPECTRAL_HPP
#define CHIPFIRE_SPECTRAL_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chipfire/graph.hpp"

namespace chipfire::spectral {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius mass drops below rel_tol * ||A||_F.
  double rel_tol = 1e-12;
};

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues(i)
  int sweeps = 0;

  Eigen::Index size() const { return eigenvalues.size(); }
  double lambda2() const { return eigenvalues(1); }
  double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
  /// Absolute tolerance unit for comparisons: max(1, lambda_n).
  double scale() const;
};

/// Cyclic Jacobi eigendecomposition of a dense symmetric matrix.
/// Throws SpectralError if the matrix is not symmetric or the sweep budget
/// runs out.
Spectrum eigendecompose(const Eigen::MatrixXd& symmetric, const JacobiOptions& opts = {});
Spectrum eigendecompose(const LaplacianMatrix& L, const JacobiOptions& opts = {});

/// max |Q diag(lambda) Q^T - A|.
double reconstruction_residual(const Spectrum& s, const Eigen::MatrixXd& A);

struct PinvData {
  Eigen::MatrixXd ldag;
  double f = 0.0;  // largest diagonal entry
  double o = 0.0;  // largest off-diagonal modulus
  Eigen::Index f_witness = 0;
  std::pair<Eigen::Index, Eigen::Index> o_witness{0, 1};
};

/// Extracts f and o from a symmetric matrix. Ties go to the lowest index
/// (lexicographically lowest pair for o).
PinvData summarize(Eigen::MatrixXd ldag);

/// L^dagger = sum_{i >= 2} q_i q_i^T / lambda_i. Throws when lambda_2 is
/// below `zero_tol` (disconnected graph) or n < 2.
PinvData pinv_spectral(const Spectrum& spec, double zero_tol = 1e-9);

/// L^dagger = (L + cJ)^{-1} - J / (c n^2) for c > 0, by Cholesky.
PinvData pinv_shift(const LaplacianMatrix& L, double c);

/// lambda_n / n, the shift that maps the zero eigenvalue onto lambda_n.
double default_shift(const Spectrum& spec);

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& A);
/// Solves (G G^T) X = B given the lower factor G.
Eigen::MatrixXd cholesky_solve(const Eigen::MatrixXd& G, const Eigen::MatrixXd& B);

struct PenroseResiduals {
  double lxl = 0.0;          // max |L X L - L|
  double xlx = 0.0;          // max |X L X - X|
  double lx_asymmetry = 0.0; // max |LX - (LX)^T|
  double xl_asymmetry = 0.0; // max |XL - (XL)^T|

  /// Product axioms within 1e-8 n, symmetry within 1e-9.
  bool within_tolerance(std::size_t n) const;
};

PenroseResiduals penrose_residuals(const Eigen::MatrixXd& L, const Eigen::MatrixXd& X);

/// max_i |(X 1)_i|.
double max_row_sum(const Eigen::MatrixXd& X);

/// True iff max - min of the diagonal is at most tol.
bool diag_uniform(const PinvData& p, double tol);

struct DiagBound {
  std::vector<double> per_vertex;
  double f_bound = 0.0;
};

/// Golub-Meurant diagonal bound applied to T = L + (lambda_n/n) J:
/// L^dagger_ii <= (lambda2 + lambda_n (n-1)/n - d_i) / (lambda2 lambda_n).
DiagBound golub_meurant_diag_bound(double lambda2, double lambda_n, std::size_t n,
                                   std::span<const std::int64_t> degrees);

bool is_strictly_diagonally_dominant(const Eigen::MatrixXd& T);

/// Checks the Li-Huang-Shen-Li inverse dominance inequality
///   |b_ji| <= max_{l != i} |a_li| / (|a_ll| - sum_{k != l,i} |a_lk|) * |b_ii|
/// for every j != i, where B = T^{-1}. Throws std::invalid_argument if T
/// is not strictly diagonally dominant.
bool sdd_inverse_dominance_check(const Eigen::MatrixXd& T, const Eigen::MatrixXd& Tinv,
                                 double tol = 1e-12);

/// Row-major text, one row per line, entries with 17 significant digits.
void write_matrix(std::ostream& out, const Eigen::MatrixXd& M);

}  // namespace chipfire::spectral

#endif  // CHIPFIRE_SPECTRAL_HPP
