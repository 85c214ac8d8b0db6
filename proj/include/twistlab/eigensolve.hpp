#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstdint>
#include <limits>
#include <vector>

namespace twistlab {

using SpMat = Eigen::SparseMatrix<double>;

struct EigenOptions {
  int count = 1;
  double tol = 1e-8;  // residual tolerance: ||A x - mu M x|| <= tol ||M x||
  int max_iter = 500;
  double shift = std::numeric_limits<double>::quiet_NaN();  // NaN: pick automatically
  std::uint64_t seed = 12345;
  int block_extra = 4;
  int dense_threshold = 500;  // below this dimension solve densely
};

struct EigenResult {
  Eigen::VectorXd values;     // ascending
  Eigen::MatrixXd vectors;    // M-orthonormal columns
  Eigen::VectorXd residuals;  // ||A x - mu M x|| / ||M x||
  std::vector<char> converged;
  int iterations = 0;
  double shift_used = 0.0;

  bool all_converged() const {
    for (char c : converged)
      if (!c) return false;
    return !converged.empty();
  }
};

/// Lowest eigenpairs of A x = mu M x with symmetric A and diagonal positive M.
/// Dense path below `dense_threshold`; otherwise block shift-invert subspace
/// iteration with M-orthogonal Rayleigh-Ritz. Deterministic for a fixed seed.
EigenResult smallest_eigenpairs(const SpMat& A, const Eigen::VectorXd& mass,
                                const EigenOptions& opts = {});

/// Number of pencil eigenvalues strictly below tau (Sylvester inertia of
/// A - tau M). Exact at matrix level up to factorization roundoff.
int count_below(const SpMat& A, const Eigen::VectorXd& mass, double tau);

/// smallest_eigenpairs with the shift placed just below the lowest eigenvalue
/// by inertia bisection inside [lo_hint, hi_hint]. Keeps the factorization
/// positive definite and makes convergence insensitive to clustering above.
EigenResult solve_smallest_guided(const SpMat& A, const Eigen::VectorXd& mass,
                                  const EigenOptions& opts, double lo_hint, double hi_hint);

}  // namespace twistlab
