#include "twistlab/eigensolve.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>

#include "twistlab/errors.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

namespace {

void check_mass(const Eigen::VectorXd& mass) {
  if (mass.size() == 0 || mass.minCoeff() <= 0.0)
    fail(Errc::indefinite_mass, "mass matrix must be positive definite");
}

double magnitude_scale(const SpMat& A, const Eigen::VectorXd& mass) {
  double s = 0.0;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SpMat::InnerIterator it(A, k); it; ++it)
      if (it.row() == it.col()) s = std::max(s, std::abs(it.value()) / mass[it.row()]);
  return s > 0.0 ? s : 1.0;
}

/// Gershgorin lower bound for the pencil (A, diag(mass)).
double gershgorin_low(const SpMat& A, const Eigen::VectorXd& mass) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(A.rows());
  Eigen::VectorXd off = Eigen::VectorXd::Zero(A.rows());
  for (int k = 0; k < A.outerSize(); ++k)
    for (SpMat::InnerIterator it(A, k); it; ++it) {
      if (it.row() == it.col())
        diag[it.row()] = it.value();
      else
        off[it.row()] += std::abs(it.value());
    }
  double lo = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    lo = std::min(lo, (diag[i] - off[i]) / mass[i]);
  return lo;
}

struct Factorization {
  Eigen::SimplicialLDLT<SpMat> ldlt;
  double tau = 0.0;
  bool ok = false;
  int negatives = 0;
};

/// Factor A - tau M, nudging tau slightly when the unpivoted factorization
/// breaks down (exact zero pivot).
Factorization factor_shifted(const SpMat& A, const Eigen::VectorXd& mass, double tau,
                             double scale) {
  Factorization f;
  double t = tau;
  for (int attempt = 0; attempt < 6; ++attempt) {
    SpMat shifted = A;
    for (Eigen::Index i = 0; i < mass.size(); ++i) shifted.coeffRef(i, i) -= t * mass[i];
    shifted.makeCompressed();
    f.ldlt.compute(shifted);
    if (f.ldlt.info() == Eigen::Success) {
      Eigen::VectorXd d = f.ldlt.vectorD();
      bool finite = d.allFinite();
      double dmax = finite ? d.cwiseAbs().maxCoeff() : 0.0;
      bool clean = finite;
      if (finite) {
        for (Eigen::Index i = 0; i < d.size(); ++i)
          if (std::abs(d[i]) <= 1e-14 * dmax) {
            clean = false;
            break;
          }
      }
      if (clean) {
        f.tau = t;
        f.ok = true;
        f.negatives = static_cast<int>((d.array() < 0.0).count());
        return f;
      }
    }
    t = t - scale * 1e-9 * (attempt + 1) * (attempt + 1);
  }
  return f;
}

EigenResult dense_smallest(const SpMat& A, const Eigen::VectorXd& mass, const EigenOptions& opts) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXd Ad = Eigen::MatrixXd(A);
  Eigen::VectorXd isq = mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd B = isq.asDiagonal() * Ad * isq.asDiagonal();
  B = 0.5 * (B + B.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);

  const int k = std::min<int>(opts.count, static_cast<int>(n));
  EigenResult r;
  r.values = es.eigenvalues().head(k);
  r.vectors = isq.asDiagonal() * es.eigenvectors().leftCols(k);
  r.residuals.resize(k);
  r.converged.assign(k, 1);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd x = r.vectors.col(j);
    double nrm = (Ad * x - r.values[j] * mass.cwiseProduct(x)).norm();
    double ref = mass.cwiseProduct(x).norm();
    r.residuals[j] = ref > 0 ? nrm / ref : nrm;
  }
  r.iterations = 1;
  r.shift_used = 0.0;
  return r;
}

/// M-orthonormalize the columns of X in place (Cholesky QR, two passes).
bool m_orthonormalize(Eigen::MatrixXd& X, const Eigen::VectorXd& mass, Rng& rng) {
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::MatrixXd G = X.transpose() * mass.asDiagonal() * X;
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success) {
      // Rank deficiency: refresh the offending block deterministically.
      for (Eigen::Index c = 0; c < X.cols(); ++c)
        for (Eigen::Index i = 0; i < X.rows(); ++i) X(i, c) += 1e-8 * rng.uniform_pm1();
      Eigen::MatrixXd G2 = X.transpose() * mass.asDiagonal() * X;
      llt.compute(G2);
      if (llt.info() != Eigen::Success) return false;
    }
    Eigen::MatrixXd U = llt.matrixU();
    X = U.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(X);
  }
  return true;
}

}  // namespace

int count_below(const SpMat& A, const Eigen::VectorXd& mass, double tau) {
  check_mass(mass);
  double scale = magnitude_scale(A, mass);
  Factorization f = factor_shifted(A, mass, tau, scale);
  if (!f.ok) fail(Errc::no_convergence, "inertia factorization failed");
  return f.negatives;
}

EigenResult smallest_eigenpairs(const SpMat& A, const Eigen::VectorXd& mass,
                                const EigenOptions& opts) {
  check_mass(mass);
  const Eigen::Index n = A.rows();
  if (opts.count < 1) fail(Errc::invalid_shape, "eigenpair count must be >= 1");
  if (opts.count >= n) fail(Errc::invalid_shape, "eigenpair count must be below the dimension");
  if (!(opts.tol > 0.0) || opts.tol > 1e-2)
    fail(Errc::invalid_shape, "residual tolerance must lie in (0, 1e-2]");

  if (n <= opts.dense_threshold) return dense_smallest(A, mass, opts);

  const double scale = magnitude_scale(A, mass);
  double sigma;
  if (std::isnan(opts.shift)) {
    double glow = gershgorin_low(A, mass);
    sigma = glow - 0.01 * std::max(std::abs(glow), scale * 1e-6) - 1e-12 * scale;
  } else {
    sigma = opts.shift;
  }

  Factorization f = factor_shifted(A, mass, sigma, scale);
  // The iteration needs A - sigma M positive definite; walk the shift down
  // until no eigenvalue lies below it.
  double lo = sigma, span = std::max(scale * 1e-6, std::abs(sigma) * 0.5 + 1.0);
  int guard = 0;
  while ((!f.ok || f.negatives > 0) && guard++ < 60) {
    lo -= span;
    span *= 2.0;
    f = factor_shifted(A, mass, lo, scale);
  }
  if (!f.ok) fail(Errc::no_convergence, "shifted factorization failed");
  sigma = f.tau;

  const int k = opts.count;
  const int b = static_cast<int>(std::min<Eigen::Index>(n, k + std::max(2, opts.block_extra)));

  Rng rng(opts.seed);
  Eigen::MatrixXd X(n, b);
  for (Eigen::Index c = 0; c < b; ++c)
    for (Eigen::Index i = 0; i < n; ++i) X(i, c) = rng.uniform_pm1();

  EigenResult result;
  result.shift_used = sigma;
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(b);

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    Eigen::MatrixXd Y = f.ldlt.solve(mass.asDiagonal() * X);
    if (!m_orthonormalize(Y, mass, rng)) fail(Errc::no_convergence, "orthonormalization failed");
    Eigen::MatrixXd H = Y.transpose() * (A.selfadjointView<Eigen::Lower>() * Y);
    H = 0.5 * (H + H.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rr(H);
    X = Y * rr.eigenvectors();
    mu = rr.eigenvalues();

    bool done = true;
    for (int j = 0; j < k; ++j) {
      Eigen::VectorXd x = X.col(j);
      Eigen::VectorXd Mx = mass.cwiseProduct(x);
      double res = (A.selfadjointView<Eigen::Lower>() * x - mu[j] * Mx).norm() / Mx.norm();
      if (res > opts.tol) {
        done = false;
        break;
      }
    }
    if (done) {
      ++iter;
      break;
    }
  }

  result.values = mu.head(k);
  result.vectors = X.leftCols(k);
  result.residuals.resize(k);
  result.converged.assign(k, 0);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd x = X.col(j);
    Eigen::VectorXd Mx = mass.cwiseProduct(x);
    double res = (A.selfadjointView<Eigen::Lower>() * x - mu[j] * Mx).norm() / Mx.norm();
    result.residuals[j] = res;
    result.converged[j] = res <= opts.tol;
  }
  result.iterations = iter;
  return result;
}

EigenResult solve_smallest_guided(const SpMat& A, const Eigen::VectorXd& mass,
                                  const EigenOptions& opts, double lo_hint, double hi_hint) {
  check_mass(mass);
  const double scale = magnitude_scale(A, mass);
  double lo = std::min(lo_hint, hi_hint), hi = std::max(lo_hint, hi_hint);

  // Establish count_below(lo) == 0.
  double span = std::max(hi - lo, scale * 1e-9);
  int guard = 0;
  while (count_below(A, mass, lo) > 0 && guard++ < 60) {
    hi = lo;
    lo -= span;
    span *= 2.0;
  }
  if (guard >= 60) fail(Errc::no_convergence, "failed to bracket the lowest eigenvalue");

  if (count_below(A, mass, hi) == 0) {
    lo = hi;  // hi itself is already below the spectrum; best possible shift
  } else {
    for (int step = 0; step < 12; ++step) {
      double mid = 0.5 * (lo + hi);
      if (count_below(A, mass, mid) == 0)
        lo = mid;
      else
        hi = mid;
    }
  }

  EigenOptions o = opts;
  o.shift = lo;
  return smallest_eigenpairs(A, mass, o);
}

}  // namespace twistlab
