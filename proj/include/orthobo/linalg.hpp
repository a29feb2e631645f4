#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "orthobo/errors.hpp"
#include "orthobo/rng.hpp"

namespace orthobo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct JitterPolicy {
  double base_scale = 1e-10;  // first jitter = base_scale * mean(diag)
  double growth = 10.0;
  double max_scale = 1e-4;  // give up past max_scale * mean(diag)
};

struct CholeskyResult {
  Matrix L;       // lower triangular, L L^T = A + jitter I
  double jitter;  // 0 when A was numerically positive definite
};

// Lower Cholesky factor with escalating diagonal jitter.
inline CholeskyResult cholesky(const Matrix& A, const JitterPolicy& policy = {}) {
  if (A.rows() != A.cols()) throw DimensionMismatch("cholesky: matrix not square");
  const double sym_err = (A - A.transpose()).norm();
  if (sym_err > 1e-10 * std::max(1.0, A.norm()))
    throw DimensionMismatch("cholesky: matrix not symmetric");

  const double mean_diag = std::max(A.diagonal().mean(), 1e-300);
  double jitter = 0.0;
  while (true) {
    Matrix Aj = A;
    if (jitter > 0.0) Aj.diagonal().array() += jitter;
    Eigen::LLT<Matrix> llt(Aj);
    if (llt.info() == Eigen::Success) return {Matrix(llt.matrixL()), jitter};
    if (jitter == 0.0) {
      jitter = policy.base_scale * mean_diag;
    } else {
      jitter *= policy.growth;
      if (jitter > policy.max_scale * mean_diag)
        throw NotPositiveDefinite("cholesky: jitter escalation exhausted");
    }
  }
}

// Unbiased cross-covariance of paired samples (rows), divisor S - 1.
inline Matrix empirical_cov(const Matrix& X, const Matrix& Y) {
  const auto S = X.rows();
  if (S != Y.rows()) throw DimensionMismatch("empirical_cov: sample counts differ");
  if (S < 2) throw InsufficientSamples("empirical_cov: need at least 2 samples");
  Matrix Xc = X.rowwise() - X.colwise().mean();
  Matrix Yc = Y.rowwise() - Y.colwise().mean();
  return (Xc.transpose() * Yc) / static_cast<double>(S - 1);
}

// Self-covariance, symmetrized against round-off.
inline Matrix empirical_cov(const Matrix& X) {
  Matrix C = empirical_cov(X, X);
  return 0.5 * (C + C.transpose());
}

// One draw from N(mean, L L^T).
inline Vector mvn_sample(const Vector& mean, const Matrix& chol_cov, RngState& rng) {
  if (chol_cov.rows() != mean.size() || chol_cov.cols() != mean.size())
    throw DimensionMismatch("mvn_sample: factor/mean size mismatch");
  Vector z(mean.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
  return mean + chol_cov * z;
}

// Kahan-compensated column means; used where exact centering matters.
inline Vector compensated_col_mean(const Matrix& X) {
  Vector sum = Vector::Zero(X.cols());
  Vector comp = Vector::Zero(X.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      double y = X(i, j) - comp(j);
      double t = sum(j) + y;
      comp(j) = (t - sum(j)) - y;
      sum(j) = t;
    }
  }
  return sum / static_cast<double>(X.rows());
}

inline double sample_mean(const Vector& v) { return v.mean(); }

// Unbiased sample variance (divisor S - 1); 0 for fewer than 2 entries.
inline double sample_variance(const Vector& v) {
  const auto S = v.size();
  if (S < 2) return 0.0;
  const double m = v.mean();
  return (v.array() - m).square().sum() / static_cast<double>(S - 1);
}

}  // namespace orthobo
