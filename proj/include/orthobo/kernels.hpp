#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "orthobo/errors.hpp"
#include "orthobo/linalg.hpp"

namespace orthobo {

enum class KernelFamily { RbfIso, RbfArd, Matern52Iso, Matern52Ard, Linear };

// Kernel hyperparameters live in log space throughout, ordered as
// [log lengthscales..., log signal amplitude, log noise std].  The noise
// entry is part of the sampled parameter vector but is consumed by the GP
// likelihood, not by the kernel itself.
struct KernelSpec {
  KernelFamily family = KernelFamily::RbfIso;
  int dim = 1;

  static KernelSpec from_name(const std::string& name, int dim) {
    KernelSpec spec;
    spec.dim = dim;
    if (name == "rbf-iso")
      spec.family = KernelFamily::RbfIso;
    else if (name == "rbf-ard")
      spec.family = KernelFamily::RbfArd;
    else if (name == "matern52-iso")
      spec.family = KernelFamily::Matern52Iso;
    else if (name == "matern52-ard")
      spec.family = KernelFamily::Matern52Ard;
    else if (name == "linear")
      spec.family = KernelFamily::Linear;
    else
      throw ConfigError("unknown kernel family: " + name);
    return spec;
  }

  std::string name() const {
    switch (family) {
      case KernelFamily::RbfIso: return "rbf-iso";
      case KernelFamily::RbfArd: return "rbf-ard";
      case KernelFamily::Matern52Iso: return "matern52-iso";
      case KernelFamily::Matern52Ard: return "matern52-ard";
      case KernelFamily::Linear: return "linear";
    }
    return "?";
  }

  bool is_ard() const {
    return family == KernelFamily::RbfArd || family == KernelFamily::Matern52Ard;
  }

  int num_lengthscales() const {
    if (family == KernelFamily::Linear) return 0;
    return is_ard() ? dim : 1;
  }

  // Kernel parameter layout: lengthscales plus amplitude.
  int layout_size() const { return num_lengthscales() + 1; }

  // Full sampled parameter vector: layout plus noise std.
  int theta_dim() const { return layout_size() + 1; }

  int amplitude_index() const { return num_lengthscales(); }
  int noise_index() const { return num_lengthscales() + 1; }

  std::vector<std::string> layout_names() const {
    std::vector<std::string> names;
    for (int i = 0; i < num_lengthscales(); ++i)
      names.push_back(is_ard() ? "log_lengthscale_" + std::to_string(i) : "log_lengthscale");
    names.push_back("log_amplitude");
    names.push_back("log_noise_std");
    return names;
  }
};

inline double noise_std(const KernelSpec& spec, const Vector& theta) {
  return std::exp(theta(spec.noise_index()));
}

inline double noise_var(const KernelSpec& spec, const Vector& theta) {
  const double s = noise_std(spec, theta);
  return s * s;
}

namespace detail {

inline double scaled_sqdist(const KernelSpec& spec, const Vector& theta, const Vector& x,
                            const Vector& y) {
  double r2 = 0.0;
  if (spec.is_ard()) {
    for (int i = 0; i < spec.dim; ++i) {
      const double d = (x(i) - y(i)) / std::exp(theta(i));
      r2 += d * d;
    }
  } else {
    const double inv_l = std::exp(-theta(0));
    r2 = (x - y).squaredNorm() * inv_l * inv_l;
  }
  return r2;
}

}  // namespace detail

inline double kernel_eval(const KernelSpec& spec, const Vector& theta, const Vector& x,
                          const Vector& y) {
  if (x.size() != spec.dim || y.size() != spec.dim)
    throw DimensionMismatch("kernel_eval: input dimension mismatch");
  if (theta.size() != spec.theta_dim())
    throw DimensionMismatch("kernel_eval: theta length mismatch");
  const double sf = std::exp(theta(spec.amplitude_index()));
  const double sf2 = sf * sf;
  switch (spec.family) {
    case KernelFamily::RbfIso:
    case KernelFamily::RbfArd: {
      return sf2 * std::exp(-0.5 * detail::scaled_sqdist(spec, theta, x, y));
    }
    case KernelFamily::Matern52Iso:
    case KernelFamily::Matern52Ard: {
      const double r = std::sqrt(detail::scaled_sqdist(spec, theta, x, y));
      const double a = 2.2360679774997896964091737 * r;  // sqrt(5) r
      return sf2 * (1.0 + a + a * a / 3.0) * std::exp(-a);
    }
    case KernelFamily::Linear: {
      // Centered at the domain midpoint so the origin corner is not degenerate.
      double dot = 0.0;
      for (int i = 0; i < spec.dim; ++i) dot += (x(i) - 0.5) * (y(i) - 0.5);
      return sf2 * dot;
    }
  }
  return 0.0;
}

inline Matrix gram(const KernelSpec& spec, const Vector& theta, const Matrix& X) {
  const auto n = X.rows();
  Matrix K(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector xi = X.row(i).transpose();
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = kernel_eval(spec, theta, xi, X.row(j).transpose());
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return K;
}

inline Vector cross_kernel(const KernelSpec& spec, const Vector& theta, const Matrix& X,
                           const Vector& x) {
  Vector k(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    k(i) = kernel_eval(spec, theta, X.row(i).transpose(), x);
  return k;
}

}  // namespace orthobo
