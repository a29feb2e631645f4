#pragma once

#include <cmath>

namespace orthobo {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594;

inline double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

// Standard normal CDF through erfc; keeps full accuracy in both tails.
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z * 0.7071067811865475244008444); }

// log N(y | mu, var); var must be positive.
inline double normal_log_density(double y, double mu, double var) {
  const double d = y - mu;
  return -0.5 * (kLogTwoPi + std::log(var) + d * d / var);
}

}  // namespace orthobo
