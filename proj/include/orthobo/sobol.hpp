#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orthobo/errors.hpp"
#include "orthobo/linalg.hpp"

namespace orthobo {
namespace detail {

// Joe-Kuo direction-number table, dimensions 2..32.  Polynomials are stored
// in full binary form (leading and trailing coefficient included); initial
// direction integers are the published m values.
struct SobolDim {
  std::uint32_t poly;
  std::array<std::uint32_t, 7> m;
  int s;  // polynomial degree == number of initial m values
};

inline constexpr int kSobolMaxDim = 32;
inline constexpr int kSobolBits = 32;

inline const std::array<SobolDim, 31>& sobol_table() {
  static const std::array<SobolDim, 31> table = {{
      {3, {1}, 1},
      {7, {1, 3}, 2},
      {11, {1, 3, 1}, 3},
      {13, {1, 1, 1}, 3},
      {19, {1, 1, 3, 3}, 4},
      {25, {1, 3, 5, 13}, 4},
      {37, {1, 1, 5, 5, 17}, 5},
      {41, {1, 1, 5, 5, 5}, 5},
      {47, {1, 1, 7, 11, 19}, 5},
      {55, {1, 1, 5, 1, 1}, 5},
      {59, {1, 1, 1, 3, 11}, 5},
      {61, {1, 3, 5, 5, 31}, 5},
      {67, {1, 3, 3, 9, 7, 49}, 6},
      {91, {1, 1, 1, 15, 21, 21}, 6},
      {97, {1, 3, 1, 13, 27, 49}, 6},
      {103, {1, 1, 1, 15, 7, 5}, 6},
      {109, {1, 3, 1, 15, 13, 25}, 6},
      {115, {1, 1, 5, 5, 19, 61}, 6},
      {131, {1, 3, 7, 11, 23, 15, 103}, 7},
      {137, {1, 3, 7, 13, 13, 15, 69}, 7},
      {143, {1, 1, 3, 13, 7, 35, 63}, 7},
      {145, {1, 3, 5, 9, 1, 25, 53}, 7},
      {157, {1, 3, 1, 13, 9, 35, 107}, 7},
      {167, {1, 3, 1, 5, 27, 61, 31}, 7},
      {171, {1, 1, 5, 11, 19, 41, 61}, 7},
      {185, {1, 3, 5, 3, 3, 13, 69}, 7},
      {191, {1, 1, 7, 13, 1, 19, 1}, 7},
      {193, {1, 3, 7, 5, 13, 19, 59}, 7},
      {203, {1, 1, 3, 9, 25, 29, 41}, 7},
      {211, {1, 3, 5, 13, 23, 1, 55}, 7},
      {213, {1, 3, 7, 3, 13, 59, 17}, 7},
  }};
  return table;
}

// Direction integers v_k = m_k * 2^(32-k) for one dimension (1-based dim index).
inline std::array<std::uint32_t, kSobolBits> sobol_directions(int dim) {
  std::array<std::uint32_t, kSobolBits> v{};
  if (dim == 1) {
    for (int k = 0; k < kSobolBits; ++k) v[k] = 1u << (kSobolBits - 1 - k);
    return v;
  }
  const SobolDim& row = sobol_table()[static_cast<std::size_t>(dim - 2)];
  const int s = row.s;
  std::array<std::uint64_t, kSobolBits> m{};
  for (int k = 0; k < s; ++k) m[static_cast<std::size_t>(k)] = row.m[static_cast<std::size_t>(k)];
  for (int k = s; k < kSobolBits; ++k) {
    std::uint64_t mk = m[static_cast<std::size_t>(k - s)] ^ (m[static_cast<std::size_t>(k - s)] << s);
    for (int i = 1; i < s; ++i) {
      const std::uint64_t a_i = (row.poly >> (s - i)) & 1u;
      if (a_i) mk ^= m[static_cast<std::size_t>(k - i)] << i;
    }
    m[static_cast<std::size_t>(k)] = mk;
  }
  for (int k = 0; k < kSobolBits; ++k)
    v[static_cast<std::size_t>(k)] =
        static_cast<std::uint32_t>(m[static_cast<std::size_t>(k)]) << (kSobolBits - 1 - k);
  return v;
}

}  // namespace detail

// n points of the (unscrambled) Sobol sequence in [0,1)^dim, starting at
// index `skip`.  The sequence begins at the all-zeros point (skip = 0).
// A nonzero scramble_seed applies a per-dimension digital shift; the result
// is still a valid low-discrepancy set but no longer the plain sequence.
inline Matrix sobol_points(int dim, int n, std::uint64_t skip = 0,
                           std::uint64_t scramble_seed = 0) {
  if (dim < 1 || dim > detail::kSobolMaxDim)
    throw DimensionUnsupported("sobol_points: dimension outside embedded table (1..32)");
  if (n < 1) throw DimensionMismatch("sobol_points: n must be >= 1");

  std::vector<std::array<std::uint32_t, detail::kSobolBits>> dirs;
  dirs.reserve(static_cast<std::size_t>(dim));
  for (int j = 1; j <= dim; ++j) dirs.push_back(detail::sobol_directions(j));

  std::vector<std::uint32_t> shift(static_cast<std::size_t>(dim), 0u);
  if (scramble_seed != 0) {
    std::uint64_t state = scramble_seed;
    for (int j = 0; j < dim; ++j)
      shift[static_cast<std::size_t>(j)] =
          static_cast<std::uint32_t>(detail::splitmix64(state) >> 32);
  }

  Matrix out(n, dim);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t idx = skip + static_cast<std::uint64_t>(i);
    const std::uint64_t gray = idx ^ (idx >> 1);
    for (int j = 0; j < dim; ++j) {
      std::uint32_t x = shift[static_cast<std::size_t>(j)];
      for (int k = 0; k < detail::kSobolBits; ++k)
        if (gray & (1ULL << k)) x ^= dirs[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      out(i, j) = static_cast<double>(x) * 0x1.0p-32;
    }
  }
  return out;
}

}  // namespace orthobo
