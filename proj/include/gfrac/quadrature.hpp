#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gfrac/grid.hpp"

namespace gfrac {

/// Product-trapezoidal weights for
///
///   (1/Gamma(alpha)) * int_0^{s_n} (s_n - sigma)^(alpha-1) g(sigma) dsigma
///
/// on a uniform s-grid, with g replaced by its piecewise-linear interpolant
/// and the kernel integrated exactly. The 1/Gamma(alpha) factor is folded in,
/// so weights applied to g = 1 reproduce s_n^alpha / Gamma(alpha+1).
///
/// The lower-triangular table w[n][j] is stored compactly: on a uniform grid
/// the interior weights depend only on n - j, and only the j = 0 column needs
/// its own entry per row.
class QuadratureWeights {
 public:
  double alpha() const { return alpha_; }
  const Grid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }

  // w[n][j]; zero for j > n and for n = 0.
  double operator()(std::size_t n, std::size_t j) const {
    if (n == 0 || j > n) return 0.0;
    if (j == 0) return first_[n];
    if (j == n) return diagonal_;
    return lagged_[n - j];
  }
  double diagonal() const { return diagonal_; }

  // sum_j w[n][j] v[j], compensated, left to right in j.
  double apply_row(std::size_t n, std::span<const double> v) const;

  friend QuadratureWeights build_weights(const Grid& grid, double alpha);

 private:
  QuadratureWeights(Grid g, double alpha) : grid_(std::move(g)), alpha_(alpha) {}

  Grid grid_;
  double alpha_;
  double diagonal_ = 0.0;
  std::vector<double> first_;   // w[n][0]
  std::vector<double> lagged_;  // w[n][n-k] = lagged_[k], 1 <= k < n
};

// Throws std::domain_error unless alpha > 0 and finite.
QuadratureWeights build_weights(const Grid& grid, double alpha);

namespace detail {
// (k+1)^p - 2 k^p + (k-1)^p with p = alpha + 1, free of cancellation.
double second_difference_pow(double k, double alpha);
// (n-1)^(alpha+1) - (n-1-alpha) n^alpha free of cancellation.
double first_column_factor(double n, double alpha);
}  // namespace detail

}  // namespace gfrac
