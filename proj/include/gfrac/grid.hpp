#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace gfrac {

// Maps a transformed coordinate s = (x^rho - a^rho)/rho back to x. Stable for
// rho -> 0 (the Hadamard limit) and for a = 0 with any rho > 0.
double x_from_s(double a, double rho, double s);

// Inverse of x_from_s, s(a) = 0.
double s_from_x(double a, double rho, double x);

/// Discretization of [a, b] that is uniform in s = (x^rho - a^rho)/rho.
///
/// In s the generalized kernel (x^rho - t^rho)^(alpha-1) t^(rho-1) dt becomes
/// the Abel kernel (s - sigma)^(alpha-1) dsigma and x^(1-rho) d/dx becomes
/// d/ds, so every operator in this library works on the uniform s-nodes.
/// Node storage is shared and immutable; copies are cheap.
class Grid {
 public:
  double a() const { return data_->a; }
  double b() const { return data_->b; }
  double rho() const { return data_->rho; }
  std::size_t size() const { return data_->x.size(); }
  double ds() const { return data_->ds; }

  double x(std::size_t j) const { return data_->x[j]; }
  double s(std::size_t j) const { return data_->s[j]; }
  std::span<const double> x_nodes() const { return data_->x; }
  std::span<const double> s_nodes() const { return data_->s; }

  // Same storage, or identical parameters and node count.
  bool same_as(const Grid& other) const;

  friend Grid make_grid(double a, double b, double rho, std::size_t n_nodes);

 private:
  struct Data {
    double a = 0, b = 0, rho = 1, ds = 0;
    std::vector<double> x;
    std::vector<double> s;
  };
  explicit Grid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

// Throws std::domain_error unless 0 <= a < b, rho > 0 (finite), n_nodes >= 2.
// x = 0 with rho < 1 is fine: nodes are generated from s, and s = x^rho/rho
// is well defined at 0.
Grid make_grid(double a, double b, double rho, std::size_t n_nodes);

/// Function values on the nodes of a Grid.
class SampledFunction {
 public:
  // Throws std::invalid_argument on a length mismatch or a non-finite value.
  SampledFunction(Grid grid, std::vector<double> values);

  template <class F>
  static SampledFunction sample(const Grid& grid, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) v[j] = f(grid.x(j));
    return SampledFunction(grid, std::move(v));
  }

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// Discrete Chebyshev norm over all nodes.
double sup_norm(std::span<const double> v);
double sup_distance(std::span<const double> u, std::span<const double> v);

}  // namespace gfrac
