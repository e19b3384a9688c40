#include "gfrac/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gfrac {

double x_from_s(double a, double rho, double s) {
  if (s <= 0.0) return a;
  if (a == 0.0) return std::pow(rho * s, 1.0 / rho);
  // a * (1 + rho s a^-rho)^(1/rho), written so that rho -> 0 tends to a e^s.
  const double u = rho * s * std::pow(a, -rho);
  return a * std::exp(std::log1p(u) / rho);
}

double s_from_x(double a, double rho, double x) {
  if (x <= a) return 0.0;
  if (a == 0.0) return std::pow(x, rho) / rho;
  // (x^rho - a^rho)/rho = a^rho expm1(rho log(x/a)) / rho
  return std::pow(a, rho) * std::expm1(rho * std::log(x / a)) / rho;
}

bool Grid::same_as(const Grid& other) const {
  if (data_ == other.data_) return true;
  return a() == other.a() && b() == other.b() && rho() == other.rho() &&
         size() == other.size();
}

Grid make_grid(double a, double b, double rho, std::size_t n_nodes) {
  if (!(std::isfinite(a) && std::isfinite(b) && a >= 0.0 && a < b)) {
    std::ostringstream os;
    os << "make_grid: need 0 <= a < b, got a=" << a << " b=" << b;
    throw std::domain_error(os.str());
  }
  if (!(std::isfinite(rho) && rho > 0.0))
    throw std::domain_error("make_grid: rho must be positive and finite");
  if (n_nodes < 2) throw std::domain_error("make_grid: need at least 2 nodes");

  auto d = std::make_shared<Grid::Data>();
  d->a = a;
  d->b = b;
  d->rho = rho;
  const double s_last = s_from_x(a, rho, b);
  if (!(std::isfinite(s_last) && s_last > 0.0))
    throw std::domain_error("make_grid: transformed interval is degenerate");
  const double intervals = static_cast<double>(n_nodes - 1);
  d->ds = s_last / intervals;
  d->s.resize(n_nodes);
  d->x.resize(n_nodes);
  for (std::size_t j = 0; j < n_nodes; ++j) {
    d->s[j] = s_last * (static_cast<double>(j) / intervals);
    d->x[j] = x_from_s(a, rho, d->s[j]);
  }
  d->s.front() = 0.0;
  d->s.back() = s_last;
  d->x.front() = a;
  d->x.back() = b;
  for (std::size_t j = 1; j < n_nodes; ++j) {
    if (!(d->x[j] > d->x[j - 1]))
      throw std::domain_error(
          "make_grid: x nodes not strictly increasing (grid too fine for "
          "double precision)");
  }
  return Grid(std::move(d));
}

SampledFunction::SampledFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("SampledFunction: values/grid size mismatch");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j])) {
      std::ostringstream os;
      os << "SampledFunction: non-finite value at node " << j << " (x="
         << grid_.x(j) << ")";
      throw std::invalid_argument(os.str());
    }
  }
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

double sup_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("sup_distance: size mismatch");
  double m = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j)
    m = std::max(m, std::abs(u[j] - v[j]));
  return m;
}

}  // namespace gfrac
