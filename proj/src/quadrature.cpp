#include "gfrac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gfrac {

namespace detail {

namespace {
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double term) {
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

constexpr int kSeriesCap = 400;
constexpr double kSeriesRel = 1e-18;

// k^(alpha+1) without rounding alpha+1 first.
double pow_p(double k, double alpha) { return k * std::pow(k, alpha); }
}  // namespace

double second_difference_pow(double k, double alpha) {
  if (k < 2.0) return 2.0 * std::expm1(alpha * std::log(2.0));
  // (1+u)^p - 2 + (1-u)^p = 2 sum_{i>=1} C(p, 2i) u^(2i), u = 1/k
  const double u = 1.0 / k;
  double binom = alpha + 1.0;  // C(p, 1)
  double upow = u;
  CompensatedSum sum;
  for (int j = 1; j < kSeriesCap; ++j) {
    binom *= (alpha - (j - 1.0)) / (j + 1.0);
    upow *= u;
    if (binom == 0.0) break;
    if (j % 2 == 0) continue;
    const double term = binom * upow;
    sum.add(term);
    if (std::abs(term) <= kSeriesRel * std::abs(sum.sum)) break;
  }
  return 2.0 * pow_p(k, alpha) * sum.value();
}

double first_column_factor(double n, double alpha) {
  if (n < 2.0) return alpha;
  // n^p [ (1-u)^p - 1 + p u ] = n^p sum_{i>=2} C(p, i) (-u)^i, u = 1/n
  const double u = 1.0 / n;
  double binom = alpha + 1.0;
  double upow = -u;
  CompensatedSum sum;
  for (int j = 1; j < kSeriesCap; ++j) {
    binom *= (alpha - (j - 1.0)) / (j + 1.0);
    upow *= -u;
    if (binom == 0.0) break;
    const double term = binom * upow;
    sum.add(term);
    if (std::abs(term) <= kSeriesRel * std::abs(sum.sum)) break;
  }
  return pow_p(n, alpha) * sum.value();
}

}  // namespace detail

double QuadratureWeights::apply_row(std::size_t n, std::span<const double> v) const {
  if (n == 0) return 0.0;
  // Neumaier summation; fixed order keeps results bitwise reproducible.
  detail::CompensatedSum sum;
  sum.add(first_[n] * v[0]);
  for (std::size_t j = 1; j < n; ++j) sum.add(lagged_[n - j] * v[j]);
  sum.add(diagonal_ * v[n]);
  return sum.value();
}

QuadratureWeights build_weights(const Grid& grid, double alpha) {
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw std::domain_error("build_weights: alpha must be positive");
  QuadratureWeights w(grid, alpha);
  const std::size_t n_nodes = grid.size();
  // ds^alpha / Gamma(alpha + 2)
  const double scale =
      std::pow(grid.ds(), alpha) / (std::tgamma(alpha + 1.0) * (alpha + 1.0));
  w.diagonal_ = scale;
  w.first_.assign(n_nodes, 0.0);
  w.lagged_.assign(n_nodes, 0.0);
  for (std::size_t k = 1; k < n_nodes; ++k) {
    const double kd = static_cast<double>(k);
    w.lagged_[k] = scale * detail::second_difference_pow(kd, alpha);
    w.first_[k] = scale * detail::first_column_factor(kd, alpha);
  }
  return w;
}

}  // namespace gfrac
