#include "gfrac/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gfrac {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    std::ostringstream os;
    os << who << ": alpha must be positive, got " << alpha;
    throw std::domain_error(os.str());
  }
}

unsigned ceil_order(double alpha) {
  return static_cast<unsigned>(std::ceil(alpha));
}

std::vector<double> first_derivative(std::span<const double> v, double h) {
  const std::size_t n = v.size();
  std::vector<double> d(n);
  const double inv2h = 1.0 / (2.0 * h);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2h;
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) * inv2h;
  return d;
}

std::vector<double> second_derivative(std::span<const double> v, double h) {
  const std::size_t n = v.size();
  std::vector<double> d(n);
  const double invh2 = 1.0 / (h * h);
  d[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) * invh2;
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * invh2;
  d[n - 1] = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) * invh2;
  return d;
}

}  // namespace

std::vector<double> s_derivative(std::span<const double> v, double ds,
                                 unsigned order) {
  const std::size_t need = order <= 1 ? 3 : 4;
  if (order > 0 && v.size() < std::max<std::size_t>(need, order + 2)) {
    std::ostringstream os;
    os << "s_derivative: order " << order << " needs at least "
       << std::max<std::size_t>(need, order + 2) << " nodes, got " << v.size();
    throw std::domain_error(os.str());
  }
  std::vector<double> cur(v.begin(), v.end());
  unsigned left = order;
  while (left >= 2) {
    cur = second_derivative(cur, ds);
    left -= 2;
  }
  if (left == 1) cur = first_derivative(cur, ds);
  return cur;
}

void apply_weights(const QuadratureWeights& w, std::span<const double> values,
                   std::span<double> out, Parallelism par) {
  const std::size_t n_nodes = w.size();
  if (values.size() != n_nodes || out.size() != n_nodes)
    throw std::invalid_argument("apply_weights: size mismatch");
  const unsigned threads =
      std::max(1u, std::min<unsigned>(par.threads, static_cast<unsigned>(n_nodes)));
  if (threads == 1 || n_nodes < 256) {
    for (std::size_t n = 0; n < n_nodes; ++n) out[n] = w.apply_row(n, values);
    return;
  }
  // Cyclic node assignment balances the triangular work.
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t n = t; n < n_nodes; n += threads)
        out[n] = w.apply_row(n, values);
    });
  }
}

SampledFunction gfi_apply(const SampledFunction& f, const QuadratureWeights& w,
                          Parallelism par) {
  if (!w.grid().same_as(f.grid()))
    throw std::invalid_argument("gfi_apply: weights built on a different grid");
  std::vector<double> out(f.size());
  apply_weights(w, f.values(), out, par);
  return SampledFunction(f.grid(), std::move(out));
}

SampledFunction gfi_apply(const SampledFunction& f, double alpha, Parallelism par) {
  check_alpha(alpha, "gfi_apply");
  return gfi_apply(f, build_weights(f.grid(), alpha), par);
}

SampledFunction gfd_riemann(const SampledFunction& f, double alpha, Parallelism par) {
  check_alpha(alpha, "gfd_riemann");
  const unsigned order = ceil_order(alpha);
  if (f.size() < order + 2) {
    std::ostringstream os;
    os << "gfd_riemann: alpha=" << alpha << " needs at least " << order + 2
       << " nodes";
    throw std::domain_error(os.str());
  }
  const double inner = static_cast<double>(order) - alpha;
  std::vector<double> integrated;
  if (inner > 0.0) {
    const auto j = gfi_apply(f, inner, par);
    integrated.assign(j.values().begin(), j.values().end());
  } else {
    integrated.assign(f.values().begin(), f.values().end());
  }
  return SampledFunction(f.grid(), s_derivative(integrated, f.grid().ds(), order));
}

SampledFunction gfd_caputo(const SampledFunction& f, double alpha,
                           std::span<const double> init, Parallelism par) {
  check_alpha(alpha, "gfd_caputo");
  const unsigned order = ceil_order(alpha);
  if (init.size() != order) {
    std::ostringstream os;
    os << "gfd_caputo: expected " << order << " initial values for alpha="
       << alpha << ", got " << init.size();
    throw std::invalid_argument(os.str());
  }
  const Grid& g = f.grid();
  std::vector<double> shifted(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double t = g.x(j) - g.a();
    double taylor = 0.0;
    for (std::size_t k = order; k-- > 0;)
      taylor = taylor * t / static_cast<double>(k + 1) + init[k];
    shifted[j] = f[j] - taylor;
  }
  return gfd_riemann(SampledFunction(g, std::move(shifted)), alpha, par);
}

}  // namespace gfrac
