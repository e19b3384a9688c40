#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gfrac/grid.hpp"
#include "gfrac/quadrature.hpp"

namespace gfrac {

// Worker threads for per-node quadrature sums. Each node's sum is always
// evaluated by one thread in the same order, so results do not depend on it.
struct Parallelism {
  unsigned threads = 1;
};

/// Left-sided generalized fractional integral
///
///   (rho I^alpha_{a+} f)(x) = rho^(1-alpha)/Gamma(alpha)
///                             * int_a^x tau^(rho-1) (x^rho - tau^rho)^(alpha-1) f(tau) dtau
///
/// at every grid node. With s = (x^rho - a^rho)/rho this is the Abel integral
/// (1/Gamma(alpha)) int_0^s (s - sigma)^(alpha-1) f(x(sigma)) dsigma, evaluated
/// with product-trapezoidal weights. Node 0 maps to 0.
SampledFunction gfi_apply(const SampledFunction& f, double alpha,
                          Parallelism par = {});

// Same, with prebuilt weights (must live on f's grid).
SampledFunction gfi_apply(const SampledFunction& f, const QuadratureWeights& w,
                          Parallelism par = {});

// Raw form used by the solver loop: out[n] = sum_j w[n][j] values[j].
void apply_weights(const QuadratureWeights& w, std::span<const double> values,
                   std::span<double> out, Parallelism par = {});

/// Riemann-Liouville-type generalized derivative
/// (x^(1-rho) d/dx)^n rho I^(n-alpha) f, n = ceil(alpha). Since
/// x^(1-rho) d/dx = d/ds, the outer operator is an n-th finite difference on
/// the uniform s-grid: second-order central in the interior, second-order
/// one-sided at both ends. Values at the first node are low-confidence when the
/// exact derivative is singular at a. Throws std::domain_error if alpha <= 0 or
/// the grid has fewer than n + 2 nodes.
SampledFunction gfd_riemann(const SampledFunction& f, double alpha,
                            Parallelism par = {});

// Caputo-type derivative: gfd_riemann of f minus its Taylor polynomial at a,
// sum_{k<n} init[k] (x - a)^k / k!. init.size() must equal ceil(alpha)
// (std::invalid_argument otherwise).
SampledFunction gfd_caputo(const SampledFunction& f, double alpha,
                           std::span<const double> init, Parallelism par = {});

// n-th derivative in s of sampled data on a uniform grid with spacing ds.
std::vector<double> s_derivative(std::span<const double> v, double ds,
                                 unsigned order);

inline constexpr int kReferenceMaxHalvings = 60;
inline constexpr int kReferenceMaxDepth = 40;

/// Independent evaluation of (rho I^alpha_{a+} f)(x) for one point, used as a
/// test and study oracle. Works in s-space: the last subinterval [S - d, S] is
/// integrated in closed form against the linear interpolant of f, the rest by
/// adaptive Gauss-Kronrod bisection; d is halved until two successive totals
/// differ by less than tol. Throws ConvergenceError after
/// kReferenceMaxHalvings halvings or if bisection exceeds kReferenceMaxDepth.
double gfi_reference(const std::function<double(double)>& f, double x,
                     double alpha, double rho, double a, double tol);

}  // namespace gfrac
