#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfrac/fracops.hpp"
#include "gfrac/grid.hpp"
#include "gfrac/quadrature.hpp"
#include "gfrac/rhs.hpp"

namespace gfrac {

/// Caputo-type problem  cD^alpha_{0+} y = f(x, y),  D^k y(0) = y0[k],
/// k < m = ceil(alpha), posed on the box G = [0, h_star] x {|y - T(x)| <= K}.
struct IVProblem {
  double alpha = 0.5;
  double rho = 1.0;
  std::vector<double> y0;
  Rhs rhs;
  double h_star = 1.0;
  double K = 1.0;

  unsigned order() const;  // m = ceil(alpha)
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const IVProblem& problem);

struct SolverConfig {
  std::size_t n_nodes = 1025;
  double tol = 1e-10;
  int max_iter = 200;
  std::optional<double> lipschitz_L;
  // Lattice density for the estimate of M.
  std::size_t sample_density = 64;
  // Right end of the solution interval; defaults to the existence step h.
  // Larger values are solved but reported as outside the guaranteed interval.
  std::optional<double> x_end;
  Parallelism parallelism;
};

void validate(const SolverConfig& config);

struct ExistenceBox {
  double M = 0.0;  // lattice estimate, a lower bound of the true sup
  double h = 0.0;
  std::size_t sample_density = 0;
};

struct SolverReport {
  double h_used = 0.0;    // right end of the solution grid
  double h_exist = 0.0;   // existence step from the box
  double M = 0.0;
  int iterations = 0;
  std::vector<double> deltas;        // ||y_{k+1} - y_k||
  std::vector<double> omega_bounds;  // omega_j(h_used), aligned with deltas
  double residual = 0.0;
  bool converged = false;

  bool beyond_existence_interval() const { return h_used > h_exist; }
  // deltas[j] <= omega_j deltas[0] (1 + rel_slack) + abs_slack for every j.
  // False when no bounds were computed.
  bool contraction_respected(double rel_slack = 1e-2, double abs_slack = 1e-13) const;
};

struct PicardSolution {
  SampledFunction y;
  SolverReport report;
};

/// Base for solver failures; carries the last iterate and the partial report.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, SampledFunction partial, SolverReport report)
      : std::runtime_error(what), partial_(std::move(partial)), report_(std::move(report)) {}
  const SampledFunction& partial() const { return partial_; }
  const SolverReport& report() const { return report_; }

 private:
  SampledFunction partial_;
  SolverReport report_;
};

class NonConvergence : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

// An iterate left U = {||y - T|| <= K}.
class DomainExit : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

// The right-hand side produced a non-finite value.
class RhsFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// T(x) = sum_k x^k y0[k] / k!
double taylor_poly(std::span<const double> y0, double x);

// max |f| over a density x density lattice on G. Never exceeds the true sup.
double estimate_M(const IVProblem& problem, std::size_t sample_density);

// h* if M == 0, else min{h*, (K Gamma(alpha+1) rho^alpha / M)^(1/alpha)}.
double step_h(const IVProblem& problem, double M);

ExistenceBox existence_box(const IVProblem& problem, std::size_t sample_density);

// Analytic Lipschitz constant of the rhs in y over G, if the registry knows one.
std::optional<double> analytic_lipschitz(const IVProblem& problem);

// Closed-form solution when one is registered: zero and power_forcing always,
// linear when y0[k] = 0 for k >= 1 (y0[0] E_alpha(lambda (x^rho/rho)^alpha)).
std::optional<std::function<double(double)>> reference_solution(const IVProblem& problem);

struct PicardStep {
  SampledFunction value;
  bool input_left_box = false;  // some (x_n, y_n) was outside G
};

/// (A y)(x_n) = T(x_n) + rho I^alpha [f(., y(.))](x_n), product quadrature.
PicardStep picard_apply(const SampledFunction& y, const IVProblem& problem,
                        const QuadratureWeights& weights, Parallelism par = {});

/// Picard iteration from y^0 = T until successive iterates differ by at most
/// config.tol in the sup norm.
PicardSolution solve_picard(const IVProblem& problem, const SolverConfig& config);

// omega_j(x) = L^j (x^rho/rho)^(alpha j) / Gamma(1 + alpha j), via log-space.
double contraction_bound(int j, double L, double x, double alpha, double rho);

// Modulus bound on |(Ay)(x1) - (Ay)(x2) + T(x2) - T(x1)| for 0 <= x1 <= x2.
double holder_bound(double x1, double x2, double M, double alpha, double rho);

// sup_n |y(x_n) - T(x_n) - rho I^alpha[f(., y)](x_n)|
double volterra_residual(const SampledFunction& y, const IVProblem& problem,
                         Parallelism par = {});

/// Node-by-node solve of the same discrete equations as solve_picard:
/// y_n = T(x_n) + sum_{j<n} w[n][j] f_j + w[n][n] f(x_n, y_n). The scalar
/// equation is solved by damped fixed point (damping 0.5) with a secant
/// fallback after 25 iterations, capped at 100. Throws ConvergenceError naming
/// the node on failure.
SampledFunction solve_marching(const IVProblem& problem, const SolverConfig& config);

// The grid solve_picard and solve_marching use: [0, x_end or h] in s-space.
Grid solution_grid(const IVProblem& problem, const SolverConfig& config,
                   const ExistenceBox& box);

}  // namespace gfrac
