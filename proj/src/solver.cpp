#include "gfrac/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gfrac/specialfn.hpp"

namespace gfrac {

namespace {

double checked_rhs(const IVProblem& p, double x, double y) {
  const double v = p.rhs(x, y);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "rhs '" << p.rhs.name << "' returned " << v << " at x=" << x << ", y=" << y;
    throw RhsFailure(os.str());
  }
  return v;
}

std::vector<double> taylor_on(const Grid& g, std::span<const double> y0) {
  std::vector<double> t(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) t[j] = taylor_poly(y0, g.x(j));
  return t;
}

// Excursion slack so that T itself (and rounding around it) never trips U.
constexpr double kBoxSlack = 1e-12;

}  // namespace

unsigned IVProblem::order() const { return static_cast<unsigned>(std::ceil(alpha)); }

void validate(const IVProblem& p) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (!(std::isfinite(p.alpha) && p.alpha > 0.0)) fail("alpha must be positive");
  if (!(std::isfinite(p.rho) && p.rho > 0.0)) fail("rho must be positive");
  if (p.y0.size() != p.order()) {
    std::ostringstream os;
    os << "y0 must hold ceil(alpha) = " << p.order() << " value(s), got "
       << p.y0.size();
    fail(os.str());
  }
  for (double v : p.y0)
    if (!std::isfinite(v)) fail("y0 values must be finite");
  if (!(std::isfinite(p.h_star) && p.h_star > 0.0)) fail("h_star must be positive");
  if (!(std::isfinite(p.K) && p.K > 0.0)) fail("K must be positive");
  if (!p.rhs.eval) fail("rhs is not set");
}

void validate(const SolverConfig& c) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (c.n_nodes < 4) fail("n_nodes must be at least 4");
  if (!(c.tol > 0.0)) fail("tol must be positive");
  if (c.max_iter < 1) fail("max_iter must be at least 1");
  if (c.lipschitz_L && !(std::isfinite(*c.lipschitz_L) && *c.lipschitz_L > 0.0))
    fail("lipschitz_L must be positive");
  if (c.sample_density < 2) fail("sample_density must be at least 2");
  if (c.x_end && !(std::isfinite(*c.x_end) && *c.x_end > 0.0))
    fail("x_end must be positive");
}

bool SolverReport::contraction_respected(double rel_slack, double abs_slack) const {
  if (omega_bounds.empty() || deltas.empty()) return false;
  const std::size_t n = std::min(deltas.size(), omega_bounds.size());
  for (std::size_t j = 0; j < n; ++j)
    if (deltas[j] > omega_bounds[j] * deltas[0] * (1.0 + rel_slack) + abs_slack)
      return false;
  return true;
}

double taylor_poly(std::span<const double> y0, double x) {
  double t = 0.0;
  for (std::size_t k = y0.size(); k-- > 0;)
    t = t * x / static_cast<double>(k + 1) + y0[k];
  return t;
}

double estimate_M(const IVProblem& problem, std::size_t sample_density) {
  if (sample_density < 2) throw std::invalid_argument("estimate_M: density must be >= 2");
  const double last = static_cast<double>(sample_density - 1);
  double m = 0.0;
  for (std::size_t i = 0; i < sample_density; ++i) {
    const double x = problem.h_star * (static_cast<double>(i) / last);
    const double t = taylor_poly(problem.y0, x);
    for (std::size_t j = 0; j < sample_density; ++j) {
      const double y = t - problem.K + 2.0 * problem.K * (static_cast<double>(j) / last);
      m = std::max(m, std::abs(checked_rhs(problem, x, y)));
    }
  }
  return m;
}

double step_h(const IVProblem& problem, double M) {
  if (!(M >= 0.0)) throw std::domain_error("step_h: M must be nonnegative");
  if (M == 0.0) return problem.h_star;
  const double a = problem.alpha;
  const double h =
      std::pow(problem.K * std::tgamma(a + 1.0) * std::pow(problem.rho, a) / M, 1.0 / a);
  return std::min(problem.h_star, h);
}

ExistenceBox existence_box(const IVProblem& problem, std::size_t sample_density) {
  ExistenceBox box;
  box.sample_density = sample_density;
  box.M = estimate_M(problem, sample_density);
  box.h = step_h(problem, box.M);
  return box;
}

std::optional<double> analytic_lipschitz(const IVProblem& problem) {
  const auto& name = problem.rhs.name;
  if (name == "zero" || name == "power_forcing") return 0.0;
  if (name == "linear") return std::abs(problem.rhs.params.at(0));
  if (name == "sin") return 1.0;
  if (name == "logistic") {
    // |df/dy| = |lambda| |1 - 2y|, maximal at an end of the y-range of G.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    constexpr int kSamples = 1024;
    for (int i = 0; i <= kSamples; ++i) {
      const double t = taylor_poly(problem.y0, problem.h_star * i / kSamples);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    lo -= problem.K;
    hi += problem.K;
    return std::abs(problem.rhs.params.at(0)) *
           std::max(std::abs(1.0 - 2.0 * lo), std::abs(1.0 - 2.0 * hi));
  }
  return std::nullopt;
}

std::optional<std::function<double(double)>> reference_solution(const IVProblem& problem) {
  const auto& name = problem.rhs.name;
  std::vector<double> y0 = problem.y0;
  const double alpha = problem.alpha;
  const double rho = problem.rho;
  if (name == "zero")
    return [y0](double x) { return taylor_poly(y0, x); };
  if (name == "power_forcing") {
    const double beta = problem.rhs.params.at(0);
    return [y0, beta, rho](double x) {
      return taylor_poly(y0, x) + std::pow(std::pow(x, rho) / rho, beta);
    };
  }
  if (name == "linear") {
    for (std::size_t k = 1; k < y0.size(); ++k)
      if (y0[k] != 0.0) return std::nullopt;
    const double lambda = problem.rhs.params.at(0);
    const double c = y0.at(0);
    return [c, lambda, alpha, rho](double x) {
      const double s = std::pow(x, rho) / rho;
      return c * mittag_leffler(alpha, lambda * std::pow(s, alpha));
    };
  }
  return std::nullopt;
}

PicardStep picard_apply(const SampledFunction& y, const IVProblem& problem,
                        const QuadratureWeights& weights, Parallelism par) {
  const Grid& g = y.grid();
  if (!weights.grid().same_as(g))
    throw std::invalid_argument("picard_apply: weights built on a different grid");
  PicardStep step{y, false};
  std::vector<double> composite(g.size());
  std::vector<double> out(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double t = taylor_poly(problem.y0, g.x(n));
    if (std::abs(y[n] - t) > problem.K * (1.0 + kBoxSlack) ||
        g.x(n) > problem.h_star * (1.0 + kBoxSlack))
      step.input_left_box = true;
    composite[n] = checked_rhs(problem, g.x(n), y[n]);
  }
  apply_weights(weights, composite, out, par);
  for (std::size_t n = 0; n < g.size(); ++n) out[n] += taylor_poly(problem.y0, g.x(n));
  step.value = SampledFunction(g, std::move(out));
  return step;
}

Grid solution_grid(const IVProblem& problem, const SolverConfig& config,
                   const ExistenceBox& box) {
  const double end = config.x_end.value_or(box.h);
  if (end > problem.h_star)
    throw std::invalid_argument("x_end must not exceed h_star (outside the box G)");
  return make_grid(0.0, end, problem.rho, config.n_nodes);
}

PicardSolution solve_picard(const IVProblem& problem, const SolverConfig& config) {
  validate(problem);
  validate(config);
  const ExistenceBox box = existence_box(problem, config.sample_density);
  const Grid grid = solution_grid(problem, config, box);
  const QuadratureWeights weights = build_weights(grid, problem.alpha);
  const std::vector<double> taylor = taylor_on(grid, problem.y0);

  SolverReport report;
  report.h_used = grid.b();
  report.h_exist = box.h;
  report.M = box.M;

  auto finish_bounds = [&] {
    if (!config.lipschitz_L) return;
    report.omega_bounds.clear();
    for (std::size_t j = 0; j < report.deltas.size(); ++j)
      report.omega_bounds.push_back(contraction_bound(
          static_cast<int>(j), *config.lipschitz_L, report.h_used, problem.alpha,
          problem.rho));
  };

  SampledFunction y(grid, taylor);
  for (int k = 1; k <= config.max_iter; ++k) {
    PicardStep step = picard_apply(y, problem, weights, config.parallelism);
    const double delta = sup_distance(step.value.values(), y.values());
    report.deltas.push_back(delta);
    report.iterations = k;
    y = std::move(step.value);
    const double excursion = sup_distance(y.values(), taylor);
    if (excursion > problem.K * (1.0 + kBoxSlack)) {
      finish_bounds();
      report.residual = volterra_residual(y, problem, config.parallelism);
      std::ostringstream os;
      os << "iterate " << k << " left U: ||y - T|| = " << excursion << " > K = "
         << problem.K;
      throw DomainExit(os.str(), y, report);
    }
    if (delta <= config.tol) {
      report.converged = true;
      break;
    }
  }
  finish_bounds();
  report.residual = volterra_residual(y, problem, config.parallelism);
  if (!report.converged) {
    std::ostringstream os;
    os << "Picard iteration did not reach tol=" << config.tol << " in "
       << config.max_iter << " iterations (last delta " << report.deltas.back() << ")";
    throw NonConvergence(os.str(), y, report);
  }
  return {std::move(y), std::move(report)};
}

double contraction_bound(int j, double L, double x, double alpha, double rho) {
  if (j < 0) throw std::domain_error("contraction_bound: j must be nonnegative");
  if (j == 0) return 1.0;
  if (L == 0.0 || x == 0.0) return 0.0;
  const double aj = alpha * j;
  const double log_s = rho * std::log(x) - std::log(rho);
  return std::exp(j * std::log(L) + aj * log_s - gamma_ln(1.0 + aj));
}

double holder_bound(double x1, double x2, double M, double alpha, double rho) {
  if (!(x1 >= 0.0 && x1 <= x2))
    throw std::domain_error("holder_bound: need 0 <= x1 <= x2");
  const double d = std::pow(x2, rho) - std::pow(x1, rho);
  const double scale = M / (std::pow(rho, alpha) * std::tgamma(alpha + 1.0));
  if (alpha <= 1.0) return 2.0 * scale * std::pow(d, alpha);
  return scale * (std::pow(d, alpha) + std::pow(x2, rho * alpha) -
                  std::pow(x1, rho * alpha));
}

double volterra_residual(const SampledFunction& y, const IVProblem& problem,
                         Parallelism par) {
  const Grid& g = y.grid();
  const QuadratureWeights w = build_weights(g, problem.alpha);
  std::vector<double> composite(g.size());
  std::vector<double> integral(g.size());
  for (std::size_t n = 0; n < g.size(); ++n)
    composite[n] = checked_rhs(problem, g.x(n), y[n]);
  apply_weights(w, composite, integral, par);
  double r = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n)
    r = std::max(r, std::abs(y[n] - taylor_poly(problem.y0, g.x(n)) - integral[n]));
  return r;
}

SampledFunction solve_marching(const IVProblem& problem, const SolverConfig& config) {
  validate(problem);
  validate(config);
  const ExistenceBox box = existence_box(problem, config.sample_density);
  const Grid grid = solution_grid(problem, config, box);
  const QuadratureWeights w = build_weights(grid, problem.alpha);
  const std::size_t n_nodes = grid.size();

  constexpr int kDampedIters = 25;
  constexpr int kMaxIters = 100;
  constexpr double kDamping = 0.5;
  constexpr double kScalarTol = 4.0 * std::numeric_limits<double>::epsilon();

  std::vector<double> y(n_nodes);
  std::vector<double> F(n_nodes, 0.0);
  y[0] = taylor_poly(problem.y0, grid.x(0));
  F[0] = checked_rhs(problem, grid.x(0), y[0]);
  const double wd = w.diagonal();

  for (std::size_t n = 1; n < n_nodes; ++n) {
    const double x = grid.x(n);
    // F[n] is still zero, so the row sum is the history part.
    const double known = taylor_poly(problem.y0, x) + w.apply_row(n, F);
    auto G = [&](double v) { return known + wd * checked_rhs(problem, x, v); };
    auto small = [&](double r, double v) {
      return std::abs(r) <= kScalarTol * std::max(1.0, std::abs(v));
    };

    double v = y[n - 1];
    double prev_v = v, prev_r = 0.0;
    bool have_prev = false;
    bool done = false;
    for (int it = 0; it < kMaxIters; ++it) {
      const double r = v - G(v);
      if (small(r, v)) {
        done = true;
        break;
      }
      double next;
      if (it < kDampedIters || !have_prev || r == prev_r) {
        next = v - kDamping * r;
      } else {
        next = v - r * (v - prev_v) / (r - prev_r);
      }
      prev_v = v;
      prev_r = r;
      have_prev = true;
      if (next == v) {
        done = true;
        break;
      }
      v = next;
    }
    if (!done) {
      std::ostringstream os;
      os << "solve_marching: scalar solve failed at node " << n << " (x=" << x << ")";
      throw ConvergenceError(os.str());
    }
    y[n] = v;
    F[n] = checked_rhs(problem, x, v);
  }
  return SampledFunction(grid, std::move(y));
}

}  // namespace gfrac
