#include "gfrac/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gfrac/csv.hpp"
#include "gfrac/problem_file.hpp"
#include "gfrac/solver.hpp"
#include "gfrac/specialfn.hpp"
#include "gfrac/stirling.hpp"

namespace gfrac::cli {

namespace {

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_real(v[i]);
  }
  return s;
}

void print_report(std::ostream& out, const SolverReport& r,
                  const SolverConfig& config) {
  out << "h_exist: " << format_real(r.h_exist) << '\n';
  out << "h_used: " << format_real(r.h_used) << '\n';
  out << "beyond_existence_interval: "
      << (r.beyond_existence_interval() ? "true" : "false") << '\n';
  out << "M_estimate: " << format_real(r.M) << '\n';
  out << "iterations: " << r.iterations << '\n';
  out << "deltas: " << join(r.deltas) << '\n';
  if (config.lipschitz_L) {
    out << "lipschitz_L: " << format_real(*config.lipschitz_L) << '\n';
    out << "omega_bounds: " << join(r.omega_bounds) << '\n';
    out << "contraction_bounds: "
        << (r.contraction_respected() ? "respected" : "violated") << '\n';
  }
  out << "residual: " << format_real(r.residual) << '\n';
  out << "converged: " << (r.converged ? "true" : "false") << '\n';
}

// Runs body, mapping exceptions onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const RhsFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  return f;
}

// Piecewise-linear interpolation of (x, v) at q; x strictly increasing and
// x.front() <= q <= x.back().
double interpolate(const std::vector<double>& x, const std::vector<double>& v, double q) {
  auto it = std::upper_bound(x.begin(), x.end(), q);
  if (it == x.begin()) return v.front();
  if (it == x.end()) return v.back();
  const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
  if (q == x[i]) return v[i];
  const double t = (q - x[i]) / (x[i + 1] - x[i]);
  return v[i] + t * (v[i + 1] - v[i]);
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProblemFile pf = load_problem_file(args.problem_path);
    pf.solver.parallelism = args.par;
    std::ofstream csv = open_output(args.output_path);
    try {
      const PicardSolution sol = solve_picard(pf.problem, pf.solver);
      write_xy_csv(csv, "y", sol.y.grid().x_nodes(), sol.y.values());
      print_report(out, sol.report, pf.solver);
      return kExitOk;
    } catch (const SolverFailure& e) {
      write_xy_csv(csv, "y", e.partial().grid().x_nodes(), e.partial().values(), true);
      print_report(out, e.report(), pf.solver);
      throw;
    }
  });
}

int cmd_operator(const OperatorArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.kind != "integral" && args.kind != "deriv" && args.kind != "caputo")
      throw std::invalid_argument("operator kind must be integral, deriv or caputo");
    std::ifstream in(args.data_path);
    if (!in) throw std::invalid_argument("cannot open data file '" + args.data_path + "'");
    const XYTable t = read_xy_csv(in, {"f", "y"});
    if (t.x.size() < 4) throw std::invalid_argument("need at least 4 data rows");
    for (std::size_t i = 1; i < t.x.size(); ++i)
      if (!(t.x[i] > t.x[i - 1]))
        throw std::invalid_argument("x column must be strictly increasing (row " +
                                    std::to_string(i + 1) + ")");
    if (t.x.front() > args.a)
      throw std::invalid_argument("data must start at or before a");
    const Grid grid = make_grid(args.a, t.x.back(), args.rho, t.x.size());
    const auto f = SampledFunction::sample(
        grid, [&](double x) { return interpolate(t.x, t.v, x); });

    std::optional<SampledFunction> result;
    if (args.kind == "integral") {
      result = gfi_apply(f, args.alpha, args.par);
    } else if (args.kind == "deriv") {
      result = gfd_riemann(f, args.alpha, args.par);
    } else {
      result = gfd_caputo(f, args.alpha, args.init, args.par);
    }
    if (args.output_path) {
      std::ofstream o = open_output(*args.output_path);
      write_xy_csv(o, "result", grid.x_nodes(), result->values());
    } else {
      write_xy_csv(out, "result", grid.x_nodes(), result->values());
    }
    return kExitOk;
  });
}

int cmd_ml(double alpha, double z, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << format_shortest(mittag_leffler(alpha, z)) << '\n';
    return kExitOk;
  });
}

int cmd_stirling(unsigned r, unsigned m, unsigned max_n, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const StirlingTable t = stirling_table(r, m, max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
      const auto row = t.row(n);
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
      out << '\n';
    }
    return kExitOk;
  });
}

int cmd_study(const StudyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProblemFile pf = load_problem_file(args.problem_path);
    pf.solver.parallelism = args.par;
    if (args.resolutions.size() < 2)
      throw std::invalid_argument("study needs at least two resolutions");
    std::vector<long long> res = args.resolutions;
    for (long long n : res)
      if (n < 4) throw std::invalid_argument("resolutions must be at least 4");
    if (!std::is_sorted(res.begin(), res.end()) ||
        std::adjacent_find(res.begin(), res.end()) != res.end())
      throw std::invalid_argument("resolutions must be strictly increasing");

    const auto reference = reference_solution(pf.problem);
    std::vector<PicardSolution> runs;
    runs.reserve(res.size());
    for (long long n : res) {
      SolverConfig c = pf.solver;
      c.n_nodes = static_cast<std::size_t>(n);
      runs.push_back(solve_picard(pf.problem, c));
    }

    // Without a closed form the finest run is the reference; it gets no row.
    std::vector<double> errors;
    std::vector<double> spacing;
    const std::size_t rows = reference ? runs.size() : runs.size() - 1;
    for (std::size_t i = 0; i < rows; ++i) {
      const SampledFunction& y = runs[i].y;
      double e = 0.0;
      if (reference) {
        for (std::size_t n = 0; n < y.size(); ++n)
          e = std::max(e, std::abs(y[n] - (*reference)(y.grid().x(n))));
      } else {
        const SampledFunction& fine = runs.back().y;
        std::vector<double> s(fine.grid().s_nodes().begin(), fine.grid().s_nodes().end());
        std::vector<double> v(fine.values().begin(), fine.values().end());
        for (std::size_t n = 0; n < y.size(); ++n)
          e = std::max(e, std::abs(y[n] - interpolate(s, v, y.grid().s(n))));
      }
      errors.push_back(e);
      spacing.push_back(y.grid().ds());
    }

    std::ostringstream csv;
    csv << "n_nodes,sup_error,observed_order\n";
    for (std::size_t i = 0; i < rows; ++i) {
      double order = std::numeric_limits<double>::quiet_NaN();
      if (i > 0 && errors[i - 1] > 0.0 && errors[i] > 0.0)
        order = std::log(errors[i - 1] / errors[i]) / std::log(spacing[i - 1] / spacing[i]);
      csv << res[i] << ',' << format_real(errors[i]) << ','
          << (std::isnan(order) ? std::string("nan") : format_real(order)) << '\n';
    }

    std::ostream* summary = &out;
    if (args.output_path) {
      std::ofstream o = open_output(*args.output_path);
      o << csv.str();
    } else {
      out << csv.str();
      summary = &err;
    }
    *summary << "reference: " << (reference ? "closed_form" : "finest_grid") << '\n';
    if (pf.solver.lipschitz_L) {
      const bool ok = std::all_of(runs.begin(), runs.end(), [](const PicardSolution& r) {
        return r.report.contraction_respected();
      });
      *summary << "contraction_bounds: " << (ok ? "respected" : "violated") << '\n';
    } else {
      *summary << "contraction_bounds: not_checked\n";
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized fractional calculus: operators, Caputo-type IVP solver, "
               "Mittag-Leffler and generalized Stirling numbers"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for quadrature sums")
      ->check(CLI::Range(1u, 256u));

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve a Caputo-type IVP by Picard iteration");
  s->add_option("file", solve.problem_path, "Problem file")->required();
  s->add_option("-o,--output", solve.output_path, "Output CSV (x,y)")->required();

  OperatorArgs op;
  std::string op_out;
  auto* o = app.add_subcommand("operator", "Apply an operator to tabulated data");
  o->add_option("kind", op.kind, "integral | deriv | caputo")
      ->required()
      ->check(CLI::IsMember({"integral", "deriv", "caputo"}));
  o->add_option("csv", op.data_path, "Input CSV with header x,f")->required();
  o->add_option("--alpha", op.alpha, "Order alpha > 0")->required();
  o->add_option("--rho", op.rho, "rho > 0")->capture_default_str();
  o->add_option("--a", op.a, "Left endpoint a >= 0")->capture_default_str();
  o->add_option("--init", op.init, "Initial values f^(k)(a), comma separated")
      ->delimiter(',');
  o->add_option("-o,--output", op_out, "Output CSV (default: stdout)");

  double ml_alpha = 1.0, ml_z = 0.0;
  auto* ml = app.add_subcommand("ml", "Evaluate the Mittag-Leffler function E_alpha(z)");
  ml->add_option("alpha", ml_alpha)->required();
  ml->add_option("z", ml_z)->required();

  unsigned st_r = 1, st_m = 1, st_n = 0;
  auto* st = app.add_subcommand("stirling", "Print generalized Stirling rows 0..max_n");
  st->add_option("r", st_r)->required()->check(CLI::Range(1u, 64u));
  st->add_option("m", st_m)->required()->check(CLI::Range(1u, 64u));
  st->add_option("max_n", st_n)->required()->check(CLI::Range(0u, 2000u));

  StudyArgs study;
  std::string study_out;
  auto* sd = app.add_subcommand("study", "Grid-refinement convergence study");
  sd->add_option("file", study.problem_path, "Problem file")->required();
  sd->add_option("--resolutions", study.resolutions, "Node counts, comma separated")
      ->required()
      ->delimiter(',');
  sd->add_option("-o,--output", study_out, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  const Parallelism par{threads};
  if (*s) {
    solve.par = par;
    return cmd_solve(solve, out, err);
  }
  if (*o) {
    op.par = par;
    if (!op_out.empty()) op.output_path = op_out;
    return cmd_operator(op, out, err);
  }
  if (*ml) return cmd_ml(ml_alpha, ml_z, out, err);
  if (*st) return cmd_stirling(st_r, st_m, st_n, out, err);
  study.par = par;
  if (!study_out.empty()) study.output_path = study_out;
  return cmd_study(study, out, err);
}

}  // namespace gfrac::cli
