#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "gfrac/solver.hpp"

namespace gfrac {

class ProblemFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemFile {
  IVProblem problem;
  SolverConfig solver;
};

/// Flat `section.key = value` format, `#` starts a comment, lists are
/// bracketed and comma-separated:
///
///   problem.alpha = 0.5
///   problem.rho = 1
///   problem.y0 = [1]
///   problem.rhs = linear
///   problem.rhs_params = [-1]      # optional, default []
///   problem.h_star = 1
///   problem.K = 2
///   solver.n_nodes = 1025
///   solver.tol = 1e-10             # optional
///   solver.max_iter = 200          # optional
///   solver.lipschitz_L = 1         # optional
///   solver.sample_density = 64     # optional
///   solver.x_end = 1               # optional, default: existence step h
///
/// Unknown, duplicate, missing or out-of-range keys throw ProblemFileError
/// naming the key.
ProblemFile parse_problem_file(std::istream& in, const std::string& source = "<input>");
ProblemFile load_problem_file(const std::string& path);

}  // namespace gfrac
