#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gfrac/fracops.hpp"

namespace gfrac::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitCompute = 2;

struct SolveArgs {
  std::string problem_path;
  std::string output_path;
  Parallelism par;
};

// Writes the x,y CSV to output_path and the solver report to out.
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct OperatorArgs {
  std::string kind;  // integral | deriv | caputo
  std::string data_path;
  double alpha = 0.5;
  double rho = 1.0;
  double a = 0.0;
  std::vector<double> init;
  std::optional<std::string> output_path;  // stdout when empty
  Parallelism par;
};

int cmd_operator(const OperatorArgs& args, std::ostream& out, std::ostream& err);

int cmd_ml(double alpha, double z, std::ostream& out, std::ostream& err);

int cmd_stirling(unsigned r, unsigned m, unsigned max_n, std::ostream& out,
                 std::ostream& err);

struct StudyArgs {
  std::string problem_path;
  std::vector<long long> resolutions;
  std::optional<std::string> output_path;  // stdout when empty
  Parallelism par;
};

// CSV n_nodes,sup_error,observed_order. The summary goes to out when the CSV
// goes to a file, otherwise to err.
int cmd_study(const StudyArgs& args, std::ostream& out, std::ostream& err);

// Full command line front end; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfrac::cli
