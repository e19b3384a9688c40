#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfrac {

/// Right-hand side f(x, y) of the Caputo-type problem, selected by name from a
/// small registry:
///
///   zero            f = 0                                         params []
///   linear          f = lambda y                                  params [lambda]
///   power_forcing   f = Gamma(beta+1)/Gamma(beta+1-alpha) (x^rho/rho)^(beta-alpha)
///                                                                 params [beta], beta >= alpha
///   sin             f = sin(y)                                    params []
///   logistic        f = lambda y (1 - y)                          params [lambda]
///
/// power_forcing is a manufactured problem whose solution is T(x) + (x^rho/rho)^beta.
struct Rhs {
  std::string name;
  std::vector<double> params;
  std::function<double(double x, double y)> eval;

  double operator()(double x, double y) const { return eval(x, y); }
};

// Throws std::invalid_argument for an unknown name, wrong parameter count, or
// parameters the rhs cannot use with this alpha.
Rhs make_rhs(std::string_view name, std::vector<double> params, double alpha,
             double rho);

std::vector<std::string> rhs_names();

}  // namespace gfrac
