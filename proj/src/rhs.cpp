#include "gfrac/rhs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gfrac {

namespace {

void expect_params(std::string_view name, const std::vector<double>& params,
                   std::size_t count) {
  if (params.size() != count) {
    std::ostringstream os;
    os << "rhs '" << name << "' takes " << count << " parameter(s), got "
       << params.size();
    throw std::invalid_argument(os.str());
  }
  for (double p : params)
    if (!std::isfinite(p))
      throw std::invalid_argument("rhs parameters must be finite");
}

}  // namespace

std::vector<std::string> rhs_names() {
  return {"zero", "linear", "power_forcing", "sin", "logistic"};
}

Rhs make_rhs(std::string_view name, std::vector<double> params, double alpha,
             double rho) {
  Rhs r{std::string(name), params, {}};
  if (name == "zero") {
    expect_params(name, params, 0);
    r.eval = [](double, double) { return 0.0; };
  } else if (name == "linear") {
    expect_params(name, params, 1);
    const double lambda = params[0];
    r.eval = [lambda](double, double y) { return lambda * y; };
  } else if (name == "power_forcing") {
    expect_params(name, params, 1);
    const double beta = params[0];
    // beta >= alpha keeps the forcing bounded on G.
    if (!(beta >= alpha))
      throw std::invalid_argument("power_forcing: need beta >= alpha");
    const double c = std::tgamma(beta + 1.0) / std::tgamma(beta + 1.0 - alpha);
    const double e = beta - alpha;
    r.eval = [c, e, rho](double x, double) {
      const double s = std::pow(x, rho) / rho;
      if (s == 0.0) return e > 0.0 ? 0.0 : c;
      return c * std::pow(s, e);
    };
  } else if (name == "sin") {
    expect_params(name, params, 0);
    r.eval = [](double, double y) { return std::sin(y); };
  } else if (name == "logistic") {
    expect_params(name, params, 1);
    const double lambda = params[0];
    r.eval = [lambda](double, double y) { return lambda * y * (1.0 - y); };
  } else {
    std::ostringstream os;
    os << "unknown rhs '" << name << "' (known:";
    for (const auto& n : rhs_names()) os << ' ' << n;
    os << ')';
    throw std::invalid_argument(os.str());
  }
  return r;
}

}  // namespace gfrac
