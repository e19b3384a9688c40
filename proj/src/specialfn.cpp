#include "gfrac/specialfn.hpp"

#include <cmath>
#include <sstream>

namespace gfrac {

double gamma_ln(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "gamma_ln: argument must be positive, got " << x;
    throw std::domain_error(os.str());
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

namespace {

long double gamma_ld(long double x) {
  // tgammal overflows past ~1755 in extended precision; terms there are far
  // below the truncation threshold of any admissible argument.
  return std::tgamma(x);
}

}  // namespace

double mittag_leffler(double alpha, double z) {
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw std::domain_error("mittag_leffler: alpha must be positive");
  if (!std::isfinite(z)) throw std::domain_error("mittag_leffler: z must be finite");
  if (z == 0.0) return 1.0;

  const long double a = alpha;
  const long double zl = z;
  const long double az = std::fabs(zl);
  const bool negative = z < 0.0;

  long double sum = 1.0L;
  long double prev = 1.0L;
  long double peak = 1.0L;
  for (int j = 1; j < kMittagLefflerTermCap; ++j) {
    const long double arg = a * j + 1.0L;
    long double mag;
    if (arg < 1700.0L) {
      mag = std::pow(az, static_cast<long double>(j)) / gamma_ld(arg);
    } else {
      mag = std::exp(j * std::log(az) - std::lgamma(arg));
    }
    if (!std::isfinite(mag)) throw std::overflow_error("mittag_leffler: term overflow");
    peak = std::max(peak, mag);
    if (negative && peak > kMittagLefflerPeakLimit) {
      std::ostringstream os;
      os << "mittag_leffler: z=" << z << " is outside the series domain for alpha="
         << alpha;
      throw std::domain_error(os.str());
    }
    const bool decreasing = mag < prev;
    const bool small = negative ? mag < 1e-16L : mag < 1e-16L * std::fabs(sum);
    if (decreasing && small) {
      const double out = static_cast<double>(sum);
      if (!std::isfinite(out)) throw std::overflow_error("mittag_leffler: result overflows double");
      return out;
    }
    sum += (negative && (j % 2 != 0)) ? -mag : mag;
    if (!std::isfinite(sum)) throw std::overflow_error("mittag_leffler: sum overflow");
    prev = mag;
  }
  throw ConvergenceError("mittag_leffler: term cap reached");
}

double pochhammer(double lambda, unsigned r) {
  double p = 1.0;
  for (unsigned j = 0; j < r; ++j) p *= lambda + j;
  if (!std::isfinite(p)) throw std::overflow_error("pochhammer: overflow");
  return p;
}

}  // namespace gfrac
