#pragma once

#include <stdexcept>
#include <string>

namespace gfrac {

/// Raised when an iterative evaluation (series, adaptive quadrature) stops
/// before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// log Gamma(x) for x > 0, backed by the C library's lgamma (reentrant variant
// where available). Throws std::domain_error for x <= 0 or NaN.
double gamma_ln(double x);

/// One-parameter Mittag-Leffler function E_alpha(z) = sum_j z^j / Gamma(alpha j + 1)
/// by direct series summation in extended precision.
///
/// Truncation: for z >= 0 once terms are decreasing and the next term is below
/// 1e-16 of the partial sum; for z < 0 once terms are decreasing and the next
/// term is below 1e-16 in absolute value (alternating tail bound).
///
/// Series domain: for z < 0 the largest term must stay below
/// kMittagLefflerPeakLimit, otherwise cancellation would swamp the result and
/// std::domain_error is thrown. Roughly |z|^(1/alpha) <= 20. For z > 0 the only
/// limit is overflow. ConvergenceError is thrown if the term cap is reached.
double mittag_leffler(double alpha, double z);

inline constexpr double kMittagLefflerPeakLimit = 1e8;
inline constexpr int kMittagLefflerTermCap = 100000;

// Rising factorial (lambda)_r = lambda (lambda+1) ... (lambda+r-1), (lambda)_0 = 1.
// Throws std::overflow_error if the product overflows.
double pochhammer(double lambda, unsigned r);

}  // namespace gfrac
