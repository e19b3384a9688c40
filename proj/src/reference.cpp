#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gfrac/fracops.hpp"
#include "gfrac/specialfn.hpp"

namespace gfrac {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Estimate {
  double value;
  double error;
};

template <class F>
Estimate gauss_kronrod(const F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double r = 0.5 * (hi - lo);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = r * kXgk[i];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  return {kronrod * r, std::abs((kronrod - gauss) * r)};
}

template <class F>
double adaptive(const F& f, double lo, double hi, double tol, int depth) {
  const Estimate e = gauss_kronrod(f, lo, hi);
  if (e.error <= tol) return e.value;
  if (depth >= kReferenceMaxDepth) {
    std::ostringstream os;
    os << "gfi_reference: bisection depth exceeded on [" << lo << ", " << hi << "]";
    throw ConvergenceError(os.str());
  }
  // tol / sqrt(2) per half keeps endpoint singularities of f reachable.
  const double mid = 0.5 * (lo + hi);
  const double half_tol = tol * std::numbers::sqrt2 / 2;
  return adaptive(f, lo, mid, half_tol, depth + 1) +
         adaptive(f, mid, hi, half_tol, depth + 1);
}

}  // namespace

double gfi_reference(const std::function<double(double)>& f, double x,
                     double alpha, double rho, double a, double tol) {
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw std::domain_error("gfi_reference: alpha must be positive");
  if (!(tol > 0.0)) throw std::domain_error("gfi_reference: tol must be positive");
  if (!(rho > 0.0)) throw std::domain_error("gfi_reference: rho must be positive");
  if (x < a) throw std::domain_error("gfi_reference: x must not precede a");

  const double total_s = s_from_x(a, rho, x);
  if (total_s == 0.0) return 0.0;

  auto g = [&](double sigma) { return f(x_from_s(a, rho, sigma)); };
  auto regular = [&](double sigma) {
    return std::pow(total_s - sigma, alpha - 1.0) * g(sigma);
  };
  // int_{S-d}^{S} (S - sigma)^(alpha-1) * [linear interpolant of g]
  const double g_end = g(total_s);
  auto tail = [&](double d) {
    return std::pow(d, alpha) *
           (g(total_s - d) / (alpha + 1.0) + g_end / (alpha * (alpha + 1.0)));
  };

  const double inv_gamma = 1.0 / std::tgamma(alpha);
  const double piece_tol = 1e-2 * tol / inv_gamma;
  double d = 0.5 * total_s;
  double body = adaptive(regular, 0.0, total_s - d, piece_tol, 0);
  double previous = body + tail(d);
  for (int k = 0; k < kReferenceMaxHalvings; ++k) {
    const double next_d = 0.5 * d;
    if (total_s - next_d == total_s - d || total_s - next_d >= total_s) break;
    body += adaptive(regular, total_s - d, total_s - next_d, piece_tol, 0);
    d = next_d;
    const double current = body + tail(d);
    if (std::abs(current - previous) * inv_gamma < tol) return current * inv_gamma;
    previous = current;
  }
  throw ConvergenceError("gfi_reference: endpoint refinement did not converge");
}

}  // namespace gfrac
