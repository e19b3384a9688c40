#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfrac {

using BigInt = boost::multiprecision::cpp_int;

/// Generalized Stirling numbers S(n, k) for the operator x^r d^m/dx^m:
///
///   (x^r D^m)^n = sum_k S(n, k) x^(q_k + n(r-m)) D^(q_k)
///
/// with k = 1 at the lowest derivative order. Row n > 0 has support
/// 1 <= k <= 1 + min(r, m)(n - 1); row 0 is the identity, S(0, 0) = 1.
/// r = m = 1 gives the Stirling numbers of the second kind.
class StirlingTable {
 public:
  unsigned r() const { return r_; }
  unsigned m() const { return m_; }
  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }

  // Largest k with a (possibly) nonzero entry in row n.
  unsigned support(unsigned n) const;

  // Zero outside the support.
  const BigInt& operator()(unsigned n, unsigned k) const;

  // Entries S(n, 1..support(n)); for n = 0 the single entry S(0, 0).
  std::vector<BigInt> row(unsigned n) const;

  friend StirlingTable stirling_table(unsigned r, unsigned m, unsigned max_n);

 private:
  StirlingTable(unsigned r, unsigned m) : r_(r), m_(m) {}
  unsigned r_, m_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[n][k], k = 0..support(n)
};

/// Builds rows 0..max_n with the recurrence
///
///   S(n, k) = sum_{i=0}^{p} (q + (q - p)(n - 2) + k - p)_{p-i} C(p, i) S(n-1, k-i)
///
/// where p = min(r, m), q = max(r, m), seeded with S(0,0) = 1, S(1,1) = 1.
/// The table for (r, m) equals the one for (m, r), so the smaller order plays
/// the role of p. Throws std::domain_error for r == 0 or m == 0.
StirlingTable stirling_table(unsigned r, unsigned m, unsigned max_n);

/// Independent check: expands (x^r D^m)^n symbolically with the Leibniz rule,
/// D^m (x^p g) = sum_i C(m, i) p!/(p-i)! x^(p-i) D^(m-i) g, and returns the
/// coefficients keyed by derivative order. Limited to r, m <= 4 and n <= 8
/// (std::length_error otherwise).
std::map<unsigned, BigInt> stirling_oracle(unsigned r, unsigned m, unsigned n);

}  // namespace gfrac
