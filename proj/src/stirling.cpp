#include "gfrac/stirling.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfrac {

namespace {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

// Rising factorial over the integers.
BigInt rising(long long lambda, unsigned len) {
  BigInt p = 1;
  for (unsigned j = 0; j < len; ++j) p *= lambda + static_cast<long long>(j);
  return p;
}

BigInt falling(unsigned p, unsigned len) {
  if (len > p) return 0;
  BigInt f = 1;
  for (unsigned j = 0; j < len; ++j) f *= p - j;
  return f;
}

const BigInt kZero = 0;

}  // namespace

unsigned StirlingTable::support(unsigned n) const {
  if (n == 0) return 0;
  return 1 + std::min(r_, m_) * (n - 1);
}

const BigInt& StirlingTable::operator()(unsigned n, unsigned k) const {
  if (n >= rows_.size() || k >= rows_[n].size()) return kZero;
  return rows_[n][k];
}

std::vector<BigInt> StirlingTable::row(unsigned n) const {
  if (n >= rows_.size()) throw std::out_of_range("StirlingTable::row");
  if (n == 0) return {rows_[0][0]};
  return {rows_[n].begin() + 1, rows_[n].end()};
}

StirlingTable stirling_table(unsigned r, unsigned m, unsigned max_n) {
  if (r == 0 || m == 0) throw std::domain_error("stirling_table: need r, m >= 1");
  StirlingTable t(r, m);
  const unsigned p = std::min(r, m);
  const unsigned q = std::max(r, m);
  t.rows_.resize(max_n + 1);
  t.rows_[0] = {BigInt(1)};
  if (max_n >= 1) t.rows_[1] = {BigInt(0), BigInt(1)};

  std::vector<BigInt> binom(p + 1);
  for (unsigned i = 0; i <= p; ++i) binom[i] = binomial(p, i);

  for (unsigned n = 2; n <= max_n; ++n) {
    const unsigned top = t.support(n);
    auto& cur = t.rows_[n];
    cur.assign(top + 1, BigInt(0));
    const long long base = static_cast<long long>(q) +
                           static_cast<long long>(q - p) * (n - 2) -
                           static_cast<long long>(p);
    for (unsigned k = 1; k <= top; ++k) {
      BigInt acc = 0;
      for (unsigned i = 0; i <= p && i < k; ++i) {
        const BigInt& prev = t(n - 1, k - i);
        if (prev == 0) continue;
        acc += rising(base + k, p - i) * binom[i] * prev;
      }
      cur[k] = acc;
    }
  }
  return t;
}

std::map<unsigned, BigInt> stirling_oracle(unsigned r, unsigned m, unsigned n) {
  if (r > 4 || m > 4 || n > 8)
    throw std::length_error("stirling_oracle: instance too large");
  // Operator as a sum of c * x^power D^order, keyed by (power, order).
  std::map<std::pair<unsigned, unsigned>, BigInt> op{{{0u, 0u}, BigInt(1)}};
  for (unsigned step = 0; step < n; ++step) {
    std::map<std::pair<unsigned, unsigned>, BigInt> next;
    for (const auto& [key, c] : op) {
      const auto [power, order] = key;
      for (unsigned i = 0; i <= m; ++i) {
        const BigInt f = falling(power, i);
        if (f == 0) continue;
        next[{power + r - i, order + m - i}] += binomial(m, i) * f * c;
      }
    }
    op.clear();
    for (auto& [key, c] : next)
      if (c != 0) op.emplace(key, std::move(c));
  }
  std::map<unsigned, BigInt> by_order;
  for (const auto& [key, c] : op) by_order[key.second] += c;
  return by_order;
}

}  // namespace gfrac
