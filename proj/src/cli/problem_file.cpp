#include "gfrac/problem_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gfrac {

namespace {

const std::set<std::string> kRequired = {
    "problem.alpha", "problem.rho", "problem.y0", "problem.rhs",
    "problem.h_star", "problem.K", "solver.n_nodes"};
const std::set<std::string> kOptional = {
    "problem.rhs_params", "solver.tol", "solver.max_iter", "solver.lipschitz_L",
    "solver.sample_density", "solver.x_end"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Entry {
  std::string value;
  int line;
};

class Reader {
 public:
  Reader(std::map<std::string, Entry> entries, std::string source)
      : entries_(std::move(entries)), source_(std::move(source)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    std::ostringstream os;
    os << source_;
    if (auto it = entries_.find(key); it != entries_.end()) os << ':' << it->second.line;
    os << ": " << key << ": " << msg;
    throw ProblemFileError(os.str());
  }

  double real(const std::string& key) const { return parse_real(key, raw(key)); }

  long long integer(const std::string& key) const {
    const std::string& v = raw(key);
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      fail(key, "expected an integer, got '" + v + "'");
    return out;
  }

  std::vector<double> list(const std::string& key) const {
    const std::string& v = raw(key);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
      fail(key, "expected a bracketed list like [1, 2], got '" + v + "'");
    std::vector<double> out;
    const std::string inner = trim(std::string_view(v).substr(1, v.size() - 2));
    if (inner.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const auto comma = inner.find(',', start);
      const std::string item =
          trim(std::string_view(inner).substr(start, comma == std::string::npos
                                                          ? std::string::npos
                                                          : comma - start));
      out.push_back(parse_real(key, item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  const std::string& raw(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) fail(key, "missing required key");
    return it->second.value;
  }

 private:
  double parse_real(const std::string& key, const std::string& v) const {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
      fail(key, "expected a finite number, got '" + v + "'");
    return out;
  }

  std::map<std::string, Entry> entries_;
  std::string source_;
};

}  // namespace

ProblemFile parse_problem_file(std::istream& in, const std::string& source) {
  std::map<std::string, Entry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    std::ostringstream where;
    where << source << ':' << lineno << ": ";
    if (eq == std::string::npos)
      throw ProblemFileError(where.str() + "expected 'section.key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (!kRequired.count(key) && !kOptional.count(key))
      throw ProblemFileError(where.str() + "unknown key '" + key + "'");
    if (value.empty()) throw ProblemFileError(where.str() + key + ": empty value");
    if (!entries.emplace(key, Entry{value, lineno}).second)
      throw ProblemFileError(where.str() + "duplicate key '" + key + "'");
  }
  for (const auto& key : kRequired)
    if (!entries.count(key))
      throw ProblemFileError(source + ": " + key + ": missing required key");

  Reader r(std::move(entries), source);
  ProblemFile pf;
  IVProblem& p = pf.problem;
  p.alpha = r.real("problem.alpha");
  if (!(p.alpha > 0.0)) r.fail("problem.alpha", "must be positive");
  p.rho = r.real("problem.rho");
  if (!(p.rho > 0.0)) r.fail("problem.rho", "must be positive");
  p.y0 = r.list("problem.y0");
  if (p.y0.size() != p.order())
    r.fail("problem.y0", "needs ceil(alpha) = " + std::to_string(p.order()) + " value(s)");
  p.h_star = r.real("problem.h_star");
  if (!(p.h_star > 0.0)) r.fail("problem.h_star", "must be positive");
  p.K = r.real("problem.K");
  if (!(p.K > 0.0)) r.fail("problem.K", "must be positive");
  std::vector<double> params;
  if (r.has("problem.rhs_params")) params = r.list("problem.rhs_params");
  try {
    p.rhs = make_rhs(r.raw("problem.rhs"), std::move(params), p.alpha, p.rho);
  } catch (const std::invalid_argument& e) {
    r.fail("problem.rhs", e.what());
  }

  SolverConfig& c = pf.solver;
  const long long n = r.integer("solver.n_nodes");
  if (n < 4) r.fail("solver.n_nodes", "must be at least 4");
  c.n_nodes = static_cast<std::size_t>(n);
  if (r.has("solver.tol")) {
    c.tol = r.real("solver.tol");
    if (!(c.tol > 0.0)) r.fail("solver.tol", "must be positive");
  }
  if (r.has("solver.max_iter")) {
    const long long it = r.integer("solver.max_iter");
    if (it < 1 || it > 1000000) r.fail("solver.max_iter", "must be in [1, 1000000]");
    c.max_iter = static_cast<int>(it);
  }
  if (r.has("solver.lipschitz_L")) {
    c.lipschitz_L = r.real("solver.lipschitz_L");
    if (!(*c.lipschitz_L > 0.0)) r.fail("solver.lipschitz_L", "must be positive");
  }
  if (r.has("solver.sample_density")) {
    const long long d = r.integer("solver.sample_density");
    if (d < 2) r.fail("solver.sample_density", "must be at least 2");
    c.sample_density = static_cast<std::size_t>(d);
  }
  if (r.has("solver.x_end")) {
    c.x_end = r.real("solver.x_end");
    if (!(*c.x_end > 0.0 && *c.x_end <= p.h_star))
      r.fail("solver.x_end", "must lie in (0, problem.h_star]");
  }
  return pf;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError(path + ": cannot open problem file");
  return parse_problem_file(in, path);
}

}  // namespace gfrac
