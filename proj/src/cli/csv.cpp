#include "gfrac/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gfrac {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string format_shortest(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return format_real(v);
  return std::string(buf, ptr);
}

void write_xy_csv(std::ostream& out, const std::string& value_name,
                  std::span<const double> x, std::span<const double> v,
                  bool partial) {
  if (x.size() != v.size()) throw std::invalid_argument("write_xy_csv: size mismatch");
  if (partial) out << "# PARTIAL\n";
  out << "x," << value_name << '\n';
  for (std::size_t i = 0; i < x.size(); ++i)
    out << format_real(x[i]) << ',' << format_real(v[i]) << '\n';
}

namespace {

double parse_field(const std::string& field, int lineno) {
  double out = 0.0;
  const char* b = field.data();
  const char* e = b + field.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
  auto [ptr, ec] = std::from_chars(b, e, out);
  if (ec != std::errc() || ptr != e || !std::isfinite(out)) {
    std::ostringstream os;
    os << "line " << lineno << ": not a finite number: '" << field << "'";
    throw std::invalid_argument(os.str());
  }
  return out;
}

}  // namespace

XYTable read_xy_csv(std::istream& in, const std::vector<std::string>& accepted_names) {
  XYTable t;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      std::ostringstream os;
      os << "line " << lineno << ": expected exactly two comma-separated columns";
      throw std::invalid_argument(os.str());
    }
    const std::string first = line.substr(0, comma);
    const std::string second = line.substr(comma + 1);
    if (!header) {
      if (first != "x" ||
          std::find(accepted_names.begin(), accepted_names.end(), second) ==
              accepted_names.end()) {
        std::ostringstream os;
        os << "line " << lineno << ": bad header '" << line << "', expected x,";
        for (std::size_t i = 0; i < accepted_names.size(); ++i)
          os << (i ? "|" : "") << accepted_names[i];
        throw std::invalid_argument(os.str());
      }
      t.value_name = second;
      header = true;
      continue;
    }
    t.x.push_back(parse_field(first, lineno));
    t.v.push_back(parse_field(second, lineno));
  }
  if (!header) throw std::invalid_argument("missing CSV header");
  return t;
}

}  // namespace gfrac
