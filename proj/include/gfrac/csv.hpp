#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gfrac {

// 17 significant digits, scientific, '.' decimal point. Round-trips any double.
std::string format_real(double v);

// Shortest string that parses back to v.
std::string format_shortest(double v);

// Header "x,<value_name>", one row per node, '\n' line ends. A partial
// result is marked by a leading "# PARTIAL" line.
void write_xy_csv(std::ostream& out, const std::string& value_name,
                  std::span<const double> x, std::span<const double> v,
                  bool partial = false);

struct XYTable {
  std::string value_name;
  std::vector<double> x;
  std::vector<double> v;
};

// Reads the format above ('#' lines skipped). The header must be "x,<name>"
// with name among accepted_names. Throws std::invalid_argument on malformed
// input, naming the offending line.
XYTable read_xy_csv(std::istream& in, const std::vector<std::string>& accepted_names);

}  // namespace gfrac
