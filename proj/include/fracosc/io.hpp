#pragma once

// Deterministic CSV and SVG emission. Numbers are serialized with 17
// significant digits, lines end with LF, identical input produces
// byte-identical files.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracosc {

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_number(double v);

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

struct SvgCurve {
  std::vector<std::pair<double, double>> points;  // non-finite y breaks the line
  std::string color = "#000000";
  bool dashed = false;
};

// Fixed 600x400 viewport, linear axes auto-scaled to the data.
void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<SvgCurve>& curves);

}  // namespace fracosc
