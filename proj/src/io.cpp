#include "fracosc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace fracosc {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open for writing: " + path.string());
  return out;
}

std::string format_svg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  auto out = open_out(path);
  for (size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_number(row[i]);
    out << "\n";
  }
  if (!out) throw IOError("write failed: " + path.string());
}

void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<SvgCurve>& curves) {
  constexpr double W = 600, H = 400;
  constexpr double ml = 50, mr = 15, mt = 30, mb = 35;  // margins

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& c : curves)
    for (const auto& [x, y] : c.points) {
      if (!std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmin < xmax)) {
    xmin -= 1;
    xmax += 1;
  }
  if (!(ymin < ymax)) {
    ymin -= 1;
    ymax += 1;
  }
  const double xpad = 0.02 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

  auto out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"400\" "
         "viewBox=\"0 0 600 400\">\n";
  out << "<rect x=\"" << format_svg(ml) << "\" y=\"" << format_svg(mt) << "\" width=\""
      << format_svg(W - ml - mr) << "\" height=\"" << format_svg(H - mt - mb)
      << "\" fill=\"none\" stroke=\"#888888\"/>\n";
  out << "<text x=\"300\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << title << "</text>\n";
  // axis extent labels
  out << "<text x=\"" << format_svg(ml) << "\" y=\"" << format_svg(H - mb + 16)
      << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_svg(xmin)
      << "</text>\n";
  out << "<text x=\"" << format_svg(W - mr) << "\" y=\"" << format_svg(H - mb + 16)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << format_svg(xmax) << "</text>\n";
  out << "<text x=\"" << format_svg(ml - 4) << "\" y=\"" << format_svg(H - mb)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << format_svg(ymin) << "</text>\n";
  out << "<text x=\"" << format_svg(ml - 4) << "\" y=\"" << format_svg(mt + 8)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << format_svg(ymax) << "</text>\n";

  for (const auto& c : curves) {
    std::vector<std::vector<std::pair<double, double>>> segments(1);
    for (const auto& [x, y] : c.points) {
      if (!std::isfinite(y)) {
        if (!segments.back().empty()) segments.emplace_back();
        continue;
      }
      segments.back().push_back({x, y});
    }
    for (const auto& seg : segments) {
      if (seg.size() < 2) continue;
      out << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\"";
      if (c.dashed) out << " stroke-dasharray=\"6,4\"";
      out << " points=\"";
      for (size_t i = 0; i < seg.size(); ++i)
        out << (i ? " " : "") << format_svg(px(seg[i].first)) << ","
            << format_svg(py(seg[i].second));
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
  if (!out) throw IOError("write failed: " + path.string());
}

}  // namespace fracosc
