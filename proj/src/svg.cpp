#include "triad/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "triad/text.hpp"

namespace triad {

namespace {

constexpr double kWidth = 720, kHeight = 420;
constexpr double kLeft = 64, kRight = 16, kTop = 40, kBottom = 48;

std::string fmt(double x) {
  // Short tick labels.
  if (x == 0) return "0";
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  if (!(hi > lo)) {
    hi = lo + 1;
    lo -= 1;
  }
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 0.5 * step; t += step)
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  return ticks;
}

void write_text(std::ostream& os, double x, double y, const std::string& s,
                const std::string& anchor, int size = 11) {
  os << "<text x='" << x << "' y='" << y << "' font-family='sans-serif'"
     << " font-size='" << size << "' text-anchor='" << anchor << "'>" << s
     << "</text>\n";
}

}  // namespace

LineChart::LineChart(std::string title, std::string x_label,
                     std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void LineChart::add_line(const std::string& label,
                         const std::vector<double>& x,
                         const std::vector<double>& y,
                         const std::string& color, double width,
                         const std::string& dash) {
  series_.push_back({label, x, y, color, width, dash, false});
}

void LineChart::add_markers(const std::string& label,
                            const std::vector<double>& x,
                            const std::vector<double>& y,
                            const std::string& color) {
  series_.push_back({label, x, y, color, 1.0, "", true});
}

void LineChart::write(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  for (const Series& s : series_) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (!std::isfinite(x0)) {
    x0 = 0; x1 = 1; y0 = 0; y1 = 1;
  }
  if (y1 == y0) {
    y0 -= 1;
    y1 += 1;
  }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + (1 - (y - y0) / (y1 - y0)) * ph; };

  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
     << "' height='" << kHeight << "' viewBox='0 0 " << kWidth << " "
     << kHeight << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  write_text(os, kWidth / 2, 20, title_, "middle", 13);

  for (const double t : nice_ticks(x0, x1)) {
    os << "<line x1='" << px(t) << "' y1='" << kTop << "' x2='" << px(t)
       << "' y2='" << kTop + ph << "' stroke='#dddddd' stroke-width='0.6'/>\n";
    write_text(os, px(t), kTop + ph + 16, fmt(t), "middle");
  }
  for (const double t : nice_ticks(y0, y1)) {
    os << "<line x1='" << kLeft << "' y1='" << py(t) << "' x2='" << kLeft + pw
       << "' y2='" << py(t) << "' stroke='#dddddd' stroke-width='0.6'/>\n";
    write_text(os, kLeft - 6, py(t) + 4, fmt(t), "end");
  }
  os << "<rect x='" << kLeft << "' y='" << kTop << "' width='" << pw
     << "' height='" << ph << "' fill='none' stroke='black'/>\n";
  write_text(os, kLeft + pw / 2, kHeight - 12, x_label_, "middle");
  os << "<g transform='translate(14," << kTop + ph / 2
     << ") rotate(-90)'><text font-family='sans-serif' font-size='11'"
     << " text-anchor='middle'>" << y_label_ << "</text></g>\n";

  for (const Series& s : series_) {
    if (s.markers) {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.y[i])) continue;
        os << "<circle cx='" << px(s.x[i]) << "' cy='" << py(s.y[i])
           << "' r='2.6' fill='" << s.color << "'/>\n";
      }
      continue;
    }
    os << "<polyline fill='none' stroke='" << s.color << "' stroke-width='"
       << s.width << "'";
    if (!s.dash.empty()) os << " stroke-dasharray='" << s.dash << "'";
    os << " points='";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    os << "'/>\n";
  }

  double ly = kTop + 14;
  for (const Series& s : series_) {
    if (s.label.empty()) continue;
    const double lx = kLeft + pw - 130;
    if (s.markers)
      os << "<circle cx='" << lx + 12 << "' cy='" << ly - 4 << "' r='2.6'"
         << " fill='" << s.color << "'/>\n";
    else
      os << "<line x1='" << lx << "' y1='" << ly - 4 << "' x2='" << lx + 24
         << "' y2='" << ly - 4 << "' stroke='" << s.color
         << "' stroke-width='2'/>\n";
    write_text(os, lx + 30, ly, s.label, "start");
    ly += 15;
  }
  os << "</svg>\n";
}

void BarChart::add_panel(const std::string& label,
                         const std::vector<std::size_t>& counts,
                         const std::string& color) {
  panels_.push_back({label, counts, color});
}

void BarChart::write(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  const double panel_h = 110, gap = 18;
  const double height = kTop + panels_.size() * (panel_h + gap) + 30;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
     << "' height='" << height << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  write_text(os, kWidth / 2, 20, title_, "middle", 13);
  const double pw = kWidth - kLeft - kRight;
  double top = kTop;
  for (const Panel& panel : panels_) {
    const std::size_t n = panel.counts.size();
    std::size_t max_count = 1;
    for (const std::size_t c : panel.counts) max_count = std::max(max_count, c);
    const double bw = pw / double(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double h = panel_h * double(panel.counts[i]) / double(max_count);
      os << "<rect x='" << kLeft + double(i) * bw + 1 << "' y='"
         << top + panel_h - h << "' width='" << bw - 2 << "' height='" << h
         << "' fill='" << panel.color << "'/>\n";
    }
    os << "<rect x='" << kLeft << "' y='" << top << "' width='" << pw
       << "' height='" << panel_h << "' fill='none' stroke='black'/>\n";
    write_text(os, kLeft - 6, top + panel_h / 2, panel.label, "end");
    top += panel_h + gap;
  }
  write_text(os, kLeft + pw / 2, top + 8, "rank", "middle");
  os << "</svg>\n";
}

}  // namespace triad
