#ifndef TRIAD_SVG_HPP
#define TRIAD_SVG_HPP

#include <string>
#include <vector>

namespace triad {

// Self-contained SVG line/bar charts. Plot files are a convenience view of
// the CSV outputs, never the source of truth.

class LineChart {
 public:
  LineChart(std::string title, std::string x_label, std::string y_label);

  void add_line(const std::string& label, const std::vector<double>& x,
                const std::vector<double>& y, const std::string& color,
                double width = 1.2, const std::string& dash = "");
  void add_markers(const std::string& label, const std::vector<double>& x,
                   const std::vector<double>& y, const std::string& color);

  void write(const std::string& path) const;

 private:
  struct Series {
    std::string label;
    std::vector<double> x, y;
    std::string color;
    double width = 1.2;
    std::string dash;
    bool markers = false;
  };
  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
};

/// Vertically stacked bar panels sharing one x axis (bin index).
class BarChart {
 public:
  explicit BarChart(std::string title) : title_(std::move(title)) {}
  void add_panel(const std::string& label, const std::vector<std::size_t>& counts,
                 const std::string& color);
  void write(const std::string& path) const;

 private:
  struct Panel {
    std::string label;
    std::vector<std::size_t> counts;
    std::string color;
  };
  std::string title_;
  std::vector<Panel> panels_;
};

}  // namespace triad

#endif  // TRIAD_SVG_HPP
