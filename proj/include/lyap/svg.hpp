#pragma once

// Small static SVG 1.1 plot writer: line series, scatter series and
// histogram bars over auto-scaled axes. Presentation only; all numbers of
// record live in the CSV output.

#include <string>
#include <utility>
#include <vector>

namespace lyap::svg {

using PointList = std::vector<std::pair<double, double>>;

class Plot {
  public:
    Plot(std::string title, std::string x_label, std::string y_label);

    void add_line(PointList points, std::string color, double stroke_width = 1.5);
    void add_scatter(PointList points, std::string color, double radius = 1.6);
    // Bars spanning [x, x+width) up to height y.
    void add_bars(PointList points, double bar_width, std::string color);

    std::string render() const;

  private:
    struct Series {
        enum class Kind { line, scatter, bars } kind;
        PointList points;
        std::string color;
        double size;
    };

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

}  // namespace lyap::svg
