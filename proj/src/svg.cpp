#include "lyap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace lyap::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 48.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Round tick spacing to 1/2/5 * 10^k.
double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

Plot::Plot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void Plot::add_line(PointList points, std::string color, double stroke_width) {
    series_.push_back({Series::Kind::line, std::move(points), std::move(color), stroke_width});
}

void Plot::add_scatter(PointList points, std::string color, double radius) {
    series_.push_back({Series::Kind::scatter, std::move(points), std::move(color), radius});
}

void Plot::add_bars(PointList points, double bar_width, std::string color) {
    series_.push_back({Series::Kind::bars, std::move(points), std::move(color), bar_width});
}

std::string Plot::render() const {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series_) {
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, s.kind == Series::Kind::bars ? x + s.size : x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
        if (s.kind == Series::Kind::bars) y_min = std::min(y_min, 0.0);
    }
    if (!(x_min < x_max)) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (!(y_min < y_max)) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes + ticks
    out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    out += "<path d=\"M " + num(kMarginLeft) + " " + num(kMarginTop) + " V " +
           num(kMarginTop + plot_h) + " H " + num(kMarginLeft + plot_w) + "\"/>\n";
    out += "</g>\n";
    out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    const double x_step = nice_step(x_max - x_min, 6);
    for (double t = std::ceil(x_min / x_step) * x_step; t <= x_max + 1e-12 * x_step;
         t += x_step) {
        const double gx = px(t);
        out += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kMarginTop + plot_h) + "\" x2=\"" +
               num(gx) + "\" y2=\"" + num(kMarginTop + plot_h + 4) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + num(gx) + "\" y=\"" + num(kMarginTop + plot_h + 16) +
               "\" text-anchor=\"middle\">" + num(std::fabs(t) < 1e-12 * x_step ? 0.0 : t) +
               "</text>\n";
    }
    const double y_step = nice_step(y_max - y_min, 6);
    for (double t = std::ceil(y_min / y_step) * y_step; t <= y_max + 1e-12 * y_step;
         t += y_step) {
        const double gy = py(t);
        out += "<line x1=\"" + num(kMarginLeft - 4) + "\" y1=\"" + num(gy) + "\" x2=\"" +
               num(kMarginLeft) + "\" y2=\"" + num(gy) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + num(kMarginLeft - 7) + "\" y=\"" + num(gy + 3.5) +
               "\" text-anchor=\"end\">" + num(std::fabs(t) < 1e-12 * y_step ? 0.0 : t) +
               "</text>\n";
    }
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" +
           title_ + "</text>\n";
    out += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
           "\" text-anchor=\"middle\">" + x_label_ + "</text>\n";
    out += "<text x=\"14\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " + num(kMarginTop + plot_h / 2) +
           ")\">" + y_label_ + "</text>\n";
    out += "</g>\n";

    for (const auto& s : series_) {
        switch (s.kind) {
            case Series::Kind::line: {
                out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"" +
                       num(s.size) + "\" points=\"";
                for (const auto& [x, y] : s.points)
                    out += num(px(x)) + "," + num(py(y)) + " ";
                out += "\"/>\n";
                break;
            }
            case Series::Kind::scatter: {
                out += "<g fill=\"" + s.color + "\">\n";
                for (const auto& [x, y] : s.points)
                    out += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"" +
                           num(s.size) + "\"/>\n";
                out += "</g>\n";
                break;
            }
            case Series::Kind::bars: {
                out += "<g fill=\"" + s.color + "\">\n";
                const double base = py(std::max(0.0, y_min));
                for (const auto& [x, y] : s.points) {
                    const double top = py(y);
                    out += "<rect x=\"" + num(px(x)) + "\" y=\"" + num(top) + "\" width=\"" +
                           num(px(x + s.size) - px(x)) + "\" height=\"" + num(base - top) +
                           "\"/>\n";
                }
                out += "</g>\n";
                break;
            }
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace lyap::svg
