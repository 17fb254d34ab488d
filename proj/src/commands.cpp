#include "lyap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "lyap/analytic.hpp"
#include "lyap/csv.hpp"
#include "lyap/montecarlo.hpp"
#include "lyap/parallel.hpp"
#include "lyap/svg.hpp"

namespace lyap {

namespace {

using csv::format_number;

bool wants_svg(const RunConfig& c) {
    return c.format == OutputFormat::svg || c.format == OutputFormat::both;
}
bool wants_csv(const RunConfig& c) {
    return c.format == OutputFormat::csv || c.format == OutputFormat::both;
}

struct Grid {
    double a, b, k;
    std::uint64_t count;

    double param(std::uint64_t j) const {
        if (j == 0) return a;
        if (j == count - 1) return b;
        double p = a + static_cast<double>(j) * k;
        if (std::fabs(p) < 1e-9 * k) p = 0.0;
        return p;
    }
};

Grid make_grid(double a, double b, double k, std::string& error) {
    if (!(k > 0.0) || !(b > a)) {
        error = "invalid grid: need a < b and k > 0";
        return {};
    }
    const double steps = (b - a) / k;
    const double rounded = std::round(steps);
    if (std::fabs(steps - rounded) > 1e-9 * std::fmax(1.0, std::fabs(steps))) {
        error = "invalid grid: k must divide b - a";
        return {};
    }
    return {a, b, k, static_cast<std::uint64_t>(rounded) + 1};
}

CommandOutput usage_failure(std::string message) {
    CommandOutput out;
    out.exit_code = kExitUsage;
    out.error = std::move(message);
    return out;
}

}  // namespace

CommandOutput run_bounds(const RunConfig& config) {
    if (config.nmax < 0) return usage_failure("bounds: nmax must be non-negative");

    RecursionConfig rc;
    rc.workers = std::max(1, config.workers);
    rc.depth_cap = config.depth_cap;
    const BoundsTable table = bounds_table(config.nmax, config.engine, rc);

    CommandOutput out;
    csv::Table t;
    t.header = {"n", "log_c", "lower", "upper", "width"};
    for (const auto& row : table.rows) {
        t.rows.push_back({std::to_string(row.level), format_number(row.log_c),
                          format_number(row.bracket.lower), format_number(row.bracket.upper),
                          format_number(row.bracket.width())});
    }
    out.csv_text = t.to_string();
    if (!table.complete) {
        out.exit_code = kExitComputation;
        out.error = "bounds: level " + std::to_string(table.failed_level) +
                    " failed: " + table.error;
        return out;
    }

    if (wants_svg(config)) {
        svg::Plot plot("Lyapunov bracket by recursion level", "n", "bound");
        svg::PointList lo, hi;
        for (const auto& row : table.rows) {
            lo.emplace_back(row.level, row.bracket.lower);
            hi.emplace_back(row.level, row.bracket.upper);
        }
        plot.add_line(lo, "steelblue");
        plot.add_line(hi, "indianred");
        out.svg_files.emplace_back("", plot.render());
    }
    return out;
}

CommandOutput run_lambda_curve(const RunConfig& config) {
    const double def_a = config.model == ModelKind::bernoulli ? 0.0 : -20.0;
    const double def_b = config.model == ModelKind::bernoulli ? 1.0 : 20.0;
    const double a = config.range_set ? config.range_a : def_a;
    const double b = config.range_set ? config.range_b : def_b;
    const double k = config.k > 0.0 ? config.k
                                    : (config.model == ModelKind::bernoulli ? 0.01 : 0.25);
    const std::uint64_t n = config.n > 0 ? config.n : 1'000'000;

    std::string grid_error;
    const Grid grid = make_grid(a, b, k, grid_error);
    if (!grid_error.empty()) return usage_failure("lambda-curve: " + grid_error);
    if (config.model == ModelKind::bernoulli && (a < 0.0 || b > 1.0))
        return usage_failure("lambda-curve: Bernoulli range must lie within [0,1]");

    const Seed seed{config.seed};
    const McOptions opts{UnitVector2::default_start(), std::max(1, config.workers)};

    CommandOutput out;
    csv::Table t;
    const bool bern = config.model == ModelKind::bernoulli;
    t.header = bern ? std::vector<std::string>{"param", "lambda_hat", "analytic_lower",
                                               "analytic_upper"}
                    : std::vector<std::string>{"param", "lambda_hat", "lambda_exact"};

    // reference columns and deterministic endpoints first, cheap and serial
    std::vector<double> hats(grid.count, 0.0);
    std::vector<double> exact_or_lower(grid.count, 0.0), upper(grid.count, 0.0);
    std::vector<bool> endpoint(grid.count, false);
    for (std::uint64_t j = 0; j < grid.count; ++j) {
        const double param = grid.param(j);
        if (bern) {
            if (param == 0.0 || param == 1.0) {
                // continuous extension of the bound formulas at the endpoints
                const double log3 = std::log(3.0);
                exact_or_lower[j] = param * log3 / (4.0 - param);
                upper[j] = param * log3 / 2.0;
                hats[j] = boundary_lambda(ModelKind::bernoulli, param).value;
                endpoint[j] = true;
            } else {
                const BoundPair b = bernoulli_bounds(param);
                exact_or_lower[j] = b.lower;
                upper[j] = b.upper;
            }
        } else if (param == 0.0) {
            endpoint[j] = true;  // rotation-like matrix, exponent exactly 0
        } else {
            exact_or_lower[j] = cauchy_lambda(param).value;
        }
    }

    // grid points are independent chains with slot-indexed streams
    parallel_for(grid.count, opts.workers, [&](std::uint64_t j) {
        if (endpoint[j]) return;
        const double param = grid.param(j);
        const ModelSpec model = bern ? ModelSpec::bernoulli(param) : ModelSpec::cauchy(param);
        hats[j] = chain_log_norm_sum(model, n, seed.stream(stream_tag::lambda, j), opts.start) /
                  static_cast<double>(n);
    });

    for (std::uint64_t j = 0; j < grid.count; ++j) {
        const double param = grid.param(j);
        if (bern)
            t.rows.push_back({format_number(param), format_number(hats[j]),
                              format_number(exact_or_lower[j]), format_number(upper[j])});
        else
            t.rows.push_back({format_number(param), format_number(hats[j]),
                              format_number(exact_or_lower[j])});
    }
    out.csv_text = t.to_string();

    if (wants_svg(config)) {
        svg::Plot plot(bern ? "Lyapunov exponent, Bernoulli(p) model"
                            : "Lyapunov exponent, scaled-Cauchy model",
                       bern ? "p" : "xi", "lambda");
        svg::PointList est, lo, hi;
        for (std::uint64_t j = 0; j < grid.count; ++j) {
            est.emplace_back(grid.param(j), hats[j]);
            lo.emplace_back(grid.param(j), exact_or_lower[j]);
            if (bern) hi.emplace_back(grid.param(j), upper[j]);
        }
        plot.add_line(lo, "steelblue");
        if (bern) plot.add_line(hi, "steelblue");
        plot.add_line(est, "black");
        out.svg_files.emplace_back("", plot.render());
    }
    return out;
}

CommandOutput run_variance_curve(const RunConfig& config) {
    const bool bern = config.model == ModelKind::bernoulli;
    const double a = config.range_set ? config.range_a : (bern ? 0.0 : -20.0);
    const double b = config.range_set ? config.range_b : (bern ? 1.0 : 20.0);
    const double k = config.k > 0.0 ? config.k : (bern ? 0.01 : 0.25);
    const std::uint64_t n = config.n > 0 ? config.n : 1000;
    const std::uint64_t desk_m = 10'000;
    const std::uint64_t paper_m = bern ? 1'000'000 : 5'000'000;
    const std::uint64_t m = config.m > 0 ? config.m : (config.paper_scale ? paper_m : desk_m);

    if (m < 2) return usage_failure("variance-curve: m must be >= 2");
    std::string grid_error;
    const Grid grid = make_grid(a, b, k, grid_error);
    if (!grid_error.empty()) return usage_failure("variance-curve: " + grid_error);
    if (bern && (a < 0.0 || b > 1.0))
        return usage_failure("variance-curve: Bernoulli range must lie within [0,1]");

    VarianceOptions opts;
    opts.workers = std::max(1, config.workers);
    VarianceCurve curve;
    try {
        curve = mc_variance_curve(config.model, a, b, k, n, m, Seed{config.seed}, opts);
    } catch (const std::exception& e) {
        CommandOutput out;
        out.exit_code = kExitComputation;
        out.error = std::string("variance-curve: ") + e.what();
        return out;
    }

    CommandOutput out;
    csv::Table t;
    t.header = {"param", "variance", "stderr"};
    for (const auto& pt : curve.points)
        t.rows.push_back({format_number(pt.param), format_number(pt.variance),
                          format_number(pt.stderr_value)});
    out.csv_text = t.to_string();

    if (wants_svg(config)) {
        svg::Plot plot(bern ? "CLT variance, Bernoulli(p) model"
                            : "CLT variance, scaled-Cauchy model",
                       bern ? "p" : "xi", "variance");
        svg::PointList pts;
        for (const auto& pt : curve.points) pts.emplace_back(pt.param, pt.variance);
        plot.add_scatter(pts, "black");
        out.svg_files.emplace_back("", plot.render());
    }
    return out;
}

CommandOutput run_invariant(const RunConfig& config) {
    if (!(config.p > 0.0 && config.p < 1.0))
        return usage_failure("invariant: p must lie strictly in (0,1)");
    if (config.count < 1 || config.depth < 1)
        return usage_failure("invariant: count and depth must be >= 1");

    const InvariantSample sample = invariant_sample(config.p, config.count, config.depth,
                                                    Seed{config.seed},
                                                    std::max(1, config.workers));

    CommandOutput out;
    csv::Table t;
    t.header = {"value"};
    for (double v : sample.values) t.rows.push_back({format_number(v)});
    out.csv_text = t.to_string();

    if (wants_svg(config)) {
        // histogram of the draws
        std::vector<double> sorted = sample.values;
        std::sort(sorted.begin(), sorted.end());
        const double lo = sorted.front();
        const double hi = sorted.back();
        const int bins = 240;
        const double width = (hi - lo) / bins;
        std::vector<double> counts(bins, 0.0);
        for (double v : sorted) {
            int idx = width > 0.0 ? static_cast<int>((v - lo) / width) : 0;
            idx = std::clamp(idx, 0, bins - 1);
            counts[idx] += 1.0;
        }
        svg::Plot hist("Invariant measure, histogram of draws", "x", "count");
        svg::PointList bars;
        for (int i = 0; i < bins; ++i) bars.emplace_back(lo + i * width, counts[i]);
        hist.add_bars(bars, width, "steelblue");
        out.svg_files.emplace_back("_hist", hist.render());

        // empirical CDF, downsampled to keep the file small
        svg::Plot cdf("Invariant measure, empirical CDF", "x", "F(x)");
        svg::PointList steps;
        const std::size_t stride = std::max<std::size_t>(1, sorted.size() / 2000);
        for (std::size_t i = 0; i < sorted.size(); i += stride)
            steps.emplace_back(sorted[i], static_cast<double>(i + 1) / sorted.size());
        steps.emplace_back(sorted.back(), 1.0);
        cdf.add_line(steps, "black", 1.0);
        out.svg_files.emplace_back("_cdf", cdf.render());
    }
    return out;
}

int execute(const std::string& command, const RunConfig& config) {
    CommandOutput out;
    if (command == "bounds")
        out = run_bounds(config);
    else if (command == "lambda-curve")
        out = run_lambda_curve(config);
    else if (command == "variance-curve")
        out = run_variance_curve(config);
    else if (command == "invariant")
        out = run_invariant(config);
    else {
        std::cerr << "unknown command: " << command << "\n";
        return kExitUsage;
    }

    if (!out.error.empty()) std::cerr << out.error << "\n";
    if (out.exit_code == kExitUsage) return out.exit_code;

    if (wants_svg(config) && config.out.empty()) {
        std::cerr << "svg output requires --out\n";
        return kExitUsage;
    }

    try {
        if (config.out.empty()) {
            std::cout << out.csv_text;
        } else {
            if (wants_csv(config) || out.exit_code != kExitOk)
                csv::write_file(config.out + ".csv", out.csv_text);
            if (out.exit_code == kExitOk)
                for (const auto& [suffix, content] : out.svg_files)
                    csv::write_file(config.out + suffix + ".svg", content);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitComputation;
    }
    return out.exit_code;
}

}  // namespace lyap
