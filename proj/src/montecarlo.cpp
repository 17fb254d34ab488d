#include "lyap/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lyap/analytic.hpp"
#include "lyap/parallel.hpp"

namespace lyap {

namespace {

struct GridSpec {
    double a = 0.0, b = 0.0, k = 0.0;
    std::uint64_t count = 0;

    double param(std::uint64_t j) const {
        if (j == 0) return a;
        if (j == count - 1) return b;
        double p = a + static_cast<double>(j) * k;
        // interior grid values that are zero up to rounding are meant exactly
        if (std::fabs(p) < 1e-9 * k) p = 0.0;
        return p;
    }
};

GridSpec make_grid(double a, double b, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("variance grid: spacing must be positive");
    if (!(b > a)) throw std::invalid_argument("variance grid: range must satisfy a < b");
    const double steps = (b - a) / k;
    const double rounded = std::round(steps);
    if (std::fabs(steps - rounded) > 1e-9 * std::fmax(1.0, std::fabs(steps)))
        throw std::invalid_argument("variance grid: spacing must divide the range");
    return {a, b, k, static_cast<std::uint64_t>(rounded) + 1};
}

bool is_endpoint(ModelKind kind, double param) {
    if (kind == ModelKind::bernoulli) return param == 0.0 || param == 1.0;
    return param == 0.0;
}

}  // namespace

double chain_log_norm_sum(const ModelSpec& model, std::uint64_t steps, Stream stream,
                          const UnitVector2& start) {
    LogSumAccumulator acc;
    UnitVector2 u = start;
    for (std::uint64_t i = 0; i < steps; ++i) {
        const Matrix2 m = draw_matrix(model, stream);
        auto [v, log_norm] = apply_normalized(m, u);
        acc.add(log_norm);
        u = v;
    }
    return acc.value();
}

Estimate mc_lambda(const ModelSpec& model, std::uint64_t steps, const Seed& seed,
                   std::uint64_t replicas, const McOptions& options) {
    if (steps < 1) throw std::invalid_argument("mc_lambda: steps must be >= 1");
    if (replicas < 1) throw std::invalid_argument("mc_lambda: replicas must be >= 1");

    std::vector<double> values(replicas, 0.0);
    parallel_for(replicas, options.workers, [&](std::uint64_t r) {
        const double sum = chain_log_norm_sum(model, steps, seed.stream(stream_tag::lambda, r),
                                              options.start);
        values[r] = sum / static_cast<double>(steps);
    });

    LogSumAccumulator acc;
    for (double v : values) acc.add(v);
    const double mean = acc.value() / static_cast<double>(replicas);

    double se = 0.0;
    if (replicas > 1) {
        LogSumAccumulator sq;
        for (double v : values) sq.add((v - mean) * (v - mean));
        se = std::sqrt(sq.value() / static_cast<double>(replicas - 1) /
                       static_cast<double>(replicas));
    }
    return {mean, se, replicas, steps, seed};
}

VarianceCurve mc_variance_curve(ModelKind kind, double range_a, double range_b, double spacing,
                                std::uint64_t steps, std::uint64_t replicas, const Seed& seed,
                                const VarianceOptions& options) {
    if (steps < 1) throw std::invalid_argument("mc_variance_curve: steps must be >= 1");
    if (replicas < 2)
        throw std::invalid_argument("mc_variance_curve: need >= 2 replicas for a sample variance");
    const GridSpec grid = make_grid(range_a, range_b, spacing);

    if (kind == ModelKind::bernoulli) {
        for (std::uint64_t j = 0; j < grid.count; ++j) {
            const double p = grid.param(j);
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("mc_variance_curve: Bernoulli grid must stay in [0,1]");
        }
    }

    VarianceCurve curve{kind, range_a, range_b, spacing, steps, replicas, seed, {}};
    curve.points.resize(grid.count);

    // Phase 1: a dedicated long run pins lambda at every non-endpoint grid
    // parameter (Cauchy uses the exact closed form).
    std::vector<double> lambda_hat(grid.count, 0.0);
    if (kind == ModelKind::bernoulli) {
        parallel_for(grid.count, options.workers, [&](std::uint64_t j) {
            const double p = grid.param(j);
            if (is_endpoint(kind, p)) return;
            const double sum = chain_log_norm_sum(ModelSpec::bernoulli(p), options.lambda_steps,
                                                  seed.stream(stream_tag::lambda_phase, j),
                                                  options.start);
            lambda_hat[j] = sum / static_cast<double>(options.lambda_steps);
        });
    } else {
        for (std::uint64_t j = 0; j < grid.count; ++j) {
            const double xi = grid.param(j);
            if (!is_endpoint(kind, xi)) lambda_hat[j] = cauchy_lambda(xi).value;
        }
    }

    // Phase 2: replicas of L = (sum log||U_i|| - n*lambda_hat)/sqrt(n).
    const double sqrt_n = std::sqrt(static_cast<double>(steps));
    std::vector<double> l_values(replicas, 0.0);
    for (std::uint64_t j = 0; j < grid.count; ++j) {
        const double param = grid.param(j);
        if (is_endpoint(kind, param)) {
            curve.points[j] = {param, 0.0, 0.0};
            continue;
        }
        const ModelSpec model = kind == ModelKind::bernoulli ? ModelSpec::bernoulli(param)
                                                             : ModelSpec::cauchy(param);
        const double centered = static_cast<double>(steps) * lambda_hat[j];
        parallel_for(replicas, options.workers, [&](std::uint64_t r) {
            const double sum = chain_log_norm_sum(model, steps,
                                                  seed.stream(stream_tag::variance, j, r),
                                                  options.start);
            l_values[r] = (sum - centered) / sqrt_n;
        });

        LogSumAccumulator acc;
        for (double v : l_values) acc.add(v);
        const double mean = acc.value() / static_cast<double>(replicas);

        LogSumAccumulator m2_acc, m4_acc;
        for (double v : l_values) {
            const double d2 = (v - mean) * (v - mean);
            m2_acc.add(d2);
            m4_acc.add(d2 * d2);
        }
        const double m = static_cast<double>(replicas);
        const double variance = m2_acc.value() / (m - 1.0);
        const double m4 = m4_acc.value() / m;
        const double se_sq = (m4 - variance * variance * (m - 3.0) / (m - 1.0)) / m;
        curve.points[j] = {param, variance, std::sqrt(std::fmax(se_sq, 0.0))};
    }
    return curve;
}

double invariant_chain(double p, std::uint32_t depth, Stream& stream) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("invariant_chain: p must lie strictly in (0,1)");
    if (depth < 1) throw std::invalid_argument("invariant_chain: depth must be >= 1");
    double x = 1.0;
    for (std::uint32_t d = 0; d < depth; ++d) {
        const double eps = (stream.next_unit() < p) ? 1.0 : 0.0;
        x = invariant_step(x, eps);
    }
    return x;
}

InvariantSample invariant_sample(double p, std::uint64_t count, std::uint32_t depth,
                                 const Seed& seed, int workers) {
    if (count < 1) throw std::invalid_argument("invariant_sample: count must be >= 1");
    InvariantSample sample{p, depth, std::vector<double>(count, 0.0)};
    parallel_for(count, workers, [&](std::uint64_t c) {
        Stream s = seed.stream(stream_tag::invariant, c);
        sample.values[c] = invariant_chain(p, depth, s);
    });
    return sample;
}

}  // namespace lyap
