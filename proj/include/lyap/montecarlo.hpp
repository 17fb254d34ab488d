#pragma once

// Monte Carlo estimation: the normalized-product scheme for the Lyapunov
// exponent, replica simulation of the centered statistic
// L = (sum_i log||U_i|| - n*lambda) / sqrt(n) for the CLT variance, and
// finite-depth chain sampling of the invariant distribution.
//
// All randomness is derived from a Seed through fixed stream indices, results
// are stored in replica/grid-indexed slots and reduced in index order, so
// outputs are byte-identical for any worker count.

#include <cstdint>
#include <vector>

#include "lyap/core.hpp"

namespace lyap {

// Point estimate with replica spread. stderr is meaningful only when
// replicas > 1; presentation layers render it as "n/a" otherwise.
struct Estimate {
    double value = 0.0;
    double stderr_value = 0.0;
    std::uint64_t replicas = 1;
    std::uint64_t steps = 0;
    Seed seed;

    bool has_stderr() const { return replicas > 1; }
};

struct McOptions {
    UnitVector2 start = UnitVector2::default_start();
    int workers = 1;
};

// Sum of log||U_i|| over one chain of `steps` normalized matrix applications.
double chain_log_norm_sum(const ModelSpec& model, std::uint64_t steps, Stream stream,
                          const UnitVector2& start = UnitVector2::default_start());

// (1/n) sum_i log||U_i|| averaged over `replicas` independent chains.
Estimate mc_lambda(const ModelSpec& model, std::uint64_t steps, const Seed& seed,
                   std::uint64_t replicas = 1, const McOptions& options = {});

struct VariancePoint {
    double param = 0.0;
    double variance = 0.0;
    double stderr_value = 0.0;
};

struct VarianceCurve {
    ModelKind kind = ModelKind::bernoulli;
    double range_a = 0.0;
    double range_b = 0.0;
    double spacing = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t replicas = 0;
    Seed seed;
    std::vector<VariancePoint> points;
};

struct VarianceOptions {
    // Phase-1 chain length for estimating lambda(p); the Cauchy model uses
    // the closed form instead. A biased lambda inflates Var(L) by
    // n*(lambda - lambda_hat)^2, so this run is long by default.
    std::uint64_t lambda_steps = 10'000'000;
    UnitVector2 start = UnitVector2::default_start();
    int workers = 1;
};

// Sample variance of L over `replicas` chains at every grid parameter
// a, a+k, ..., b. Exact endpoint parameters (Bernoulli 0 and 1, Cauchy 0)
// emit variance exactly 0. Requires k to divide b-a and replicas >= 2.
VarianceCurve mc_variance_curve(ModelKind kind, double range_a, double range_b, double spacing,
                                std::uint64_t steps, std::uint64_t replicas, const Seed& seed,
                                const VarianceOptions& options = {});

// One step of the invariant-distribution chain, x -> 1/x + eps.
inline double invariant_step(double x, double eps) {
    if (x == 0.0) throw std::domain_error("invariant_step: degenerate iterate");
    return 1.0 / x + eps;
}

//Final value of a depth-`depth` chain from X0 = 1 with Bernoulli(p) draws;
// an approximate draw from the invariant distribution.
double invariant_chain(double p, std::uint32_t depth, Stream& stream);

struct InvariantSample {
    double p = 0.0;
    std::uint32_t chain_depth = 0;
    std::vector<double> values;
};

// `count` independent chains on their own derived streams.
InvariantSample invariant_sample(double p, std::uint64_t count, std::uint32_t depth,
                                 const Seed& seed, int workers = 1);

}  // namespace lyap
