#pragma once

// Sample-moment helpers shared by the estimators and their statistical tests.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lyap/core.hpp"

namespace lyap {

inline double sample_mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("sample_mean: empty sample");
    LogSumAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.value() / static_cast<double>(xs.size());
}

inline double central_moment(std::span<const double> xs, double mean, int order) {
    LogSumAccumulator acc;
    for (double x : xs) acc.add(std::pow(x - mean, order));
    return acc.value() / static_cast<double>(xs.size());
}

// Unbiased (n-1 divisor) sample variance.
inline double sample_variance(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("sample_variance: need at least two values");
    const double mean = sample_mean(xs);
    LogSumAccumulator acc;
    for (double x : xs) acc.add((x - mean) * (x - mean));
    return acc.value() / static_cast<double>(n - 1);
}

// Standard error of the sample mean.
inline double stderr_of_mean(std::span<const double> xs) {
    return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

// Asymptotic standard error of the sample variance via the fourth central
// moment: se^2 = (m4 - s^4 (n-3)/(n-1)) / n.
inline double stderr_of_variance(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    const double mean = sample_mean(xs);
    const double m4 = central_moment(xs, mean, 4);
    const double s2 = sample_variance(xs);
    const double v = (m4 - s2 * s2 * (n - 3.0) / (n - 1.0)) / n;
    return std::sqrt(std::fmax(v, 0.0));
}

inline double skewness(std::span<const double> xs) {
    const double mean = sample_mean(xs);
    const double m2 = central_moment(xs, mean, 2);
    const double m3 = central_moment(xs, mean, 3);
    return m3 / std::pow(m2, 1.5);
}

inline double excess_kurtosis(std::span<const double> xs) {
    const double mean = sample_mean(xs);
    const double m2 = central_moment(xs, mean, 2);
    const double m4 = central_moment(xs, mean, 4);
    return m4 / (m2 * m2) - 3.0;
}

// Bootstrap standard error of the sample mean, deterministic given the seed.
inline double bootstrap_stderr_of_mean(std::span<const double> xs, const Seed& seed,
                                       int resamples = 200) {
    if (xs.empty()) throw std::invalid_argument("bootstrap_stderr_of_mean: empty sample");
    const std::size_t n = xs.size();
    std::vector<double> means;
    means.reserve(resamples);
    for (int b = 0; b < resamples; ++b) {
        Stream s = seed.stream(stream_tag::bootstrap, static_cast<std::uint64_t>(b));
        LogSumAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) acc.add(xs[s.next_u64() % n]);
        means.push_back(acc.value() / static_cast<double>(n));
    }
    const double center = sample_mean(means);
    LogSumAccumulator sq;
    for (double m : means) sq.add((m - center) * (m - center));
    return std::sqrt(sq.value() / static_cast<double>(resamples - 1));
}

}  // namespace lyap
