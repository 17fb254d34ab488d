#pragma once

// Test-only oracles, kept independent of the library's evaluation paths.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace lyap::testing {

// Literal row materialization: first half transforms the previous row pair by
// pair in order, second half repeats it swapped. 2^n pairs, no compression.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> literal_row(int n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> row{{2, 1}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
        next.reserve(2 * row.size());
        for (const auto& [a, b] : row) next.emplace_back(a + b, a);
        for (const auto& [a, b] : row) next.emplace_back(b, a);
        row = std::move(next);
    }
    return row;
}

// Extended-precision log c_n over the literal row.
inline double literal_log_c(int n) {
    long double sum = 0.0L;
    for (const auto& [a, b] : literal_row(n)) sum += std::log(static_cast<long double>(a + b));
    return static_cast<double>(sum);
}

}  // namespace lyap::testing
