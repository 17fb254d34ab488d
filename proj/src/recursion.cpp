#include "lyap/recursion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace lyap {

namespace {

// Pairs in row n stay below F(n+4); 64-bit integers hold rows up to n = 88
// (F(91) < 2^64), far above the streaming depth cap.
constexpr int kPairWidthCap = 88;

// Leaf contributions log(a+b) in canonical depth-first order: transform
// branch before swap branch. `depth` counts levels remaining to the leaf row.
void walk_leaves(std::uint64_t a, std::uint64_t b, int depth, LogSumAccumulator& acc) {
    if (depth == 0) {
        acc.add(std::log(static_cast<double>(a + b)));
        return;
    }
    if (depth == 1) {
        // children of (a,b): transform (a+b,a) with pair sum 2a+b, swap (b,a)
        // with pair sum a+b
        acc.add(std::log(static_cast<double>(2 * a + b)));
        acc.add(std::log(static_cast<double>(a + b)));
        return;
    }
    walk_leaves(a + b, a, depth - 1, acc);
    walk_leaves(b, a, depth - 1, acc);
}

void collect_prefixes(std::uint64_t a, std::uint64_t b, int depth,
                      std::vector<CoefficientPair>& out) {
    if (depth == 0) {
        out.push_back({a, b});
        return;
    }
    collect_prefixes(a + b, a, depth - 1, out);
    collect_prefixes(b, a, depth - 1, out);
}

void check_level(int n, const RecursionConfig& config) {
    if (n < 0) throw std::invalid_argument("log_c: level must be non-negative");
    if (n > config.depth_cap)
        throw std::length_error("log_c: depth cap exceeded (level " + std::to_string(n) +
                                " > cap " + std::to_string(config.depth_cap) + ")");
    if (n > kPairWidthCap)
        throw std::overflow_error("log_c: coefficient pairs exceed 64-bit range at level " +
                                  std::to_string(n));
}

double log_c_streaming(int n, const RecursionConfig& config) {
    check_level(n, config);

    if (n <= config.prefix_depth) {
        LogSumAccumulator acc;
        walk_leaves(2, 1, n, acc);
        return acc.value();
    }

    // Partition by the first prefix_depth branch bits. The partition depends
    // only on the config, never on the worker count, and partial sums are
    // reduced in prefix index order, so any worker count yields identical bits.
    std::vector<CoefficientPair> prefixes;
    prefixes.reserve(std::size_t{1} << config.prefix_depth);
    collect_prefixes(2, 1, config.prefix_depth, prefixes);

    std::vector<double> partials(prefixes.size(), 0.0);
    const int remaining = n - config.prefix_depth;
    const int workers = std::max(1, config.workers);

    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= prefixes.size()) return;
            LogSumAccumulator acc;
            walk_leaves(prefixes[i].a, prefixes[i].b, remaining, acc);
            partials[i] = acc.value();
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    LogSumAccumulator total;
    for (double p : partials) total.add(p);
    return total.value();
}

double row_log_sum(const RowMultiset& row) {
    LogSumAccumulator acc;
    for (const auto& [pair, mult] : row.entries)
        acc.add(static_cast<double>(mult) * std::log(static_cast<double>(pair.a + pair.b)));
    return acc.value();
}

double log_c_multiset(int n, const RecursionConfig& config) {
    if (n < 0) throw std::invalid_argument("log_c: level must be non-negative");
    if (n > kPairWidthCap)
        throw std::overflow_error("log_c: coefficient pairs exceed 64-bit range at level " +
                                  std::to_string(n));
    RowMultiset row = RowMultiset::seed_row();
    for (int k = 0; k < n; ++k) row = expand_row(row, config.multiset_budget);
    return row_log_sum(row);
}

BoundPair bounds_from_log_c(int n, double logc) {
    const double scale = std::exp2(static_cast<double>(n));
    return {logc / ((n + 7) * scale), logc / ((n + 4) * scale), BoundProvenance::recursion_level,
            n};
}

}  // namespace

std::uint64_t RowMultiset::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& [pair, mult] : entries) total += mult;
    return total;
}

std::int64_t fib(int n, std::int64_t f0, std::int64_t f1) {
    if (n < 0) throw std::invalid_argument("fib: n must be non-negative");
    std::int64_t prev = f0;
    std::int64_t cur = f1;
    if (n == 0) return prev;
    for (int i = 1; i < n; ++i) {
        std::int64_t next = 0;
        if (__builtin_add_overflow(prev, cur, &next)) throw std::overflow_error("fib overflow");
        prev = cur;
        cur = next;
    }
    return cur;
}

double fib_closed_form(int n, double f0, double f1) {
    // evaluated in extended precision so rounding recovers the exact integers
    // throughout the representable range
    const long double sqrt5 = std::sqrt(5.0L);
    const long double phi1 = (1.0L + sqrt5) / 2.0L;
    const long double phi2 = (1.0L - sqrt5) / 2.0L;
    const long double value = (f1 - f0 * phi2) / sqrt5 * std::pow(phi1, n) +
                              (f0 * phi1 - f1) / sqrt5 * std::pow(phi2, n);
    return static_cast<double>(value);
}

RowMultiset expand_row(const RowMultiset& row, std::uint64_t multiset_budget) {
    std::vector<std::pair<CoefficientPair, std::uint64_t>> children;
    children.reserve(2 * row.entries.size());
    for (const auto& [pair, mult] : row.entries) {
        std::uint64_t sum = 0;
        if (__builtin_add_overflow(pair.a, pair.b, &sum))
            throw std::overflow_error("expand_row: coefficient overflow");
        children.emplace_back(CoefficientPair{sum, pair.a}, mult);   // transform branch
        children.emplace_back(CoefficientPair{pair.b, pair.a}, mult);  // swap branch
    }
    std::sort(children.begin(), children.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });

    RowMultiset next;
    next.level = row.level + 1;
    next.entries.reserve(children.size());
    for (const auto& [pair, mult] : children) {
        if (!next.entries.empty() && next.entries.back().first == pair) {
            std::uint64_t merged = 0;
            if (__builtin_add_overflow(next.entries.back().second, mult, &merged))
                throw std::overflow_error("expand_row: multiplicity overflow");
            next.entries.back().second = merged;
        } else {
            next.entries.emplace_back(pair, mult);
        }
    }
    if (next.entries.size() > multiset_budget)
        throw std::length_error("expand_row: distinct-pair budget exceeded at row " +
                                std::to_string(next.level));
    return next;
}

CoefficientPair first_pair(int n) {
    if (n < 0) throw std::invalid_argument("first_pair: n must be non-negative");
    CoefficientPair p{2, 1};
    for (int i = 0; i < n; ++i) {
        std::uint64_t sum = 0;
        if (__builtin_add_overflow(p.a, p.b, &sum))
            throw std::overflow_error("first_pair: coefficient overflow");
        p = {sum, p.a};
    }
    return p;
}

double log_c(int n, Engine engine, const RecursionConfig& config) {
    return engine == Engine::streaming ? log_c_streaming(n, config) : log_c_multiset(n, config);
}

BoundPair bounds(int n, Engine engine, const RecursionConfig& config) {
    return bounds_from_log_c(n, log_c(n, engine, config));
}

BoundsTable bounds_table(int n_max, Engine engine, const RecursionConfig& config) {
    BoundsTable table;
    if (n_max < 0) {
        table.complete = false;
        table.failed_level = 0;
        table.error = "bounds_table: n_max must be non-negative";
        return table;
    }
    table.rows.reserve(n_max + 1);

    if (engine == Engine::multiset) {
        RowMultiset row = RowMultiset::seed_row();
        for (int n = 0; n <= n_max; ++n) {
            const double logc = row_log_sum(row);
            table.rows.push_back({n, logc, bounds_from_log_c(n, logc)});
            if (n == n_max) break;
            try {
                row = expand_row(row, config.multiset_budget);
            } catch (const std::exception& e) {
                table.complete = false;
                table.failed_level = n + 1;
                table.error = e.what();
                return table;
            }
        }
        return table;
    }

    for (int n = 0; n <= n_max; ++n) {
        try {
            const double logc = log_c_streaming(n, config);
            table.rows.push_back({n, logc, bounds_from_log_c(n, logc)});
        } catch (const std::exception& e) {
            table.complete = false;
            table.failed_level = n;
            table.error = e.what();
            return table;
        }
    }
    return table;
}

}  // namespace lyap
