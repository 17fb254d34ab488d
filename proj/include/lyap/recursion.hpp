#pragma once

// Coefficient-pair recursion for the Bernoulli(1/2) model and the convergent
// Lyapunov brackets built from it.
//
// Row 0 is the single pair (2,1); row n+1 applies, to every row-n pair (a,b),
// the transform branch (a+b, a) followed by the swap branch (b, a). log c_n is
// the sum of log(a+b) over the 2^n row-n pairs, and the level-n bracket is
//
//     lower_n = log c_n / ((n+7) 2^n),   upper_n = log c_n / ((n+4) 2^n).
//
// Two independent engines evaluate log c_n: a streaming depth-first walk of
// the expansion tree (O(n) memory, parallelizable over fixed-depth subtree
// prefixes with a deterministic reduction order) and a row-by-row multiset
// expansion that compresses repeated pairs.

#include <cstdint>
#include <vector>

#include "lyap/core.hpp"

namespace lyap {

struct CoefficientPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend bool operator==(const CoefficientPair&, const CoefficientPair&) = default;
    friend auto operator<=>(const CoefficientPair&, const CoefficientPair&) = default;
};

// One row of the expansion as distinct pairs with multiplicities, kept sorted
// by pair so iteration order is reproducible. Total multiplicity is 2^level.
struct RowMultiset {
    int level = 0;
    std::vector<std::pair<CoefficientPair, std::uint64_t>> entries;

    static RowMultiset seed_row() { return {0, {{{2, 1}, 1}}}; }

    std::uint64_t total_multiplicity() const;
    std::uint64_t distinct_count() const { return entries.size(); }
};

enum class Engine { streaming, multiset };

struct RecursionConfig {
    int depth_cap = 34;                          // streaming engine level cap
    std::uint64_t multiset_budget = 100'000'000; // distinct-pair cap per row
    int prefix_depth = 10;                       // parallel partition depth (fixed, not worker-dependent)
    int workers = 1;
};

enum class BoundProvenance { analytic, recursion_level };

// Rigorous two-sided bracket for the Lyapunov exponent.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    BoundProvenance provenance = BoundProvenance::recursion_level;
    int level = -1;  // recursion level, -1 for analytic bounds

    double width() const { return upper - lower; }
};

// n-th term of the Fibonacci-like sequence f(0)=f0, f(1)=f1. Exact integer
// iteration; throws std::overflow_error("fib overflow") past the 64-bit range.
std::int64_t fib(int n, std::int64_t f0, std::int64_t f1);

// Golden-ratio closed form of the same sequence, for cross-checks.
double fib_closed_form(int n, double f0, double f1);

// Row n -> row n+1 under the pair recursion, multiplicities of colliding
// pairs summed. Throws std::length_error if the distinct-pair budget is hit.
RowMultiset expand_row(const RowMultiset& row, std::uint64_t multiset_budget = 100'000'000);

// First pair of row n, i.e. the transform-only orbit (2,1) -> (3,2) -> (5,3) -> ...
// Its first element is the standard Fibonacci number F(n+3).
CoefficientPair first_pair(int n);

double log_c(int n, Engine engine, const RecursionConfig& config = {});

BoundPair bounds(int n, Engine engine = Engine::streaming, const RecursionConfig& config = {});

struct BoundsRow {
    int level = 0;
    double log_c = 0.0;
    BoundPair bracket;
};

// Levels 0..n_max in one pass (the multiset engine reuses each expanded row).
// On engine-capacity failure the rows computed so far are returned with
// complete=false and the failing level named in error.
struct BoundsTable {
    std::vector<BoundsRow> rows;
    bool complete = true;
    int failed_level = -1;
    std::string error;
};

BoundsTable bounds_table(int n_max, Engine engine, const RecursionConfig& config = {});

}  // namespace lyap
