#pragma once

// Core domain types for products of random 2x2 matrices: the two matrix
// models (Bernoulli entry, scaled-Cauchy entry), the normalized projective
// action, a compensated log-sum accumulator, and the deterministic
// counter-based random streams every estimator draws from.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lyap {

// ---------------------------------------------------------------------------
// matrices and models
// ---------------------------------------------------------------------------

struct Matrix2 {
    double a = 0.0, b = 0.0;
    double c = 0.0, d = 0.0;

    double det() const { return a * d - b * c; }
};

enum class ModelKind { bernoulli, cauchy };

// Matrix law with one random entry. Bernoulli(p): [[eps,1],[1,0]] with
// eps in {0,1}. CauchyScale(xi): [[xi*eps,-1],[1,0]] with eps standard Cauchy.
struct ModelSpec {
    ModelKind kind;
    double param;  // p for bernoulli, xi for cauchy

    static ModelSpec bernoulli(double p) {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("ModelSpec: Bernoulli p must lie strictly in (0,1), got " +
                                    std::to_string(p));
        return {ModelKind::bernoulli, p};
    }

    static ModelSpec cauchy(double xi) {
        if (!(xi != 0.0) || !std::isfinite(xi))
            throw std::domain_error("ModelSpec: Cauchy scale xi must be finite and nonzero");
        return {ModelKind::cauchy, xi};
    }
};

// ---------------------------------------------------------------------------
// unit vectors
// ---------------------------------------------------------------------------

struct UnitVector2 {
    double x1 = 1.0;
    double x2 = 0.0;

    double norm() const { return std::sqrt(x1 * x1 + x2 * x2); }

    bool is_unit(double tol = 1e-12) const { return std::fabs(x1 * x1 + x2 * x2 - 1.0) <= tol; }

    static UnitVector2 normalized(double x1, double x2) {
        const double n = std::sqrt(x1 * x1 + x2 * x2);
        if (n == 0.0) throw std::domain_error("UnitVector2: cannot normalize the zero vector");
        return {x1 / n, x2 / n};
    }

    // (sqrt(2)/2, sqrt(2)/2), the starting vector used for all simulations.
    static UnitVector2 default_start() {
        const double h = std::sqrt(0.5);
        return {h, h};
    }
};

// ---------------------------------------------------------------------------
// compensated summation
// ---------------------------------------------------------------------------

// Neumaier-compensated accumulator for sums of up to 2^30 logarithms.
// Absolute error stays below 4*eps*count*max|term|.
class LogSumAccumulator {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        ++count_;
    }

    double value() const { return sum_ + comp_; }
    std::uint64_t count() const { return count_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    std::uint64_t count_ = 0;
};

// ---------------------------------------------------------------------------
// deterministic random streams
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace detail

// Counter-based stream: draw i is a pure function of (key, i), so outputs are
// independent of call interleaving and thread scheduling.
class Stream {
  public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    // i-th draw (1-based), independent of the cursor.
    std::uint64_t at(std::uint64_t i) const { return detail::mix64(key_ + i * detail::kGolden); }

    std::uint64_t next_u64() { return at(++cursor_); }

    // Uniform on the open interval (0,1): ((k >> 12) + 0.5) * 2^-52. Every
    // value (2m+1) * 2^-53 is exactly representable, the endpoints are
    // unreachable, and tan(pi*(u-1/2)) stays finite.
    double next_unit() {
        return static_cast<double>(next_u64() >> 12) * 0x1p-52 + 0x1p-53;
    }

    std::uint64_t key() const { return key_; }

  private:
    std::uint64_t key_;
    std::uint64_t cursor_ = 0;
};

// Master seed with a fixed splitting rule: the stream for indices (a,b,c) is
// keyed by chained mixing, so identical (master, indices) give bit-identical
// streams regardless of worker count or evaluation order.
struct Seed {
    std::uint64_t master = 1;

    Stream stream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
        using detail::kGolden;
        using detail::mix64;
        std::uint64_t h = mix64(master + kGolden);
        h = mix64(h ^ (a + kGolden));
        h = mix64(h ^ (b + 2 * kGolden));
        h = mix64(h ^ (c + 3 * kGolden));
        return Stream(h);
    }
};

// Stream index tags; keep stable, they define the reproducible output.
namespace stream_tag {
inline constexpr std::uint64_t lambda = 1;        // mc_lambda replicas
inline constexpr std::uint64_t variance = 2;      // variance-curve replicas
inline constexpr std::uint64_t invariant = 3;     // invariant-measure chains
inline constexpr std::uint64_t lambda_phase = 4;  // variance-curve lambda pre-runs
inline constexpr std::uint64_t bootstrap = 5;     // bootstrap resampling
}  // namespace stream_tag

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

// Deterministic kernel: one uniform draw u in (0,1) -> one model matrix.
// Bernoulli: eps = 1 iff u < p. Cauchy: eps = tan(pi*(u - 1/2)) (inverse CDF).
inline Matrix2 draw_matrix_from_uniform(const ModelSpec& model, double u) {
    switch (model.kind) {
        case ModelKind::bernoulli: {
            const double eps = (u < model.param) ? 1.0 : 0.0;
            return {eps, 1.0, 1.0, 0.0};
        }
        case ModelKind::cauchy: {
            const double eps = std::tan(M_PI * (u - 0.5));
            return {model.param * eps, -1.0, 1.0, 0.0};
        }
    }
    throw std::logic_error("draw_matrix: unknown model kind");
}

inline Matrix2 draw_matrix(const ModelSpec& model, Stream& stream) {
    return draw_matrix_from_uniform(model, stream.next_unit());
}

struct ApplyResult {
    UnitVector2 direction;
    double log_norm = 0.0;
};

// One step of the normalized cocycle: v = m*u / ||m*u||, log||m*u|| in the
// Euclidean 2-norm. Model matrices have |det| = 1, so the image is never zero.
inline ApplyResult apply_normalized(const Matrix2& m, const UnitVector2& u) {
    const double w1 = m.a * u.x1 + m.b * u.x2;
    const double w2 = m.c * u.x1 + m.d * u.x2;
    const double nsq = w1 * w1 + w2 * w2;
    if (nsq == 0.0) throw std::domain_error("apply_normalized: singular image");
    const double n = std::sqrt(nsq);
    return {{w1 / n, w2 / n}, std::log(n)};
}

}  // namespace lyap
