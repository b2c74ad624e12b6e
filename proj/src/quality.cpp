#include "qwoa/quality.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwoa/rng.hpp"

namespace qwoa {

namespace {

void check_size(int n, int max_qubits, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
    if (n > max_qubits)
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                    " exceeds the configured maximum " +
                                    std::to_string(max_qubits));
}

} // namespace

QualityTable build_quality_table(const Graph& g, int max_qubits) {
    check_size(g.n, max_qubits, "build_quality_table");
    QualityTable t;
    t.n = g.n;
    const std::uint64_t size = 1ULL << g.n;
    t.values.assign(size, 0.0);
    for (std::uint64_t x = 0; x < size; ++x) {
        double q = 0.0;
        for (const Edge& e : g.edges)
            if (((x >> e.u) ^ (x >> e.v)) & 1ULL) q += e.w;
        t.values[x] = q;
        if (q > t.q_max) t.q_max = q;
    }

    double sum = 0.0;
    for (double v : t.values) sum += v;
    t.mu = sum / static_cast<double>(size);
    double var = 0.0;
    for (double v : t.values) var += (v - t.mu) * (v - t.mu);
    t.sigma = std::sqrt(var / static_cast<double>(size));

    t.integer_valued = true;
    for (double v : t.values) {
        if (v < 0.0 || v != std::floor(v) || v > 1e6) {
            t.integer_valued = false;
            break;
        }
    }
    if (t.integer_valued) t.max_int = static_cast<int>(t.q_max);
    return t;
}

MaxcutSolution brute_force_maxcut(const Graph& g, int max_qubits) {
    check_size(g.n, max_qubits, "brute_force_maxcut");
    MaxcutSolution best;
    // Global bit-flip symmetry: only cuts with vertex 0 on side 0.
    const std::uint64_t half = g.n == 1 ? 1 : (1ULL << (g.n - 1));
    for (std::uint64_t y = 0; y < half; ++y) {
        const std::uint64_t x = y << 1;
        const double q = quality(g, x);
        if (q > best.q_max) {
            best.q_max = q;
            best.witness = x;
        }
    }
    return best;
}

double approx_ratio(double q_found, double q_max) {
    if (q_max <= 0.0) throw std::domain_error("approx_ratio: q_max must be positive");
    return q_found / q_max;
}

QualityStats sample_quality_stats(const Graph& g, int samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("sample_quality_stats: need at least 2 samples");
    SplitMix64 rng(seed);
    const std::uint64_t mask = g.n >= 64 ? ~0ULL : ((1ULL << g.n) - 1);
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double q = quality(g, rng.next() & mask);
        sum += q;
        sumsq += q * q;
    }
    QualityStats s;
    s.mu = sum / samples;
    s.sigma = std::sqrt(std::max(0.0, sumsq / samples - s.mu * s.mu));
    return s;
}

} // namespace qwoa
