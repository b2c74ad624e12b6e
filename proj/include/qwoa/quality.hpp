#pragma once

#include <cstdint>
#include <vector>

#include "qwoa/graph.hpp"

namespace qwoa {

/// Largest instance the dense table / exhaustive scan paths accept.
inline constexpr int kMaxTableQubits = 24;

/// The diagonal of the MaxCut observable: quality q(x) for every bitstring,
/// with the distribution moments used by the NV schedule.
struct QualityTable {
    int n = 0;
    std::vector<double> values; // indexed by bitmask, size 2^n
    double q_max = 0.0;
    double mu = 0.0;
    double sigma = 0.0;

    // All qualities are small nonnegative integers (true for unweighted
    // graphs); lets the phase gate use a per-value exponential table.
    bool integer_valued = false;
    int max_int = 0;

    std::size_t size() const { return values.size(); }
};

QualityTable build_quality_table(const Graph& g, int max_qubits = kMaxTableQubits);

struct MaxcutSolution {
    double q_max = 0.0;
    std::uint64_t witness = 0; // bit 0 fixed to 0
};

/// Exhaustive scan over the 2^(n-1) cuts with vertex 0 fixed; exact maximum.
MaxcutSolution brute_force_maxcut(const Graph& g, int max_qubits = kMaxTableQubits);

/// q_found / q_max; throws std::domain_error when q_max <= 0 (edgeless graph).
double approx_ratio(double q_found, double q_max);

struct QualityStats {
    double mu = 0.0;
    double sigma = 0.0;
};

/// Monte Carlo estimate of the quality distribution moments, for instances
/// too large for the dense table.
QualityStats sample_quality_stats(const Graph& g, int samples, std::uint64_t seed);

} // namespace qwoa
