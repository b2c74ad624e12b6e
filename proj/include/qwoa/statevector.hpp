#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qwoa/quality.hpp"

namespace qwoa {

using Complex = std::complex<double>;

/// 2^n complex amplitudes, evolved in place. A statevector is owned by one
/// run; nothing here is internally thread-safe.
struct Statevector {
    int n = 0;
    std::vector<Complex> amps;

    std::size_t size() const { return amps.size(); }
};

/// |s>: every amplitude 1/sqrt(2^n).
Statevector uniform_state(int n, int max_qubits = kMaxTableQubits);

Statevector basis_state(int n, std::uint64_t x, int max_qubits = kMaxTableQubits);

/// amps[x] *= exp(-i * angle * table.values[x]).
void apply_phase(Statevector& state, const QualityTable& table, double angle);

/// exp(-i * angle * sum_j X_j): n single-qubit butterfly passes. The terms of
/// the binary mixer commute, so the product of per-qubit rotations is exact.
void apply_mixer(Statevector& state, double angle);

/// sum_x values[x] * |amps[x]|^2.
double expectation(const Statevector& state, const QualityTable& table);

double norm(const Statevector& state);

} // namespace qwoa
