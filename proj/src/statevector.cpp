#include "qwoa/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwoa {

Statevector uniform_state(int n, int max_qubits) {
    if (n < 1 || n > max_qubits)
        throw std::invalid_argument("uniform_state: n outside [1, " +
                                    std::to_string(max_qubits) + "]");
    Statevector s;
    s.n = n;
    const std::uint64_t size = 1ULL << n;
    s.amps.assign(size, Complex(1.0 / std::sqrt(static_cast<double>(size)), 0.0));
    return s;
}

Statevector basis_state(int n, std::uint64_t x, int max_qubits) {
    if (n < 1 || n > max_qubits)
        throw std::invalid_argument("basis_state: n outside [1, " + std::to_string(max_qubits) +
                                    "]");
    if (x >> n) throw std::invalid_argument("basis_state: index out of range");
    Statevector s;
    s.n = n;
    s.amps.assign(1ULL << n, Complex(0.0, 0.0));
    s.amps[x] = Complex(1.0, 0.0);
    return s;
}

void apply_phase(Statevector& state, const QualityTable& table, double angle) {
    if (table.n != state.n) throw std::invalid_argument("apply_phase: dimension mismatch");
    const std::size_t size = state.amps.size();
    if (table.integer_valued) {
        // Unweighted qualities repeat a handful of integers; one exp per value.
        std::vector<Complex> lut(static_cast<std::size_t>(table.max_int) + 1);
        for (int k = 0; k <= table.max_int; ++k)
            lut[k] = std::polar(1.0, -angle * static_cast<double>(k));
        for (std::size_t x = 0; x < size; ++x)
            state.amps[x] *= lut[static_cast<std::size_t>(table.values[x])];
    } else {
        for (std::size_t x = 0; x < size; ++x)
            state.amps[x] *= std::polar(1.0, -angle * table.values[x]);
    }
}

void apply_mixer(Statevector& state, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Complex mis(0.0, -s);
    const std::uint64_t size = state.amps.size();
    for (int q = 0; q < state.n; ++q) {
        const std::uint64_t bit = 1ULL << q;
        const std::uint64_t lo_mask = bit - 1;
        const std::uint64_t hi_mask = ~lo_mask;
        for (std::uint64_t i = 0; i < size / 2; ++i) {
            const std::uint64_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
            const std::uint64_t i1 = i0 | bit;
            const Complex a0 = state.amps[i0];
            const Complex a1 = state.amps[i1];
            state.amps[i0] = c * a0 + mis * a1;
            state.amps[i1] = mis * a0 + c * a1;
        }
    }
}

double expectation(const Statevector& state, const QualityTable& table) {
    if (table.n != state.n) throw std::invalid_argument("expectation: dimension mismatch");
    double e = 0.0;
    for (std::size_t x = 0; x < state.amps.size(); ++x) e += table.values[x] * std::norm(state.amps[x]);
    return e;
}

double norm(const Statevector& state) {
    double n2 = 0.0;
    for (const Complex& a : state.amps) n2 += std::norm(a);
    return std::sqrt(n2);
}

} // namespace qwoa
