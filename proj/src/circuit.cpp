#include "qwoa/circuit.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qwoa {

namespace {

const QualityTable& gate_table(const CircuitSpec& c, const Gate& g, const QualityTable& main) {
    if (g.kind == GateKind::phase_aux) {
        if (!c.aux) throw std::invalid_argument("circuit has phase_aux gates but no aux table");
        return *c.aux;
    }
    return main;
}

void check(const CircuitSpec& c, const ParameterSet& params, const QualityTable& table) {
    if (static_cast<int>(params.size()) != c.param_count)
        throw std::invalid_argument("parameter count " + std::to_string(params.size()) +
                                    " does not match circuit (" +
                                    std::to_string(c.param_count) + ")");
    if (c.aux && c.aux->n != table.n)
        throw std::invalid_argument("auxiliary table qubit count differs from target");
    for (const Gate& g : c.gates)
        if (g.param < 0 || g.param >= c.param_count)
            throw std::invalid_argument("gate parameter index out of range");
}

void apply_gate(Statevector& state, const CircuitSpec& c, const Gate& g, double angle,
                const QualityTable& main) {
    if (g.kind == GateKind::mixer)
        apply_mixer(state, angle);
    else
        apply_phase(state, gate_table(c, g, main), angle);
}

// <bra| H |ket> for the gate's generator, without materializing H|ket>.
Complex generator_braket(const Statevector& bra, const Statevector& ket, const CircuitSpec& c,
                         const Gate& g, const QualityTable& main) {
    Complex acc(0.0, 0.0);
    const std::size_t size = ket.amps.size();
    if (g.kind == GateKind::mixer) {
        for (int q = 0; q < ket.n; ++q) {
            const std::uint64_t bit = 1ULL << q;
            for (std::size_t x = 0; x < size; ++x)
                acc += std::conj(bra.amps[x]) * ket.amps[x ^ bit];
        }
    } else {
        const QualityTable& t = gate_table(c, g, main);
        for (std::size_t x = 0; x < size; ++x)
            acc += std::conj(bra.amps[x]) * t.values[x] * ket.amps[x];
    }
    return acc;
}

} // namespace

CircuitSpec standard_qwoa(int p) {
    if (p < 1) throw std::invalid_argument("standard_qwoa: depth must be >= 1");
    CircuitSpec c;
    c.depth = p;
    c.param_count = 2 * p;
    c.gates.reserve(static_cast<std::size_t>(2 * p));
    for (int k = 0; k < p; ++k) {
        c.gates.push_back({GateKind::phase_main, 2 * k});
        c.gates.push_back({GateKind::mixer, 2 * k + 1});
    }
    return c;
}

CircuitSpec augmented_qwoa(int p, std::shared_ptr<const QualityTable> aux) {
    if (p < 1) throw std::invalid_argument("augmented_qwoa: depth must be >= 1");
    if (!aux) throw std::invalid_argument("augmented_qwoa: auxiliary table required");
    CircuitSpec c;
    c.depth = p;
    c.param_count = 3 * p;
    c.aux = std::move(aux);
    c.gates.reserve(static_cast<std::size_t>(3 * p));
    for (int k = 0; k < p; ++k) {
        c.gates.push_back({GateKind::phase_main, 3 * k});
        c.gates.push_back({GateKind::phase_aux, 3 * k + 1});
        c.gates.push_back({GateKind::mixer, 3 * k + 2});
    }
    return c;
}

Statevector run_pqc(const CircuitSpec& circuit, const ParameterSet& params,
                    const QualityTable& table) {
    check(circuit, params, table);
    Statevector state = uniform_state(table.n);
    for (const Gate& g : circuit.gates) apply_gate(state, circuit, g, params[g.param], table);
    return state;
}

double pqc_expectation(const CircuitSpec& circuit, const ParameterSet& params,
                       const QualityTable& table) {
    const Statevector state = run_pqc(circuit, params, table);
    return expectation(state, table);
}

namespace {

// Shared adjoint sweep; returns <Q> and fills d<Q>/d theta.
double adjoint_sweep(const CircuitSpec& circuit, const ParameterSet& params,
                     const QualityTable& table, std::vector<double>& grad) {
    check(circuit, params, table);
    grad.assign(params.size(), 0.0);

    // Forward sweep: ket = U |s>.
    Statevector ket = uniform_state(table.n);
    for (const Gate& g : circuit.gates) apply_gate(ket, circuit, g, params[g.param], table);

    // Costate = Q |ket>; <Q> falls out of the same pass.
    double value = 0.0;
    Statevector costate = ket;
    for (std::size_t x = 0; x < costate.amps.size(); ++x) {
        value += table.values[x] * std::norm(ket.amps[x]);
        costate.amps[x] *= table.values[x];
    }

    // Backward sweep. At the top of each step, ket holds the state just
    // after gate k and costate holds U_{k+1}^dag ... U_L^dag Q U |s>.
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        const Gate& g = *it;
        const Complex braket = generator_braket(costate, ket, circuit, g, table);
        grad[g.param] += 2.0 * braket.imag();
        apply_gate(ket, circuit, g, -params[g.param], table);
        apply_gate(costate, circuit, g, -params[g.param], table);
    }
    return value;
}

} // namespace

std::vector<double> gradient_adjoint(const CircuitSpec& circuit, const ParameterSet& params,
                                     const QualityTable& table) {
    std::vector<double> grad;
    adjoint_sweep(circuit, params, table, grad);
    return grad;
}

double pqc_cost_grad(const CircuitSpec& circuit, const ParameterSet& params,
                     const QualityTable& table, std::vector<double>& grad_out) {
    const double value = adjoint_sweep(circuit, params, table, grad_out);
    for (double& g : grad_out) g = -g;
    return -value;
}

} // namespace qwoa
