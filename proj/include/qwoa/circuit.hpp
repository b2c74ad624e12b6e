#pragma once

#include <memory>
#include <vector>

#include "qwoa/statevector.hpp"

namespace qwoa {

/// Per-layer parameter values, in the layout the circuit factories document.
using ParameterSet = std::vector<double>;

enum class GateKind {
    phase_main, // e^{-i theta Q} with the table passed to run_pqc
    phase_aux,  // e^{-i theta Q_aux} with the table carried by the circuit
    mixer,      // e^{-i theta sum_j X_j}
};

struct Gate {
    GateKind kind;
    int param; // index into the ParameterSet
};

/// Gate list in execution order. Parameter indices cover 0..param_count-1.
/// An augmented circuit carries the auxiliary quality table itself; the
/// target table is supplied at evaluation time.
struct CircuitSpec {
    int depth = 0;
    int param_count = 0;
    std::vector<Gate> gates;
    std::shared_ptr<const QualityTable> aux;
};

/// Depth-p two-generator circuit: layer k applies the phase gate (param 2k)
/// then the mixer (param 2k+1), layers in ascending k.
CircuitSpec standard_qwoa(int p);

/// Depth-p three-generator circuit: layer k applies the target phase
/// (param 3k), the auxiliary phase (param 3k+1), then the mixer (param 3k+2).
CircuitSpec augmented_qwoa(int p, std::shared_ptr<const QualityTable> aux);

/// Evolves |s> through the circuit. `table` feeds the phase_main gates.
Statevector run_pqc(const CircuitSpec& circuit, const ParameterSet& params,
                    const QualityTable& table);

/// <Q> of the evolved state (Q from `table`).
double pqc_expectation(const CircuitSpec& circuit, const ParameterSet& params,
                       const QualityTable& table);

/// d<Q>/d theta_k for every parameter, by the adjoint method: one forward
/// sweep, one application of Q, then a synchronized backward sweep that
/// un-applies each gate from both the ket and the costate. Each component is
/// 2 Im(<costate| H_k |ket>) evaluated at the gate's layer. Two state
/// buffers, O(gates) gate applications.
std::vector<double> gradient_adjoint(const CircuitSpec& circuit, const ParameterSet& params,
                                     const QualityTable& table);

/// Cost -<Q> and its gradient, the form the minimizer consumes.
double pqc_cost_grad(const CircuitSpec& circuit, const ParameterSet& params,
                     const QualityTable& table, std::vector<double>& grad_out);

} // namespace qwoa
