#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwoa/circuit.hpp"
#include "qwoa/optimize.hpp"

namespace qwoa {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kGwThreshold = 0.8786;       // Goemans-Williamson guarantee
inline constexpr double kGwThreshold3Reg = 0.9326;   // 3-regular bound

/// 2p values i.i.d. uniform on [0, 2pi], deterministic per seed.
ParameterSet random_init(int p, std::uint64_t seed);

struct NVHyperparams {
    double beta = 0.5; // strictly inside (0,1); interior margin 1e-3
    double gamma = 1.0;
    double t = 1.0;
};

inline constexpr double kBetaMargin = 1e-3;

/// Which generator receives which ramp. `named` follows the parameter names
/// and the sigma normalization: the increasing gamma-ramp drives the phase
/// separation gates and the decreasing t-ramp drives the mixer. `literal`
/// swaps them, reproducing the formula's literal pairing.
enum class NvBinding { named, literal };

NvBinding parse_nv_binding(const std::string& s);
std::string to_string(NvBinding b);

struct Schedule {
    std::vector<double> gammas; // nondecreasing, beta*gamma/sigma .. gamma/sigma
    std::vector<double> times;  // nonincreasing, t .. beta*t
};

/// Linear ramps gamma_k = (gamma/sigma)(beta + (k-1)/(p-1)(1-beta)) and
/// t_k = t(1 + (k-1)/(p-1)(beta-1)), k = 1..p.
Schedule nv_schedule(const NVHyperparams& hp, int p, double sigma);

/// Full 2p parameter vector for standard_qwoa(p) with the schedule bound to
/// the generators per `binding`.
ParameterSet nv_parameters(const NVHyperparams& hp, int p, double sigma, NvBinding binding);

struct NvCostGrad {
    double cost = 0.0;      // -<Q>
    double d_beta = 0.0;
    double d_gamma = 0.0;
    double d_t = 0.0;
};

/// Cost and 3-hyperparameter gradient: the 2p adjoint gradient contracted
/// with the analytic Jacobian of the two ramp formulas.
NvCostGrad nv_cost_grad(const NVHyperparams& hp, const QualityTable& table, int p,
                        NvBinding binding = NvBinding::named);

struct PretrainBundle {
    int aux_n = 0; // auxiliary path-graph size
    int depth = 0;
    double aux_approx_ratio = 0.0; // >= 0.999 or pretraining failed
    ParameterSet aux_params;       // 2p values for standard_qwoa(depth)
};

inline constexpr double kPretrainAcceptRatio = 0.999;
inline constexpr int kPretrainMaxRestarts = 8;

/// Trains standard QWOA on the path graph P_n until the approximation ratio
/// reaches 0.999, restarting from fresh random parameters up to the retry
/// cap. Throws std::runtime_error when every restart falls short.
PretrainBundle pretrain_path_graph(int n, int p, std::uint64_t seed, const OptimizerConfig& opt);

/// Optimizer settings strong enough to push the path-graph ratio past the
/// acceptance threshold (the generic defaults stop too early).
OptimizerConfig pretrain_optimizer_config();

void save_bundle(const std::string& path, const PretrainBundle& bundle);
PretrainBundle load_bundle(const std::string& path);

struct AugmentedInit {
    CircuitSpec circuit; // 3p parameters, carries the auxiliary table
    ParameterSet params; // target phases 0, aux phases and mixer from bundle
};

/// Augments the pretrained auxiliary circuit with target phase gates
/// initialized to the identity; the first evaluation reproduces the
/// auxiliary-optimal state exactly.
AugmentedInit build_augmented(const PretrainBundle& bundle, const QualityTable& target);

struct MixerDiagnostics {
    int diameter = 0;                  // hypercube diameter = n
    std::vector<double> sphere_means;  // mean of q over distance-delta spheres, averaged over y
    std::vector<std::uint64_t> sphere_sizes; // C(n, delta); sums to 2^n
    double global_mean = 0.0;
    std::vector<double> alpha;         // fitted per-distance coefficients, alpha[0] = 0
    bool alpha_monotone_to_half = false; // nondecreasing over delta in [0, n/2]
    double phase_residual = 0.0;       // max deviation from the product form
};

/// Checks the two NV mixer conditions for the binary mixer on this problem:
/// (a) amplitudes of e^{-iMt}|y> carry phase -delta*pi/2 and modulus
/// cos(t)^(n-delta) sin(t)^delta at Hamming distance delta; (b) sphere means
/// obey (mu_delta,x - q(x)) = -alpha_delta (q(x) - mu) with alpha_delta
/// fitted by least squares and monotone up to n/2. Exhaustive, n <= 14.
MixerDiagnostics mixer_diagnostics(const QualityTable& table, double t_small);

} // namespace qwoa
