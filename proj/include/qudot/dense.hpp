#ifndef QUDOT_DENSE_HPP
#define QUDOT_DENSE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qudot/circuit.hpp"
#include "qudot/net.hpp"
#include "qudot/rng.hpp"
#include "qudot/types.hpp"

namespace qudot {

/// Dense 2^n state vector, the ground truth for accuracy claims. Qubit 1
/// is the most significant bit of the amplitude index, matching the net's
/// bitstring ordering. Capped at kMaxEnumQubits.
struct DenseState {
    int num_qubits = 0;
    std::vector<Amplitude> amps;

    static DenseState ground(int num_qubits);
    double norm_sq() const;
    double probability(const Bitstring& bits) const;
};

/// Kernel selection for the data-parallel amplitude loops. Auto picks the
/// OpenMP path for large vectors and the serial one below the threshold.
/// The serial path is the reference the parallel one is tested against.
enum class DenseBackend { Auto, Serial, OpenMp };

/// Applies one gate op and returns the new state; the input is untouched.
/// Unitary ops use standard tensor-product matrix action; SwapAll is the
/// full bit-reversal permutation; Measure and SemiCu perform a Born-rule
/// projective measurement (rng required) with renormalization.
DenseState dense_apply(const DenseState& state, const GateOp& op, Rng* rng = nullptr,
                       DenseBackend backend = DenseBackend::Auto);

/// Folds a measurement-free op sequence (macros allowed) over the state.
DenseState dense_fold(const DenseState& state, const Circuit& circuit,
                      DenseBackend backend = DenseBackend::Auto);

/// Exact outcome distribution of a measurement-free or semi-quantum
/// circuit, obtained by deferring every measurement: SemiCu becomes the
/// coherent controlled-U, Measure ops drop, and the final amplitudes are
/// squared.
std::map<Bitstring, double> dense_outcome_distribution(const Circuit& circuit);

/// Bridges a net into the dense representation via path enumeration and
/// verifies the norm (CorruptNetError on failure).
DenseState qudot_to_dense(const QudotNet& net);

/// Pure-state fidelity |<a|b>|, clamped to [0, 1]. Equals the density
/// matrix fidelity Tr sqrt(rho^1/2 sigma rho^1/2) on pure states.
double fidelity(const DenseState& a, const DenseState& b);

struct DistributionMetrics {
    double tv_distance = 0.0;        // 1/2 * sum |p_exp - p_obs|
    double max_relative_error = 0.0; // over outcomes with p_exp > 0
};

DistributionMetrics distribution_metrics(const std::map<Bitstring, double>& expected,
                                         const Distribution& observed);

/// Seed-deterministic random circuit over {X, H, R(k <= max_k)} with
/// uniformly chosen kinds, operands and phase indices. Property-test and
/// equivalence-sweep driver.
Circuit random_circuit(int num_qubits, int length, Rng& rng, int max_k = 4);

}  // namespace qudot

#endif
