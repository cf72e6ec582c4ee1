#ifndef QUDOT_CIRCUIT_HPP
#define QUDOT_CIRCUIT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qudot/gates.hpp"
#include "qudot/net.hpp"
#include "qudot/types.hpp"

namespace qudot {

enum class GateKind {
    X,
    H,
    Rk,
    Measure,
    SwapAll,
    SemiCu,
    CoherentCu,
    Qft,   // macro; expands to the semi-quantum transform
    Iqft,  // macro; expands to its mirror
};

struct GateOp {
    GateKind kind = GateKind::X;
    int qubit = 0;    // X/H/Rk/Measure operand
    int k = 0;        // Rk phase index
    bool conjugate = false;
    int control = 0;  // SemiCu/CoherentCu
    int target = 0;
    SingleQubitGate u{};

    static GateOp x(int q) { return {GateKind::X, q, 0, false, 0, 0, {}}; }
    static GateOp h(int q) { return {GateKind::H, q, 0, false, 0, 0, {}}; }
    static GateOp rk(int q, int k, bool conjugate = false) {
        return {GateKind::Rk, q, k, conjugate, 0, 0, {}};
    }
    static GateOp m(int q) { return {GateKind::Measure, q, 0, false, 0, 0, {}}; }
    static GateOp swap_all() { return {GateKind::SwapAll, 0, 0, false, 0, 0, {}}; }
    static GateOp semi_cu(SingleQubitGate u, int control, int target) {
        return {GateKind::SemiCu, 0, 0, false, control, target, u};
    }
    static GateOp coherent_cu(SingleQubitGate u, int control, int target) {
        return {GateKind::CoherentCu, 0, 0, false, control, target, u};
    }
    static GateOp qft() { return {GateKind::Qft, 0, 0, false, 0, 0, {}}; }
    static GateOp iqft() { return {GateKind::Iqft, 0, 0, false, 0, 0, {}}; }

    bool operator==(const GateOp&) const = default;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    bool operator==(const Circuit&) const = default;
};

/// One breach of the terminal-circuit rule: once a qubit has been measured
/// or used as a semi-quantum control, only further measurements or
/// semi-quantum controls may touch it.
struct Violation {
    std::size_t op_index = 0;  // 0-based position in Circuit::ops
    int qubit = 0;
    std::string message;
};

/// Returns every terminal-discipline violation; empty means executable.
std::vector<Violation> validate(const Circuit& circuit);

/// Replaces Qft/Iqft macro ops with their gate sequences.
Circuit expand_macros(const Circuit& circuit);

struct MeasurementRecord {
    std::size_t op_index = 0;
    int qubit = 0;
    int bit = 0;
};

struct ExecutionResult {
    QudotNet net;
    std::vector<MeasurementRecord> measurements;
};

/// Runs the circuit on a fresh ground net. Throws InvalidCircuitError when
/// validation fails; gate errors are rethrown with the op index attached.
ExecutionResult execute(const Circuit& circuit, Rng& rng,
                        MeasureRule rule = MeasureRule::Renormalize);

/// Semi-quantum Fourier transform on n qubits: per qubit i, H(i) followed
/// by semi-quantum controlled R(j-i+1) onto each later qubit j; then the
/// whole-state SWAP and a measurement of every qubit.
Circuit build_qft(int n);

enum class IqftPhases {
    Conjugated,   // phi(k)*: makes the circuit the exact inverse of the QFT
    PaperLiteral, // phi(k) as drawn
};

/// Mirror of build_qft: whole-state SWAP first, then the reversed gate
/// sequence with controls on the later qubits, then all measurements.
Circuit build_iqft(int n, IqftPhases phases = IqftPhases::Conjugated);

/// Four-outcome 4-qubit test state: H applied to two distinct qubits.
Circuit prepare_test_state(int first, int second, int n = 4);

struct Distribution {
    std::map<Bitstring, std::uint64_t> counts;
    std::uint64_t shots = 0;
};

/// Runs prep + main on a fresh net per shot and tallies one traversal per
/// shot. Shot i uses the derived seed stream (seed, i), so the result is
/// identical for any worker count. workers <= 0 uses all hardware threads.
Distribution ensemble_run(const Circuit& prep, const Circuit& main,
                          std::uint64_t shots, std::uint64_t seed, int workers = 0);

}  // namespace qudot

#endif
