#ifndef QUDOT_GATES_HPP
#define QUDOT_GATES_HPP

#include "qudot/net.hpp"
#include "qudot/rng.hpp"
#include "qudot/types.hpp"

namespace qudot {

/// Payload of a controlled gate: the single-qubit gate applied to the
/// target. Measurement is not a valid payload.
struct SingleQubitGate {
    enum class Kind { X, H, Rk };

    Kind kind = Kind::X;
    int k = 0;              // phase index, Rk only
    bool conjugate = false; // use phi(k)* instead of phi(k)

    static SingleQubitGate x() { return {Kind::X, 0, false}; }
    static SingleQubitGate h() { return {Kind::H, 0, false}; }
    static SingleQubitGate rk(int k, bool conjugate = false) {
        return {Kind::Rk, k, conjugate};
    }

    bool operator==(const SingleQubitGate&) const = default;
};

/// phi(k) = exp(2*pi*i / 2^k), conjugated on request.
Amplitude phase_of(int k, bool conjugate = false);

/// How apply_m rescales the surviving node's parent edges.
enum class MeasureRule {
    /// Scale each surviving nonzero parent edge to unit magnitude. Equals
    /// the times-sqrt(2) rule on equal-amplitude parents and keeps the
    /// traversal sampler exact on unequal ones.
    Renormalize,
    /// Multiply the parent edges by sqrt(2) when the winner has exactly
    /// two nonzero parents, otherwise leave them unchanged.
    PaperLiteral,
};

/// NOT: swaps the child edge weights and the parent edge weights of the
/// layer's siblings, per label.
void apply_x(QudotNet& net, int qubit);

/// Hadamard: interferes the layer's parent edges (sum/difference over
/// sqrt(2)), then copies each nonzero child edge onto its zero sibling
/// slot so newly reachable nodes inherit the conditionals below them.
void apply_h(QudotNet& net, int qubit);

/// Phase gate R(k): multiplies the 1 node's parent edges by phi(k).
void apply_rk(QudotNet& net, int qubit, int k, bool conjugate = false);

/// Measurement: collapses the qubit to 0 or 1 and returns the bit. The
/// branch probability is the paper rule P(0) = |w1+w2|^2 / c^2 over the
/// 0 node's parent edges (c = number of nonzero ones); the losing node's
/// parent edges are zeroed and the winner's are rescaled per the rule.
/// Rejects nets with multiple coherent labels.
int apply_m(QudotNet& net, int qubit, Rng& rng,
            MeasureRule rule = MeasureRule::Renormalize);

/// Whole-state SWAP: reverses every edge and rebinds the root to the last
/// qubit layer, so qubit i afterwards reads what qubit n+1-i read before.
/// Implemented as an O(1) orientation flip.
void apply_swap(QudotNet& net);

/// Semi-quantum controlled-U: measures the control with apply_m and
/// applies u to the target iff the result is 1. Returns the control bit.
int apply_semi_control(QudotNet& net, int control, int target,
                       const SingleQubitGate& u, Rng& rng,
                       MeasureRule rule = MeasureRule::Renormalize);

/// Coherent controlled-U: for every active label l, moves the edges
/// incident to the control's 1 node onto a fresh label l', duplicates the
/// nonzero ancestor and descendant edges reachable along l paths through
/// that node, then applies u to the target on l' edges only. At most
/// doubles the label count.
void apply_coherent_control(QudotNet& net, int control, int target,
                            const SingleQubitGate& u);

}  // namespace qudot

#endif
