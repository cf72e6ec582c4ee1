#include "qudot/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qudot/error.hpp"

namespace qudot {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool is_zero(const Amplitude& w) { return std::abs(w) <= kZeroEps; }

void check_qubit(const QudotNet& net, int qubit) {
    if (qubit < 1 || qubit > net.num_qubits()) {
        throw InvalidQubitError("qubit " + std::to_string(qubit) +
                                " out of range [1, " +
                                std::to_string(net.num_qubits()) + "]");
    }
}

void check_distinct(int control, int target) {
    if (control == target) {
        throw InvalidCircuitError("control and target must differ, both are " +
                                  std::to_string(control));
    }
}

// X on one label: swap the child edge weights of the siblings (rows of
// the transition below; absent on the last layer) and the parent edge
// weights (columns of the transition above; r0 <-> r1 on qubit 1).
void x_on_label(QudotNet& net, LabelId label, int layer) {
    if (layer < net.num_qubits()) {
        auto& child = net.transition(label, layer);
        std::swap(child[0], child[2]);
        std::swap(child[1], child[3]);
    }
    auto& parent = net.transition(label, layer - 1);
    std::swap(parent[0], parent[1]);
    std::swap(parent[2], parent[3]);
}

// H on one label. First the interference step, per parent row:
// (a, b) -> ((a+b)/sqrt2, (a-b)/sqrt2); the root transition's 1-row is
// permanently zero, so the same loop covers qubit 1. Then the copy step:
// for each child column with exactly one zero sibling weight, the nonzero
// one is copied over it, so a node made reachable by the interference
// inherits the conditionals below it. A dead column stays dead.
void h_on_label(QudotNet& net, LabelId label, int layer) {
    auto& parent = net.transition(label, layer - 1);
    for (int row = 0; row < 4; row += 2) {
        const Amplitude a = parent[static_cast<std::size_t>(row)];
        const Amplitude b = parent[static_cast<std::size_t>(row) + 1];
        parent[static_cast<std::size_t>(row)] = (a + b) * kInvSqrt2;
        parent[static_cast<std::size_t>(row) + 1] = (a - b) * kInvSqrt2;
    }
    if (layer < net.num_qubits()) {
        auto& child = net.transition(label, layer);
        for (std::size_t col = 0; col < 2; ++col) {
            Amplitude& from_zero = child[col];
            Amplitude& from_one = child[2 + col];
            const bool z0 = is_zero(from_zero);
            const bool z1 = is_zero(from_one);
            if (z0 && !z1) {
                from_zero = from_one;
            } else if (!z0 && z1) {
                from_one = from_zero;
            }
        }
    }
}

// R(k) on one label: multiply the 1 node's parent edges (column 1 of the
// transition above; r1 on qubit 1) by the phase. Magnitudes unchanged.
void rk_on_label(QudotNet& net, LabelId label, int layer, const Amplitude& phi) {
    auto& parent = net.transition(label, layer - 1);
    parent[1] *= phi;
    parent[3] *= phi;
}

void gate_on_label(QudotNet& net, LabelId label, int layer, const SingleQubitGate& u) {
    switch (u.kind) {
        case SingleQubitGate::Kind::X: x_on_label(net, label, layer); break;
        case SingleQubitGate::Kind::H: h_on_label(net, label, layer); break;
        case SingleQubitGate::Kind::Rk:
            rk_on_label(net, label, layer, phase_of(u.k, u.conjugate));
            break;
    }
}

// Exact marginal probability that physical layer `layer` reads 0, from a
// root-down pass over the single label's squared magnitudes.
double exact_zero_marginal(const QudotNet& net, LabelId label, int layer) {
    double pi0 = 1.0;  // root
    double pi1 = 0.0;
    for (int t = 0; t < layer; ++t) {
        const auto& tr = net.transition(label, t);
        const double to0 = pi0 * std::norm(tr[0]) + pi1 * std::norm(tr[2]);
        const double to1 = pi0 * std::norm(tr[1]) + pi1 * std::norm(tr[3]);
        pi0 = to0;
        pi1 = to1;
    }
    const double total = pi0 + pi1;
    return total > 0.0 ? pi0 / total : 0.0;
}

}  // namespace

Amplitude phase_of(int k, bool conjugate) {
    if (k < 0) {
        throw InvalidInputError("phase index k must be >= 0, got " + std::to_string(k));
    }
    const double angle = 2.0 * std::numbers::pi / std::exp2(static_cast<double>(k));
    const Amplitude phi = std::polar(1.0, angle);
    return conjugate ? std::conj(phi) : phi;
}

void apply_x(QudotNet& net, int qubit) {
    check_qubit(net, qubit);
    const int layer = net.physical_layer(qubit);
    for (LabelId label : net.labels()) x_on_label(net, label, layer);
}

void apply_h(QudotNet& net, int qubit) {
    check_qubit(net, qubit);
    const int layer = net.physical_layer(qubit);
    for (LabelId label : net.labels()) h_on_label(net, label, layer);
}

void apply_rk(QudotNet& net, int qubit, int k, bool conjugate) {
    check_qubit(net, qubit);
    const Amplitude phi = phase_of(k, conjugate);
    const int layer = net.physical_layer(qubit);
    for (LabelId label : net.labels()) rk_on_label(net, label, layer, phi);
}

int apply_m(QudotNet& net, int qubit, Rng& rng, MeasureRule rule) {
    check_qubit(net, qubit);
    if (!net.single_label()) {
        throw CoherentStateError(
            "measurement is not supported on a net with multiple coherent labels");
    }
    const LabelId label = net.labels().front();
    const int layer = net.physical_layer(qubit);
    auto& parent = net.transition(label, layer - 1);

    // Column s of the parent transition holds the edges into the s node;
    // on qubit 1 the 0 node's single parent edge is r0.
    const Amplitude w1 = parent[0];
    const Amplitude w2 = parent[2];
    const bool zero_side0 = is_zero(w1) && is_zero(w2);
    const bool zero_side1 = is_zero(parent[1]) && is_zero(parent[3]);
    if (zero_side0 && zero_side1) {
        throw CorruptNetError("layer " + std::to_string(layer) +
                              " has no nonzero parent edges");
    }
    if (zero_side1) return 0;  // already definite
    if (zero_side0) return 1;

    const int c = (is_zero(w1) ? 0 : 1) + (is_zero(w2) ? 0 : 1);
    double p_zero = std::norm(w1 + w2) / static_cast<double>(c * c);
    if (p_zero > 1.0) p_zero = 1.0;

    // The closed-form branch probability assumes a sibling's nonzero
    // parent edges agree, which holds on every state reachable through
    // this gate set. Keep score when the assumption breaks instead of
    // silently sampling from the wrong marginal.
    if (std::abs(exact_zero_marginal(net, label, layer) - p_zero) > kNormTol) {
        net.note_measure_probability_mismatch();
    }

    const int winner = rng.uniform() <= p_zero ? 0 : 1;
    const int loser = 1 - winner;

    parent[static_cast<std::size_t>(loser)] = Amplitude{0.0, 0.0};
    parent[static_cast<std::size_t>(2 + loser)] = Amplitude{0.0, 0.0};

    Amplitude& keep0 = parent[static_cast<std::size_t>(winner)];
    Amplitude& keep1 = parent[static_cast<std::size_t>(2 + winner)];
    if (rule == MeasureRule::Renormalize) {
        // Each surviving edge returns to unit magnitude: the branch
        // probability it encoded has been spent by the collapse.
        if (!is_zero(keep0)) keep0 /= std::abs(keep0);
        if (!is_zero(keep1)) keep1 /= std::abs(keep1);
    } else {
        const int survivors = (is_zero(keep0) ? 0 : 1) + (is_zero(keep1) ? 0 : 1);
        if (survivors == 2) {
            const double sqrt2 = 1.0 / kInvSqrt2;
            keep0 *= sqrt2;
            keep1 *= sqrt2;
        }
    }
    return winner;
}

void apply_swap(QudotNet& net) { net.flip_orientation(); }

int apply_semi_control(QudotNet& net, int control, int target,
                       const SingleQubitGate& u, Rng& rng, MeasureRule rule) {
    check_distinct(control, target);
    check_qubit(net, control);
    check_qubit(net, target);
    const int bit = apply_m(net, control, rng, rule);
    if (bit == 1) {
        gate_on_label(net, net.labels().front(), net.physical_layer(target), u);
    }
    return bit;
}

void apply_coherent_control(QudotNet& net, int control, int target,
                            const SingleQubitGate& u) {
    check_distinct(control, target);
    check_qubit(net, control);
    check_qubit(net, target);

    const int layer = net.physical_layer(control);
    const int target_layer = net.physical_layer(target);
    const int n = net.num_qubits();
    const std::vector<LabelId> snapshot = net.labels();

    for (LabelId label : snapshot) {
        const LabelId fresh = net.spawn_label();

        // Move the edges entering the control's 1 node (column 1 of the
        // transition above; r1 on qubit 1) onto the fresh label.
        {
            auto& old_tr = net.transition(label, layer - 1);
            auto& new_tr = net.transition(fresh, layer - 1);
            new_tr[1] = old_tr[1];
            new_tr[3] = old_tr[3];
            old_tr[1] = Amplitude{0.0, 0.0};
            old_tr[3] = Amplitude{0.0, 0.0};
        }

        // Duplicate nonzero ancestor edges on paths feeding the moved
        // edges; the original label keeps them for its 0-node paths.
        {
            bool need0 = !is_zero(net.transition(fresh, layer - 1)[1]);
            bool need1 = !is_zero(net.transition(fresh, layer - 1)[3]);
            for (int t = layer - 2; t >= 0 && (need0 || need1); --t) {
                const auto& old_tr = net.transition(label, t);
                auto& new_tr = net.transition(fresh, t);
                bool next0 = false;
                bool next1 = false;
                for (int from = 0; from < 2; ++from) {
                    for (int to = 0; to < 2; ++to) {
                        if (!(to == 0 ? need0 : need1)) continue;
                        const auto slot = static_cast<std::size_t>(2 * from + to);
                        if (!is_zero(old_tr[slot])) {
                            new_tr[slot] = old_tr[slot];
                            (from == 0 ? next0 : next1) = true;
                        }
                    }
                }
                need0 = next0;
                need1 = next1;
            }
        }

        // Same below the control: move the 1 node's outgoing edges (row 1
        // of the transition below), then duplicate nonzero descendants.
        if (layer < n) {
            {
                auto& old_tr = net.transition(label, layer);
                auto& new_tr = net.transition(fresh, layer);
                new_tr[2] = old_tr[2];
                new_tr[3] = old_tr[3];
                old_tr[2] = Amplitude{0.0, 0.0};
                old_tr[3] = Amplitude{0.0, 0.0};
            }
            bool need0 = !is_zero(net.transition(fresh, layer)[2]);
            bool need1 = !is_zero(net.transition(fresh, layer)[3]);
            for (int t = layer + 1; t < n && (need0 || need1); ++t) {
                const auto& old_tr = net.transition(label, t);
                auto& new_tr = net.transition(fresh, t);
                bool next0 = false;
                bool next1 = false;
                for (int from = 0; from < 2; ++from) {
                    if (!(from == 0 ? need0 : need1)) continue;
                    for (int to = 0; to < 2; ++to) {
                        const auto slot = static_cast<std::size_t>(2 * from + to);
                        if (!is_zero(old_tr[slot])) {
                            new_tr[slot] = old_tr[slot];
                            (to == 0 ? next0 : next1) = true;
                        }
                    }
                }
                need0 = next0;
                need1 = next1;
            }
        }

        // The controlled gate itself touches only the fresh label.
        gate_on_label(net, fresh, target_layer, u);
    }
}

}  // namespace qudot
