#ifndef QUDOT_NET_HPP
#define QUDOT_NET_HPP

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "qudot/rng.hpp"
#include "qudot/types.hpp"

namespace qudot {

// A QudotNet stores an n-qubit state as a layered weighted multi-digraph:
// a root node plus one layer of two sibling nodes (the 0 node and the
// 1 node) per qubit, 2n+1 nodes in total. Weighted edges run between
// adjacent layers; the weight of an edge is the amplitude to observe the
// child node given the parent node, and the amplitude of a basis state is
// the product of the edge weights along its root-to-leaf path, summed
// over branch labels.
//
// Storage is one flat array of layer transitions per branch label.
// Transition t = 0 holds the two root edges (slots 0 and 1); transition
// t in [1, n-1] holds the four edges between qubit layers t and t+1 in
// slot order 0->0, 0->1, 1->0, 1->1. The root transition behaves like an
// ordinary transition whose 1-row is permanently zero, which lets every
// gate rule run the same code on the first qubit.
//
// The whole-state SWAP is an O(1) orientation flip: logical qubit q then
// addresses physical layer n+1-q and bitstrings are read in reverse.
class QudotNet {
  public:
    /// Edge weights of one layer transition, indexed by 2*from_bit + to_bit.
    using Transition = std::array<Amplitude, 4>;

    /// Constructs the ground state |00...0>: every 0 node chains to the
    /// next 0 node with weight 1, all other edges present with weight 0.
    explicit QudotNet(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    Orientation orientation() const { return orientation_; }

    /// Physical storage layer addressed by logical qubit q (1-based).
    int physical_layer(int qubit) const {
        return orientation_ == Orientation::Forward ? qubit : num_qubits_ + 1 - qubit;
    }

    /// 2n+1: the root plus two nodes per qubit layer.
    std::size_t node_count() const { return 2 * static_cast<std::size_t>(num_qubits_) + 1; }

    /// Edge count. The default label materializes all 2(2n+1)-4 slots,
    /// zero weights included; labels spawned by coherent controls carry
    /// only their nonzero edges.
    std::size_t edge_count() const;

    const std::vector<LabelId>& labels() const { return label_ids_; }
    std::size_t label_count() const { return labels_.size(); }
    bool single_label() const { return labels_.size() == 1; }

    /// Appends a fresh all-zero label and returns its id. Gate-module use.
    LabelId spawn_label();

    /// All transitions of one label, indexed by layer transition (0 is the
    /// root transition). Gate-module entry point.
    std::span<Transition> edges(LabelId label);
    std::span<const Transition> edges(LabelId label) const;

    Transition& transition(LabelId label, int t);
    const Transition& transition(LabelId label, int t) const;

    /// Sum of squared magnitudes of the label's root edges.
    double root_mass(LabelId label) const;

    void flip_orientation() {
        orientation_ = orientation_ == Orientation::Forward ? Orientation::Reversed
                                                            : Orientation::Forward;
    }

    /// One measurement in the computational basis: picks a root edge with
    /// probability proportional to its squared magnitude (this fixes the
    /// branch label and the first bit), then walks downward drawing each
    /// child from the current node's out-edge weights within that label.
    /// Does not mutate the net.
    Bitstring traverse(Rng& rng) const;

    /// Amplitude of one basis state: per label, the product of the edge
    /// weights along the selected path; labels are summed.
    Amplitude amplitude_of(const Bitstring& bits) const;

    /// Amplitudes of every basis state with nonzero amplitude, found by
    /// depth-first walks that prune zero-weight edges.
    std::map<Bitstring, Amplitude> enumerate_paths(int max_qubits = kMaxEnumQubits) const;

    /// Times the paper measurement rule's branch probability disagreed
    /// with the exact marginal (see gates::apply_m). Zero on every state
    /// reachable through the implemented gate set.
    int measure_probability_mismatches() const { return measure_mismatches_; }
    void note_measure_probability_mismatch() { ++measure_mismatches_; }

  private:
    struct LabelEdges {
        LabelId id;
        std::vector<Transition> transitions;  // size num_qubits_
    };

    const LabelEdges& find(LabelId label) const;
    LabelEdges& find(LabelId label);

    int num_qubits_;
    Orientation orientation_ = Orientation::Forward;
    std::vector<LabelEdges> labels_;     // creation order; default label first
    std::vector<LabelId> label_ids_;     // mirrors labels_
    LabelId next_label_ = 1;
    int measure_mismatches_ = 0;
};

}  // namespace qudot

#endif
