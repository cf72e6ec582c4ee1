#ifndef QUDOT_TYPES_HPP
#define QUDOT_TYPES_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace qudot {

/// Edge weight / probability amplitude (double-precision complex).
using Amplitude = std::complex<double>;

/// Measured computational-basis state. Character i holds qubit i+1's bit;
/// qubit 1 is the leftmost character, matching ket notation |b1 b2 ... bn>.
using Bitstring = std::string;

/// Identifier of a coherent computational branch. Fresh nets carry the
/// single default label 0; coherent control gates append new labels.
using LabelId = std::uint32_t;

/// Magnitude at or below which an edge weight counts as zero.
inline constexpr double kZeroEps = 1e-12;

/// Tolerance for normalization invariants (per-node and whole-net).
inline constexpr double kNormTol = 1e-9;

/// Default cap on path enumeration and the dense reference simulator.
inline constexpr int kMaxEnumQubits = 20;

enum class Side : std::uint8_t { Zero = 0, One = 1, Root = 2 };

/// One of the 2n+1 graph nodes: the root (layer 0) or a 0/1 node of a
/// qubit layer in [1, n]. Layers are physical storage layers; logical
/// qubit numbering maps through the net's orientation.
struct NodeRef {
    int layer = 0;
    Side side = Side::Root;

    bool operator==(const NodeRef&) const = default;
};

enum class Orientation : std::uint8_t { Forward, Reversed };

}  // namespace qudot

#endif
