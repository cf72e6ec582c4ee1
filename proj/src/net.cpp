#include "qudot/net.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qudot/error.hpp"

namespace qudot {

namespace {

bool is_zero(const Amplitude& w) { return std::abs(w) <= kZeroEps; }

}  // namespace

QudotNet::QudotNet(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw InvalidSizeError("qubit count must be at least 1, got " +
                               std::to_string(num_qubits));
    }
    LabelEdges def;
    def.id = 0;
    def.transitions.assign(static_cast<std::size_t>(num_qubits), Transition{});
    for (auto& tr : def.transitions) tr[0] = Amplitude{1.0, 0.0};
    labels_.push_back(std::move(def));
    label_ids_.push_back(0);
}

std::size_t QudotNet::edge_count() const {
    // 2 root edges + 4 per inner transition = 2(2n+1) - 4 for the dense
    // default label; spawned labels count only nonzero weights.
    std::size_t count = 0;
    for (const auto& label : labels_) {
        if (label.id == 0) {
            count += 2 + 4 * static_cast<std::size_t>(num_qubits_ - 1);
            continue;
        }
        for (std::size_t t = 0; t < label.transitions.size(); ++t) {
            const auto& tr = label.transitions[t];
            const int slots = t == 0 ? 2 : 4;
            for (int s = 0; s < slots; ++s) {
                if (!is_zero(tr[static_cast<std::size_t>(s)])) ++count;
            }
        }
    }
    return count;
}

std::vector<LabelId> QudotNet::labels() const {
    std::vector<LabelId> ids;
    ids.reserve(labels_.size());
    for (const auto& label : labels_) ids.push_back(label.id);
    return ids;
}

LabelId QudotNet::spawn_label() {
    LabelEdges fresh;
    fresh.id = next_label_++;
    fresh.transitions.assign(static_cast<std::size_t>(num_qubits_), Transition{});
    labels_.push_back(std::move(fresh));
    return labels_.back().id;
}

const QudotNet::LabelEdges& QudotNet::find(LabelId label) const {
    for (const auto& entry : labels_) {
        if (entry.id == label) return entry;
    }
    throw InvalidInputError("unknown branch label " + std::to_string(label));
}

QudotNet::LabelEdges& QudotNet::find(LabelId label) {
    return const_cast<LabelEdges&>(std::as_const(*this).find(label));
}

QudotNet::Transition& QudotNet::transition(LabelId label, int t) {
    return find(label).transitions.at(static_cast<std::size_t>(t));
}

const QudotNet::Transition& QudotNet::transition(LabelId label, int t) const {
    return find(label).transitions.at(static_cast<std::size_t>(t));
}

double QudotNet::root_mass(LabelId label) const {
    const auto& tr = find(label).transitions[0];
    return std::norm(tr[0]) + std::norm(tr[1]);
}

Bitstring QudotNet::traverse(Rng& rng) const {
    // Pick the entry edge over all (label, first bit) pairs; root masses
    // summed across labels form a distribution.
    double total = 0.0;
    for (const auto& label : labels_) {
        total += std::norm(label.transitions[0][0]) + std::norm(label.transitions[0][1]);
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw CorruptNetError("root mass " + std::to_string(total) +
                              " deviates from 1 beyond tolerance");
    }

    const double draw = rng.uniform() * total;
    double acc = 0.0;
    const LabelEdges* chosen = nullptr;
    int bit = 0;
    for (const auto& label : labels_) {
        for (int side = 0; side < 2; ++side) {
            const double mass = std::norm(label.transitions[0][static_cast<std::size_t>(side)]);
            if (mass <= 0.0) continue;
            acc += mass;
            chosen = &label;
            bit = side;
            if (draw <= acc) goto walk;
        }
    }
    if (chosen == nullptr) {
        throw CorruptNetError("no root edge carries probability mass");
    }

walk:
    Bitstring bits(static_cast<std::size_t>(num_qubits_), '0');
    bits[0] = static_cast<char>('0' + bit);
    int prev = bit;
    for (int t = 1; t < num_qubits_; ++t) {
        const auto& tr = chosen->transitions[static_cast<std::size_t>(t)];
        const Amplitude w0 = tr[static_cast<std::size_t>(2 * prev)];
        const Amplitude w1 = tr[static_cast<std::size_t>(2 * prev + 1)];
        const bool z0 = is_zero(w0);
        const bool z1 = is_zero(w1);
        int cur;
        if (z0 && z1) {
            throw CorruptNetError("dead end at layer " + std::to_string(t + 1) +
                                  ": both child edges of the visited node are zero");
        } else if (z0) {
            cur = 1;
        } else if (z1) {
            cur = 0;
        } else {
            cur = rng.uniform() <= std::norm(w0) ? 0 : 1;
        }
        bits[static_cast<std::size_t>(t)] = static_cast<char>('0' + cur);
        prev = cur;
    }
    if (orientation_ == Orientation::Reversed) {
        std::reverse(bits.begin(), bits.end());
    }
    return bits;
}

Amplitude QudotNet::amplitude_of(const Bitstring& bits) const {
    if (static_cast<int>(bits.size()) != num_qubits_) {
        throw InvalidInputError("bitstring length " + std::to_string(bits.size()) +
                                " does not match qubit count " +
                                std::to_string(num_qubits_));
    }
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidInputError("bitstring may contain only '0' and '1'");
        }
    }
    Bitstring physical = bits;
    if (orientation_ == Orientation::Reversed) {
        std::reverse(physical.begin(), physical.end());
    }

    Amplitude total{0.0, 0.0};
    for (const auto& label : labels_) {
        Amplitude amp{1.0, 0.0};
        int prev = 0;
        for (int t = 0; t < num_qubits_; ++t) {
            const int cur = physical[static_cast<std::size_t>(t)] - '0';
            amp *= label.transitions[static_cast<std::size_t>(t)]
                                    [static_cast<std::size_t>(2 * prev + cur)];
            if (amp == Amplitude{0.0, 0.0}) break;
            prev = cur;
        }
        total += amp;
    }
    return total;
}

std::map<Bitstring, Amplitude> QudotNet::enumerate_paths(int max_qubits) const {
    if (num_qubits_ > max_qubits) {
        throw SizeLimitError("enumeration over " + std::to_string(num_qubits_) +
                             " qubits exceeds the cap of " + std::to_string(max_qubits));
    }

    std::map<Bitstring, Amplitude> result;
    Bitstring path(static_cast<std::size_t>(num_qubits_), '0');

    for (const auto& label : labels_) {
        // Iterative DFS; frame = (transition, from bit, next branch, amp).
        struct Frame {
            int t;
            int prev;
            int branch;
            Amplitude amp;
        };
        std::vector<Frame> stack;
        stack.push_back({0, 0, 0, Amplitude{1.0, 0.0}});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            if (frame.t == num_qubits_) {
                Bitstring key = path;
                if (orientation_ == Orientation::Reversed) {
                    std::reverse(key.begin(), key.end());
                }
                result[key] += frame.amp;
                stack.pop_back();
                continue;
            }
            if (frame.branch > 1) {
                stack.pop_back();
                continue;
            }
            const int cur = frame.branch++;
            const Amplitude w = label.transitions[static_cast<std::size_t>(frame.t)]
                                                 [static_cast<std::size_t>(2 * frame.prev + cur)];
            if (is_zero(w)) continue;
            path[static_cast<std::size_t>(frame.t)] = static_cast<char>('0' + cur);
            stack.push_back({frame.t + 1, cur, 0, frame.amp * w});
        }
    }

    for (auto it = result.begin(); it != result.end();) {
        if (is_zero(it->second)) {
            it = result.erase(it);
        } else {
            ++it;
        }
    }
    return result;
}

}  // namespace qudot
