#ifndef QUDOT_REPORT_HPP
#define QUDOT_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "qudot/circuit.hpp"
#include "qudot/types.hpp"

namespace qudot {

/// Machine-readable result of a CLI command. Serializes with sorted keys;
/// the timing block is the only nondeterministic field and is omitted
/// unless explicitly requested, so fixed-seed runs are byte-identical.
struct RunReport {
    std::uint64_t seed = 0;
    std::string rng_algorithm{kRngAlgorithm};
    std::uint64_t shots = 0;
    std::map<Bitstring, std::uint64_t> counts;
    std::map<std::string, double> metrics;
    std::map<std::string, std::string> notes;
    std::map<std::string, double> timings_ms;
};

std::string report_to_json(const RunReport& report, bool include_timings = false);

/// counts as CSV rows: header "outcome,count,probability".
std::string report_counts_to_csv(const RunReport& report);

}  // namespace qudot

#endif
