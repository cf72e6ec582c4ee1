#ifndef QUDOT_PARSER_HPP
#define QUDOT_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qudot/circuit.hpp"

namespace qudot {

// Line-oriented circuit language. '#' starts a comment, blank lines are
// ignored, keywords are case-insensitive. The first effective line must
// be "qubits N"; after that:
//
//   x Q | h Q | rk Q K | m Q | swap
//   scu (x|h|rk K) C T      semi-quantum controlled gate
//   ccu (x|h|rk K) C T      coherent controlled gate
//   qft | iqft              whole-register transform macros

struct ParseError {
    int line = 0;  // 1-based
    std::string message;
};

struct ParseResult {
    std::optional<Circuit> circuit;  // set iff errors is empty
    std::vector<ParseError> errors;
};

/// Parses a whole program, reporting every error with its line number.
ParseResult parse_program(std::string_view text);

/// Canonical source text for a circuit; parsing it again yields a
/// structurally identical circuit.
std::string pretty_print(const Circuit& circuit);

}  // namespace qudot

#endif
