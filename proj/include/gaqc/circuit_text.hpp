#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaqc/gates.hpp"

namespace gaqc {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
};

/// Total parse outcome: a circuit, or one or more diagnostics, never
/// both empty.
struct ParseResult {
  std::optional<Circuit> circuit;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return circuit.has_value() && diagnostics.empty(); }
};

/// Line-oriented circuit grammar:
///   qubits <n>              n in {1,2}, first significant line
///   X|Y|Z|H|S|T <q>
///   RZ <theta> <q>
///   ZPOW <alpha> <q>
///   CNOT|CPHASE|SWAP <q1> <q2>
/// '#' starts a comment; blank lines are skipped; CRLF accepted.
ParseResult parse_circuit(std::string_view text);

/// Canonical text form; parsing it back yields an identical circuit.
std::string print_circuit(const Circuit& c);

}  // namespace gaqc
