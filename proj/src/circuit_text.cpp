#include "gaqc/circuit_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gaqc {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)),
                        static_cast<int>(start) + 1});
  }
  return out;
}

bool parse_int(const std::string& s, int& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_real(const std::string& s, double& out) {
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && !s.empty();
}

struct GateSpec {
  GateTag tag;
  int params;
  int qubits;
};

const std::unordered_map<std::string, GateSpec>& gate_table() {
  static const std::unordered_map<std::string, GateSpec> table = {
      {"X", {GateTag::X, 0, 1}},          {"Y", {GateTag::Y, 0, 1}},
      {"Z", {GateTag::Z, 0, 1}},          {"H", {GateTag::H, 0, 1}},
      {"S", {GateTag::S, 0, 1}},          {"T", {GateTag::T, 0, 1}},
      {"RZ", {GateTag::Rotation, 1, 1}},  {"ZPOW", {GateTag::ZPower, 1, 1}},
      {"CNOT", {GateTag::Cnot, 0, 2}},    {"CPHASE", {GateTag::Cphase, 0, 2}},
      {"SWAP", {GateTag::Swap, 0, 2}},
  };
  return table;
}

}  // namespace

ParseResult parse_circuit(std::string_view text) {
  ParseResult result;
  Circuit circuit;
  bool have_header = false;
  int qubit_count = -1;  // unknown until the header parses

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;

    if (!have_header) {
      have_header = true;
      if (tok[0].text != "qubits") {
        result.diagnostics.push_back(
            {line_no, tok[0].column, "expected 'qubits <n>' as the first statement"});
        // fall through and treat the line as a gate so its own errors surface
      } else {
        int n = 0;
        if (tok.size() != 2 || !parse_int(tok[1].text, n) || (n != 1 && n != 2)) {
          result.diagnostics.push_back(
              {line_no, tok.size() > 1 ? tok[1].column : tok[0].column,
               "qubit count must be 1 or 2"});
        } else {
          qubit_count = n;
          circuit.qubits = n;
        }
        continue;
      }
    }

    const auto it = gate_table().find(tok[0].text);
    if (it == gate_table().end()) {
      result.diagnostics.push_back(
          {line_no, tok[0].column, "unknown gate mnemonic '" + tok[0].text + "'"});
      continue;
    }
    const GateSpec& spec = it->second;
    const int want = spec.params + spec.qubits;
    if (static_cast<int>(tok.size()) != 1 + want) {
      std::ostringstream msg;
      msg << tok[0].text << " takes " << want << " argument" << (want == 1 ? "" : "s");
      result.diagnostics.push_back({line_no, tok[0].column, msg.str()});
      continue;
    }

    Gate g{spec.tag};
    bool bad = false;
    int at = 1;
    if (spec.params == 1) {
      if (!parse_real(tok[at].text, g.param)) {
        result.diagnostics.push_back(
            {line_no, tok[at].column, "expected a decimal parameter, got '" + tok[at].text + "'"});
        bad = true;
      }
      ++at;
    }
    int indices[2] = {0, -1};
    for (int k = 0; k < spec.qubits; ++k, ++at) {
      int q = 0;
      if (!parse_int(tok[at].text, q) || q < 0) {
        result.diagnostics.push_back(
            {line_no, tok[at].column, "expected a qubit index, got '" + tok[at].text + "'"});
        bad = true;
        continue;
      }
      if (qubit_count > 0 && q >= qubit_count) {
        std::ostringstream msg;
        msg << "qubit index " << q << " out of range for qubits " << qubit_count;
        result.diagnostics.push_back({line_no, tok[at].column, msg.str()});
        bad = true;
      }
      indices[k] = q;
    }
    if (spec.qubits == 2 && !bad && indices[0] == indices[1]) {
      result.diagnostics.push_back(
          {line_no, tok[0].column, "distinct indices required"});
      bad = true;
    }
    if (bad) continue;
    g.q0 = indices[0];
    g.q1 = indices[1];
    circuit.ops.push_back(g);
  }

  if (!have_header)
    result.diagnostics.push_back({line_no, 1, "missing 'qubits <n>' header"});

  if (result.diagnostics.empty()) result.circuit = circuit;
  return result;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream os;
  os.precision(17);
  os << "qubits " << c.qubits << "\n";
  for (const Gate& g : c.ops) {
    switch (g.tag) {
      case GateTag::X: os << "X " << g.q0; break;
      case GateTag::Y: os << "Y " << g.q0; break;
      case GateTag::Z: os << "Z " << g.q0; break;
      case GateTag::H: os << "H " << g.q0; break;
      case GateTag::S: os << "S " << g.q0; break;
      case GateTag::T: os << "T " << g.q0; break;
      case GateTag::Rotation: os << "RZ " << g.param << " " << g.q0; break;
      case GateTag::ZPower: os << "ZPOW " << g.param << " " << g.q0; break;
      case GateTag::HPower:
        throw std::invalid_argument("print_circuit: HPower has no text mnemonic");
      case GateTag::Cnot: os << "CNOT " << g.q0 << " " << g.q1; break;
      case GateTag::Cphase: os << "CPHASE " << g.q0 << " " << g.q1; break;
      case GateTag::Swap: os << "SWAP " << g.q0 << " " << g.q1; break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace gaqc
