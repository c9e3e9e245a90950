#pragma once

#include <vector>

#include "gaqc/msta.hpp"

namespace gaqc {

enum class GateTag {
  X,        // bit flip, Sigma1
  Y,        // combined bit and phase flip, Sigma2
  Z,        // phase flip, Sigma3
  H,
  S,
  T,
  Rotation,  // diag(1, e^{i theta}), param = theta
  ZPower,    // diag(1, e^{i pi alpha}), param = alpha
  HPower,    // principal fractional Hadamard, param = beta
  Cnot,
  Cphase,
  Swap,
};

struct Gate {
  GateTag tag;
  double param = 0.0;
  int q0 = 0;
  int q1 = -1;  // second qubit for Cnot/Cphase/Swap

  bool two_qubit() const {
    return tag == GateTag::Cnot || tag == GateTag::Cphase || tag == GateTag::Swap;
  }
  bool has_param() const {
    return tag == GateTag::Rotation || tag == GateTag::ZPower || tag == GateTag::HPower;
  }
  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int qubits = 1;
  std::vector<Gate> ops;
  bool operator==(const Circuit&) const = default;
};

// Single-qubit actions. For one qubit these are the explicit sandwich forms
// (sigma_k psi sigma3 and friends); for two qubits the correlator forms
// -i sigma_k^a psi J etc. are used.
MstaState apply_pauli(int axis, int qubit, const MstaState& m);
MstaState apply_hadamard(int qubit, const MstaState& m);
MstaState apply_rotation(double theta, int qubit, const MstaState& m);
MstaState apply_phase_s(int qubit, const MstaState& m);
MstaState apply_t(int qubit, const MstaState& m);
MstaState apply_z_power(double alpha, int qubit, const MstaState& m);
MstaState apply_h_power(double beta, int qubit, const MstaState& m);

// Two-qubit gates on 2-qubit states; indices must be distinct.
MstaState apply_cnot(int control, int target, const MstaState& m);
MstaState apply_cphase(int q1, int q2, const MstaState& m);
MstaState apply_swap(int q1, int q2, const MstaState& m);

MstaState apply_gate(const Gate& g, const MstaState& m);
MstaState run_circuit(const Circuit& c, const MstaState& input);

}  // namespace gaqc
