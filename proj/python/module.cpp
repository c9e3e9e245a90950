#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gaqc/circuit_text.hpp"
#include "gaqc/density.hpp"
#include "gaqc/gates.hpp"
#include "gaqc/msta.hpp"
#include "gaqc/oracle.hpp"
#include "gaqc/rotors.hpp"

namespace py = pybind11;
using namespace gaqc;

namespace {

std::vector<std::complex<double>> matrix_rows(const ComplexMatrix& m, int r) {
  std::vector<std::complex<double>> row(m.cols());
  for (int c = 0; c < m.cols(); ++c) row[c] = m(r, c);
  return row;
}

std::vector<std::vector<std::complex<double>>> matrix_list(const ComplexMatrix& m) {
  std::vector<std::vector<std::complex<double>>> out;
  for (int r = 0; r < m.rows(); ++r) out.push_back(matrix_rows(m, r));
  return out;
}

MstaState state_from_amplitudes(const std::vector<std::complex<double>>& amp) {
  int n = 0;
  while ((std::size_t{1} << (n + 1)) <= amp.size()) ++n;
  return spinor_to_mv(SpinorVec{n, amp});
}

}  // namespace

PYBIND11_MODULE(gaqc, m) {
  m.doc() = "geometric-algebra quantum toolkit";

  py::class_<Multivector>(m, "Multivector")
      .def("coeffs", &Multivector::coeffs)
      .def("__repr__", [](const Multivector& v) { return to_string(v); })
      .def("__add__", [](const Multivector& a, const Multivector& b) { return a + b; })
      .def("__sub__", [](const Multivector& a, const Multivector& b) { return a - b; })
      .def("__mul__", [](const Multivector& a, const Multivector& b) { return gp(a, b); })
      .def("__rmul__", [](const Multivector& a, double s) { return a * s; });

  m.def("sigma", py::overload_cast<int>(&sigma));
  m.def("i_sigma", py::overload_cast<int>(&i_sigma));
  m.def("gp", &gp);
  m.def("wedge", &wedge);
  m.def("grade_project", &grade_project);
  m.def("reversion", &reversion);
  m.def("clifford_conjugate", &clifford_conjugate);
  m.def("exp_bivector", &exp_bivector);

  py::class_<MstaState>(m, "MstaState")
      .def("qubits", &MstaState::qubits)
      .def("normalized", &MstaState::normalized)
      .def("mv", &MstaState::mv)
      .def("amplitudes", [](const MstaState& s) { return mv_to_spinor(s).amp; })
      .def("__repr__", [](const MstaState& s) { return to_string(s.mv()); });

  m.def("encode_basis", [](const std::string& bits) { return encode_basis(bits); });
  m.def("bell_state", &bell_state);
  m.def("state_from_amplitudes", &state_from_amplitudes);
  m.def("correlator", &correlator);
  m.def("complex_structure", &complex_structure);
  m.def("apply_imaginary", &apply_imaginary);

  py::enum_<GateTag>(m, "GateTag")
      .value("X", GateTag::X)
      .value("Y", GateTag::Y)
      .value("Z", GateTag::Z)
      .value("H", GateTag::H)
      .value("S", GateTag::S)
      .value("T", GateTag::T)
      .value("Rotation", GateTag::Rotation)
      .value("ZPower", GateTag::ZPower)
      .value("HPower", GateTag::HPower)
      .value("Cnot", GateTag::Cnot)
      .value("Cphase", GateTag::Cphase)
      .value("Swap", GateTag::Swap);

  py::class_<Gate>(m, "Gate")
      .def(py::init([](GateTag tag, double param, int q0, int q1) {
             return Gate{tag, param, q0, q1};
           }),
           py::arg("tag"), py::arg("param") = 0.0, py::arg("q0") = 0, py::arg("q1") = -1)
      .def_readwrite("tag", &Gate::tag)
      .def_readwrite("param", &Gate::param)
      .def_readwrite("q0", &Gate::q0)
      .def_readwrite("q1", &Gate::q1);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init([](int qubits, const std::vector<Gate>& ops) {
             return Circuit{qubits, ops};
           }),
           py::arg("qubits"), py::arg("ops") = std::vector<Gate>{})
      .def_readwrite("qubits", &Circuit::qubits)
      .def_readwrite("ops", &Circuit::ops);

  m.def("apply_pauli", &apply_pauli);
  m.def("apply_hadamard", &apply_hadamard);
  m.def("apply_rotation", &apply_rotation);
  m.def("apply_phase_s", &apply_phase_s);
  m.def("apply_t", &apply_t);
  m.def("apply_z_power", &apply_z_power);
  m.def("apply_h_power", &apply_h_power);
  m.def("apply_cnot", &apply_cnot);
  m.def("apply_cphase", &apply_cphase);
  m.def("apply_swap", &apply_swap);
  m.def("run_circuit", &run_circuit);

  m.def("parse_circuit", [](const std::string& text) {
    const ParseResult r = parse_circuit(text);
    if (!r.ok()) {
      std::ostringstream msg;
      for (const Diagnostic& d : r.diagnostics)
        msg << "line " << d.line << ": " << d.message << "\n";
      throw std::invalid_argument(msg.str());
    }
    return *r.circuit;
  });
  m.def("print_circuit", &print_circuit);

  m.def("run_statevector", [](const Circuit& c, const std::vector<std::complex<double>>& amp) {
    return run_statevector(c, StateVec{c.qubits, amp}).amp;
  });
  m.def("gate_matrix", [](const Gate& g) { return matrix_list(gate_matrix(g)); });
  m.def("deutsch_gate", [](double g) { return matrix_list(deutsch_gate(g)); });
  m.def("barenco_gate", [](double phi, double alpha, double theta) {
    return matrix_list(barenco_gate(phi, alpha, theta));
  });

  py::class_<Rotor>(m, "Rotor")
      .def(py::init([](const std::array<double, 4>& c) { return Rotor::from_components(c); }))
      .def("components", &Rotor::components)
      .def("__mul__", [](const Rotor& a, const Rotor& b) { return a * b; })
      .def("__repr__", [](const Rotor& r) { return to_string(r.mv()); });

  py::class_<AxisAngle>(m, "AxisAngle")
      .def_readonly("axis", &AxisAngle::axis)
      .def_readonly("angle", &AxisAngle::angle)
      .def_readonly("lambda_", &AxisAngle::lambda);

  py::class_<EulerAngles>(m, "EulerAngles")
      .def_readonly("alpha", &EulerAngles::alpha)
      .def_readonly("beta", &EulerAngles::beta)
      .def_readonly("gamma", &EulerAngles::gamma);

  py::class_<GateWord>(m, "GateWord")
      .def_readonly("letters", &GateWord::letters)
      .def_readonly("value", &GateWord::value)
      .def_readonly("error", &GateWord::error);

  m.def("rotor_from_axis_angle", &rotor_from_axis_angle);
  m.def("rotate_vector", &rotate_vector);
  m.def("universality_rotors", &universality_rotors);
  m.def("extract_axis_angle", &extract_axis_angle);
  m.def("euler_decompose", &euler_decompose);
  m.def("euler_compose", &euler_compose);
  m.def("rotor_distance", &rotor_distance);
  m.def("approximate_with_ht", &approximate_with_ht);

  py::enum_<DensityKind>(m, "DensityKind")
      .value("pure", DensityKind::pure)
      .value("mixed", DensityKind::mixed);

  py::class_<DensityGA>(m, "DensityGA")
      .def_readonly("n", &DensityGA::n)
      .def_readonly("mv", &DensityGA::mv)
      .def_readonly("kind", &DensityGA::kind);

  m.def("pure_density", &pure_density);
  m.def("mixed_density", &mixed_density);
  m.def("multiqubit_density", &multiqubit_density);
  m.def("expectation", &expectation);
  m.def("density_matrix", [](const DensityGA& d) { return matrix_list(density_matrix(d)); });
}
