// gaqc: simulate circuit files on the GA and matrix backends, decompose
// rotors against the Boykin axes, and report the universality constants.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaqc/circuit_text.hpp"
#include "gaqc/density.hpp"
#include "gaqc/gates.hpp"
#include "gaqc/msta.hpp"
#include "gaqc/oracle.hpp"
#include "gaqc/rotors.hpp"

using namespace gaqc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

const double kPi = std::acos(-1.0);

// Even blades of a Pauli factor written in the {1, is1, is2, is3} basis;
// the stored e1e3 blade is -is2, so that label carries a sign flip.
std::pair<std::string, double> even_blade_label(const Algebra& alg, unsigned mask) {
  std::string name;
  double sign = 1.0;
  const int d = alg.factor_bits();
  for (int f = 0; f < alg.factors; ++f) {
    const unsigned sub = (mask >> (d * f)) & ((1u << d) - 1);
    std::string part;
    switch (sub) {
      case 0b000: continue;
      case 0b011: part = "is3"; break;
      case 0b101: part = "is2"; sign = -sign; break;
      case 0b110: part = "is1"; break;
      default: part = blade_name(pauli_algebra(), sub); break;
    }
    if (alg.factors > 1) part += "[" + std::to_string(f + 1) + "]";
    name += part;
  }
  if (name.empty()) name = "1";
  return {name, sign};
}

json state_coefficients_json(const Multivector& m) {
  json out = json::object();
  for (unsigned mask = 0; mask < m.size(); ++mask) {
    if (m[mask] == 0.0) continue;
    const auto [name, sign] = even_blade_label(m.algebra(), mask);
    out[name] = sign * m[mask];
  }
  return out;
}

void print_ga_state(const Multivector& m) {
  for (unsigned mask = 0; mask < m.size(); ++mask) {
    if (std::abs(m[mask]) < 1e-14) continue;
    const auto [name, sign] = even_blade_label(m.algebra(), mask);
    std::printf("  % .12f  %s\n", sign * m[mask], name.c_str());
  }
}

void print_amplitudes(int n, const std::vector<cplx>& amp) {
  for (std::size_t i = 0; i < amp.size(); ++i) {
    std::string label;
    for (int b = n - 1; b >= 0; --b) label += (i >> b & 1) ? '1' : '0';
    std::printf("  |%s>  % .12f %+.12fi\n", label.c_str(), amp[i].real(), amp[i].imag());
  }
}

std::string default_input(int n) { return std::string(static_cast<std::size_t>(n), '0'); }

int cmd_simulate(const std::string& path, const std::string& backend, std::string input,
                 bool as_json) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << file.rdbuf();
  const ParseResult parsed = parse_circuit(buf.str());
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.diagnostics)
      std::cerr << path << ":" << d.line << ":" << d.column << ": " << d.message << "\n";
    return kExitUsage;
  }
  const Circuit& circuit = *parsed.circuit;
  if (input.empty()) input = default_input(circuit.qubits);
  if (static_cast<int>(input.size()) != circuit.qubits) {
    std::cerr << "error: input '" << input << "' does not match qubits "
              << circuit.qubits << "\n";
    return kExitUsage;
  }

  std::optional<MstaState> ga;
  std::optional<StateVec> mat;
  if (backend != "matrix") ga = run_circuit(circuit, encode_basis(input));
  if (backend != "ga") mat = run_statevector(circuit, basis_statevec(input));

  double discrepancy = 0.0;
  std::vector<cplx> ga_amp;
  if (ga) ga_amp = mv_to_spinor(*ga).amp;
  if (ga && mat)
    for (std::size_t i = 0; i < ga_amp.size(); ++i)
      discrepancy = std::max(discrepancy, std::abs(ga_amp[i] - mat->amp[i]));

  if (as_json) {
    json out;
    out["backend"] = backend;
    if (ga) {
      out["state"]["ga_coefficients"] = state_coefficients_json(ga->mv());
      json amps = json::array();
      for (const auto& z : ga_amp) amps.push_back({z.real(), z.imag()});
      out["state"]["amplitudes"] = amps;
    }
    if (mat) {
      json amps = json::array();
      for (const auto& z : mat->amp) amps.push_back({z.real(), z.imag()});
      out["state"]["matrix_amplitudes"] = amps;
    }
    if (ga && mat) out["discrepancy"] = discrepancy;
    std::cout << out.dump(2) << "\n";
  } else {
    if (ga) {
      std::printf("GA state (input |%s>):\n", input.c_str());
      print_ga_state(ga->mv());
      std::printf("GA spinor image:\n");
      print_amplitudes(circuit.qubits, ga_amp);
    }
    if (mat) {
      std::printf("matrix statevector:\n");
      print_amplitudes(circuit.qubits, mat->amp);
    }
    if (ga && mat) std::printf("max discrepancy: %.3e\n", discrepancy);
  }
  if (ga && mat && discrepancy > 1e-8) return kExitVerification;
  return kExitOk;
}

std::optional<std::vector<double>> parse_reals(const std::string& spec, std::size_t count) {
  std::vector<double> vals;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || item.empty()) return std::nullopt;
    vals.push_back(v);
  }
  if (vals.size() != count) return std::nullopt;
  return vals;
}

Rotor seeded_rotor(unsigned seed) {
  std::mt19937 rng(seed);
  auto uniform = [&rng] { return (rng() >> 5) * (1.0 / (1u << 27)) * 2.0 - 1.0; };
  std::array<double, 4> c{};
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& v : c) {
      v = uniform();
      norm2 += v * v;
    }
  } while (norm2 < 1e-4);
  for (auto& v : c) v /= std::sqrt(norm2);
  return Rotor::from_components(c);
}

int cmd_decompose(const std::string& target_spec, const std::string& su2_spec, int max_len,
                  unsigned seed, bool as_json) {
  if (max_len < 0 || max_len > 20) {
    std::cerr << "error: --max-len must be in 0..20\n";
    return kExitUsage;
  }
  Rotor target;
  if (!target_spec.empty()) {
    const auto vals = parse_reals(target_spec, 4);
    if (!vals) {
      std::cerr << "error: --target wants ax,ay,az,theta\n";
      return kExitUsage;
    }
    Multivector axis = sigma(1) * (*vals)[0] + sigma(2) * (*vals)[1] + sigma(3) * (*vals)[2];
    const double norm = coeff_norm(axis);
    if (norm < 1e-12) {
      std::cerr << "error: --target axis is zero\n";
      return kExitUsage;
    }
    if (std::abs(norm - 1.0) > 1e-6)
      std::cerr << "warning: axis renormalized (|n| = " << norm << ")\n";
    axis *= 1.0 / norm;
    const double theta = (*vals)[3];
    // rotor e^{i n theta} = cos(theta) + sin(theta) i n
    Multivector mv = gp(pseudoscalar(pauli_algebra()), axis) * std::sin(theta);
    mv[0] += std::cos(theta);
    target = Rotor(mv);
  } else if (!su2_spec.empty()) {
    const auto vals = parse_reals(su2_spec, 8);
    if (!vals) {
      std::cerr << "error: --su2 wants 8 comma-separated reals (row-major re,im)\n";
      return kExitUsage;
    }
    ComplexMatrix u(2, 2);
    u(0, 0) = {(*vals)[0], (*vals)[1]};
    u(0, 1) = {(*vals)[2], (*vals)[3]};
    u(1, 0) = {(*vals)[4], (*vals)[5]};
    u(1, 1) = {(*vals)[6], (*vals)[7]};
    try {
      target = rotor_from_su2(u);
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << "\n";
      return kExitUsage;
    }
  } else {
    target = seeded_rotor(seed);
  }

  const auto [r1, r2] = universality_rotors();
  const Multivector n1 = extract_axis_angle(r1).axis;
  const Multivector n2 = extract_axis_angle(r2).axis;
  const EulerAngles angles = euler_decompose(target, n1, n2);
  const double residual = rotor_distance(euler_compose(n1, n2, angles), target);
  const GateWord word = approximate_with_ht(target, max_len);
  const auto tc = target.components();

  if (as_json) {
    json out;
    out["target"] = {tc[0], tc[1], tc[2], tc[3]};
    out["angles"] = {{"alpha", angles.alpha}, {"beta", angles.beta}, {"gamma", angles.gamma}};
    out["residual"] = residual;
    out["word"] = word.letters;
    out["error"] = word.error;
    out["max_len"] = max_len;
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("target rotor: % .12f % .12f % .12f % .12f\n", tc[0], tc[1], tc[2], tc[3]);
    std::printf("euler angles about the Boykin axes:\n");
    std::printf("  alpha % .12f\n  beta  % .12f\n  gamma % .12f\n", angles.alpha, angles.beta,
                angles.gamma);
    std::printf("reconstruction residual: %.3e\n", residual);
    std::printf("best <H,T> word (max length %d): %s\n", max_len,
                word.letters.empty() ? "(empty)" : word.letters.c_str());
    std::printf("approximation error: %.6e\n", word.error);
  }
  return residual < 1e-10 ? kExitOk : kExitVerification;
}

int cmd_universality(bool as_json) {
  const auto [r1, r2] = universality_rotors();
  const auto c1 = r1.components();
  const auto c2 = r2.components();
  const AxisAngle a1 = extract_axis_angle(r1);
  const AxisAngle a2 = extract_axis_angle(r2);
  const double s = 1.0 / std::sqrt(2.0);

  const double expect1[4] = {0.5 * (1 + s), -1.0 / (2 * std::sqrt(2.0)), 0.5 * (1 - s),
                             1.0 / (2 * std::sqrt(2.0))};
  const double expect2[4] = {0.5 * (1 + s), -0.5 * (0.5 - s), 0.5, 0.5 * (0.5 - s)};
  double coeff_err = 0.0;
  for (int i = 0; i < 4; ++i) {
    coeff_err = std::max(coeff_err, std::abs(c1[i] - expect1[i]));
    coeff_err = std::max(coeff_err, std::abs(c2[i] - expect2[i]));
  }
  const double dot = scalar_part(gp(a1.axis, a2.axis));
  const bool coeff_ok = coeff_err < 1e-12;
  const bool cos_ok = std::abs(std::cos(a1.lambda * kPi) - 0.5 * (1 + s)) < 1e-12;
  const bool lambda_ok = std::abs(a1.lambda - a2.lambda) < 1e-12;
  const bool ortho_ok = std::abs(dot) < 1e-12;

  const double sn = std::sin(a1.lambda * kPi);
  Multivector n1_ref = sigma(1) * (-1.0 / (2 * std::sqrt(2.0))) +
                       sigma(2) * (0.5 * (1 - s)) + sigma(3) * (1.0 / (2 * std::sqrt(2.0)));
  Multivector n2_ref =
      sigma(1) * (-0.5 * (0.5 - s)) + sigma(2) * 0.5 + sigma(3) * (0.5 * (0.5 - s));
  n1_ref *= 1.0 / sn;
  n2_ref *= 1.0 / sn;
  const bool axes_ok =
      max_abs_diff(a1.axis, n1_ref) < 1e-10 && max_abs_diff(a2.axis, n2_ref) < 1e-10;
  const bool all_ok = coeff_ok && cos_ok && lambda_ok && ortho_ok && axes_ok;

  auto axis_of = [](const Multivector& n) {
    return std::array<double, 3>{n[0b001], n[0b010], n[0b100]};
  };
  const auto n1 = axis_of(a1.axis);
  const auto n2 = axis_of(a2.axis);

  if (as_json) {
    json out;
    out["r1"] = {c1[0], c1[1], c1[2], c1[3]};
    out["r2"] = {c2[0], c2[1], c2[2], c2[3]};
    out["lambda1"] = a1.lambda;
    out["lambda2"] = a2.lambda;
    out["n1"] = {n1[0], n1[1], n1[2]};
    out["n2"] = {n2[0], n2[1], n2[2]};
    out["n1_dot_n2"] = dot;
    out["checks"] = {{"coefficients", coeff_ok},
                     {"cos_lambda_pi", cos_ok},
                     {"lambda_equal", lambda_ok},
                     {"axes", axes_ok},
                     {"axes_orthogonal", ortho_ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("R1 = % .12f % .12f is1 % .12f is2 % .12f is3\n", c1[0], c1[1], c1[2], c1[3]);
    std::printf("R2 = % .12f % .12f is1 % .12f is2 % .12f is3\n", c2[0], c2[1], c2[2], c2[3]);
    std::printf("lambda1 = %.12f\nlambda2 = %.12f\n", a1.lambda, a2.lambda);
    std::printf("n1 = (% .12f, % .12f, % .12f)\n", n1[0], n1[1], n1[2]);
    std::printf("n2 = (% .12f, % .12f, % .12f)\n", n2[0], n2[1], n2[2]);
    std::printf("n1 . n2 = %.3e\n", dot);
    std::printf("coefficients %s, cos(lambda pi) %s, lambda1 = lambda2 %s, "
                "axes %s, orthogonality %s\n",
                coeff_ok ? "pass" : "fail", cos_ok ? "pass" : "fail",
                lambda_ok ? "pass" : "fail", axes_ok ? "pass" : "fail",
                ortho_ok ? "pass" : "fail");
  }
  return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric-algebra quantum toolkit"};
  app.require_subcommand(1);

  std::string file, backend = "both", input, target_spec, su2_spec;
  int max_len = 12;
  unsigned seed = 42;
  bool as_json = false;

  CLI::App* sim = app.add_subcommand("simulate", "run a circuit file on the GA and/or matrix backend");
  sim->add_option("file", file, "circuit file")->required();
  sim->add_option("--backend", backend, "ga, matrix or both")
      ->check(CLI::IsMember({"ga", "matrix", "both"}));
  sim->add_option("--input", input, "computational basis input, e.g. 01");
  sim->add_flag("--json", as_json, "structured output");

  CLI::App* dec = app.add_subcommand("decompose", "euler-decompose a rotor and search <H,T> words");
  dec->add_option("--target", target_spec, "ax,ay,az,theta for the rotor e^{i n theta}");
  dec->add_option("--su2", su2_spec, "8 reals, row-major re,im entries of an SU(2) matrix");
  dec->add_option("--max-len", max_len, "word-length bound for the search (<= 20)");
  dec->add_option("--seed", seed, "seed for the random demo target");
  dec->add_flag("--json", as_json, "structured output");

  CLI::App* uni = app.add_subcommand("universality", "report the universality rotors and axes");
  uni->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // help/version exit cleanly
  }

  try {
    if (sim->parsed()) return cmd_simulate(file, backend, input, as_json);
    if (dec->parsed()) return cmd_decompose(target_spec, su2_spec, max_len, seed, as_json);
    if (uni->parsed()) return cmd_universality(as_json);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
