#include "sqc/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "sqc/error.hpp"

namespace sqc {

namespace {
using K = PhysicalConstants;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::NonPositiveInput, std::string(what) + " must be positive");
}
}  // namespace

double charging_energy(double C_q) {
  if (!(C_q > 0.0) || !std::isfinite(C_q))
    fail(ErrorCode::NonPositiveCapacitance, "self-capacitance must be positive");
  return K::e * K::e / (2.0 * C_q * K::h);
}

double capacitance_from_charging_energy(double E_C) {
  require_positive(E_C, "E_C");
  return K::e * K::e / (2.0 * E_C * K::h);
}

double josephson_energy(double f_q, double E_C, EnergyMode mode) {
  require_positive(f_q, "f_q");
  require_positive(E_C, "E_C");
  if (mode == EnergyMode::Standard) return (f_q + E_C) * (f_q + E_C) / (8.0 * E_C);
  // Printed form squares the whole fraction and works in GHz numerics.
  const double f = f_q * 1e-9, ec = E_C * 1e-9;
  const double q = (f + ec) / (8.0 * ec);
  return q * q * 1e9;
}

double critical_current(double E_J, EnergyMode mode) {
  require_positive(E_J, "E_J");
  const double literal = E_J * K::h / K::phi0();
  return mode == EnergyMode::Standard ? 2.0 * std::numbers::pi * literal : literal;
}

double normal_resistance(double I_c, const PhysicalConstants& k) {
  require_positive(I_c, "I_c");
  require_positive(k.gap_voltage, "gap voltage");
  require_positive(k.temperature, "temperature");
  const double delta = K::e * k.gap_voltage;
  return std::numbers::pi * k.gap_voltage / (2.0 * I_c) * std::tanh(delta / (2.0 * K::kB * k.temperature));
}

double josephson_inductance(double I_c, double delta) {
  require_positive(I_c, "I_c");
  if (!(std::abs(delta) < std::numbers::pi / 2.0))
    fail(ErrorCode::PhaseOutOfRange, "junction phase must lie in (-pi/2, pi/2)");
  return K::hbar() / (2.0 * K::e * I_c * std::cos(delta));
}

double qubit_frequency(double L_j, double C_q, double E_C) {
  require_positive(L_j, "L_j");
  require_positive(C_q, "C_q");
  require_positive(E_C, "E_C");
  const double f = 1.0 / (2.0 * std::numbers::pi * std::sqrt(L_j * C_q)) - E_C;
  if (f < 0.0) fail(ErrorCode::NegativeFrequency, "plasma frequency below charging energy");
  return f;
}

double self_capacitance_from_matrix(const CapacitanceMatrix& m, const std::string& qubit_label,
                                    const std::string& ground_label) {
  auto index = [&](const std::string& l) {
    const auto it = std::find(m.labels.begin(), m.labels.end(), l);
    if (it == m.labels.end()) fail(ErrorCode::UnknownLabel, "no conductor labelled '" + l + "'");
    return static_cast<std::size_t>(it - m.labels.begin());
  };
  const auto i = index(qubit_label), j = index(ground_label);
  if (i == j) fail(ErrorCode::UnknownLabel, "qubit and ground labels must differ");
  if (m.values.size() != m.labels.size() || m.values[i].size() != m.labels.size())
    fail(ErrorCode::InvalidArguments, "capacitance matrix is not square with its labels");
  const double v = m.values[i][j];
  if (!(v < 0.0)) fail(ErrorCode::NonNegativeOffDiagonal, "off-diagonal Maxwell entry must be negative");
  return -v;
}

EquivalentCircuit inverse_solve(const std::map<std::string, QubitTarget>& qubits,
                                const std::vector<CouplingTarget>& couplings, const InverseOptions& opt) {
  EquivalentCircuit out;
  for (const auto& [id, t] : qubits) {
    require_positive(t.f_q, "target f_q");
    QubitElectricalParams p;
    p.qubit_id = id;
    p.f_q = t.f_q;
    p.delta = t.delta;
    if (t.E_C) {
      p.E_C = *t.E_C;
      p.C_q = capacitance_from_charging_energy(p.E_C);
    } else if (t.C_q) {
      p.C_q = *t.C_q;
      p.E_C = charging_energy(p.C_q);
    } else {
      fail(ErrorCode::InvalidArguments, "qubit " + id + " needs an E_C or C_q seed");
    }
    p.E_J = josephson_energy(p.f_q, p.E_C, opt.ej_mode);
    p.I_c = critical_current(p.E_J, opt.ic_mode);
    p.R_n = normal_resistance(p.I_c, opt.constants);
    p.L_j = josephson_inductance(p.I_c, p.delta);
    out.qubits[id] = p;
  }

  for (const auto& c : couplings) {
    const auto a = out.qubits.find(c.edge.a), b = out.qubits.find(c.edge.b);
    if (a == out.qubits.end() || b == out.qubits.end())
      fail(ErrorCode::InvalidArguments, "coupling " + c.edge.a + "-" + c.edge.b + " references an unknown qubit");
    require_positive(c.g_target, "coupling strength");
    if (opt.check_distinct && a->second.f_q == b->second.f_q)
      fail(ErrorCode::InconsistentTargets, "adjacent qubits " + c.edge.a + " and " + c.edge.b + " share a frequency");
    const double ca = a->second.C_q * c.g_target / a->second.f_q;
    const double cb = b->second.C_q * c.g_target / b->second.f_q;
    out.couplings.push_back({c.edge, 0.5 * (ca + cb), c.g_target});
  }
  return out;
}

}  // namespace sqc
