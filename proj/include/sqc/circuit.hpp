#pragma once

#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sqc/topology.hpp"

namespace sqc {

/// CODATA-2018 exact constants; hbar and phi0 are derived on demand.
struct PhysicalConstants {
  static constexpr double e = 1.602176634e-19;   // C
  static constexpr double h = 6.62607015e-34;    // J s
  static constexpr double kB = 1.380649e-23;     // J/K
  double gap_voltage = 0.182e-3;                 // V (Delta / e)
  double temperature = 0.020;                    // K

  static constexpr double hbar() { return h / (2.0 * std::numbers::pi); }
  static constexpr double phi0() { return h / (2.0 * e); }
};

enum class EnergyMode { Standard, Literal };

/// Energies in hertz (E/h), capacitance in farads, current in amperes.
struct QubitElectricalParams {
  std::string qubit_id;
  double C_q = 0.0;
  double E_C = 0.0;
  double E_J = 0.0;
  double I_c = 0.0;
  double R_n = 0.0;
  double L_j = 0.0;
  double f_q = 0.0;
  double delta = 0.0;

  friend bool operator==(const QubitElectricalParams&, const QubitElectricalParams&) = default;
};

struct CouplingParams {
  Edge edge;
  double C_c = 0.0;
  double g_target = 0.0;

  friend bool operator==(const CouplingParams&, const CouplingParams&) = default;
};

struct CapacitanceMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
};

struct EquivalentCircuit {
  std::map<std::string, QubitElectricalParams> qubits;
  std::vector<CouplingParams> couplings;

  friend bool operator==(const EquivalentCircuit&, const EquivalentCircuit&) = default;
};

double charging_energy(double C_q);
/// Inverse of charging_energy.
double capacitance_from_charging_energy(double E_C);
double josephson_energy(double f_q, double E_C, EnergyMode mode = EnergyMode::Standard);
double critical_current(double E_J, EnergyMode mode = EnergyMode::Literal);
double normal_resistance(double I_c, const PhysicalConstants& k = {});
double josephson_inductance(double I_c, double delta = 0.0);
double qubit_frequency(double L_j, double C_q, double E_C);
double self_capacitance_from_matrix(const CapacitanceMatrix& m, const std::string& qubit_label,
                                    const std::string& ground_label);

struct QubitTarget {
  double f_q = 0.0;
  std::optional<double> E_C;  // one of E_C / C_q seeds is required
  std::optional<double> C_q;
  double delta = 0.0;
};

struct CouplingTarget {
  Edge edge;
  double g_target = 0.0;
};

struct InverseOptions {
  EnergyMode ej_mode = EnergyMode::Standard;
  EnergyMode ic_mode = EnergyMode::Standard;
  bool check_distinct = false;
  PhysicalConstants constants{};
};

/// Per-qubit parameter chain from target frequency and an E_C/C_q seed,
/// plus linearized coupling capacitances C_c = C_q * g / f_q (averaged over
/// the two endpoints).
EquivalentCircuit inverse_solve(const std::map<std::string, QubitTarget>& qubits,
                                const std::vector<CouplingTarget>& couplings, const InverseOptions& opt = {});

}  // namespace sqc
