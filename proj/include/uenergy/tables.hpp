#pragma once

#include <string>
#include <vector>

#include "uenergy/energy.hpp"

namespace uenergy {

// Reference values as published, 5 decimals.
struct GoldenDiff {
  int n, t;
  double value; // E(P_n^t) - E(P_n^6)
};

struct GoldenEnergies {
  int n, t;
  double lollipop; // E(P_n^t)
  double cycle;    // E(C_n)
};

const std::vector<GoldenDiff>& golden_table1();
const std::vector<GoldenDiff>& golden_table2();
const std::vector<GoldenEnergies>& golden_table3();

inline constexpr double golden_tolerance = 5e-5;

enum class DiffMethod { exact, coulson };

struct TableRow {
  std::string label; // "E(P_17^3)-E(P_17^6)", "E(C_7)", ...
  int n = 0, t = 0;
  double computed = 0;
  double reference = 0;
  double deviation() const { return computed - reference; }
  bool ok() const;
};

// Recomputes every cell of table 1, 2 or 3. Table 3 yields two rows per
// entry (lollipop, then cycle). invalid_parameters for other ids.
std::vector<TableRow> compute_table(int id, double tol = default_energy_tol, DiffMethod method = DiffMethod::exact);

// E(P_n^t) - E(P_n^6) by the chosen route
double lollipop_gap(int n, int t, double tol = default_energy_tol, DiffMethod method = DiffMethod::exact);

} // namespace uenergy
