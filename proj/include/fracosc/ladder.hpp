#pragma once

// State generation phi_n = B^n phi_0, exact k-dependent local energies
// E_n(k) = (H phi_n)(k) / phi_n(k), closed-form energies for n <= 2,
// and node location for energy-curve exclusion windows.

#include <utility>
#include <vector>

#include "fracosc/powerexp.hpp"

namespace fracosc {

inline constexpr int kDefaultMaxExcitation = 12;

struct StateIndex {
  int n = 0;
};

// Ratio of two power sums; the exact form of E_n(k, alpha). The envelope
// cancels in H phi / phi. Undefined at denominator zeros (state nodes) and at
// k = 0 when negative powers are present.
struct RationalPowerSum {
  PowerSum numerator;
  PowerSum denominator;
  double alpha = 2.0;

  double evaluate(double k) const;
};

struct EnergyCurve {
  double alpha = 2.0;
  int n = 0;
  std::vector<std::pair<double, double>> samples;           // (k, E)
  std::vector<std::pair<double, double>> excluded_windows;  // k-intervals
};

void check_alpha_range(double alpha);

PowerExpFunction ground_state(double alpha);
PowerExpFunction excited_state(double alpha, StateIndex n,
                               int max_n = kDefaultMaxExcitation);

RationalPowerSum local_energy_exact(double alpha, int n);

// Closed forms for n in {0, 1, 2}. For n = 2 the canonical (oracle-backed)
// form is evaluated by default; paper_verbatim selects the published formula,
// which agrees with the canonical one only at |k| = 1 and at alpha = 2.
double closed_form_energy(double alpha, int n, double k,
                          bool paper_verbatim = false);

// Positive real roots of the power-sum part of phi_n on (0, k_max], located
// by sign-change scan (step 1e-3) plus bisection (tolerance 1e-10).
std::vector<double> node_locations(double alpha, int n, double k_max = 20.0);

// Samples local_energy_exact on k_grid, dropping points within
// exclusion_radius of k = 0 and of every node.
EnergyCurve energy_curve(double alpha, int n, const std::vector<double>& k_grid,
                         double exclusion_radius);

}  // namespace fracosc
