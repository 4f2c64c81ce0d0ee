#pragma once

// Numeric layer: half-step-offset uniform grids, the unitary discrete
// transform between momentum and position representations, the spectral Riesz
// derivative, and the numeric eigen-identity residual backing the symbolic
// results.

#include <utility>
#include <vector>

#include "fracosc/powerexp.hpp"

namespace fracosc {

inline constexpr int kDefaultGridPoints = 4096;
inline constexpr double kDefaultKMax = 20.0;

// Symmetric grid with points at (j - N/2 + 1/2) * spacing, so 0 is never
// sampled (the states have |k|^{negative} factors there).
struct UniformGrid {
  double half_width = kDefaultKMax;
  int n_points = kDefaultGridPoints;

  UniformGrid(double half_width, int n_points);

  double spacing() const { return 2.0 * half_width / n_points; }
  double point(int j) const { return (j - n_points / 2 + 0.5) * spacing(); }
  std::vector<double> points() const;
};

enum class Representation { momentum, position };

struct SampledState {
  UniformGrid grid;
  std::vector<Complex> values;
  double alpha = 2.0;
  int n = 0;
  Representation representation = Representation::momentum;
};

// Radix-2 in-place FFT; sign = +1 sums exp(+i 2pi jm/N), sign = -1 the
// conjugate. Unnormalized.
void fft_inplace(std::vector<Complex>& a, int sign);

SampledState sample(const PowerExpFunction& f, const UniformGrid& grid, int n = 0);

// psi(x) = (2pi)^{-1/2} Integral phi(k) e^{ikx} dk on the dual grid, with the
// phase factors the half-step offset requires; exactly unitary in the
// grid-weighted L2 norms.
SampledState to_position(const SampledState& s);
SampledState to_momentum(const SampledState& s);

// d^order/dx^order as the momentum multiplier -|k|^order (so order = 2 is the
// ordinary second derivative and -d^alpha/dx^alpha acts as +|k|^alpha).
SampledState riesz_apply(const SampledState& s, double order);

double l2_norm(const SampledState& s);
void l2_normalize(SampledState& s);

// True when |f| at the grid edge has decayed below tol relative to the peak
// sample, i.e. the truncation to [-k_max, k_max] is harmless.
bool truncation_ok(const PowerExpFunction& f, const UniformGrid& grid,
                   double tol = 1e-12);

// Max over admitted grid points of |(|k|^a phi - phi''_num) - E(k) phi|
// normalized by max|phi|, with phi''_num an 8th-order centered finite
// difference and E = local_energy_exact. Exclusions are k-intervals.
double residual_momentum(double alpha, int n, const UniformGrid& grid,
                         const std::vector<std::pair<double, double>>& exclusions);

// The windows residual_momentum needs: a band around k = 0 plus a band around
// every node of phi_n.
std::vector<std::pair<double, double>> default_exclusions(double alpha, int n,
                                                          double origin_radius = 0.1,
                                                          double node_radius = 0.05);

}  // namespace fracosc
