#include "fracosc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracosc/ladder.hpp"

namespace fracosc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// 9-point centered stencil for f'', accuracy O(h^8).
double fd8_second_derivative(const PowerExpFunction& f, double k, double h,
                             bool imag_part) {
  static constexpr double w[9] = {-1.0 / 560.0, 8.0 / 315.0, -1.0 / 5.0,
                                  8.0 / 5.0,    -205.0 / 72.0, 8.0 / 5.0,
                                  -1.0 / 5.0,   8.0 / 315.0,  -1.0 / 560.0};
  double acc = 0.0;
  for (int i = 0; i < 9; ++i) {
    Complex v = evaluate(f, k + (i - 4) * h);
    acc += w[i] * (imag_part ? v.imag() : v.real());
  }
  return acc / (h * h);
}

}  // namespace

UniformGrid::UniformGrid(double half_width_, int n_points_)
    : half_width(half_width_), n_points(n_points_) {
  if (half_width <= 0.0) throw std::domain_error("UniformGrid: half_width must be > 0");
  if (n_points < 16 || !is_power_of_two(n_points))
    throw std::domain_error("UniformGrid: n_points must be a power of two >= 16");
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> p(n_points);
  for (int j = 0; j < n_points; ++j) p[j] = point(j);
  return p;
}

void fft_inplace(std::vector<Complex>& a, int sign) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::domain_error("fft_inplace: size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const Complex wlen{std::cos(ang), std::sin(ang)};
    for (size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (size_t j = 0; j < len / 2; ++j) {
        Complex u = a[i + j];
        Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

SampledState sample(const PowerExpFunction& f, const UniformGrid& grid, int n) {
  SampledState s{grid, {}, f.alpha, n, Representation::momentum};
  s.values.reserve(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) s.values.push_back(evaluate(f, grid.point(j)));
  return s;
}

namespace {

// Shared core of the two transform directions. With c = N/2 - 1/2 the grid
// phases factor as e^{±i k_j x_m} = e^{±i 2pi (j-c)(m-c)/N}.
SampledState transform(const SampledState& s, int sign, Representation target) {
  const int n = s.grid.n_points;
  const double c = n / 2.0 - 0.5;
  const double d_in = s.grid.spacing();
  const double d_out = 2.0 * kPi / (n * d_in);

  std::vector<Complex> a(s.values);
  for (int j = 0; j < n; ++j) {
    const double ang = sign * 2.0 * kPi * c * j / n;
    a[j] *= Complex{std::cos(ang), -std::sin(ang)};
  }
  fft_inplace(a, sign);
  const double norm = d_in / std::sqrt(2.0 * kPi);
  const double ang_c = sign * 2.0 * kPi * c * c / n;
  const Complex phase_c{std::cos(ang_c), std::sin(ang_c)};
  for (int m = 0; m < n; ++m) {
    const double ang = sign * 2.0 * kPi * c * m / n;
    a[m] *= norm * phase_c * Complex{std::cos(ang), -std::sin(ang)};
  }
  return {UniformGrid(0.5 * n * d_out, n), std::move(a), s.alpha, s.n, target};
}

}  // namespace

SampledState to_position(const SampledState& s) {
  if (s.representation != Representation::momentum)
    throw std::domain_error("to_position: expected momentum representation");
  return transform(s, +1, Representation::position);
}

SampledState to_momentum(const SampledState& s) {
  if (s.representation != Representation::position)
    throw std::domain_error("to_momentum: expected position representation");
  return transform(s, -1, Representation::momentum);
}

SampledState riesz_apply(const SampledState& s, double order) {
  if (s.representation != Representation::position)
    throw std::domain_error("riesz_apply: expected position representation");
  if (!(order > 0.0 && order <= 2.0))
    throw std::domain_error("riesz_apply: order must lie in (0, 2]");
  SampledState mom = to_momentum(s);
  for (int j = 0; j < mom.grid.n_points; ++j)
    mom.values[j] *= -std::pow(std::abs(mom.grid.point(j)), order);
  return to_position(mom);
}

double l2_norm(const SampledState& s) {
  double acc = 0.0;
  for (const auto& v : s.values) acc += std::norm(v);
  return std::sqrt(acc * s.grid.spacing());
}

void l2_normalize(SampledState& s) {
  const double nrm = l2_norm(s);
  if (nrm == 0.0) throw std::domain_error("l2_normalize: zero state");
  for (auto& v : s.values) v /= nrm;
}

bool truncation_ok(const PowerExpFunction& f, const UniformGrid& grid, double tol) {
  double peak = 0.0;
  for (int j = 0; j < grid.n_points; j += std::max(1, grid.n_points / 256))
    peak = std::max(peak, std::abs(evaluate(f, grid.point(j))));
  if (peak == 0.0) return true;
  const double edge = std::abs(evaluate(f, grid.point(grid.n_points - 1)));
  return edge <= tol * peak;
}

std::vector<std::pair<double, double>> default_exclusions(double alpha, int n,
                                                          double origin_radius,
                                                          double node_radius) {
  std::vector<std::pair<double, double>> ex{{-origin_radius, origin_radius}};
  for (double node : node_locations(alpha, n)) {
    ex.push_back({node - node_radius, node + node_radius});
    ex.push_back({-node - node_radius, -node + node_radius});
  }
  std::sort(ex.begin(), ex.end());
  return ex;
}

double residual_momentum(double alpha, int n, const UniformGrid& grid,
                         const std::vector<std::pair<double, double>>& exclusions) {
  const PowerExpFunction phi = excited_state(alpha, {n});
  const RationalPowerSum energy = local_energy_exact(alpha, n);

  auto admitted = [&](double k) {
    for (const auto& [lo, hi] : exclusions)
      if (k > lo && k < hi) return false;
    return true;
  };

  double peak = 0.0;
  std::vector<int> idx;
  for (int j = 0; j < grid.n_points; ++j) {
    const double k = grid.point(j);
    if (!admitted(k)) continue;
    idx.push_back(j);
    peak = std::max(peak, std::abs(evaluate(phi, k)));
  }
  if (idx.empty())
    throw std::runtime_error("residual_momentum: empty admissible set");

  double worst = 0.0;
  for (int j : idx) {
    const double k = grid.point(j);
    // Step scaled to |k|: the high k-derivatives of |k|^p terms blow up like
    // |k|^{p-m}, so a fixed step loses accuracy near the origin.
    const double h = std::max(1e-4, 1e-3 * std::abs(k));
    const Complex phik = evaluate(phi, k);
    const Complex d2{fd8_second_derivative(phi, k, h, false),
                     fd8_second_derivative(phi, k, h, true)};
    const Complex lhs = std::pow(std::abs(k), alpha) * phik - d2;
    const double res = std::abs(lhs - energy.evaluate(k) * phik);
    worst = std::max(worst, res);
  }
  return worst / peak;
}

}  // namespace fracosc
