#include "fracosc/ladder.hpp"

#include <algorithm>
#include <cmath>

#include "fracosc/operators.hpp"

namespace fracosc {

namespace {

// |k|^p with the family's convention pow(0, 0) = 1; negative powers at the
// origin are evaluation errors.
double upow(double u, double p) {
  if (u == 0.0) {
    if (p < 0.0) throw EvaluationError("negative power evaluated at k = 0");
    return p == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(u, p);
}

// Global phase making the dominant coefficient real, so the power-sum part of
// a state can be scanned for sign changes as a real function.
Complex dominant_phase(const PowerSum& s) {
  Complex cmax{};
  double best = 0.0;
  for (const auto& t : s.terms)
    if (std::abs(t.coeff) > best) {
      best = std::abs(t.coeff);
      cmax = t.coeff;
    }
  if (best == 0.0) return Complex{1.0, 0.0};
  return std::conj(cmax) / best;
}

}  // namespace

void check_alpha_range(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw std::domain_error("Levy index out of range: required 1 < \xce\xb1 \xe2\x89\xa4 2");
}

PowerExpFunction ground_state(double alpha) {
  check_alpha_range(alpha);
  PowerExpFunction f = zero_function(alpha);
  f.body.terms.push_back({Complex{1.0, 0.0}, 0.0, Parity::even});
  return f;
}

PowerExpFunction excited_state(double alpha, StateIndex n, int max_n) {
  check_alpha_range(alpha);
  if (n.n < 0 || n.n > max_n)
    throw std::domain_error("excitation level out of range");
  PowerExpFunction f = ground_state(alpha);
  for (int i = 0; i < n.n; ++i) f = apply_B(f);
  return f;
}

double RationalPowerSum::evaluate(double k) const {
  Complex den = sum_evaluate(denominator, k);
  if (std::abs(den) == 0.0)
    throw EvaluationError("local energy evaluated at a state node");
  Complex num = sum_evaluate(numerator, k);
  return (num / den).real();
}

RationalPowerSum local_energy_exact(double alpha, int n) {
  PowerExpFunction phi = excited_state(alpha, {n});
  if (is_zero(phi)) throw std::domain_error("local energy of the zero function");
  RationalPowerSum e;
  e.alpha = alpha;
  e.numerator = apply_H(phi).body;
  e.denominator = phi.body;
  // Single-term denominators divide out exactly (n = 0, 1), matching the
  // published simplified forms.
  if (e.denominator.terms.size() == 1) {
    const PowerTerm d = e.denominator.terms.front();
    for (auto& t : e.numerator.terms) {
      t.coeff /= d.coeff;
      t.power -= d.power;
      t.parity = combine(t.parity, d.parity);
    }
    e.numerator = sum_normalize(std::move(e.numerator));
    e.denominator.terms = {{Complex{1.0, 0.0}, 0.0, Parity::even}};
  }
  return e;
}

double closed_form_energy(double alpha, int n, double k, bool paper_verbatim) {
  check_alpha_range(alpha);
  const double u = std::abs(k);
  const double h = alpha / 2.0;
  switch (n) {
    case 0:
      return h * upow(u, h - 1.0);
    case 1:
      return 3.0 * h * upow(u, h - 1.0) - h * (h - 1.0) * upow(u, -2.0);
    case 2: {
      if (paper_verbatim) {
        const double den = h - 2.0 * upow(u, h + 1.0);
        if (std::abs(den) < 1e-9)
          throw EvaluationError("E2 evaluated at a node, k = " + std::to_string(k));
        return 5.0 * h * upow(u, h - 1.0) *
                   (alpha - 1.0 - 2.0 * upow(u, 3.0 * h - 1.0)) / den +
               h * (h - 1.0) * upow(u, -2.0) * (2.0 - h + upow(u, h + 1.0)) / den;
      }
      const double den = alpha - 4.0 * upow(u, h + 1.0);
      if (std::abs(den) < 1e-9)
        throw EvaluationError("E2 evaluated at a node, k = " + std::to_string(k));
      const double num = (5.5 * alpha * alpha - 6.0 * alpha) * upow(u, h - 1.0) -
                         10.0 * alpha * upow(u, alpha) -
                         alpha * (h - 1.0) * (h - 2.0) * upow(u, -2.0);
      return num / den;
    }
    default:
      throw std::domain_error("closed_form_energy: n must be 0, 1 or 2");
  }
}

std::vector<double> node_locations(double alpha, int n, double k_max) {
  const PowerSum body = excited_state(alpha, {n}).body;
  const Complex phase = dominant_phase(body);
  auto g = [&](double k) { return (phase * sum_evaluate(body, k)).real(); };

  constexpr double scan_step = 1e-3;
  constexpr double root_tol = 1e-10;
  std::vector<double> roots;
  double prev_k = scan_step;
  double prev_v = g(prev_k);
  for (double k = 2.0 * scan_step; k <= k_max + 0.5 * scan_step; k += scan_step) {
    double v = g(k);
    if (prev_v == 0.0) {
      roots.push_back(prev_k);
    } else if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
      double lo = prev_k, hi = k;
      double glo = prev_v;
      while (hi - lo > root_tol) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(gm) == std::signbit(glo))
          lo = mid, glo = gm;
        else
          hi = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_k = k;
    prev_v = v;
  }
  return roots;
}

EnergyCurve energy_curve(double alpha, int n, const std::vector<double>& k_grid,
                         double exclusion_radius) {
  const double r = exclusion_radius;
  EnergyCurve curve{alpha, n, {}, {}};
  curve.excluded_windows.push_back({-r, r});
  const double k_max =
      k_grid.empty() ? 0.0
                     : std::max(std::abs(k_grid.front()), std::abs(k_grid.back()));
  for (double node : node_locations(alpha, n, std::max(k_max, 1.0))) {
    curve.excluded_windows.push_back({node - r, node + r});
    curve.excluded_windows.push_back({-node - r, -node + r});
  }
  std::sort(curve.excluded_windows.begin(), curve.excluded_windows.end());

  const RationalPowerSum e = local_energy_exact(alpha, n);
  for (double k : k_grid) {
    bool excluded = false;
    for (const auto& [lo, hi] : curve.excluded_windows)
      if (k > lo && k < hi) {
        excluded = true;
        break;
      }
    if (!excluded) curve.samples.push_back({k, e.evaluate(k)});
  }
  if (curve.samples.empty())
    throw std::runtime_error("energy_curve: all grid points excluded");
  return curve;
}

}  // namespace fracosc
