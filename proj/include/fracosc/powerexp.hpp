#pragma once

// Exact arithmetic on the closed function family
//   f(k) = ( sum_j c_j |k|^{p_j} sgn(k)^{s_j} ) * exp(-2|k|^{alpha/2+1}/(alpha+2))
// defined for k != 0. All operations are pure; values are immutable in spirit
// (functions return new objects).

#include <complex>
#include <stdexcept>
#include <vector>

namespace fracosc {

using Complex = std::complex<double>;

// Powers reached through different arithmetic routes (e.g. (p+a/2)-1 vs
// (p-1)+a/2) can differ in the last ulp, so term merging uses a small
// absolute tolerance instead of bitwise equality. Distinct powers in this
// problem are separated by multiples of alpha/2 minus integers, which stay
// far above this threshold for the alpha range of interest.
inline constexpr double kPowerMatchTol = 1e-9;
inline constexpr double kDefaultCombineTol = 1e-12;

enum class Parity { even, odd };

inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline Parity combine(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

struct PowerTerm {
  Complex coeff{};
  double power = 0.0;
  Parity parity = Parity::even;
};

// Finite signed power sum, canonical after sum_normalize:
// terms sorted by (power, parity), no duplicate keys, tiny coefficients
// dropped relative to the largest coefficient magnitude.
struct PowerSum {
  std::vector<PowerTerm> terms;
  double combine_tol = kDefaultCombineTol;
};

int power_compare(double a, double b);

PowerSum sum_normalize(PowerSum s);
PowerSum sum_add(const PowerSum& a, const PowerSum& b);
PowerSum sum_scale(PowerSum a, Complex c);
PowerSum sum_mul(const PowerSum& a, const PowerSum& b);
PowerSum sum_shift(PowerSum a, double p, Parity parity);  // multiply by |k|^p sgn^parity
PowerSum sum_differentiate(const PowerSum& a);            // d/dk, valid for k != 0
Complex sum_evaluate(const PowerSum& a, double k);
double sum_max_abs_coeff(const PowerSum& a);
bool sum_is_zero(const PowerSum& a);

// Relative term-by-term comparison of two normalized sums.
bool sum_equals(const PowerSum& a, const PowerSum& b, double tol);

// The stretched-exponential factor exp(-c |k|^gamma) with gamma = alpha/2+1
// and c = 2/(alpha+2); note c*gamma == 1 identically.
struct Envelope {
  double alpha;
  double gamma() const { return alpha / 2.0 + 1.0; }
  double c() const { return 2.0 / (alpha + 2.0); }
  double operator()(double k) const;
};

struct PowerExpFunction {
  double alpha = 2.0;
  PowerSum body;
  bool has_envelope = true;
};

PowerExpFunction zero_function(double alpha, bool has_envelope = true);

PowerExpFunction normalize(PowerExpFunction f);
PowerExpFunction add(const PowerExpFunction& f, const PowerExpFunction& g);
PowerExpFunction sub(const PowerExpFunction& f, const PowerExpFunction& g);
PowerExpFunction scale(PowerExpFunction f, Complex c);
PowerExpFunction mul_power(PowerExpFunction f, double p, Parity parity);
PowerExpFunction mul_sum(PowerExpFunction f, const PowerSum& s);

// d/dk on k != 0. Distributional contributions at k = 0 (from differentiating
// sgn) are excluded by contract. The envelope contributes exactly
// -|k|^{alpha/2} sgn(k) * f because c*gamma = 1.
PowerExpFunction differentiate(const PowerExpFunction& f);

Complex evaluate(const PowerExpFunction& f, double k);
bool equals(const PowerExpFunction& f, const PowerExpFunction& g, double tol);
bool is_zero(const PowerExpFunction& f);
double max_abs_coeff(const PowerExpFunction& f);

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fracosc
