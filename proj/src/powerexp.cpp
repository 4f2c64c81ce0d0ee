#include "fracosc/powerexp.hpp"

#include <algorithm>
#include <cmath>

namespace fracosc {

int power_compare(double a, double b) {
  if (std::abs(a - b) <= kPowerMatchTol) return 0;
  return a < b ? -1 : 1;
}

namespace {

bool term_key_less(const PowerTerm& a, const PowerTerm& b) {
  int c = power_compare(a.power, b.power);
  if (c != 0) return c < 0;
  return a.parity == Parity::even && b.parity == Parity::odd;
}

bool same_key(const PowerTerm& a, const PowerTerm& b) {
  return power_compare(a.power, b.power) == 0 && a.parity == b.parity;
}

void check_compatible(const PowerExpFunction& f, const PowerExpFunction& g) {
  if (f.alpha != g.alpha)
    throw std::domain_error("PowerExpFunction: mismatched alpha");
  if (f.has_envelope != g.has_envelope)
    throw std::domain_error("PowerExpFunction: mismatched envelope flags");
}

}  // namespace

PowerSum sum_normalize(PowerSum s) {
  std::stable_sort(s.terms.begin(), s.terms.end(), term_key_less);
  std::vector<PowerTerm> merged;
  for (const auto& t : s.terms) {
    if (!merged.empty() && same_key(merged.back(), t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  double scale = 0.0;
  for (const auto& t : merged) scale = std::max(scale, std::abs(t.coeff));
  std::vector<PowerTerm> kept;
  for (const auto& t : merged)
    if (std::abs(t.coeff) > s.combine_tol * scale && t.coeff != Complex{})
      kept.push_back(t);
  s.terms = std::move(kept);
  return s;
}

PowerSum sum_add(const PowerSum& a, const PowerSum& b) {
  PowerSum out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.combine_tol = std::min(a.combine_tol, b.combine_tol);
  return sum_normalize(std::move(out));
}

PowerSum sum_scale(PowerSum a, Complex c) {
  for (auto& t : a.terms) t.coeff *= c;
  return sum_normalize(std::move(a));
}

PowerSum sum_mul(const PowerSum& a, const PowerSum& b) {
  PowerSum out;
  out.combine_tol = std::min(a.combine_tol, b.combine_tol);
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      out.terms.push_back({ta.coeff * tb.coeff, ta.power + tb.power,
                           combine(ta.parity, tb.parity)});
  return sum_normalize(std::move(out));
}

PowerSum sum_shift(PowerSum a, double p, Parity parity) {
  for (auto& t : a.terms) {
    t.power += p;
    if (parity == Parity::odd) t.parity = flip(t.parity);
  }
  return sum_normalize(std::move(a));
}

PowerSum sum_differentiate(const PowerSum& a) {
  PowerSum out;
  out.combine_tol = a.combine_tol;
  for (const auto& t : a.terms) {
    if (t.power == 0.0) continue;  // constant (or pure sgn) term
    out.terms.push_back({t.coeff * t.power, t.power - 1.0, flip(t.parity)});
  }
  return sum_normalize(std::move(out));
}

Complex sum_evaluate(const PowerSum& a, double k) {
  const double u = std::abs(k);
  const double sg = (k > 0) - (k < 0);
  Complex acc{};
  for (const auto& t : a.terms) {
    if (u == 0.0 && t.power < 0.0)
      throw EvaluationError("power sum has negative power at k = 0");
    double mag = (t.power == 0.0) ? 1.0 : std::pow(u, t.power);
    if (t.parity == Parity::odd) mag *= sg;
    acc += t.coeff * mag;
  }
  return acc;
}

double sum_max_abs_coeff(const PowerSum& a) {
  double m = 0.0;
  for (const auto& t : a.terms) m = std::max(m, std::abs(t.coeff));
  return m;
}

bool sum_is_zero(const PowerSum& a) { return sum_normalize(a).terms.empty(); }

bool sum_equals(const PowerSum& a, const PowerSum& b, double tol) {
  const double scale = std::max(sum_max_abs_coeff(a), sum_max_abs_coeff(b));
  if (scale == 0.0) return true;
  PowerSum diff = sum_add(a, sum_scale(b, Complex{-1.0, 0.0}));
  return sum_max_abs_coeff(diff) <= tol * scale;
}

double Envelope::operator()(double k) const {
  return std::exp(-c() * std::pow(std::abs(k), gamma()));
}

PowerExpFunction zero_function(double alpha, bool has_envelope) {
  return {alpha, {}, has_envelope};
}

PowerExpFunction normalize(PowerExpFunction f) {
  f.body = sum_normalize(std::move(f.body));
  return f;
}

PowerExpFunction add(const PowerExpFunction& f, const PowerExpFunction& g) {
  check_compatible(f, g);
  PowerExpFunction out = f;
  out.body = sum_add(f.body, g.body);
  return out;
}

PowerExpFunction sub(const PowerExpFunction& f, const PowerExpFunction& g) {
  check_compatible(f, g);
  PowerExpFunction out = f;
  out.body = sum_add(f.body, sum_scale(g.body, Complex{-1.0, 0.0}));
  return out;
}

PowerExpFunction scale(PowerExpFunction f, Complex c) {
  f.body = sum_scale(std::move(f.body), c);
  return f;
}

PowerExpFunction mul_power(PowerExpFunction f, double p, Parity parity) {
  f.body = sum_shift(std::move(f.body), p, parity);
  return f;
}

PowerExpFunction mul_sum(PowerExpFunction f, const PowerSum& s) {
  f.body = sum_mul(f.body, s);
  return f;
}

PowerExpFunction differentiate(const PowerExpFunction& f) {
  PowerSum out;
  out.combine_tol = f.body.combine_tol;
  for (const auto& t : f.body.terms) {
    if (t.power != 0.0)
      out.terms.push_back({t.coeff * t.power, t.power - 1.0, flip(t.parity)});
    if (f.has_envelope)
      out.terms.push_back({-t.coeff, t.power + f.alpha / 2.0, flip(t.parity)});
  }
  PowerExpFunction res = f;
  res.body = sum_normalize(std::move(out));
  return res;
}

Complex evaluate(const PowerExpFunction& f, double k) {
  Complex v = sum_evaluate(f.body, k);
  if (f.has_envelope) v *= Envelope{f.alpha}(k);
  return v;
}

bool equals(const PowerExpFunction& f, const PowerExpFunction& g, double tol) {
  check_compatible(f, g);
  return sum_equals(f.body, g.body, tol);
}

bool is_zero(const PowerExpFunction& f) { return sum_is_zero(f.body); }

double max_abs_coeff(const PowerExpFunction& f) { return sum_max_abs_coeff(f.body); }

}  // namespace fracosc
