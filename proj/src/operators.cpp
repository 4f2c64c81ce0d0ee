#include "fracosc/operators.hpp"

#include <cmath>

namespace fracosc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_alpha(const MomentumOperator& op, const PowerExpFunction& f) {
  if (op.alpha != f.alpha)
    throw std::domain_error("MomentumOperator: alpha mismatch with operand");
}

PowerSum single(Complex c, double p, Parity par) {
  PowerSum s;
  s.terms.push_back({c, p, par});
  return s;
}

}  // namespace

std::array<FractionalSymbol, 3> symbol_table(double alpha) {
  return {{
      {alpha, {Complex{-1.0, 0.0}, alpha, Parity::even}},
      {alpha / 2.0, {kI, alpha / 2.0, Parity::odd}},
      {alpha / 2.0 - 1.0, {Complex{1.0, 0.0}, alpha / 2.0 - 1.0, Parity::even}},
  }};
}

FractionalSymbol symbol_for_order(double alpha, double order) {
  for (const auto& s : symbol_table(alpha))
    if (power_compare(s.order, order) == 0) return s;
  throw std::domain_error("symbol_for_order: order not in the symbol table");
}

MomentumOperator make_A(double alpha) {
  // A = d^{alpha/2}/dx^{alpha/2} + x  ->  i|k|^{alpha/2} sgn(k) + i d/dk
  const auto sym = symbol_for_order(alpha, alpha / 2.0);
  MomentumOperator op{alpha, {}};
  op.parts.push_back({single(sym.multiplier.coeff, sym.multiplier.power, sym.multiplier.parity), 0});
  op.parts.push_back({single(kI, 0.0, Parity::even), 1});
  return op;
}

MomentumOperator make_B(double alpha) {
  // B = -d^{alpha/2}/dx^{alpha/2} + x  ->  i d/dk - i|k|^{alpha/2} sgn(k)
  const auto sym = symbol_for_order(alpha, alpha / 2.0);
  MomentumOperator op{alpha, {}};
  op.parts.push_back({single(-sym.multiplier.coeff, sym.multiplier.power, sym.multiplier.parity), 0});
  op.parts.push_back({single(kI, 0.0, Parity::even), 1});
  return op;
}

MomentumOperator make_H(double alpha) {
  // H = -d^alpha/dx^alpha + x^2  ->  |k|^alpha - d^2/dk^2
  const auto sym = symbol_for_order(alpha, alpha);
  MomentumOperator op{alpha, {}};
  op.parts.push_back({single(-sym.multiplier.coeff, sym.multiplier.power, sym.multiplier.parity), 0});
  op.parts.push_back({single(Complex{-1.0, 0.0}, 0.0, Parity::even), 2});
  return op;
}

MomentumOperator make_eps(double alpha) {
  // eps = (alpha/2) d^{alpha/2-1}/dx^{alpha/2-1}  ->  (alpha/2)|k|^{alpha/2-1}
  const auto sym = symbol_for_order(alpha, alpha / 2.0 - 1.0);
  MomentumOperator op{alpha, {}};
  op.parts.push_back({single(alpha / 2.0 * sym.multiplier.coeff, sym.multiplier.power,
                             sym.multiplier.parity),
                      0});
  return op;
}

PowerExpFunction apply(const MomentumOperator& op, const PowerExpFunction& f) {
  check_alpha(op, f);
  PowerExpFunction out = zero_function(f.alpha, f.has_envelope);
  for (const auto& part : op.parts) {
    PowerExpFunction g = f;
    for (int d = 0; d < part.k_derivative_order; ++d) g = differentiate(g);
    out = add(out, mul_sum(std::move(g), part.coeff));
  }
  return normalize(std::move(out));
}

PowerExpFunction apply_A(const PowerExpFunction& f) { return apply(make_A(f.alpha), f); }
PowerExpFunction apply_B(const PowerExpFunction& f) { return apply(make_B(f.alpha), f); }
PowerExpFunction apply_H(const PowerExpFunction& f) { return apply(make_H(f.alpha), f); }
PowerExpFunction apply_eps(const PowerExpFunction& f) { return apply(make_eps(f.alpha), f); }

PowerExpFunction factorization_residual(const PowerExpFunction& f) {
  return normalize(sub(add(apply_B(apply_A(f)), apply_eps(f)), apply_H(f)));
}

}  // namespace fracosc
