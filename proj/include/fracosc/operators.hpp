#pragma once

// Momentum-representation realizations of the ladder operators A, B, the
// Hamiltonian H = |k|^alpha - d^2/dk^2, and the operator-valued factorization
// remainder eps = (alpha/2) |k|^{alpha/2-1}, together with the factorization
// identity checker H = B A + eps.

#include <array>

#include "fracosc/powerexp.hpp"

namespace fracosc {

// Momentum-space multiplier of the fractional x-derivative of a given order.
// Exactly three orders are realized:
//   order alpha       -> -|k|^alpha            (even)
//   order alpha/2     ->  i |k|^{alpha/2} sgn  (odd)
//   order alpha/2 - 1 ->  |k|^{alpha/2-1}      (even)
struct FractionalSymbol {
  double order;
  PowerTerm multiplier;
};

std::array<FractionalSymbol, 3> symbol_table(double alpha);
FractionalSymbol symbol_for_order(double alpha, double order);

// Sum of (coefficient power-sum) x (d/dk)^order pieces; order <= 2 since H is
// second order in k.
struct OperatorPart {
  PowerSum coeff;
  int k_derivative_order = 0;
};

struct MomentumOperator {
  double alpha;
  std::vector<OperatorPart> parts;
};

MomentumOperator make_A(double alpha);
MomentumOperator make_B(double alpha);
MomentumOperator make_H(double alpha);
MomentumOperator make_eps(double alpha);

PowerExpFunction apply(const MomentumOperator& op, const PowerExpFunction& f);

PowerExpFunction apply_A(const PowerExpFunction& f);
PowerExpFunction apply_B(const PowerExpFunction& f);
PowerExpFunction apply_H(const PowerExpFunction& f);
PowerExpFunction apply_eps(const PowerExpFunction& f);

// B(A f) + eps f - H f; the zero function for every family member.
PowerExpFunction factorization_residual(const PowerExpFunction& f);

}  // namespace fracosc
