#include <doctest.h>

#include <cmath>

#include "fracosc/ladder.hpp"
#include "fracosc/operators.hpp"
#include "fracosc/report.hpp"

using namespace fracosc;

namespace {

PowerExpFunction monomial(double alpha, Complex c, double p, Parity par) {
  PowerExpFunction f = zero_function(alpha);
  f.body.terms.push_back({c, p, par});
  return f;
}

double rel_size(const PowerExpFunction& residual, double scale) {
  return max_abs_coeff(normalize(residual)) / std::max(scale, 1e-300);
}

}  // namespace

TEST_CASE("apply_A annihilates the ground state exactly") {
  for (double a : alpha_sweep()) {
    CHECK(is_zero(apply_A(ground_state(a))));
  }
}

TEST_CASE("apply_A on env*k reproduces the hand expansion i*env") {
  const double a = 1.4;
  // product-rule cancellation: the |k|^{alpha/2+1} pieces from the multiplier
  // and from the envelope derivative cancel, leaving only d/dk of the prefactor
  auto f = monomial(a, Complex{1.0, 0.0}, 1.0, Parity::odd);  // k * env
  auto got = apply_A(f);
  auto want = monomial(a, Complex{0.0, 1.0}, 0.0, Parity::even);
  CHECK(equals(got, want, 1e-14));
  // the even sibling |k| * env picks up sgn(k) from d/dk|k| instead
  auto g = monomial(a, Complex{1.0, 0.0}, 1.0, Parity::even);
  auto want_odd = monomial(a, Complex{0.0, 1.0}, 0.0, Parity::odd);
  CHECK(equals(apply_A(g), want_odd, 1e-14));
  CHECK(is_zero(apply_A(zero_function(a))));
}

TEST_CASE("apply_B produces the published phi1 and phi2 prefactors") {
  for (double a : alpha_sweep()) {
    const auto phi0 = ground_state(a);
    const auto phi1 = apply_B(phi0);
    auto want1 = monomial(a, Complex{0.0, -2.0}, a / 2.0, Parity::odd);
    CHECK(equals(phi1, want1, 1e-14));

    const auto phi2 = apply_B(phi1);
    PowerExpFunction want2 = zero_function(a);
    want2.body.terms.push_back({Complex{a, 0.0}, a / 2.0 - 1.0, Parity::even});
    want2.body.terms.push_back({Complex{-4.0, 0.0}, a, Parity::even});
    CHECK(equals(phi2, want2, 1e-14));
  }
  CHECK(is_zero(apply_B(zero_function(1.5))));
}

TEST_CASE("apply_H on phi0 gives (alpha/2)|k|^{alpha/2-1} phi0") {
  for (double a : alpha_sweep()) {
    const auto phi0 = ground_state(a);
    auto want = monomial(a, Complex{a / 2.0, 0.0}, a / 2.0 - 1.0, Parity::even);
    CHECK(equals(apply_H(phi0), want, 1e-14));
    // self-consistency: H phi0 = eps phi0 since A phi0 = 0
    CHECK(equals(apply_H(phi0), apply_eps(phi0), 1e-14));
  }
  // alpha = 2: H phi0 = phi0, the conventional ground state energy 1
  CHECK(equals(apply_H(ground_state(2.0)), ground_state(2.0), 1e-14));
}

TEST_CASE("apply_eps: power shift by alpha/2-1 scaled by alpha/2") {
  CHECK(equals(apply_eps(ground_state(2.0)), ground_state(2.0), 1e-14));
  const double a = 1.6;
  auto f = monomial(a, Complex{1.0, 0.0}, 1.0, Parity::odd);
  auto want = monomial(a, Complex{a / 2.0, 0.0}, a / 2.0, Parity::odd);
  CHECK(equals(apply_eps(f), want, 1e-14));
  CHECK(is_zero(apply_eps(zero_function(a))));
}

TEST_CASE("apply_* reject alpha mismatch") {
  auto f = ground_state(1.5);
  CHECK_THROWS_AS(apply(make_A(1.2), f), std::domain_error);
}

TEST_CASE("factorization identity H = BA + eps on states and random members") {
  CHECK(is_zero(factorization_residual(ground_state(1.5))));
  CHECK(is_zero(factorization_residual(excited_state(1.5, {2}))));

  for (double a : alpha_sweep()) {
    for (int i = 0; i < 50; ++i) {
      auto f = random_family_member(a, 7000 + 17 * i + static_cast<unsigned>(a * 10));
      const double scale = max_abs_coeff(apply_H(f));
      CHECK(rel_size(factorization_residual(f), scale) <= 1e-10);
    }
  }
}

TEST_CASE("factorization residual cross-checked numerically by finite differences") {
  const double a = 1.3;
  auto f = random_family_member(a, 555, 5);
  // B A f + eps f - H f evaluated pointwise via numeric derivatives of f
  auto num_d = [&](const PowerExpFunction& g, double k) {
    const double h = 1e-5;
    return (evaluate(g, k + h) - evaluate(g, k - h)) / (2.0 * h);
  };
  auto num_d2 = [&](const PowerExpFunction& g, double k) {
    const double h = 1e-4;
    return (evaluate(g, k + h) - 2.0 * evaluate(g, k) + evaluate(g, k - h)) / (h * h);
  };
  constexpr Complex I{0.0, 1.0};
  for (double k : {0.5, 1.0, 2.0}) {
    const double s = std::pow(k, a / 2.0);
    const auto Af = apply_A(f);
    const Complex BAf = I * (num_d(Af, k) - s * evaluate(Af, k));
    const Complex epsf = a / 2.0 * std::pow(k, a / 2.0 - 1.0) * evaluate(f, k);
    const Complex Hf = std::pow(k, a) * evaluate(f, k) - num_d2(f, k);
    CHECK(std::abs(BAf + epsf - Hf) < 1e-4 * std::max(1.0, std::abs(Hf)));
  }
}

TEST_CASE("symbol table: the three printed multipliers and their composition") {
  for (double a : alpha_sweep()) {
    const auto sa = symbol_for_order(a, a);
    const auto sh = symbol_for_order(a, a / 2.0);
    const auto sm = symbol_for_order(a, a / 2.0 - 1.0);
    CHECK(sa.multiplier.coeff == Complex{-1.0, 0.0});
    CHECK(sa.multiplier.parity == Parity::even);
    CHECK(sh.multiplier.coeff == Complex{0.0, 1.0});
    CHECK(sh.multiplier.parity == Parity::odd);
    CHECK(sm.multiplier.coeff == Complex{1.0, 0.0});
    CHECK(sm.multiplier.parity == Parity::even);

    // symbol(a/2)^2 = symbol(a)
    const Complex c2 = sh.multiplier.coeff * sh.multiplier.coeff;
    CHECK(c2 == sa.multiplier.coeff);
    CHECK(power_compare(2.0 * sh.multiplier.power, sa.multiplier.power) == 0);
    CHECK(combine(sh.multiplier.parity, sh.multiplier.parity) == sa.multiplier.parity);

    // symbol(a/2-1) * (ik) = symbol(a/2)
    const Complex c3 = sm.multiplier.coeff * Complex{0.0, 1.0};
    CHECK(c3 == sh.multiplier.coeff);
    CHECK(power_compare(sm.multiplier.power + 1.0, sh.multiplier.power) == 0);
  }
  CHECK_THROWS_AS(symbol_for_order(1.5, 0.3), std::domain_error);
}

TEST_CASE("alpha = 2 degeneration to boson operators") {
  // A -> i(k + d/dk), B -> i(d/dk - k): the order-0 multiplier is i*k
  const auto A = make_A(2.0);
  const auto B = make_B(2.0);
  REQUIRE(A.parts.size() == 2);
  CHECK(A.parts[0].coeff.terms[0].coeff == Complex{0.0, 1.0});
  CHECK(A.parts[0].coeff.terms[0].power == doctest::Approx(1.0));
  CHECK(A.parts[0].coeff.terms[0].parity == Parity::odd);
  CHECK(B.parts[0].coeff.terms[0].coeff == Complex{0.0, -1.0});
  // eps at alpha=2 multiplies by the constant 1
  const auto eps = make_eps(2.0);
  CHECK(eps.parts[0].coeff.terms[0].coeff == Complex{1.0, 0.0});
  CHECK(eps.parts[0].coeff.terms[0].power == doctest::Approx(0.0));
}

TEST_CASE("operators are linear") {
  const double a = 1.7;
  auto f = random_family_member(a, 31);
  auto g = random_family_member(a, 32);
  const Complex c{0.3, -1.1};
  for (auto op : {apply_A, apply_B, apply_H, apply_eps}) {
    CHECK(equals(op(add(f, g)), add(op(f), op(g)), 1e-12));
    CHECK(equals(op(scale(f, c)), scale(op(f), c), 1e-12));
  }
}
