#include <cmath>
#include <limits>

#include "doctest.h"
#include "support/generators.hpp"
#include "wpvol/format.hpp"
#include "wpvol/graded_series.hpp"
#include "wpvol/polynomial.hpp"
#include "wpvol/rational.hpp"

using namespace wpvol;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }
const Atom kPi = Atom::pi_squared();
const Atom kL1 = Atom::length(1);
const Atom kL2 = Atom::length(2);
const Atom kU = Atom::integration();

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("to_double rounds to nearest") {
  gen::Source src(7);
  for (int i = 0; i < 2000; ++i) {
    const long a = src.uniform_int(-1000000, 1000000);
    const long b = src.uniform_int(1, 1000000);
    CHECK(to_double(make_rational(a, b)) == static_cast<double>(a) / static_cast<double>(b));
  }
  CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(std::isinf(to_double(Rational(big))));
  CHECK(to_double(Rational(1) / Rational(big)) == 0.0);
}

TEST_CASE("weights examples as polynomials") {
  // (x - y)^2 expands with the expected signs.
  const Polynomial d = Polynomial::atom(kL2) - Polynomial::atom(kL1);
  CHECK(d.pow(2) == P("L1^4 - 2*L1^2*L2^2 + L2^4"));
  CHECK(d.pow(0) == Polynomial(1));
  CHECK((d - d).is_zero());
  CHECK(P("0").is_zero());
}

TEST_CASE("canonical order and text format") {
  const Polynomial p = P("1/2*L2^2 + 2*pi2 + 1/2*L1^2 + L1^4 + pi2^2");
  CHECK(to_text(p) == "2*pi2 + 1/2*L1^2 + 1/2*L2^2 + pi2^2 + L1^4");
  CHECK(to_text(P("-3*pi2 + 1")) == "1 - 3*pi2");
  CHECK(to_text(Polynomial()) == "0");
  CHECK(to_text(P("-L1^2")) == "-L1^2");
  CHECK(to_latex(P("2*pi2 + 1/2*L1^2")) == "2\\pi^2 + \\frac{1}{2}L_1^2");
  CHECK_THROWS_AS(parse_polynomial("L1^3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("2*+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("q"), std::invalid_argument);
}

TEST_CASE("json layout") {
  const auto j = to_json(P("2*pi2 + 1/2*L2^2"), {3, 0});
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff"] == "2");
  CHECK(j[0]["pi2"] == 1);
  CHECK(j[1]["L"] == nlohmann::json::array({0, 1, 0}));
  CHECK(j[1]["coeff"] == "1/2");
  const Polynomial f = Polynomial::atom(Atom::t_hat(1)) * Polynomial::atom(Atom::gamma_one_inverse(), 2) *
                       Polynomial::atom(Atom::gamma_hat(3));
  CHECK(polynomial_from_json(to_json(f)) == f);
}

TEST_CASE("integrate_halfsquare") {
  // 1/2 int_0^{L1^2} 4 du = 2 L1^2
  CHECK(integrate_halfsquare(Polynomial(4), kL1) == P("2*L1^2"));
  // 1/2 int_0^{U} (L2^2 - u) du = (U L2^2 - U^2/2) / 2
  const Polynomial q = Polynomial::atom(kL2) - Polynomial::atom(kU);
  CHECK(integrate_halfsquare(q, kL1) == P("1/2*L1^2*L2^2 - 1/4*L1^4"));
  CHECK_THROWS_AS(integrate_halfsquare(q, kU), std::invalid_argument);
}

TEST_CASE("evaluate and substitute") {
  const Polynomial p = P("2*pi2 + 1/2*L1^2");
  CHECK(evaluate(p, {{kPi, 1.0}, {kL1, 4.0}}) == doctest::Approx(4.0));
  CHECK_THROWS_AS(evaluate(p, {{kPi, 1.0}}), std::invalid_argument);
  CHECK(substitute(p, {{kL1, Polynomial(Rational(9))}}) == P("2*pi2 + 9/2"));
  CHECK(coefficient_of(P("3*pi2*L1^2 + L1^2 + 5"), kL1, 1) == P("3*pi2 + 1"));
  CHECK(degree_in(P("3*pi2*L1^4 + L1^2"), kL1) == 2);
}

TEST_CASE("graded series truncation") {
  const Atom m0 = Atom::moment(0);
  const Atom m1 = Atom::moment(1);
  const GradedSeries a(Polynomial::atom(m0) + Polynomial::atom(m0) * Polynomial::atom(m1), 2);
  CHECK(a.grade_part(2) == Polynomial::atom(m0) * Polynomial::atom(m1));
  CHECK((a * a).body() == Polynomial::atom(m0, 2));
  CHECK(a.pow(3).body().is_zero());
  CHECK(a.truncated(1).body() == Polynomial::atom(m0));
  CHECK_THROWS_AS(a + a.truncated(1), std::invalid_argument);
  CHECK_THROWS_AS(a.truncated(3), std::invalid_argument);
}

TEST_CASE("property: ring axioms") {
  gen::Source src(1);
  const auto atoms = gen::mixed_atoms();
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = src.polynomial(atoms);
    const Polynomial b = src.polynomial(atoms);
    const Polynomial c = src.polynomial(atoms);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial(1) == a);
    CHECK(a.pow(2) == a * a);
    CHECK(poly_mul(a, b) == a * b);
    CHECK(poly_add(a, b) == a + b);
  }
}

TEST_CASE("property: serializers round-trip") {
  gen::Source src(2);
  const auto atoms = gen::mixed_atoms();
  for (int i = 0; i < 300; ++i) {
    const Polynomial p = src.polynomial(atoms);
    CHECK(parse_polynomial(to_text(p)) == p);
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(to_text(parse_polynomial(to_text(p))) == to_text(p));
    CHECK(to_json(p).dump() == to_json(polynomial_from_json(to_json(p))).dump());
  }
}

TEST_CASE("property: derivative is a derivation") {
  gen::Source src(3);
  const auto atoms = gen::mixed_atoms();
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = src.polynomial(atoms);
    const Polynomial b = src.polynomial(atoms);
    for (Atom x : {kPi, kL1, Atom::moment(1)}) CHECK(partial(a * b, x) == partial(a, x) * b + a * partial(b, x));
  }
}

TEST_CASE("property: truncated product equals truncation of product") {
  gen::Source src(4);
  const auto atoms = gen::mixed_atoms();
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = src.polynomial(atoms);
    const Polynomial b = src.polynomial(atoms);
    const int cap = src.uniform_int(0, 5);
    CHECK(multiply_truncated(a, b, cap) == truncate_grade(a * b, cap));
    Polynomial sum;
    for (int g = 0; g <= cap; ++g) sum += grade_part(a, g);
    CHECK(sum == truncate_grade(a, cap));
  }
}

TEST_CASE("property: half-square integral differentiates back") {
  gen::Source src(5);
  const std::vector<Atom> atoms{kPi, kL2, kU};
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = src.polynomial(atoms);
    const Polynomial integral = integrate_halfsquare(p, kL1);
    CHECK(partial(integral, kL1) * Rational(2) == substitute(p, {{kU, Polynomial::atom(kL1)}}));
    CHECK(substitute(integral, {{kL1, Polynomial()}}).is_zero());
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  gen::Source src(6);
  const auto atoms = gen::volume_atoms(3);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = src.polynomial(atoms);
    const Polynomial b = src.polynomial(atoms);
    std::map<Atom, double> at;
    for (Atom x : atoms) at[x] = src.uniform_real(0.1, 2.0);
    const double lhs = evaluate(a * b, at);
    const double rhs = evaluate(a, at) * evaluate(b, at);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("property: renaming is an involution for swaps") {
  gen::Source src(8);
  const auto atoms = gen::volume_atoms(3);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = src.polynomial(atoms);
    const std::map<Atom, Atom> swap{{kL1, kL2}, {kL2, kL1}};
    CHECK(rename_atoms(rename_atoms(p, swap), swap) == p);
    CHECK(rename_atoms(p, swap).size() == p.size());
  }
}
