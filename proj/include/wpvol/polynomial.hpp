#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "wpvol/atom.hpp"
#include "wpvol/rational.hpp"

namespace wpvol {

// A power product of atoms. Factors are kept sorted by atom with strictly
// positive exponents, so structural equality is monomial equality.
class Monomial {
 public:
  using Factor = std::pair<Atom, int>;

  Monomial() = default;
  explicit Monomial(Atom a, int exponent = 1);
  Monomial(std::initializer_list<Factor> factors);
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(Atom a) const;
  int total_degree() const;
  // Number of moment factors, counted with multiplicity.
  int moment_grade() const;

  Monomial with_exponent(Atom a, int exponent) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded order: ascending total degree; ties are broken lexicographically
// along the atom order, larger exponent first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial atom(Atom a, int exponent = 1);
  static Polynomial term(const Rational& coeff, Monomial m);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  std::set<Atom> atoms() const;
  int max_moment_grade() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned exponent) const;

  // Accumulates coeff * m; drops the term if it cancels.
  void add_term(const Monomial& m, const Rational& coeff);

 private:
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// Product with every term of moment grade above max_grade discarded.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_grade);
Polynomial truncate_grade(const Polynomial& p, int max_grade);
// Terms of moment grade exactly `grade`.
Polynomial grade_part(const Polynomial& p, int grade);

// Formal partial derivative with respect to `x`.
Polynomial partial(const Polynomial& p, Atom x);

// Treats p as a polynomial in Atom::integration() = u and returns
//   1/2 * int_0^{upper} p(u) du,
// i.e. int_0^U l q(l^2) dl with U^2 the atom `upper`.
Polynomial integrate_halfsquare(const Polynomial& p, Atom upper);

// Replaces each atom listed in `bindings` by the given polynomial.
Polynomial substitute(const Polynomial& p, const std::map<Atom, Polynomial>& bindings);

// Renames atoms (e.g. a permutation of boundary labels). Atoms not in the map stay.
Polynomial rename_atoms(const Polynomial& p, const std::map<Atom, Atom>& renaming);

// Floating evaluation. Coefficients are rounded to nearest binary64, the sum is
// accumulated in long double. Throws std::invalid_argument on an unbound atom.
double evaluate(const Polynomial& p, const std::map<Atom, double>& bindings);

// Coefficient polynomial of x^k, with x removed.
Polynomial coefficient_of(const Polynomial& p, Atom x, int k);
int degree_in(const Polynomial& p, Atom x);

}  // namespace wpvol
