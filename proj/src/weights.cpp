#include "wpvol/weights.hpp"

#include <stdexcept>
#include <string>

namespace wpvol::volume {

namespace {

Rational power_of_four(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return Rational(p);
}

}  // namespace

Polynomial weight_t(int k, Atom length) {
  if (k < 0) throw std::invalid_argument("t_k needs k >= 0, got " + std::to_string(k));
  Rational c = Rational(2) / (Rational(factorial(k)) * power_of_four(k));
  return Polynomial::term(c, Monomial(length, k));
}

Polynomial weight_t_tilde(int k, Atom length, Atom shorter) {
  if (k < 0) throw std::invalid_argument("tilde t_k needs k >= 0, got " + std::to_string(k));
  Polynomial diff = Polynomial::atom(length) - Polynomial::atom(shorter);
  return diff.pow(static_cast<unsigned>(k)) * (Rational(2) / (Rational(factorial(k)) * power_of_four(k)));
}

Polynomial weight_gamma(int k) {
  if (k < 1) throw std::invalid_argument("gamma_k needs k >= 1, got " + std::to_string(k));
  Rational c = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k - 1));
  return Polynomial::term(c, Monomial(Atom::pi_squared(), k - 1));
}

WeightTable::WeightTable(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("weight table needs n >= 1");
  // Degrees never exceed n, which bounds every index used by the tree sums.
  for (int k = 0; k <= n + 1; ++k) {
    for (int label = 1; label <= n; ++label) t_.emplace(std::make_pair(k, label), weight_t(k, label));
    t_tilde_.emplace(k, weight_t_tilde(k, Atom::length(2), Atom::length(1)));
  }
  for (int k = 1; k <= n; ++k) gamma_.emplace(k, weight_gamma(k));
}

const Polynomial& WeightTable::t(int k, int label) const {
  auto it = t_.find({k, label});
  if (it == t_.end())
    throw std::out_of_range("t_" + std::to_string(k) + "(L" + std::to_string(label) + ") outside weight table");
  return it->second;
}

const Polynomial& WeightTable::t_tilde_21(int k) const {
  auto it = t_tilde_.find(k);
  if (it == t_tilde_.end()) throw std::out_of_range("tilde t_" + std::to_string(k) + " outside weight table");
  return it->second;
}

const Polynomial& WeightTable::gamma(int k) const {
  auto it = gamma_.find(k);
  if (it == gamma_.end()) throw std::out_of_range("gamma_" + std::to_string(k) + " outside weight table");
  return it->second;
}

}  // namespace wpvol::volume
