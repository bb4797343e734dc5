#pragma once

#include <map>
#include <utility>

#include "wpvol/polynomial.hpp"

namespace wpvol::volume {

// t_k(L) = (2/k!) (L/2)^{2k}, as a polynomial in the atom L^2.
Polynomial weight_t(int k, Atom length);
inline Polynomial weight_t(int k, int label) { return weight_t(k, Atom::length(label)); }

// \tilde t_k(L, l) = 2 (L^2 - l^2)^k / (4^k k!), valid for l < L only.
Polynomial weight_t_tilde(int k, Atom length, Atom shorter);

// gamma_k = (-1)^k pi^{2k-2} / (k-1)!
Polynomial weight_gamma(int k);

// "shorter < longer" side condition carried next to a polynomial.
struct SideCondition {
  Atom shorter;
  Atom longer;
  friend bool operator==(const SideCondition&, const SideCondition&) = default;
};

// Weights for an n-boundary computation, built once and read concurrently.
class WeightTable {
 public:
  explicit WeightTable(int n);

  int n() const { return n_; }
  const Polynomial& t(int k, int label) const;
  // \tilde t_k(L_2, L_1), the only tilde weight the tree sums need.
  const Polynomial& t_tilde_21(int k) const;
  SideCondition t_tilde_condition() const { return {Atom::length(1), Atom::length(2)}; }
  const Polynomial& gamma(int k) const;

 private:
  int n_;
  std::map<std::pair<int, int>, Polynomial> t_;
  std::map<int, Polynomial> t_tilde_;
  std::map<int, Polynomial> gamma_;
};

}  // namespace wpvol::volume
