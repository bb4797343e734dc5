#pragma once

#include <vector>

#include "wpvol/graded_series.hpp"
#include "wpvol/polynomial.hpp"

namespace wpvol::genfun {

// Series are truncated at grade_cap moment factors.
struct MomentContext {
  int grade_cap = 4;
};

// t_k[mu] = int dmu(L) t_k(L) = 2 m_k / (4^k k!)
Polynomial moment_weight_t(int k);

// Z(r) = sqrt(r) J_1(2 pi sqrt(2r)) / (pi sqrt 2) - sum_k 2^{k-1}/k! t_k[mu] r^k,
// with r-powers up to r_order.
GradedSeries z_series(int r_order, const MomentContext& ctx);

// Substitutes the series `value` for r in `in_r`.
GradedSeries compose(const GradedSeries& in_r, const GradedSeries& value);

// Z(R) evaluated on a candidate R, truncated at ctx.grade_cap.
GradedSeries z_of(const GradedSeries& r_value, const MomentContext& ctx);

// Unique solution of Z(R) = 0 with R = m0 + O(mu^2). Throws std::runtime_error
// if the iteration fails to settle within grade_cap steps.
GradedSeries solve_r(const MomentContext& ctx);

// sum_k (L2^2 - L1^2)^k R^{k+1} / (2^k k! (k+1)!)
GradedSeries htc_genfun(const MomentContext& ctx);

// f_n in the hat variables, by the derivation recursion from f_3 = -t0^3/g1.
Polynomial f_recursion(int n);
// f_n as a sum over the two-three family.
Polynomial f_from_trees(int n);
// t^_k -> t_k[mu], g^_k -> gamma_k, g^_1 -> -1.
Polynomial f_to_moments(const Polynomial& f);

// Integrates each listed boundary label against mu: L_i^{2a} -> m_a.
Polynomial mu_average(const Polynomial& p, const std::vector<int>& labels);
GradedSeries mu_average(const Polynomial& p, const std::vector<int>& labels, const MomentContext& ctx);

// Inverse of mu_average on symmetric polynomials in L1..Ln: each moment
// monomial m_{a_1}...m_{a_n} is spread evenly over the distinct placements of
// its exponents. Throws std::invalid_argument if a term has moment grade != n.
Polynomial symmetric_lift(const Polynomial& moments, int n);

// V_{0,n} recovered from the recursion: symmetric_lift of f_n / 8 in moments.
Polynomial v0n_from_recursion(int n);

}  // namespace wpvol::genfun
