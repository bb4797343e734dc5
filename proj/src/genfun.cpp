#include "wpvol/genfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wpvol/enumerate.hpp"
#include "wpvol/parallel.hpp"
#include "wpvol/weights.hpp"

namespace wpvol::genfun {

namespace {

void require_cap(const MomentContext& ctx) {
  if (ctx.grade_cap < 1) throw std::invalid_argument("grade cap must be >= 1");
}

Rational power(long base, int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(k));
  return Rational(p);
}

// Derivative in g^_k, with g^_1 only present through its inverse atom.
Polynomial d_gamma(const Polynomial& f, int k) {
  if (k >= 2) return partial(f, Atom::gamma_hat(k));
  const Atom inv = Atom::gamma_one_inverse();
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(inv);
    if (e == 0) continue;
    out.add_term(m.with_exponent(inv, e + 1), -c * e);
  }
  return out;
}

Polynomial hat_t(int k) { return Polynomial::atom(Atom::t_hat(k)); }

Polynomial hat_gamma(int k) {
  if (k < 2) throw std::invalid_argument("g^_k atom needs k >= 2");
  return Polynomial::atom(Atom::gamma_hat(k));
}

}  // namespace

Polynomial moment_weight_t(int k) {
  if (k < 0) throw std::invalid_argument("t_k[mu] needs k >= 0");
  return Polynomial::term(Rational(2) / (power(4, k) * Rational(factorial(k))), Monomial(Atom::moment(k)));
}

GradedSeries z_series(int r_order, const MomentContext& ctx) {
  require_cap(ctx);
  if (r_order < 0) throw std::invalid_argument("r order must be >= 0");
  const Atom r = Atom::series_var();
  Polynomial z;
  for (int k = 0; k + 1 <= r_order; ++k) {
    Rational c = power(2, k) / (Rational(factorial(k)) * Rational(factorial(k + 1)));
    if (k % 2 == 1) c = -c;
    z.add_term(Monomial{{Atom::pi_squared(), k}, {r, k + 1}}, c);
  }
  for (int k = 0; k <= r_order; ++k) {
    Polynomial term = moment_weight_t(k) * Polynomial::atom(r, k) * (power(2, k) / (Rational(2) * Rational(factorial(k))));
    z -= term;
  }
  return GradedSeries(z, ctx.grade_cap);
}

GradedSeries compose(const GradedSeries& in_r, const GradedSeries& value) {
  const Atom r = Atom::series_var();
  if (value.body().atoms().count(r)) throw std::invalid_argument("compose: value must not contain r");
  const int cap = std::min(in_r.grade_cap(), value.grade_cap());
  const int top = degree_in(in_r.body(), r);
  GradedSeries acc(Polynomial(), cap);
  const GradedSeries v = value.truncated(cap);
  for (int j = top; j >= 0; --j) acc = acc * v + GradedSeries(coefficient_of(in_r.body(), r, j), cap);
  return acc;
}

GradedSeries z_of(const GradedSeries& r_value, const MomentContext& ctx) {
  return compose(z_series(ctx.grade_cap, ctx), r_value.truncated(ctx.grade_cap));
}

GradedSeries solve_r(const MomentContext& ctx) {
  require_cap(ctx);
  const GradedSeries z = z_series(ctx.grade_cap, ctx);
  GradedSeries r(Polynomial::atom(Atom::moment(0)), ctx.grade_cap);
  // Z'(R) = 1 + O(mu), so each step fixes one more grade.
  for (int step = 0; step <= ctx.grade_cap; ++step) {
    GradedSeries residual = compose(z, r);
    if (residual.body().is_zero()) return r;
    r = r - residual;
  }
  throw std::runtime_error("solve_r did not converge at grade cap " + std::to_string(ctx.grade_cap));
}

GradedSeries htc_genfun(const MomentContext& ctx) {
  const GradedSeries r = solve_r(ctx);
  const Polynomial diff = Polynomial::atom(Atom::length(2)) - Polynomial::atom(Atom::length(1));
  GradedSeries sum(Polynomial(), ctx.grade_cap);
  GradedSeries r_power = r;
  Polynomial diff_power(1);
  for (int k = 0; k < ctx.grade_cap; ++k) {
    Rational c = Rational(1) / (power(2, k) * Rational(factorial(k)) * Rational(factorial(k + 1)));
    sum = sum + r_power * (diff_power * c);
    r_power = r_power * r;
    diff_power *= diff;
  }
  return sum;
}

Polynomial f_recursion(int n) {
  if (n < 3) throw std::invalid_argument("f_n needs n >= 3");
  const Polynomial inv = Polynomial::atom(Atom::gamma_one_inverse());
  const Polynomial t0_inv = hat_t(0) * inv;
  Polynomial f = -(hat_t(0).pow(3) * inv);
  for (int m = 3; m < n; ++m) {
    Polynomial next;
    for (int k = 0; k <= m - 3; ++k) {
      const Polynomial dg = d_gamma(f, k + 1);
      next += hat_t(k + 1) * (dg - t0_inv * partial(f, Atom::t_hat(k)));
      next -= hat_gamma(k + 2) * t0_inv * dg;
    }
    f = std::move(next);
  }
  return f;
}

Polynomial f_from_trees(int n) {
  const auto family = trees::enumerate(trees::Family::TwoThree, n);
  const Polynomial minus_inv = -Polynomial::atom(Atom::gamma_one_inverse());
  auto parts = parallel_map<Polynomial>(family.size(), [&](std::size_t i) {
    const auto& d = family[i];
    Polynomial out(1);
    for (const auto* t : {&d.first, &d.second}) {
      for (int v = 0; v < t->vertex_count(); ++v) {
        if (t->is_inner(v)) {
          out *= hat_gamma(t->degree(v) - 1);
        } else {
          const int eff = t->degree(v) + (t->label(v) == 1 ? 1 : 0);
          out *= hat_t(eff - 1);
        }
      }
    }
    const auto edges = static_cast<unsigned>(d.first.edges().size() + d.second.edges().size());
    return out * minus_inv.pow(edges);
  });
  Polynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

Polynomial f_to_moments(const Polynomial& f) {
  std::map<Atom, Polynomial> bindings;
  int max_t = -1;
  int max_g = 1;
  for (Atom a : f.atoms()) {
    if (a.kind == AtomKind::THat) max_t = std::max(max_t, a.index);
    if (a.kind == AtomKind::GammaHat) max_g = std::max(max_g, a.index);
  }
  for (int k = 0; k <= max_t; ++k) bindings.emplace(Atom::t_hat(k), moment_weight_t(k));
  for (int k = 2; k <= max_g; ++k) bindings.emplace(Atom::gamma_hat(k), volume::weight_gamma(k));
  bindings.emplace(Atom::gamma_one_inverse(), Polynomial(-1));
  return substitute(f, bindings);
}

Polynomial mu_average(const Polynomial& p, const std::vector<int>& labels) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [a, e] : m.factors()) {
      const bool averaged = a.kind == AtomKind::LengthSquared &&
                            std::find(labels.begin(), labels.end(), a.index) != labels.end();
      if (!averaged) factors.emplace_back(a, e);
    }
    for (int label : labels) factors.emplace_back(Atom::moment(m.exponent(Atom::length(label))), 1);
    out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

GradedSeries mu_average(const Polynomial& p, const std::vector<int>& labels, const MomentContext& ctx) {
  return GradedSeries(mu_average(p, labels), ctx.grade_cap);
}

Polynomial symmetric_lift(const Polynomial& moments, int n) {
  Polynomial out;
  for (const auto& [m, c] : moments.terms()) {
    if (m.moment_grade() != n)
      throw std::invalid_argument("symmetric_lift: term of moment grade " + std::to_string(m.moment_grade()) +
                                  ", expected " + std::to_string(n));
    std::vector<int> exponents;
    std::vector<Monomial::Factor> rest;
    for (const auto& [a, e] : m.factors()) {
      if (a.kind == AtomKind::Moment) {
        exponents.insert(exponents.end(), static_cast<std::size_t>(e), a.index);
      } else if (a.kind == AtomKind::LengthSquared) {
        throw std::invalid_argument("symmetric_lift: input already contains boundary lengths");
      } else {
        rest.emplace_back(a, e);
      }
    }
    std::sort(exponents.begin(), exponents.end());
    std::vector<Monomial> placements;
    do {
      auto factors = rest;
      for (int i = 0; i < n; ++i)
        if (exponents[i] > 0) factors.emplace_back(Atom::length(i + 1), exponents[i]);
      placements.push_back(Monomial::from_factors(std::move(factors)));
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    const Rational share = c / Rational(static_cast<long>(placements.size()));
    for (const auto& p : placements) out.add_term(p, share);
  }
  return out;
}

Polynomial v0n_from_recursion(int n) {
  return symmetric_lift(f_to_moments(f_recursion(n)) * Rational(1, 8), n);
}

}  // namespace wpvol::genfun
