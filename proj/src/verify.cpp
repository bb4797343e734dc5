#include "wpvol/verify.hpp"

#include <set>
#include <stdexcept>

#include "wpvol/enumerate.hpp"
#include "wpvol/format.hpp"
#include "wpvol/genfun.hpp"
#include "wpvol/polytope.hpp"
#include "wpvol/volume.hpp"

namespace wpvol::verify {

namespace {

Polynomial sq(int i, int power = 1) { return Polynomial::atom(Atom::length(i), power); }

std::string label(const std::string& name, int n) { return name + " n=" + std::to_string(n); }

std::set<std::string> keys(const std::vector<trees::DoubleTree>& family) {
  std::set<std::string> out;
  for (const auto& d : family) out.insert(trees::canonical_key(d).bytes);
  return out;
}

}  // namespace

Polynomial table_v0n(int n) {
  const Polynomial pi2 = Polynomial::atom(Atom::pi_squared());
  Polynomial p1;  // sum L_i^2
  Polynomial p2;  // sum L_i^4
  Polynomial p3;  // sum L_i^6
  Polynomial pairs;     // sum_{i<j} L_i^2 L_j^2
  Polynomial ordered;   // sum_{i != j} L_i^4 L_j^2
  Polynomial triples;   // sum_{i<j<k} L_i^2 L_j^2 L_k^2
  for (int i = 1; i <= n; ++i) {
    p1 += sq(i);
    p2 += sq(i, 2);
    p3 += sq(i, 3);
    for (int j = 1; j <= n; ++j) {
      if (j != i) ordered += sq(i, 2) * sq(j);
      if (j <= i) continue;
      pairs += sq(i) * sq(j);
      for (int k = j + 1; k <= n; ++k) triples += sq(i) * sq(j) * sq(k);
    }
  }
  switch (n) {
    case 3:
      return Polynomial(1);
    case 4:
      return pi2 * Rational(2) + p1 * Rational(1, 2);
    case 5:
      return pi2.pow(2) * Rational(10) + pi2 * p1 * Rational(3) + p2 * Rational(1, 8) + pairs * Rational(1, 2);
    case 6:
      return pi2.pow(3) * Rational(244, 3) + pi2.pow(2) * p1 * Rational(26) + pi2 * p2 * Rational(3, 2) +
             pi2 * pairs * Rational(6) + p3 * Rational(1, 48) + ordered * Rational(3, 16) + triples * Rational(3, 4);
    default:
      throw std::out_of_range("table rows exist for n = 3..6 only");
  }
}

bool homogeneous(const Polynomial& p, int degree) {
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (const auto& [a, e] : m.factors()) {
      if (a.kind != AtomKind::PiSquared && a.kind != AtomKind::LengthSquared) return false;
      d += e;
    }
    if (d != degree) return false;
  }
  return true;
}

bool symmetric_in(const Polynomial& p, const std::vector<int>& labels) {
  // Adjacent transpositions generate the symmetric group.
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    const Atom a = Atom::length(labels[i]);
    const Atom b = Atom::length(labels[i + 1]);
    if (!(rename_atoms(p, {{a, b}, {b, a}}) == p)) return false;
  }
  return true;
}

std::vector<CheckResult> identity_suite(int max_n) {
  if (max_n < 3 || max_n > 8) throw std::invalid_argument("max-n must lie in 3..8");
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  for (int n = 3; n <= max_n; ++n) {
    const Polynomial reduced = volume::v0n_reduced(n);
    const Polynomial h = volume::htc_volume(n).value;
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);

    if (n <= 6) check(label("table row", n), reduced == table_v0n(n), to_text(reduced));
    check(label("graph-sum = reduced", n), volume::v0n_graph_sum(n) == reduced);
    check(label("decomposition = reduced", n), volume::full_decomposition_v0n(n) == reduced);
    check(label("recursion lift = reduced", n), genfun::v0n_from_recursion(n) == reduced);
    const Polynomial f = genfun::f_recursion(n);
    check(label("f_n/8 = mu-average of V", n),
          genfun::f_to_moments(f) * Rational(1, 8) == genfun::mu_average(reduced, all));
    check(label("f from trees = f recursion", n), genfun::f_from_trees(n) == f);
    check(label("V homogeneous", n), homogeneous(reduced, n - 3));
    check(label("H homogeneous", n), homogeneous(h, n - 3));
    check(label("V symmetric", n), symmetric_in(reduced, all));
    all.erase(all.begin(), all.begin() + 2);
    check(label("H symmetric in L3..Ln", n), symmetric_in(h, all));
    if (n <= trees::kDefaultBruteForceBound) {
      for (auto family : {trees::Family::TwoThree, trees::Family::Graph, trees::Family::Htc, trees::Family::Full})
        check(label("enumerator " + trees::to_string(family), n),
              keys(trees::enumerate(family, n)) == keys(trees::brute_force_enumerate(family, n)));
    }
    bool dims = true;
    for (const auto& d : trees::enumerate(trees::Family::Htc, n)) {
      for (const auto& marking : mc::corner_markings(d.second, 2)) {
        dims = dims && mc::polytope_dimension(d.second, marking, mc::DimensionMode::Formula) ==
                           mc::polytope_dimension(d.second, marking, mc::DimensionMode::Rank);
      }
      bool top = true;
      for (int v : d.second.inner_vertices()) top = top && d.second.degree(v) == 3;
      if (top) dims = dims && mc::polytope_dimension(d.second, {}) == 2 * n - 6;
    }
    check(label("dimension formula = rank", n), dims);
  }

  const genfun::MomentContext ctx{max_n};
  const GradedSeries r = genfun::solve_r(ctx);
  check("Z(R) = 0 through grade " + std::to_string(max_n), genfun::z_of(r, ctx).body().is_zero());
  const GradedSeries hgen = genfun::htc_genfun(ctx);
  for (int p = 1; p <= max_n - 2; ++p) {
    std::vector<int> labels;
    for (int i = 3; i <= 2 + p; ++i) labels.push_back(i);
    const Polynomial expected =
        genfun::mu_average(volume::htc_volume(2 + p).value, labels) * (Rational(1) / Rational(factorial(p)));
    check("H series grade " + std::to_string(p) + " = mu-average of H_" + std::to_string(2 + p),
          hgen.grade_part(p) == expected);
  }
  const Polynomial collapsed = substitute(hgen.body(), {{Atom::length(1), Polynomial::atom(Atom::length(2))}});
  check("H series at L1 = L2 equals R", collapsed == r.body());

  bool ell = true;
  for (int a = -1; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      ell = ell && volume::ell_integral(a, b, Atom::length(1), Atom::length(2), volume::EllMode::Integrate) ==
                       volume::ell_integral(a, b, Atom::length(1), Atom::length(2), volume::EllMode::ClosedForm);
  check("l-integral closed form = integration, a<=3, b<=3", ell);
  return out;
}

}  // namespace wpvol::verify
