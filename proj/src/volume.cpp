#include "wpvol/volume.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "wpvol/enumerate.hpp"
#include "wpvol/parallel.hpp"

namespace wpvol::volume {

using trees::DoubleTree;
using trees::Family;

namespace {

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("volumes need n >= 3, got " + std::to_string(n));
}

// prod over boundary labels not in `skip` of t_{deg b - 1}(L_b), times prod over
// inner vertices of gamma_{deg v - 1}.
Polynomial generic_factor(const DoubleTree& d, const WeightTable& w, std::initializer_list<int> skip) {
  Polynomial out(1);
  for (const auto* t : {&d.first, &d.second}) {
    for (int v = 0; v < t->vertex_count(); ++v) {
      if (t->is_inner(v)) {
        out *= w.gamma(t->degree(v) - 1);
        continue;
      }
      bool skipped = false;
      for (int s : skip) skipped = skipped || t->label(v) == s;
      if (!skipped) out *= w.t(t->degree(v) - 1, t->label(v));
    }
  }
  return out;
}

template <class Contribution>
Polynomial tree_sum(const std::vector<DoubleTree>& family, Contribution contribution) {
  auto parts = parallel_map<Polynomial>(family.size(), [&](std::size_t i) { return contribution(family[i]); });
  Polynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

ConditionedPolynomial htc_volume(int n) {
  require_n(n);
  const WeightTable w(n);
  Polynomial sum = tree_sum(trees::enumerate(Family::Htc, n), [&](const DoubleTree& d) {
    return w.t_tilde_21(d.second.degree_of_label(2) - 1) * generic_factor(d, w, {1, 2});
  });
  return {sum * Rational(1, 4), {w.t_tilde_condition()}};
}

Polynomial v0n_graph_sum(int n) {
  require_n(n);
  const WeightTable w(n);
  Polynomial sum = tree_sum(trees::enumerate(Family::Graph, n), [&](const DoubleTree& d) {
    const int deg1 = d.degree_of_label(1);
    const int deg2 = d.degree_of_label(2);
    Polynomial alternating;
    for (int m = 0; m <= deg2 - 1; ++m) {
      Polynomial term = w.t(deg1 + m, 1) * w.t(deg2 - 1 - m, 2);
      alternating += m % 2 == 0 ? term : -term;
    }
    return alternating * generic_factor(d, w, {1, 2});
  });
  return sum * Rational(1, 8);
}

Polynomial v0n_reduced(int n) {
  require_n(n);
  const WeightTable w(n);
  Polynomial sum = tree_sum(trees::enumerate(Family::TwoThree, n), [&](const DoubleTree& d) {
    return w.t(d.degree_of_label(1), 1) * generic_factor(d, w, {1});
  });
  return sum * Rational(1, 8);
}

Polynomial full_decomposition_v0n(int n) {
  require_n(n);
  const WeightTable w(n);
  Polynomial full = tree_sum(trees::enumerate(Family::Full, n), [&](const DoubleTree& d) {
    return ell_integral(d.degree_of_label(1) - 1, d.degree_of_label(2) - 1, Atom::length(1), Atom::length(2),
                        EllMode::Integrate) *
           generic_factor(d, w, {1, 2});
  });
  return htc_volume(n).value + full * Rational(1, 16);
}

Polynomial ell_integral(int a, int b, Atom length1, Atom length2, EllMode mode) {
  if (a < -1 || b < 0)
    throw std::invalid_argument("l-integral needs a >= -1 and b >= 0, got a=" + std::to_string(a) +
                                " b=" + std::to_string(b));
  if (mode == EllMode::ClosedForm) {
    Polynomial sum;
    for (int m = 0; m <= b; ++m) {
      Polynomial term = weight_t(a + 1 + m, length1) * weight_t(b - m, length2);
      sum += m % 2 == 0 ? term : -term;
    }
    return sum * Rational(2);
  }
  // t~_{-1}(L, l) = 4 delta(L - l) / l collapses the integral onto l = L1.
  if (a == -1) return weight_t_tilde(b, length2, length1) * Rational(4);

  const Atom u = Atom::integration();
  Polynomial integrand = weight_t_tilde(a, length1, u) * weight_t_tilde(b, length2, u);
  // Integrand vanishes for l > L1 < L2, so the upper limit is L1.
  return integrate_halfsquare(integrand, length1);
}

}  // namespace wpvol::volume
