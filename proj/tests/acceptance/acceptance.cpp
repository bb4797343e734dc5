// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "wpvol/cli.hpp"
#include "wpvol/enumerate.hpp"
#include "wpvol/format.hpp"
#include "wpvol/genfun.hpp"
#include "wpvol/montecarlo.hpp"
#include "wpvol/parallel.hpp"
#include "wpvol/polytope.hpp"
#include "wpvol/volume.hpp"

using namespace wpvol;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wpvol");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<int> labels(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::string trim(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

Outcome table_reproduction() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const auto r = cli({"vol", "--n", std::to_string(n), "--method", "tree"});
    o.require(r.code == 0, "exit code n=" + std::to_string(n));
    o.require(parse_polynomial(trim(r.out)) == oracle::table_row(n), "row n=" + std::to_string(n));
    if (n == 5) o.require(r.err.find("\"3*pi\", read as 3*pi^2") != std::string::npos, "missing 3*pi note");
  }
  return o;
}

Outcome route_equivalence() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const Polynomial reduced = volume::v0n_reduced(n);
    o.require(volume::v0n_graph_sum(n) == reduced, "graph-sum n=" + std::to_string(n));
    o.require(volume::full_decomposition_v0n(n) == reduced, "decomposition n=" + std::to_string(n));
  }
  return o;
}

Outcome recursion_equivalence() {
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    const Polynomial lhs = genfun::f_to_moments(genfun::f_recursion(n)) * Rational(1, 8);
    o.require(lhs == genfun::mu_average(volume::v0n_reduced(n), labels(1, n)), "n=" + std::to_string(n));
  }
  return o;
}

Outcome trees_generate_f() {
  Outcome o;
  for (int n = 3; n <= 6; ++n)
    o.require(genfun::f_from_trees(n) == genfun::f_recursion(n), "n=" + std::to_string(n));
  return o;
}

Outcome generating_functions() {
  Outcome o;
  const genfun::MomentContext ctx{5};
  o.require(genfun::z_of(genfun::solve_r(ctx), ctx).body().is_zero(), "Z(R) != 0 at grade 5");
  const GradedSeries h = genfun::htc_genfun(ctx);
  for (int p = 1; p <= 3; ++p) {
    const Polynomial expected = genfun::mu_average(volume::htc_volume(2 + p).value, labels(3, 2 + p)) *
                                (Rational(1) / Rational(factorial(p)));
    o.require(h.grade_part(p) == expected, "H grade " + std::to_string(p));
  }
  o.require(genfun::solve_r({2}).body() == parse_polynomial("m0 + 1/2*m0*m1 + pi2*m0^2"), "R to grade 2");
  return o;
}

Outcome ell_identity() {
  Outcome o;
  const Atom l1 = Atom::length(1);
  const Atom l2 = Atom::length(2);
  for (int a = -1; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      o.require(volume::ell_integral(a, b, l1, l2, volume::EllMode::Integrate) ==
                    volume::ell_integral(a, b, l1, l2, volume::EllMode::ClosedForm),
                "a=" + std::to_string(a) + " b=" + std::to_string(b));
  return o;
}

Outcome enumerator_integrity() {
  Outcome o;
  auto keys = [](const std::vector<trees::DoubleTree>& family) {
    std::set<std::string> s;
    for (const auto& d : family) s.insert(trees::canonical_key(d).bytes);
    return s;
  };
  for (int n = 3; n <= 6; ++n) {
    const auto built = trees::enumerate(trees::Family::TwoThree, n);
    const auto brute = trees::brute_force_enumerate(trees::Family::TwoThree, n);
    o.require(keys(built) == keys(brute) && keys(built).size() == built.size(), "n=" + std::to_string(n));
  }
  o.require(trees::enumerate(trees::Family::TwoThree, 3).size() == 1, "|T_3| != 1");
  o.require(trees::enumerate(trees::Family::TwoThree, 4).size() == 5, "|T_4| != 5");
  return o;
}

Outcome dimension_formula() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    for (const auto& d : trees::enumerate(trees::Family::Htc, n)) {
      const auto& t = d.second;
      for (const auto& m : mc::corner_markings(t, 2))
        o.require(mc::polytope_dimension(t, m, mc::DimensionMode::Formula) ==
                      mc::polytope_dimension(t, m, mc::DimensionMode::Rank),
                  "mismatch on " + trees::canonical_key(t).bytes);
      bool top = true;
      for (int v : t.inner_vertices()) top = top && t.degree(v) == 3;
      if (top) o.require(mc::polytope_dimension(t, {}) == 2 * n - 6, "top dimension n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  mc::McOptions options;
  options.samples = 1000000;
  options.seed = 42;
  const std::vector<double> lengths{1, 2, 1, 1, 1};
  const auto on = mc::mc_full_volume(5, lengths, options);
  options.enforce_delaunay = false;
  const auto off = mc::mc_full_volume(5, lengths, options);
  char buf[200];
  std::snprintf(buf, sizeof buf, "z=%.3f (estimate %.6f +- %.6f vs %.6f), ablation z=%.1f", on.z_score, on.estimate,
                on.std_error, on.reference, off.z_score);
  o.require(std::abs(on.z_score) < 3.0, "constrained estimate off by more than 3 sigma");
  o.require(std::abs(off.z_score) > 5.0, "ablation within 5 sigma");
  o.detail = o.detail.empty() ? buf : o.detail + "; " + buf;
  return o;
}

Outcome invariant_suite() {
  Outcome o;
  auto homogeneous = [](const Polynomial& p, int degree) {
    for (const auto& [m, c] : p.terms()) {
      int d = 0;
      for (const auto& [a, e] : m.factors()) {
        if (a.kind != AtomKind::PiSquared && a.kind != AtomKind::LengthSquared) return false;
        d += e;
      }
      if (d != degree) return false;
    }
    return true;
  };
  for (int n = 3; n <= 7; ++n) {
    const Polynomial v = volume::v0n_reduced(n);
    o.require(homogeneous(v, n - 3), "V homogeneity n=" + std::to_string(n));
    o.require(homogeneous(volume::htc_volume(n).value, n - 3), "H homogeneity n=" + std::to_string(n));
    std::vector<int> perm = labels(1, n);
    bool symmetric = true;
    while (symmetric && std::next_permutation(perm.begin(), perm.end())) {
      std::map<Atom, Atom> ren;
      for (int i = 0; i < n; ++i) ren[Atom::length(i + 1)] = Atom::length(perm[i]);
      symmetric = rename_atoms(v, ren) == v;
    }
    o.require(symmetric, "V symmetry n=" + std::to_string(n));
  }
  for (const char* format : {"text", "json", "latex"}) {
    const auto a = cli({"--threads", "1", "vol", "--n", "6", "--format", format});
    const auto b = cli({"--threads", "4", "vol", "--n", "6", "--format", format});
    o.require(a.out == b.out && !a.out.empty(), std::string("unstable ") + format + " output");
  }
  o.require(cli({"vol", "--n", "6", "--method", "decomposition"}).out == cli({"vol", "--n", "6"}).out,
            "methods print different text");
  const Polynomial v6 = volume::v0n_reduced(6);
  o.require(to_text(parse_polynomial(to_text(v6))) == to_text(v6), "text round trip");
  o.require(to_json(polynomial_from_json(to_json(v6))).dump() == to_json(v6).dump(), "json round trip");
  const auto mc1 = cli({"--threads", "1", "verify", "mc", "--n", "5", "--lengths", "1,2,1,1,1", "--samples", "50000"});
  const auto mc2 = cli({"--threads", "3", "verify", "mc", "--n", "5", "--lengths", "1,2,1,1,1", "--samples", "50000"});
  o.require(mc1.out == mc2.out, "mc report depends on thread count");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact table reproduction V_{0,3}..V_{0,6}", 10, table_reproduction},
      {2, "route equivalence graph-sum = reduced = decomposition, n <= 6", 120, route_equivalence},
      {3, "recursion f_n/8 = mu-average of V_{0,n}, 3 <= n <= 7", 300, recursion_equivalence},
      {4, "f from two-three trees = f recursion, 3 <= n <= 6", 300, trees_generate_f},
      {5, "Z(R) = 0 to grade 5, H grades 1..3, R to grade 2", 300, generating_functions},
      {6, "l-integral closed form = integration, a in -1..3, b in 0..3", 300, ell_identity},
      {7, "insertion enumerator = brute force, n <= 6; counts 1, 5", 300, enumerator_integrity},
      {8, "dimension formula = constraint rank, n <= 5, <= 2 ideal corners", 300, dimension_formula},
      {9, "Monte Carlo n=5 L=(1,2,1,1,1) 1e6 samples seed 42", 300, monte_carlo},
      {10, "homogeneity, symmetry, byte-stable serialization", 300, invariant_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) o.require(false, "over runtime budget");
    failures += o.passed ? 0 : 1;
    std::printf("%s [%d] %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
