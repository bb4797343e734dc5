#include "wpvol/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpvol/enumerate.hpp"
#include "wpvol/format.hpp"
#include "wpvol/genfun.hpp"
#include "wpvol/montecarlo.hpp"
#include "wpvol/parallel.hpp"
#include "wpvol/verify.hpp"
#include "wpvol/volume.hpp"

namespace wpvol::cli {

namespace {

constexpr int kMaxVolumeN = 8;
constexpr int kMaxSeriesOrder = 10;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_range(const std::string& flag, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw InvalidInput(flag + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                       std::to_string(value));
}

std::vector<Rational> parse_lengths(const std::string& text, int n) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q;
    try {
      q = parse_rational(item);
    } catch (const std::exception&) {
      throw InvalidInput("malformed length '" + item + "'");
    }
    if (q <= 0) throw InvalidInput("lengths must be positive, got '" + item + "'");
    out.push_back(q);
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput("malformed length list '" + text + "'");
  if (static_cast<int>(out.size()) != n)
    throw InvalidInput("expected " + std::to_string(n) + " lengths, got " + std::to_string(out.size()));
  return out;
}

std::map<Atom, Polynomial> length_bindings(const std::vector<Rational>& lengths) {
  std::map<Atom, Polynomial> b;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    b.emplace(Atom::length(static_cast<int>(i) + 1), Polynomial(Rational(lengths[i] * lengths[i])));
  return b;
}

double numeric_value(const Polynomial& in_pi2) {
  return evaluate(in_pi2, {{Atom::pi_squared(), std::numbers::pi * std::numbers::pi}});
}

nlohmann::json lengths_json(const std::vector<Rational>& lengths) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& q : lengths) j.push_back(to_string(q));
  return j;
}

// Prints a polynomial in the chosen format, optionally evaluated at lengths.
void emit_polynomial(std::ostream& out, const Polynomial& p, const std::string& format, int n,
                     const std::vector<Rational>& lengths, nlohmann::json meta) {
  const JsonLayout layout{n, 0};
  if (lengths.empty()) {
    if (format == "text") {
      out << to_text(p) << '\n';
    } else if (format == "latex") {
      out << to_latex(p) << '\n';
    } else {
      meta["polynomial"] = to_json(p, layout);
      meta["text"] = to_text(p);
      out << meta.dump(2) << '\n';
    }
    return;
  }
  const Polynomial at = substitute(p, length_bindings(lengths));
  const std::string value = format_double(numeric_value(at));
  if (format == "text") {
    out << to_text(at) << " = " << value << '\n';
  } else if (format == "latex") {
    out << to_latex(at) << " \\approx " << value << '\n';
  } else {
    meta["lengths"] = lengths_json(lengths);
    meta["polynomial"] = to_json(p, layout);
    meta["exact"] = to_text(at);
    meta["value"] = nlohmann::json::parse(value);
    out << meta.dump(2) << '\n';
  }
}

Polynomial volume_by_method(int n, const std::string& method) {
  if (method == "tree") return volume::v0n_reduced(n);
  if (method == "recursion") return genfun::v0n_from_recursion(n);
  if (method == "graph-sum") return volume::v0n_graph_sum(n);
  return volume::full_decomposition_v0n(n);
}

void note_row_five(const Polynomial& v, std::ostream& err) {
  const Rational c = v.coefficient(Monomial{{Atom::pi_squared(), 1}, {Atom::length(1), 1}});
  err << "note: computed coefficient of pi2*Li^2 in V_{0,5} is " << to_string(c)
      << (c == 3 ? " (3*pi^2); the reference row prints \"3*pi\", read as 3*pi^2" : "; reference row disagrees")
      << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil-Petersson volumes of genus-0 surfaces via tree sums", "wpvol"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  int n = 0;
  std::string lengths_text;
  std::string method = "tree";
  std::string format = "text";

  auto* vol = app.add_subcommand("vol", "Exact V_{0,n}");
  vol->add_option("--n", n, "Number of boundaries")->required();
  vol->add_option("--lengths", lengths_text, "Comma-separated boundary lengths");
  vol->add_option("--method", method)->check(CLI::IsMember({"tree", "recursion", "graph-sum", "decomposition"}));
  vol->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* htc = app.add_subcommand("htc", "Exact half-tight cylinder volume H_n (L1 < L2)");
  htc->add_option("--n", n, "Number of boundaries")->required();
  htc->add_option("--lengths", lengths_text, "Comma-separated boundary lengths");
  htc->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  std::string target;
  int order = 0;
  auto* gf = app.add_subcommand("gf", "Generating-function series");
  gf->add_option("--target", target)->required()->check(CLI::IsMember({"z", "r", "h"}));
  gf->add_option("--order", order, "Grade cap (r-order for z)")->required();
  gf->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  std::string family_name;
  bool count = false;
  bool list = false;
  bool brute = false;
  auto* tr = app.add_subcommand("trees", "Enumerate a tree family");
  tr->add_option("--family", family_name)->required()->check(CLI::IsMember({"two-three", "graph", "htc", "full"}));
  tr->add_option("--n", n, "Number of boundaries")->required();
  auto* count_flag = tr->add_flag("--count", count, "Print the family size");
  tr->add_flag("--list", list, "Print the family as JSON")->excludes(count_flag);
  tr->add_flag("--brute-force", brute, "Use the Pruefer-code enumerator");

  auto* ver = app.add_subcommand("verify", "Verification suites");
  ver->require_subcommand(1);
  int max_n = 5;
  auto* ident = ver->add_subcommand("identities", "Exact cross-checks");
  ident->add_option("--max-n", max_n);
  ident->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  double sigma = 3.0;
  std::string part = "full";
  std::string ell = "uniform";
  bool no_delaunay = false;
  std::string mc_format = "json";
  auto* mc = ver->add_subcommand("mc", "Monte Carlo polytope volume against the exact value");
  mc->add_option("--n", n)->required();
  mc->add_option("--lengths", lengths_text)->required();
  mc->add_option("--samples", samples, "Samples per sampled tree");
  mc->add_option("--seed", seed);
  mc->add_option("--sigma", sigma, "Pass threshold on |z|");
  mc->add_option("--part", part)->check(CLI::IsMember({"full", "htc"}));
  mc->add_option("--ell", ell)->check(CLI::IsMember({"uniform", "quadrature"}));
  mc->add_flag("--no-delaunay", no_delaunay, "Drop the inner-edge angle constraints");
  mc->add_option("--format", mc_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  if (threads > 0) set_thread_count(threads);

  try {
    if (*vol) {
      require_range("--n", n, 3, kMaxVolumeN);
      const auto lengths = lengths_text.empty() ? std::vector<Rational>{} : parse_lengths(lengths_text, n);
      const Polynomial v = volume_by_method(n, method);
      if (n == 5) note_row_five(v, err);
      emit_polynomial(out, v, format, n, lengths, {{"n", n}, {"method", method}});
      return kExitOk;
    }
    if (*htc) {
      require_range("--n", n, 3, kMaxVolumeN);
      const auto lengths = lengths_text.empty() ? std::vector<Rational>{} : parse_lengths(lengths_text, n);
      if (!lengths.empty() && !(lengths[0] < lengths[1])) throw InvalidInput("H_n needs L1 < L2");
      const auto h = volume::htc_volume(n);
      emit_polynomial(out, h.value, format, n, lengths, {{"n", n}, {"conditions", {"L1 < L2"}}});
      return kExitOk;
    }
    if (*gf) {
      require_range("--order", order, 1, kMaxSeriesOrder);
      const genfun::MomentContext ctx{order};
      GradedSeries s = target == "z" ? genfun::z_series(order, ctx)
                       : target == "r" ? genfun::solve_r(ctx)
                                       : genfun::htc_genfun(ctx);
      if (format == "json") {
        nlohmann::json j = to_json(s, {target == "h" ? 2 : 0, order + 1});
        j["target"] = target;
        out << j.dump(2) << '\n';
      } else {
        out << (format == "latex" ? to_latex(s.body()) : to_text(s.body())) << '\n';
      }
      return kExitOk;
    }
    if (*tr) {
      require_range("--n", n, 3, brute ? trees::kDefaultBruteForceBound : kMaxVolumeN);
      const auto family = trees::parse_family(family_name);
      const auto listing = brute ? trees::brute_force_enumerate(family, n) : trees::enumerate(family, n);
      if (list) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& d : listing) j.push_back(trees::to_json(d));
        out << j.dump(2) << '\n';
      } else {
        out << listing.size() << '\n';
      }
      return kExitOk;
    }
    if (*ident) {
      require_range("--max-n", max_n, 3, 8);
      const auto results = verify::identity_suite(max_n);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed ? 1 : 0;
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) j.push_back({{"check", r.name}, {"passed", r.passed}});
        out << nlohmann::json{{"passed", passed}, {"total", results.size()}, {"checks", j}}.dump(2) << '\n';
      } else {
        for (const auto& r : results) out << (r.passed ? "PASS  " : "FAIL  ") << r.name << '\n';
        out << passed << '/' << results.size() << " checks passed\n";
      }
      return passed == results.size() ? kExitOk : kExitVerificationFailed;
    }
    if (*mc) {
      require_range("--n", n, 3, 7);
      if (samples < 1) throw InvalidInput("--samples must be >= 1");
      if (!(sigma > 0)) throw InvalidInput("--sigma must be positive");
      std::vector<double> lengths;
      for (const auto& q : parse_lengths(lengths_text, n)) lengths.push_back(to_double(q));
      if (!(lengths[0] < lengths[1])) throw InvalidInput("Monte Carlo needs L1 < L2");
      mc::McOptions options;
      options.samples = samples;
      options.seed = seed;
      options.enforce_delaunay = !no_delaunay;
      options.ell = ell == "quadrature" ? mc::EllSampling::Quadrature : mc::EllSampling::Uniform;
      const auto report = part == "htc" ? mc::mc_htc_volume(n, lengths, options) : mc::mc_full_volume(n, lengths, options);
      const bool ok = std::abs(report.z_score) < sigma;
      for (const auto& w : report.warnings) err << "warning: " << w << '\n';
      if (mc_format == "json") {
        auto j = mc::to_json(report);
        j["sigma"] = sigma;
        j["passed"] = ok;
        out << j.dump(2) << '\n';
      } else {
        out << "estimate  " << format_double(report.estimate) << '\n'
            << "std_error " << format_double(report.std_error) << '\n'
            << "reference " << format_double(report.reference) << '\n'
            << "z_score   " << format_double(report.z_score) << '\n'
            << (ok ? "PASS" : "FAIL") << " |z| < " << format_double(sigma) << '\n';
      }
      return ok ? kExitOk : kExitVerificationFailed;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace wpvol::cli
