#include "wpvol/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wpvol/enumerate.hpp"
#include "wpvol/parallel.hpp"
#include "wpvol/polytope.hpp"
#include "wpvol/volume.hpp"

namespace wpvol::mc {

namespace {

constexpr std::uint64_t kChunk = 1U << 14;
constexpr std::uint32_t kFullStreamBase = 1U << 20;

// Neumaier-compensated running sum.
struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

double simplex(double size, int dim_plus_one) {
  const int k = dim_plus_one - 1;
  return std::pow(size, k) / std::tgamma(k + 1.0);
}

void validate(int n, const std::vector<double>& lengths, const McOptions& options) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (static_cast<int>(lengths.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " lengths, got " + std::to_string(lengths.size()));
  for (double l : lengths)
    if (!(l > 0.0) || !std::isfinite(l)) throw std::invalid_argument("lengths must be positive and finite");
  if (!(lengths[0] < lengths[1])) throw std::invalid_argument("Monte Carlo needs L1 < L2");
  if (options.samples < 1) throw std::invalid_argument("samples must be >= 1");
}

std::map<Atom, double> bindings(const std::vector<double>& lengths) {
  std::map<Atom, double> b{{Atom::pi_squared(), std::numbers::pi * std::numbers::pi}};
  for (std::size_t i = 0; i < lengths.size(); ++i) b[Atom::length(static_cast<int>(i) + 1)] = lengths[i] * lengths[i];
  return b;
}

bool trivalent(const trees::DoubleTree& d) {
  for (int deg : d.inner_degrees())
    if (deg != 3) return false;
  return true;
}

// One sampled or exact tree of either part.
struct Job {
  TreeEstimate info;
  std::uint32_t stream = 0;
  std::vector<AnglePolytope> polytopes;
  bool full = false;
  int deg1 = 0;
  int deg2 = 0;
  bool sampled = false;
};

struct ChunkResult {
  std::uint64_t accepted = 0;
  Accumulator sum;
  Accumulator sum_sq;
};

class Estimator {
 public:
  Estimator(const std::vector<double>& lengths, const McOptions& options) : lengths_(lengths), options_(options) {
    quadrature_ = gauss_legendre(static_cast<int>(lengths.size()) + 2, 0.0, lengths[0]);
  }

  void add_htc(int n) {
    const auto family = trees::enumerate(trees::Family::Htc, n);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& d = family[i];
      if (!trivalent(d)) continue;
      Job job;
      job.info.part = "htc";
      job.info.key = trees::canonical_key(d.second).bytes;
      job.info.plane_embeddings = trees::plane_embedding_count(d.second);
      job.stream = static_cast<std::uint32_t>(i);
      job.polytopes.emplace_back(d.second);
      double w = static_cast<double>(job.info.plane_embeddings) * std::ldexp(1.0, n - 3) * job.polytopes[0].block_volume();
      for (int b : d.second.boundary_labels()) {
        const int deg = d.second.degree_of_label(b);
        const double l = lengths_[b - 1];
        if (b == 2) {
          w *= simplex((l - lengths_[0]) / 2, deg) * simplex((l + lengths_[0]) / 2, deg);
        } else {
          w *= simplex(l / 2, deg) * simplex(l / 2, deg);
        }
      }
      job.info.closed_weight = w;
      job.sampled = options_.enforce_delaunay && job.polytopes[0].has_constraints();
      jobs_.push_back(std::move(job));
    }
  }

  void add_full(int n) {
    const auto family = trees::enumerate(trees::Family::Full, n);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& d = family[i];
      if (!trivalent(d)) continue;
      Job job;
      job.info.part = "full";
      job.info.key = trees::canonical_key(d).bytes;
      job.info.plane_embeddings = trees::plane_embedding_count(d);
      job.stream = kFullStreamBase + static_cast<std::uint32_t>(i);
      job.full = true;
      job.deg1 = d.degree_of_label(1);
      job.deg2 = d.degree_of_label(2);
      job.polytopes.emplace_back(d.first);
      job.polytopes.emplace_back(d.second);
      double w = static_cast<double>(job.info.plane_embeddings) * std::ldexp(1.0, n - 4) *
                 job.polytopes[0].block_volume() * job.polytopes[1].block_volume();
      for (const auto* t : {&d.first, &d.second}) {
        for (int b : t->boundary_labels()) {
          if (b == 1 || b == 2) continue;
          const int deg = t->degree_of_label(b);
          w *= simplex(lengths_[b - 1] / 2, deg) * simplex(lengths_[b - 1] / 2, deg);
        }
      }
      job.info.closed_weight = w;
      const bool angles = options_.enforce_delaunay && (job.polytopes[0].has_constraints() || job.polytopes[1].has_constraints());
      job.sampled = angles || options_.ell == EllSampling::Uniform;
      jobs_.push_back(std::move(job));
    }
  }

  // Simplex volumes of b1 and b2 at fiber length l.
  double fiber(const Job& job, double l) const {
    const double l1 = lengths_[0];
    const double l2 = lengths_[1];
    return simplex((l1 - l) / 2, job.deg1) * simplex((l1 + l) / 2, job.deg1) * simplex((l2 - l) / 2, job.deg2) *
           simplex((l2 + l) / 2, job.deg2);
  }

  double fiber_integral(const Job& job) const {
    Accumulator acc;
    for (const auto& [x, w] : quadrature_) acc.add(w * x * fiber(job, x));
    return acc.value();
  }

  void run() {
    struct Work {
      std::size_t job;
      std::uint32_t chunk;
    };
    std::vector<Work> work;
    const std::uint64_t chunks = (options_.samples + kChunk - 1) / kChunk;
    for (std::size_t j = 0; j < jobs_.size(); ++j)
      if (jobs_[j].sampled)
        for (std::uint64_t c = 0; c < chunks; ++c) work.push_back({j, static_cast<std::uint32_t>(c)});

    std::vector<ChunkResult> results(work.size());
    parallel_for(work.size(), [&](std::size_t w) {
      const Job& job = jobs_[work[w].job];
      const std::uint64_t begin = static_cast<std::uint64_t>(work[w].chunk) * kChunk;
      const std::uint64_t count = std::min(kChunk, options_.samples - begin);
      results[w] = run_chunk(job, work[w].chunk, count);
    });

    std::size_t w = 0;
    for (auto& job : jobs_) {
      if (!job.sampled) {
        finish_exact(job);
        continue;
      }
      ChunkResult total;
      for (; w < work.size() && &jobs_[work[w].job] == &job; ++w) {
        total.accepted += results[w].accepted;
        total.sum.add(results[w].sum.value());
        total.sum_sq.add(results[w].sum_sq.value());
      }
      finish_sampled(job, total);
    }
  }

  const std::vector<Job>& jobs() const { return jobs_; }

 private:
  ChunkResult run_chunk(const Job& job, std::uint32_t chunk, std::uint64_t count) const {
    Philox4x32 rng(options_.seed, job.stream, chunk);
    ChunkResult out;
    std::vector<double> angles;
    const bool check = options_.enforce_delaunay;
    const double exact_fiber = job.full && options_.ell == EllSampling::Quadrature ? fiber_integral(job) : 0.0;
    for (std::uint64_t s = 0; s < count; ++s) {
      bool ok = true;
      for (const auto& p : job.polytopes) {
        if (!check || !p.has_constraints()) continue;
        p.sample(rng, angles);
        ok = ok && p.accepts(angles);
      }
      if (ok) ++out.accepted;
      if (!job.full) continue;
      double x = 0.0;
      if (options_.ell == EllSampling::Quadrature) {
        x = ok ? exact_fiber : 0.0;
      } else {
        const double l = lengths_[0] * rng.uniform();
        x = ok ? lengths_[0] * l * fiber(job, l) : 0.0;
      }
      out.sum.add(x);
      out.sum_sq.add(x * x);
    }
    return out;
  }

  void finish_exact(Job& job) const {
    job.info.samples = 0;
    job.info.std_error = 0.0;
    job.info.estimate = job.full ? job.info.closed_weight * fiber_integral(job) : job.info.closed_weight;
  }

  void finish_sampled(Job& job, const ChunkResult& total) const {
    const double s = static_cast<double>(options_.samples);
    job.info.samples = options_.samples;
    job.info.accepted = total.accepted;
    double mean = 0.0;
    double var = 0.0;
    if (job.full) {
      mean = total.sum.value() / s;
      var = options_.samples > 1 ? std::max(0.0, (total.sum_sq.value() - s * mean * mean) / (s - 1)) : 0.0;
    } else {
      mean = static_cast<double>(total.accepted) / s;
      var = options_.samples > 1 ? mean * (1 - mean) * s / (s - 1) : 0.0;
    }
    job.info.estimate = job.info.closed_weight * mean;
    job.info.std_error = job.info.closed_weight * std::sqrt(var / s);
  }

  std::vector<double> lengths_;
  McOptions options_;
  std::vector<std::pair<double, double>> quadrature_;
  std::vector<Job> jobs_;
};

McReport summarize(int n, const std::vector<double>& lengths, const McOptions& options, const Estimator& est,
                   double reference) {
  McReport r;
  r.n = n;
  r.lengths = lengths;
  r.samples = options.samples;
  r.seed = options.seed;
  r.reference = reference;
  r.enforce_delaunay = options.enforce_delaunay;
  Accumulator total;
  Accumulator htc;
  Accumulator full;
  double variance = 0.0;
  for (const auto& job : est.jobs()) {
    total.add(job.info.estimate);
    (job.full ? full : htc).add(job.info.estimate);
    variance += job.info.std_error * job.info.std_error;
    if (job.info.samples > 0 && job.info.accepted == 0)
      r.warnings.push_back("zero acceptance for " + job.info.part + " tree " + job.info.key);
    r.per_tree.push_back(job.info);
  }
  r.estimate = total.value();
  r.htc_estimate = htc.value();
  r.full_estimate = full.value();
  r.std_error = std::sqrt(variance);
  const double diff = r.estimate - r.reference;
  if (r.std_error > 0.0) {
    r.z_score = diff / r.std_error;
  } else if (std::abs(diff) <= 1e-9 * std::max(1.0, std::abs(r.reference))) {
    r.z_score = 0.0;
  } else {
    r.z_score = std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  return r;
}

}  // namespace

McReport mc_htc_volume(int n, const std::vector<double>& lengths, const McOptions& options) {
  validate(n, lengths, options);
  Estimator est(lengths, options);
  est.add_htc(n);
  est.run();
  return summarize(n, lengths, options, est, evaluate(volume::htc_volume(n).value, bindings(lengths)));
}

McReport mc_full_volume(int n, const std::vector<double>& lengths, const McOptions& options) {
  validate(n, lengths, options);
  Estimator est(lengths, options);
  est.add_htc(n);
  est.add_full(n);
  est.run();
  return summarize(n, lengths, options, est, evaluate(volume::v0n_reduced(n), bindings(lengths)));
}

std::vector<std::pair<double, double>> gauss_legendre(int points, double a, double b) {
  if (points < 1) throw std::invalid_argument("quadrature needs at least one point");
  std::vector<std::pair<double, double>> out;
  const long double half = (static_cast<long double>(b) - a) / 2;
  const long double mid = (static_cast<long double>(b) + a) / 2;
  for (int i = 1; i <= points; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i - 0.25L) / (points + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1);
      const long double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    const long double w = 2 / ((1 - x * x) * dp * dp);
    out.emplace_back(static_cast<double>(mid + half * x), static_cast<double>(half * w));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const McReport& r) {
  nlohmann::json per_tree = nlohmann::json::array();
  for (const auto& t : r.per_tree) {
    per_tree.push_back({{"part", t.part},
                        {"key", t.key},
                        {"plane_embeddings", t.plane_embeddings},
                        {"closed_weight", t.closed_weight},
                        {"samples", t.samples},
                        {"accepted", t.accepted},
                        {"estimate", t.estimate},
                        {"std_error", t.std_error}});
  }
  nlohmann::json z = std::isfinite(r.z_score) ? nlohmann::json(r.z_score) : nlohmann::json(r.z_score > 0 ? "inf" : "-inf");
  return {{"n", r.n},
          {"lengths", r.lengths},
          {"estimate", r.estimate},
          {"std_error", r.std_error},
          {"samples", r.samples},
          {"seed", r.seed},
          {"reference", r.reference},
          {"z_score", z},
          {"delaunay", r.enforce_delaunay},
          {"htc_estimate", r.htc_estimate},
          {"full_estimate", r.full_estimate},
          {"warnings", r.warnings},
          {"per_tree", per_tree}};
}

}  // namespace wpvol::mc
