#include "wpvol/polytope.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace wpvol::mc {

int CornerMarking::ideal_at(int label) const {
  auto it = ideal.find(label);
  return it == ideal.end() ? 0 : it->second;
}

namespace {

void check_marking(const trees::Tree& t, const CornerMarking& marking) {
  for (const auto& [label, count] : marking.ideal) {
    if (!t.contains_label(label)) throw std::invalid_argument("marking names absent label " + std::to_string(label));
    if (count < 0 || count >= t.degree_of_label(label))
      throw std::invalid_argument("boundary " + std::to_string(label) + " needs 1 <= nonid <= deg");
  }
}

int dimension_formula(const trees::Tree& t, const CornerMarking& marking) {
  const auto boundary = t.boundary_labels();
  const int n = static_cast<int>(boundary.size()) + 1;
  int dim = 2 * n - 6;
  for (int v : t.inner_vertices()) dim += 3 - t.degree(v);
  for (int b : boundary) dim -= marking.ideal_at(b);
  return dim;
}

int dimension_rank(const trees::Tree& t, const CornerMarking& marking) {
  // Variables: phi on slots out of inner vertices, then w_{b,j} and v_{b,j}.
  std::vector<std::vector<int>> groups;
  int columns = 0;
  auto take = [&](int count) {
    std::vector<int> g;
    for (int i = 0; i < count; ++i) g.push_back(columns++);
    groups.push_back(std::move(g));
  };
  for (int v : t.inner_vertices()) take(t.degree(v));
  for (int b : t.boundary_labels()) {
    const int deg = t.degree_of_label(b);
    take(deg);
    take(deg - marking.ideal_at(b));
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : groups) {
    std::vector<Rational> row(static_cast<std::size_t>(columns));
    for (int c : g) row[c] = 1;
    rows.push_back(std::move(row));
  }
  return columns - matrix_rank(std::move(rows));
}

}  // namespace

int polytope_dimension(const trees::Tree& t, const CornerMarking& marking, DimensionMode mode) {
  check_marking(t, marking);
  return mode == DimensionMode::Formula ? dimension_formula(t, marking) : dimension_rank(t, marking);
}

std::vector<CornerMarking> corner_markings(const trees::Tree& t, int max_ideal) {
  std::vector<std::pair<int, int>> room;  // label, corners that may turn ideal
  for (int b : t.boundary_labels()) room.emplace_back(b, t.degree_of_label(b) - 1);
  std::vector<CornerMarking> out;
  CornerMarking current;
  auto extend = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == room.size()) {
      out.push_back(current);
      return;
    }
    const auto [label, cap] = room[i];
    for (int k = 0; k <= std::min(cap, budget); ++k) {
      if (k > 0) current.ideal[label] = k;
      self(self, i + 1, budget - k);
    }
    current.ideal.erase(label);
  };
  extend(extend, 0, max_ideal);
  return out;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

AnglePolytope::AnglePolytope(const trees::Tree& t) {
  const auto adjacency = t.adjacency();
  std::map<std::pair<int, int>, int> slot_of;
  for (int v : t.inner_vertices()) {
    block_begin_.push_back(static_cast<int>(slots_.size()));
    if (t.degree(v) != 3) top_dimensional_ = false;
    for (int w : adjacency[v]) {
      slot_of[{v, w}] = static_cast<int>(slots_.size());
      slots_.push_back({v, w});
    }
  }
  block_begin_.push_back(static_cast<int>(slots_.size()));
  for (const auto& [a, b] : t.edges())
    if (t.is_inner(a) && t.is_inner(b)) constraints_.emplace_back(slot_of.at({a, b}), slot_of.at({b, a}));
}

double AnglePolytope::block_volume() const {
  double volume = 1.0;
  for (std::size_t i = 0; i + 1 < block_begin_.size(); ++i) {
    const int free = block_begin_[i + 1] - block_begin_[i] - 1;
    volume *= std::pow(std::numbers::pi, free) / std::tgamma(free + 1.0);
  }
  return volume;
}

void AnglePolytope::sample(Philox4x32& rng, std::vector<double>& angles) const {
  angles.resize(slots_.size());
  for (std::size_t i = 0; i + 1 < block_begin_.size(); ++i) {
    double total = 0.0;
    for (int s = block_begin_[i]; s < block_begin_[i + 1]; ++s) {
      angles[s] = -std::log(rng.uniform());
      total += angles[s];
    }
    const double scale = std::numbers::pi / total;
    for (int s = block_begin_[i]; s < block_begin_[i + 1]; ++s) angles[s] *= scale;
  }
}

bool AnglePolytope::accepts(std::span<const double> angles) const {
  for (const auto& [a, b] : constraints_)
    if (!(angles[a] + angles[b] < std::numbers::pi)) return false;
  return true;
}

AngleSample sample_angle_polytope(const AnglePolytope& polytope, Philox4x32& rng) {
  AngleSample s;
  polytope.sample(rng, s.angles);
  s.accepted = polytope.accepts(s.angles);
  return s;
}

}  // namespace wpvol::mc
