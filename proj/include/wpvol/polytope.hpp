#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "wpvol/philox.hpp"
#include "wpvol/rational.hpp"
#include "wpvol/tree.hpp"

namespace wpvol::mc {

// Number of ideal corners per boundary label; absent labels have none.
struct CornerMarking {
  std::map<int, int> ideal;
  friend bool operator==(const CornerMarking&, const CornerMarking&) = default;
  int ideal_at(int label) const;
};

enum class DimensionMode {
  Formula,  // 2n - 6 + sum_v (3 - deg v) + sum_b (nonid(b) - deg(b))
  Rank,     // variables minus rank of the equality constraints, over Q
};

// Dimension of the half-tight polytope of a tree on boundary labels 2..n
// (n = number of boundary vertices + 1). Throws std::invalid_argument if a
// marking leaves a boundary vertex without non-ideal corners or exceeds deg(b).
int polytope_dimension(const trees::Tree& t, const CornerMarking& marking, DimensionMode mode = DimensionMode::Formula);

// Distinct markings with at most max_ideal ideal corners in total, each
// boundary vertex keeping at least one non-ideal corner.
std::vector<CornerMarking> corner_markings(const trees::Tree& t, int max_ideal);

// Rank of a dense matrix over Q by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows);

// Angle coordinates of one tree: per inner vertex a simplex of size pi, plus
// the Delaunay constraint phi(e->) + phi(e<-) < pi on every inner-inner edge.
class AnglePolytope {
 public:
  struct Slot {
    int vertex;
    int neighbor;
  };

  explicit AnglePolytope(const trees::Tree& t);

  const std::vector<Slot>& slots() const { return slots_; }
  // Slot range [block_begin[i], block_begin[i + 1]) belongs to inner vertex i.
  const std::vector<int>& block_begin() const { return block_begin_; }
  const std::vector<std::pair<int, int>>& constraints() const { return constraints_; }
  bool has_constraints() const { return !constraints_.empty(); }
  bool top_dimensional() const { return top_dimensional_; }
  // Lebesgue volume of the product of angle simplices, pi^{deg-1}/(deg-1)! each.
  double block_volume() const;

  // Fills `angles` with a uniform point of the product of simplices.
  void sample(Philox4x32& rng, std::vector<double>& angles) const;
  bool accepts(std::span<const double> angles) const;

 private:
  std::vector<Slot> slots_;
  std::vector<int> block_begin_;
  std::vector<std::pair<int, int>> constraints_;
  bool top_dimensional_ = true;
};

struct AngleSample {
  std::vector<double> angles;
  bool accepted;
};

AngleSample sample_angle_polytope(const AnglePolytope& polytope, Philox4x32& rng);

}  // namespace wpvol::mc
