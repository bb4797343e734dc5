#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpvol/tree.hpp"

namespace wpvol::trees {

// two-three: b1 in the first tree, b2 and b3 in the second.
// graph:     htc (with b1 isolated) together with full.
// htc:       a single tree on labels 2..n, stored with b1 as an isolated first component.
// full:      b1 | b2 split, each component with at least two boundary vertices.
enum class Family { TwoThree, Graph, Htc, Full };

Family parse_family(std::string_view name);
std::string to_string(Family f);

enum class InsertionOp {
  SubdivideEdge = 1,
  ReplaceInner = 2,
  AttachToBoundary = 3,
  AttachToInner = 4,
  AttachToEdge = 5,
};

struct Insertion {
  InsertionOp op;
  Tree tree;
};

struct DoubleInsertion {
  InsertionOp op;
  int component;  // 0 = first, 1 = second
  DoubleTree tree;
};

// All trees obtained by inserting a new boundary vertex `label` into t with one
// of the five moves.
std::vector<Insertion> insert_boundary(const Tree& t, int label);
std::vector<DoubleInsertion> insert_boundary(const DoubleTree& d, int label);

// All trees on the given boundary labels, sorted by canonical key.
std::vector<Tree> enumerate_trees(const std::vector<int>& labels);           // by insertion
std::vector<Tree> brute_force_trees(const std::vector<int>& labels);         // Pruefer codes

// Complete duplicate-free family listing, sorted by canonical key. Throws
// std::invalid_argument for n < 3.
std::vector<DoubleTree> enumerate(Family family, int n);

constexpr int kDefaultBruteForceBound = 7;
// Independent oracle for enumerate(). Throws std::out_of_range past `bound`.
std::vector<DoubleTree> brute_force_enumerate(Family family, int n, int bound = kDefaultBruteForceBound);

// The single element of the two-three family at n = 3.
DoubleTree two_three_base();

}  // namespace wpvol::trees
