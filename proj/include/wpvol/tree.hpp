#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wpvol::trees {

using Edge = std::pair<int, int>;

// Combinatorial (non-plane) tree with labeled boundary vertices and anonymous
// inner vertices. vertex_labels()[v] > 0 is a boundary label, 0 marks an inner
// vertex. The constructor rejects anything that is not a valid tree:
// disconnected, cyclic, repeated labels, or an inner vertex of degree < 3.
class Tree {
 public:
  Tree(std::vector<int> vertex_labels, std::vector<Edge> edges);

  static Tree single(int label);
  static Tree edge(int a, int b);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& vertex_labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int label(int v) const { return labels_[v]; }
  bool is_inner(int v) const { return labels_[v] == 0; }
  int degree(int v) const { return degrees_[v]; }

  // Vertex index carrying `label`, or -1.
  int vertex_of(int label) const;
  bool contains_label(int label) const { return vertex_of(label) >= 0; }
  int degree_of_label(int label) const;

  std::vector<int> boundary_labels() const;  // ascending
  std::vector<int> inner_vertices() const;
  int inner_count() const;
  std::vector<std::vector<int>> adjacency() const;

 private:
  std::vector<int> labels_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

// Ordered pair of trees: b1 lives in `first`, b2 in `second`.
struct DoubleTree {
  Tree first;
  Tree second;

  int degree_of_label(int label) const;
  std::vector<int> inner_degrees() const;
};

// Byte string identifying a tree up to isomorphism of boundary-labeled graphs.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const Tree& t);
CanonicalKey canonical_key(const DoubleTree& d);

// Number of plane embeddings: product over vertices of (deg - 1)!.
std::uint64_t plane_embedding_count(const Tree& t);
std::uint64_t plane_embedding_count(const DoubleTree& d);

nlohmann::json to_json(const Tree& t);
nlohmann::json to_json(const DoubleTree& d);

}  // namespace wpvol::trees
