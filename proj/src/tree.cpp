#include "wpvol/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace wpvol::trees {

Tree::Tree(std::vector<int> vertex_labels, std::vector<Edge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)), degrees_(labels_.size(), 0) {
  const int n = vertex_count();
  if (n == 0) throw std::invalid_argument("tree without vertices");
  if (static_cast<int>(edges_.size()) != n - 1)
    throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                                " edges");
  std::set<int> seen;
  for (int l : labels_) {
    if (l < 0) throw std::invalid_argument("negative boundary label");
    if (l > 0 && !seen.insert(l).second) throw std::invalid_argument("repeated boundary label " + std::to_string(l));
  }
  // Union-find: n - 1 edges and no cycle means connected.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("malformed edge");
    if (a > b) std::swap(a, b);
    const int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("edge set contains a cycle");
    parent[ra] = rb;
    ++degrees_[a];
    ++degrees_[b];
  }
  for (int v = 0; v < n; ++v)
    if (labels_[v] == 0 && degrees_[v] < 3)
      throw std::invalid_argument("inner vertex of degree " + std::to_string(degrees_[v]));
}

Tree Tree::single(int label) { return Tree({label}, {}); }

Tree Tree::edge(int a, int b) { return Tree({a, b}, {{0, 1}}); }

int Tree::vertex_of(int label) const {
  if (label <= 0) return -1;
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

int Tree::degree_of_label(int label) const {
  const int v = vertex_of(label);
  if (v < 0) throw std::out_of_range("label " + std::to_string(label) + " not in tree");
  return degrees_[v];
}

std::vector<int> Tree::boundary_labels() const {
  std::vector<int> out;
  for (int l : labels_)
    if (l > 0) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Tree::inner_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_inner(v)) out.push_back(v);
  return out;
}

int Tree::inner_count() const { return static_cast<int>(std::count(labels_.begin(), labels_.end(), 0)); }

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(labels_.size());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

int DoubleTree::degree_of_label(int label) const {
  if (first.contains_label(label)) return first.degree_of_label(label);
  return second.degree_of_label(label);
}

std::vector<int> DoubleTree::inner_degrees() const {
  std::vector<int> out;
  for (const Tree* t : {&first, &second})
    for (int v : t->inner_vertices()) out.push_back(t->degree(v));
  return out;
}

// ------------------------------------------------------------------- keys

CanonicalKey canonical_key(const Tree& t) {
  const auto labels = t.boundary_labels();
  if (labels.empty()) throw std::invalid_argument("tree without boundary vertices");
  const auto adj = t.adjacency();
  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> children;
    for (int w : adj[v])
      if (w != parent) children.push_back(encode(w, v));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    s += t.is_inner(v) ? std::string("v") : "b" + std::to_string(t.label(v));
    for (const auto& c : children) s += c;
    s += ")";
    return s;
  };
  return {encode(t.vertex_of(labels.front()), -1)};
}

CanonicalKey canonical_key(const DoubleTree& d) {
  return {canonical_key(d.first).bytes + "|" + canonical_key(d.second).bytes};
}

std::uint64_t plane_embedding_count(const Tree& t) {
  std::uint64_t count = 1;
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int k = 2; k < t.degree(v); ++k) count *= static_cast<std::uint64_t>(k);
  return count;
}

std::uint64_t plane_embedding_count(const DoubleTree& d) {
  return plane_embedding_count(d.first) * plane_embedding_count(d.second);
}

nlohmann::json to_json(const Tree& t) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < t.vertex_count(); ++v) {
    nlohmann::json vj{{"id", v}, {"kind", t.is_inner(v) ? "inner" : "boundary"}, {"degree", t.degree(v)}};
    if (!t.is_inner(v)) vj["label"] = t.label(v);
    vertices.push_back(std::move(vj));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
  return {{"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"key", canonical_key(t).bytes},
          {"plane_embedding_count", plane_embedding_count(t)}};
}

nlohmann::json to_json(const DoubleTree& d) {
  return {{"first", to_json(d.first)},
          {"second", to_json(d.second)},
          {"key", canonical_key(d).bytes},
          {"plane_embedding_count", plane_embedding_count(d)}};
}

}  // namespace wpvol::trees
