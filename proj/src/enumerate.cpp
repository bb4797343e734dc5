#include "wpvol/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wpvol/parallel.hpp"

namespace wpvol::trees {

Family parse_family(std::string_view name) {
  if (name == "two-three") return Family::TwoThree;
  if (name == "graph") return Family::Graph;
  if (name == "htc") return Family::Htc;
  if (name == "full") return Family::Full;
  throw std::invalid_argument("unknown tree family '" + std::string(name) + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::TwoThree: return "two-three";
    case Family::Graph: return "graph";
    case Family::Htc: return "htc";
    case Family::Full: return "full";
  }
  return "?";
}

// -------------------------------------------------------------- insertion

std::vector<Insertion> insert_boundary(const Tree& t, int label) {
  if (label <= 0) throw std::invalid_argument("boundary labels are positive");
  if (t.contains_label(label)) throw std::invalid_argument("label " + std::to_string(label) + " already present");

  const int n = t.vertex_count();
  const auto& labels = t.vertex_labels();
  const auto& edges = t.edges();
  std::vector<Insertion> out;

  auto without_edge = [&](std::size_t skip) {
    std::vector<Edge> e;
    e.reserve(edges.size() + 2);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != skip) e.push_back(edges[i]);
    return e;
  };
  auto plus_vertices = [&](std::initializer_list<int> extra) {
    std::vector<int> l = labels;
    l.insert(l.end(), extra);
    return l;
  };

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    auto e = without_edge(i);
    e.emplace_back(a, n);
    e.emplace_back(n, b);
    out.push_back({InsertionOp::SubdivideEdge, Tree(plus_vertices({label}), std::move(e))});
  }
  for (int v = 0; v < n; ++v) {
    if (!t.is_inner(v)) continue;
    std::vector<int> l = labels;
    l[v] = label;
    out.push_back({InsertionOp::ReplaceInner, Tree(std::move(l), edges)});
  }
  for (int v = 0; v < n; ++v) {
    auto e = edges;
    e.emplace_back(v, n);
    out.push_back({t.is_inner(v) ? InsertionOp::AttachToInner : InsertionOp::AttachToBoundary,
                   Tree(plus_vertices({label}), std::move(e))});
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    auto e = without_edge(i);
    e.emplace_back(a, n);
    e.emplace_back(n, b);
    e.emplace_back(n, n + 1);
    out.push_back({InsertionOp::AttachToEdge, Tree(plus_vertices({0, label}), std::move(e))});
  }
  return out;
}

std::vector<DoubleInsertion> insert_boundary(const DoubleTree& d, int label) {
  if (d.first.contains_label(label) || d.second.contains_label(label))
    throw std::invalid_argument("label " + std::to_string(label) + " already present");
  std::vector<DoubleInsertion> out;
  for (auto& ins : insert_boundary(d.first, label)) out.push_back({ins.op, 0, DoubleTree{std::move(ins.tree), d.second}});
  for (auto& ins : insert_boundary(d.second, label)) out.push_back({ins.op, 1, DoubleTree{d.first, std::move(ins.tree)}});
  return out;
}

DoubleTree two_three_base() { return DoubleTree{Tree::single(1), Tree::edge(2, 3)}; }

// ---------------------------------------------------------------- helpers

namespace {

template <class T>
std::vector<T> sort_by_key(std::vector<std::pair<CanonicalKey, T>> keyed, bool duplicates_are_errors) {
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<T> out;
  out.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) {
      if (duplicates_are_errors) throw std::logic_error("enumeration produced a duplicate: " + keyed[i].first.bytes);
      continue;
    }
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

template <class T, class Expand>
std::vector<T> grow(std::vector<T> level, int label, Expand expand) {
  auto children = parallel_map<std::vector<std::pair<CanonicalKey, T>>>(level.size(), [&](std::size_t i) {
    std::vector<std::pair<CanonicalKey, T>> out;
    for (auto& child : expand(level[i], label)) out.emplace_back(canonical_key(child.tree), std::move(child.tree));
    return out;
  });
  std::vector<std::pair<CanonicalKey, T>> merged;
  for (auto& c : children)
    for (auto& kv : c) merged.push_back(std::move(kv));
  return sort_by_key(std::move(merged), true);
}

std::vector<int> label_range(int lo, int hi) {
  std::vector<int> out;
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

// Calls visit(S, complement) for every subset S of `pool`.
void for_each_split(const std::vector<int>& pool, const std::function<void(std::vector<int>, std::vector<int>)>& visit) {
  const std::size_t k = pool.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> in, out;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1U ? in : out).push_back(pool[i]);
    visit(std::move(in), std::move(out));
  }
}

std::vector<int> with(std::vector<int> labels, std::initializer_list<int> extra) {
  labels.insert(labels.end(), extra);
  std::sort(labels.begin(), labels.end());
  return labels;
}

using TreeSource = std::function<std::vector<Tree>(const std::vector<int>&)>;

std::vector<DoubleTree> products(const std::vector<Tree>& firsts, const std::vector<Tree>& seconds) {
  std::vector<DoubleTree> out;
  for (const auto& a : firsts)
    for (const auto& b : seconds) out.push_back(DoubleTree{a, b});
  return out;
}

std::vector<DoubleTree> family_by_splits(Family family, int n, const TreeSource& trees_on) {
  std::vector<DoubleTree> all;
  auto append = [&](std::vector<DoubleTree> more) {
    for (auto& d : more) all.push_back(std::move(d));
  };
  const bool htc = family == Family::Htc || family == Family::Graph;
  const bool full = family == Family::Full || family == Family::Graph;
  if (family == Family::TwoThree) {
    for_each_split(label_range(4, n), [&](std::vector<int> s, std::vector<int> rest) {
      append(products(trees_on(with(s, {1})), trees_on(with(rest, {2, 3}))));
    });
  }
  if (htc) append(products({Tree::single(1)}, trees_on(label_range(2, n))));
  if (full) {
    for_each_split(label_range(3, n), [&](std::vector<int> s, std::vector<int> rest) {
      if (s.empty() || rest.empty()) return;
      append(products(trees_on(with(s, {1})), trees_on(with(rest, {2}))));
    });
  }
  std::vector<std::pair<CanonicalKey, DoubleTree>> keyed;
  for (auto& d : all) {
    CanonicalKey key = canonical_key(d);
    keyed.emplace_back(std::move(key), std::move(d));
  }
  return sort_by_key(std::move(keyed), true);
}

// Decodes a Pruefer sequence over vertices 0..N-1.
std::vector<Edge> pruefer_edges(const std::vector<int>& seq, int vertex_count) {
  std::vector<int> degree(vertex_count, 1);
  for (int s : seq) ++degree[s];
  std::vector<Edge> edges;
  edges.reserve(vertex_count - 1);
  for (int s : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  int u = -1;
  for (int v = 0; v < vertex_count; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

}  // namespace

// ------------------------------------------------------------ enumeration

std::vector<Tree> enumerate_trees(const std::vector<int>& labels_in) {
  if (labels_in.empty()) throw std::invalid_argument("no boundary labels");
  std::vector<int> labels = labels_in;
  std::sort(labels.begin(), labels.end());
  if (labels.size() == 1) return {Tree::single(labels[0])};
  std::vector<Tree> level{Tree::edge(labels[0], labels[1])};
  for (std::size_t i = 2; i < labels.size(); ++i)
    level = grow(std::move(level), labels[i], [](const Tree& t, int l) { return insert_boundary(t, l); });
  return level;
}

std::vector<Tree> brute_force_trees(const std::vector<int>& labels_in) {
  if (labels_in.empty()) throw std::invalid_argument("no boundary labels");
  std::vector<int> labels = labels_in;
  std::sort(labels.begin(), labels.end());
  const int boundary = static_cast<int>(labels.size());
  if (boundary == 1) return {Tree::single(labels[0])};

  std::vector<std::pair<CanonicalKey, Tree>> found;
  for (int inner = 0; inner <= boundary - 2; ++inner) {
    const int vertex_count = boundary + inner;
    std::vector<int> vertex_labels = labels;
    vertex_labels.resize(vertex_count, 0);
    if (vertex_count == 2) {
      found.emplace_back(canonical_key(Tree::edge(labels[0], labels[1])), Tree::edge(labels[0], labels[1]));
      continue;
    }
    const int length = vertex_count - 2;
    std::vector<int> seq(length);
    std::vector<int> count(vertex_count, 0);
    // Inner vertices need degree >= 3, i.e. at least two occurrences.
    auto missing = [&] {
      int m = 0;
      for (int v = boundary; v < vertex_count; ++v) m += std::max(0, 2 - count[v]);
      return m;
    };
    std::function<void(int)> fill = [&](int pos) {
      if (missing() > length - pos) return;
      if (pos == length) {
        Tree t(vertex_labels, pruefer_edges(seq, vertex_count));
        CanonicalKey key = canonical_key(t);
        found.emplace_back(std::move(key), std::move(t));
        return;
      }
      for (int v = 0; v < vertex_count; ++v) {
        seq[pos] = v;
        ++count[v];
        fill(pos + 1);
        --count[v];
      }
    };
    fill(0);
  }
  return sort_by_key(std::move(found), false);
}

std::vector<DoubleTree> enumerate(Family family, int n) {
  if (n < 3) throw std::invalid_argument("tree families need n >= 3");
  if (family != Family::TwoThree) return family_by_splits(family, n, enumerate_trees);
  std::vector<DoubleTree> level{two_three_base()};
  for (int label = 4; label <= n; ++label)
    level = grow(std::move(level), label, [](const DoubleTree& d, int l) { return insert_boundary(d, l); });
  return level;
}

std::vector<DoubleTree> brute_force_enumerate(Family family, int n, int bound) {
  if (n < 3) throw std::invalid_argument("tree families need n >= 3");
  if (n > bound) throw std::out_of_range("brute-force enumeration limited to n <= " + std::to_string(bound));
  return family_by_splits(family, n, brute_force_trees);
}

}  // namespace wpvol::trees
