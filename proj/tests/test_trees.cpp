#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "wpvol/enumerate.hpp"

using namespace wpvol::trees;

namespace {

// Family sizes from an independent brute-force count, n = 3..6.
const std::map<Family, std::vector<std::size_t>> kFrozenCounts{
    {Family::TwoThree, {1, 5, 44, 572}},
    {Family::Htc, {1, 4, 32, 396}},
    {Family::Full, {0, 2, 24, 352}},
    {Family::Graph, {1, 6, 56, 748}},
};

std::set<std::string> keys(const std::vector<DoubleTree>& family) {
  std::set<std::string> out;
  for (const auto& d : family) out.insert(canonical_key(d).bytes);
  return out;
}

// Same tree with vertex indices permuted.
Tree shuffled(const Tree& t, gen::Source& src) {
  std::vector<int> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), src.engine());
  std::vector<int> labels(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) labels[perm[v]] = t.label(v);
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) edges.emplace_back(src.coin() ? Edge{perm[a], perm[b]} : Edge{perm[b], perm[a]});
  std::shuffle(edges.begin(), edges.end(), src.engine());
  return Tree(labels, edges);
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_NOTHROW(Tree({1, 2, 0, 3}, {{0, 2}, {1, 2}, {3, 2}}));
  CHECK_THROWS_AS(Tree({1, 2, 3}, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);         // cycle
  CHECK_THROWS_AS(Tree({1, 2, 3, 4}, {{0, 1}, {2, 3}}), std::invalid_argument);              // disconnected
  CHECK_THROWS_AS(Tree({1, 1}, {{0, 1}}), std::invalid_argument);                            // repeated label
  CHECK_THROWS_AS(Tree({1, 0, 2}, {{0, 1}, {1, 2}}), std::invalid_argument);                 // inner degree 2
  CHECK_THROWS_AS(Tree({1, 2, 0, 3, 0}, {{0, 2}, {1, 2}, {3, 2}, {4, 2}}), std::invalid_argument);  // inner leaf
  CHECK_THROWS_AS(Tree({1, 2}, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree({1, -2}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("tree accessors") {
  const Tree star({0, 2, 3, 4, 5}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(star.inner_count() == 1);
  CHECK(star.degree_of_label(3) == 1);
  CHECK(star.boundary_labels() == std::vector<int>{2, 3, 4, 5});
  CHECK(plane_embedding_count(star) == 6);
  const Tree path = Tree({2, 3, 4}, {{0, 1}, {1, 2}});
  CHECK(plane_embedding_count(path) == 1);
  CHECK(path.degree_of_label(3) == 2);
  CHECK(Tree::single(1).edges().empty());
}

TEST_CASE("canonical key separates and identifies") {
  const Tree a({2, 3, 4}, {{0, 1}, {1, 2}});  // 2-3-4
  const Tree b({2, 3, 4}, {{0, 2}, {2, 1}});  // 2-4-3
  const Tree c({4, 3, 2}, {{2, 1}, {1, 0}});  // 2-3-4 with other indices
  CHECK(canonical_key(a) == canonical_key(c));
  CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("property: canonical key ignores vertex numbering") {
  gen::Source src(11);
  for (auto family : {Family::Htc, Family::TwoThree}) {
    for (const auto& d : enumerate(family, 6)) {
      if (!src.coin()) continue;
      const Tree t = shuffled(d.second, src);
      CHECK(canonical_key(t) == canonical_key(d.second));
    }
  }
}

TEST_CASE("frozen family counts") {
  for (const auto& [family, counts] : kFrozenCounts) {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(to_string(family));
      CAPTURE(n);
      CHECK(enumerate(family, n).size() == counts[n - 3]);
    }
  }
}

TEST_CASE("insertion and brute-force enumerators agree") {
  for (auto family : {Family::TwoThree, Family::Htc, Family::Full, Family::Graph}) {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(to_string(family));
      CAPTURE(n);
      CHECK(keys(enumerate(family, n)) == keys(brute_force_enumerate(family, n)));
    }
  }
  std::vector<int> labels{2, 3, 4, 5, 6, 7};
  std::set<std::string> a;
  std::set<std::string> b;
  for (const auto& t : enumerate_trees(labels)) a.insert(canonical_key(t).bytes);
  for (const auto& t : brute_force_trees(labels)) b.insert(canonical_key(t).bytes);
  CHECK(a == b);
  CHECK(a.size() == enumerate_trees(labels).size());
}

TEST_CASE("enumeration is duplicate-free and sorted") {
  for (int n = 3; n <= 6; ++n) {
    const auto family = enumerate(Family::TwoThree, n);
    CHECK(keys(family).size() == family.size());
    CHECK(std::is_sorted(family.begin(), family.end(),
                         [](const DoubleTree& x, const DoubleTree& y) { return canonical_key(x) < canonical_key(y); }));
  }
}

TEST_CASE("insertion moves on the n=3 element") {
  std::map<InsertionOp, int> per_op;
  for (const auto& ins : insert_boundary(two_three_base(), 4)) ++per_op[ins.op];
  CHECK(per_op[InsertionOp::SubdivideEdge] == 1);
  CHECK(per_op[InsertionOp::ReplaceInner] == 0);
  CHECK(per_op[InsertionOp::AttachToBoundary] == 3);
  CHECK(per_op[InsertionOp::AttachToInner] == 0);
  CHECK(per_op[InsertionOp::AttachToEdge] == 1);

  const Tree star({0, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}});
  std::map<InsertionOp, int> star_ops;
  for (const auto& ins : insert_boundary(star, 5)) ++star_ops[ins.op];
  CHECK(star_ops[InsertionOp::SubdivideEdge] == 3);
  CHECK(star_ops[InsertionOp::ReplaceInner] == 1);
  CHECK(star_ops[InsertionOp::AttachToBoundary] == 3);
  CHECK(star_ops[InsertionOp::AttachToInner] == 1);
  CHECK(star_ops[InsertionOp::AttachToEdge] == 3);
}

TEST_CASE("family shapes") {
  for (const auto& d : enumerate(Family::TwoThree, 5)) {
    CHECK(d.first.contains_label(1));
    CHECK(d.second.contains_label(2));
    CHECK(d.second.contains_label(3));
  }
  for (const auto& d : enumerate(Family::Htc, 5)) CHECK(d.first.vertex_count() == 1);
  for (const auto& d : enumerate(Family::Full, 5)) {
    CHECK(d.first.boundary_labels().size() >= 2);
    CHECK(d.second.boundary_labels().size() >= 2);
    CHECK(d.first.contains_label(1));
    CHECK(d.second.contains_label(2));
  }
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate(Family::TwoThree, 2), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_enumerate(Family::TwoThree, 8), std::out_of_range);
  CHECK_THROWS_AS(parse_family("three-two"), std::invalid_argument);
  CHECK(parse_family("two-three") == Family::TwoThree);
  CHECK(to_string(Family::Full) == "full");
}

TEST_CASE("json form") {
  const auto j = to_json(enumerate(Family::TwoThree, 3).front());
  CHECK(j.contains("first"));
  CHECK(j["second"]["edges"].size() == 1);
  CHECK(j["second"]["plane_embedding_count"] == 1);
  CHECK(j.dump() == to_json(two_three_base()).dump());
}
