#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "modcat/counting.hpp"
#include "modcat/plane_tree.hpp"

using namespace modcat;

namespace {

// Generic pattern embedding: pattern leaves match anything, pattern nodes
// need a node with both child embeddings in place. Used only to cross-check
// the left-chain implementation of comb containment.
bool embeds_at(const BinaryTree& pattern, const BinaryTree& host) {
  if (pattern.is_leaf()) return true;
  if (host.is_leaf()) return false;
  return embeds_at(pattern.left(), host.left()) && embeds_at(pattern.right(), host.right());
}

bool embeds_anywhere(const BinaryTree& pattern, const BinaryTree& host) {
  if (embeds_at(pattern, host)) return true;
  if (host.is_leaf()) return false;
  return embeds_anywhere(pattern, host.left()) || embeds_anywhere(pattern, host.right());
}

// All sequences of n+1 nonnegative integers summing to n.
template <class F>
void for_each_composition(int n, F&& visit) {
  std::vector<int> seq(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n) {
      seq[static_cast<std::size_t>(n)] = remaining;
      visit(static_cast<const std::vector<int>&>(seq));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      seq[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
}

BinaryTree random_tree(int n, std::mt19937& rng) {
  if (n == 0) return leaf();
  std::uniform_int_distribution<int> split(0, n - 1);
  int i = split(rng);
  return wedge(random_tree(i, rng), random_tree(n - 1 - i, rng));
}

}  // namespace

TEST_CASE("wedge and combs") {
  CHECK(wedge(leaf(), leaf()).internal_count() == 1);
  CHECK(wedge(leaf(), leaf()) == comb(1));
  for (int k = 1; k <= 6; ++k) CHECK(comb(k) == wedge(comb(k - 1), leaf()));
  CHECK(wedge(comb(2), comb(3)).leaf_count() == comb(2).leaf_count() + comb(3).leaf_count());
  CHECK(left_depth(wedge(comb(1), leaf())) == LeftDepth{2, 1, 0});
}

TEST_CASE("left depth of the five three-node trees") {
  CHECK(left_depth(parse_tree("(((0 1) 2) 3)")) == LeftDepth{3, 2, 1, 0});
  CHECK(left_depth(parse_tree("((0 1) (2 3))")) == LeftDepth{2, 1, 1, 0});
  CHECK(left_depth(parse_tree("((0 (1 2)) 3)")) == LeftDepth{2, 2, 1, 0});
  CHECK(left_depth(parse_tree("(0 ((1 2) 3))")) == LeftDepth{1, 2, 1, 0});
  CHECK(left_depth(parse_tree("(0 (1 (2 3)))")) == LeftDepth{1, 1, 1, 0});
  CHECK(left_depth(leaf()) == LeftDepth{0});
}

TEST_CASE("left depth of left combs") {
  for (int n = 0; n <= 8; ++n) {
    LeftDepth expected;
    for (int i = n; i >= 0; --i) expected.push_back(i);
    CHECK(left_depth(comb(n)) == expected);
  }
}

TEST_CASE("from_left_depth inverts left_depth") {
  CHECK(from_left_depth({1, 2, 1, 0}) == parse_tree("(0 ((1 2) 3))"));
  CHECK(from_left_depth({0}) == leaf());
  for_each_binary_tree(8, [](const BinaryTree& t) {  // all 1430 trees
    REQUIRE(from_left_depth(left_depth(t)) == t);
  });
}

TEST_CASE("from_left_depth rejects invalid sequences by index") {
  CHECK_THROWS_WITH(from_left_depth({2, 1}), Catch::Matchers::ContainsSubstring("index 1"));
  CHECK_THROWS_WITH(from_left_depth({1, 3, 1, 0}),
                    Catch::Matchers::ContainsSubstring("index 2"));
  CHECK_THROWS_WITH(from_left_depth({3, 1, 1, 0}),
                    Catch::Matchers::ContainsSubstring("index 1"));
  CHECK_THROWS_WITH(from_left_depth({1, 0, 1, 0}),
                    Catch::Matchers::ContainsSubstring("index 1"));
  CHECK(first_left_depth_violation({2, 2, 1, 0}) == -1);
}

TEST_CASE("binary_to_plane on the nine-leaf example") {
  BinaryTree t = parse_tree("(((0 ((1 (2 3)) 4)) 5) ((6 7) 8))");
  MultiDegree d = binary_to_plane(t);
  CHECK(d == MultiDegree{3, 2, 1, 0, 0, 0, 2, 0, 0});
  // node degrees and leaf depths tie together: delta_i = d_0 + ... + d_i - i
  LeftDepth delta = left_depth(t);
  int sum = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    sum += d[static_cast<std::size_t>(i)];
    CHECK(delta[static_cast<std::size_t>(i)] == sum - i);
  }
}

TEST_CASE("binary_to_plane basics") {
  CHECK(binary_to_plane(leaf()) == MultiDegree{0});
  CHECK(binary_to_plane(plane_to_binary({2, 1, 0, 1, 0})) == MultiDegree{2, 1, 0, 1, 0});
  CHECK(left_depth(plane_to_binary({2, 1, 0, 1, 0})) == LeftDepth{2, 2, 1, 1, 0});
}

TEST_CASE("plane_to_binary star gives the left comb") {
  for (int n = 1; n <= 7; ++n) {
    MultiDegree star(static_cast<std::size_t>(n) + 1, 0);
    star[0] = n;
    BinaryTree t = plane_to_binary(star);
    CHECK(t == comb(n));
    LeftDepth expected;
    for (int i = n; i >= 0; --i) expected.push_back(i);
    CHECK(left_depth(t) == expected);
  }
  CHECK(plane_to_binary({0}) == leaf());
}

TEST_CASE("tree bijection round trips") {
  for (int n = 0; n <= 8; ++n) {
    for_each_plane_tree(n, [](const MultiDegree& d) {
      REQUIRE(binary_to_plane(plane_to_binary(d)) == d);
    });
  }
  for (int n = 9; n <= 10; ++n) {  // larger sizes, spot the composed invariant
    for_each_binary_tree(n, [](const BinaryTree& t) {
      REQUIRE(plane_to_binary(binary_to_plane(t)) == t);
    });
  }
}

TEST_CASE("left_depth_from_multi_degree") {
  CHECK(left_depth_from_multi_degree({2, 1, 0, 1, 0}) == LeftDepth{2, 2, 1, 1, 0});
  CHECK(left_depth_from_multi_degree({0}) == LeftDepth{0});
  for (int n = 0; n <= 8; ++n) {
    for_each_plane_tree(n, [](const MultiDegree& d) {
      REQUIRE(left_depth_from_multi_degree(d) == left_depth(plane_to_binary(d)));
    });
  }
}

TEST_CASE("multi-degree validity") {
  CHECK(is_valid_multi_degree({2, 1, 0, 1, 0}));
  CHECK_FALSE(is_valid_multi_degree({0, 1}));
  CHECK(first_multi_degree_violation({0, 1}) == 1);
  CHECK_FALSE(is_valid_multi_degree({2, 1, 1, 1, 0}));
  CHECK_FALSE(is_valid_multi_degree({1, -1, 2, 0}));

  for (int n = 0; n <= 9; ++n) {
    Int valid = 0;
    for_each_composition(n, [&](const std::vector<int>& seq) {
      if (is_valid_multi_degree(seq)) ++valid;
    });
    CHECK(valid == catalan(n));
  }
}

TEST_CASE("comb containment") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(contains_comb(comb(k), k));
    CHECK_FALSE(contains_comb(comb(k), k + 1));
    CHECK_FALSE(contains_comb1(leaf(), k));
  }

  // left-chain implementation agrees with a generic embedding matcher
  for (int n = 0; n <= 8; ++n) {
    for_each_binary_tree(n, [&](const BinaryTree& t) {
      for (int k = 1; k <= 4; ++k) {
        REQUIRE(contains_comb(t, k) == embeds_anywhere(comb(k), t));
        REQUIRE(contains_comb1(t, k) == embeds_anywhere(comb1(k), t));
      }
    });
  }

  // degree characterizations through the plane tree
  for (int n = 0; n <= 8; ++n) {
    for_each_binary_tree(n, [&](const BinaryTree& t) {
      MultiDegree d = binary_to_plane(t);
      int max_deg = *std::max_element(d.begin(), d.end());
      int max_nonroot = 0;
      for (std::size_t i = 1; i < d.size(); ++i)
        max_nonroot = std::max(max_nonroot, d[i]);
      for (int k = 1; k <= 4; ++k) {
        REQUIRE(contains_comb(t, k + 1) == (max_deg > k));
        REQUIRE(contains_comb1(t, k) == (max_nonroot >= k));
      }
    });
  }

  int motzkin_24 = 0;
  for_each_binary_tree(4, [&](const BinaryTree& t) {
    if (!contains_comb(t, 3)) ++motzkin_24;
  });
  CHECK(motzkin_24 == 9);

  int c23 = 0;
  for_each_binary_tree(3, [&](const BinaryTree& t) {
    if (!contains_comb1(t, 2)) ++c23;
  });
  CHECK(c23 == 4);
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_binary_trees(3).size() == 5);
  CHECK(enumerate_binary_trees(0).size() == 1);
  CHECK(enumerate_plane_trees(0).size() == 1);

  long long count12 = 0;
  for_each_plane_tree(12, [&](const MultiDegree&) { ++count12; });
  CHECK(count12 == 208012);
  long long bin12 = 0;
  for_each_binary_tree(12, [&](const BinaryTree&) { ++bin12; });
  CHECK(bin12 == 208012);

  for (int n = 0; n <= 9; ++n) {
    auto planes = enumerate_plane_trees(n);
    CHECK(Int(planes.size()) == catalan(n));
    CHECK(std::is_sorted(planes.begin(), planes.end()));
    CHECK(std::adjacent_find(planes.begin(), planes.end()) == planes.end());
  }
}

TEST_CASE("tree text format") {
  CHECK(format_tree(parse_tree("((0 1) 2)")) == "((0 1) 2)");
  CHECK(format_tree(leaf()) == "0");
  CHECK(parse_tree("0") == leaf());
  for_each_binary_tree(6, [](const BinaryTree& t) {
    REQUIRE(parse_tree(format_tree(t)) == t);
  });

  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryTree t = random_tree(12, rng);
    REQUIRE(parse_tree(format_tree(t)) == t);
  }

  CHECK_THROWS_AS(parse_tree("((0 1) 2"), ParseError);
  CHECK_THROWS_AS(parse_tree("(0 2)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(0 1) x"), ParseError);
  try {
    parse_tree("((0 1) 2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("sequence text format") {
  CHECK(format_sequence({2, 1, 0, 1, 0}) == "2,1,0,1,0");
  CHECK(parse_sequence("2,1,0,1,0") == std::vector<int>{2, 1, 0, 1, 0});
  CHECK_THROWS_AS(parse_sequence("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("2,1,"), ParseError);
  CHECK_THROWS_AS(parse_sequence(""), ParseError);
}
