#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "modcat/catalan_objects.hpp"
#include "modcat/counting.hpp"
#include "modcat/rewrite.hpp"

using namespace modcat;

namespace {

std::vector<Permutation> all_permutations(int n) {
  Permutation w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Reachability in the Tamari order: is there a chain of right 1-rotations
// from a up to b?
bool tamari_le(const BinaryTree& a, const BinaryTree& b) {
  std::set<MultiDegree> seen{binary_to_plane(a)};
  std::vector<BinaryTree> frontier{a};
  MultiDegree target = binary_to_plane(b);
  while (!frontier.empty()) {
    BinaryTree cur = frontier.back();
    frontier.pop_back();
    if (binary_to_plane(cur) == target) return true;
    for (const BinaryTree& next : tamari_covers(cur))
      if (seen.insert(binary_to_plane(next)).second) frontier.push_back(next);
  }
  return false;
}

Permutation inverse_of(const Permutation& w) {
  Permutation v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    v[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return v;
}

}  // namespace

TEST_CASE("plane tree to Dyck path") {
  CHECK(plane_to_dyck({2, 1, 0, 1, 0}).steps == "UUDUDDUD");
  CHECK(plane_to_dyck({0}).steps.empty());
  CHECK(dyck_to_plane(DyckPath{"UUDUDDUD"}) == MultiDegree{2, 1, 0, 1, 0});
  CHECK_THROWS(dyck_to_plane(DyckPath{"UDDU"}));

  for (int n = 0; n <= 9; ++n) {
    std::set<std::string> seen;
    for_each_plane_tree(n, [&](const MultiDegree& d) {
      DyckPath p = plane_to_dyck(d);
      REQUIRE(is_dyck_steps(p.steps));
      REQUIRE(dyck_to_plane(p) == d);
      seen.insert(p.steps);
    });
    CHECK(Int(seen.size()) == catalan(n));
  }
}

TEST_CASE("Dyck path to partition") {
  CHECK(dyck_to_partition(DyckPath{"UUDUDDUD"}) == Partition{3, 1, 0, 0});
  CHECK(dyck_to_partition(DyckPath{"UUUUDDDD"}) == Partition{0, 0, 0, 0});
  CHECK(partition_to_dyck({3, 1, 0, 0}, 4).steps == "UUDUDDUD");
  CHECK(partition_to_dyck({3, 1}, 4).steps == "UUDUDDUD");  // padded comparison
  CHECK_THROWS(partition_to_dyck({4, 1, 0, 0}, 4));  // staircase violation
  CHECK_THROWS(partition_to_dyck({1, 2, 0, 0}, 4));  // not decreasing

  for (int n = 0; n <= 9; ++n) {
    for_each_plane_tree(n, [&](const MultiDegree& d) {
      DyckPath p = plane_to_dyck(d);
      Partition lambda = dyck_to_partition(p);
      for (int j = 1; j <= n; ++j)
        REQUIRE(lambda[static_cast<std::size_t>(j - 1)] <= n - j);
      REQUIRE(partition_to_dyck(lambda, n) == p);
      REQUIRE(partitions_equal_padded(lambda, lambda));
    });
  }
}

TEST_CASE("Dyck path to standard Young tableau") {
  Syt2xN figure = dyck_to_syt(DyckPath{"UUDUDDUD"});
  CHECK(figure.top == std::vector<int>{1, 2, 4, 7});
  CHECK(figure.bottom == std::vector<int>{3, 5, 6, 8});
  CHECK(dyck_to_syt(DyckPath{"UD"}).top == std::vector<int>{1});
  CHECK(dyck_to_syt(DyckPath{"UD"}).bottom == std::vector<int>{2});

  for (int n = 0; n <= 8; ++n) {
    for_each_plane_tree(n, [&](const MultiDegree& d) {
      DyckPath p = plane_to_dyck(d);
      Syt2xN t = dyck_to_syt(p);
      REQUIRE(syt_to_dyck(t) == p);
    });
  }

  CHECK_THROWS(syt_to_dyck(Syt2xN{{1, 3}, {2}}));        // ragged rows
  CHECK_THROWS(syt_to_dyck(Syt2xN{{2, 3}, {1, 4}}));     // column violation
  CHECK_THROWS(syt_to_dyck(Syt2xN{{1, 1}, {2, 3}}));     // repeated entry
}

TEST_CASE("tr and its inverse") {
  BinaryTree t = tr({2, 6, 5, 1, 3, 8, 7, 4});
  CHECK(tr_inverse(t) == Permutation{6, 7, 5, 3, 4, 8, 2, 1});
  CHECK(tr({6, 7, 5, 3, 4, 8, 2, 1}) == t);
  CHECK_THROWS(tr({1, 2, 2}));

  // increasing words fold into the left comb, decreasing into the right comb
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> increasing, decreasing;
    for (int i = 1; i <= n; ++i) increasing.push_back(i);
    for (int i = n; i >= 1; --i) decreasing.push_back(i);
    CHECK(tr(increasing) == comb(n));
    CHECK(tr(decreasing) == from_left_depth([&] {
            LeftDepth d(static_cast<std::size_t>(n), 1);
            d.push_back(0);
            return d;
          }()));
  }

  for (int n = 0; n <= 8; ++n) {
    std::set<Permutation> images;
    for_each_binary_tree(n, [&](const BinaryTree& tree) {
      Permutation w = tr_inverse(tree);
      REQUIRE(perm_avoids_132(w));
      REQUIRE(tr(w) == tree);
      images.insert(w);
    });
    CHECK(Int(images.size()) == catalan(n));
  }

  // tr restricted to all of S_n is onto, with Av(132) as a transversal
  for (int n = 1; n <= 5; ++n) {
    std::set<MultiDegree> shapes;
    long long avoiders = 0;
    for (const Permutation& w : all_permutations(n)) {
      shapes.insert(binary_to_plane(tr(w)));
      if (perm_avoids_132(w)) ++avoiders;
    }
    CHECK(Int(shapes.size()) == catalan(n));
    CHECK(Int(avoiders) == catalan(n));
  }
}

TEST_CASE("tr is monotone from the weak order to the Tamari order") {
  // covers of the (left) weak order: swap the values i and i+1 when i sits
  // before i+1 in the word
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& u : all_permutations(n)) {
      auto pos = [&](int value) {
        for (int p = 0; p < n; ++p)
          if (u[static_cast<std::size_t>(p)] == value) return p;
        return -1;
      };
      for (int value = 1; value < n; ++value) {
        int pi = pos(value), pj = pos(value + 1);
        if (pi > pj) continue;
        Permutation v = u;
        std::swap(v[static_cast<std::size_t>(pi)], v[static_cast<std::size_t>(pj)]);
        REQUIRE(tamari_le(tr(u), tr(v)));
      }
    }
  }
}

TEST_CASE("descent sets") {
  for (int n = 1; n <= 8; ++n) {
    MultiDegree star(static_cast<std::size_t>(n) + 1, 0);
    star[0] = n;
    CHECK(binary_to_plane(des_inverse({}, n)) == star);
  }

  // des o des_inverse is the identity on subsets; the image is exactly the
  // set of 2-minimal trees, 2^(n-1) of them
  for (int n = 1; n <= 10; ++n) {
    std::set<MultiDegree> image;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
      if (next == n) {
        BinaryTree t = des_inverse(subset, n);
        REQUIRE(des(t) == subset);
        REQUIRE_FALSE(contains_comb1(t, 2));
        image.insert(binary_to_plane(t));
        return;
      }
      self(self, next + 1);
      subset.push_back(next);
      self(self, next + 1);
      subset.pop_back();
    };
    rec(rec, 1);
    CHECK(Int(image.size()) == pow2(n - 1));
  }

  // des_inverse(S) is the Tamari-minimum of its fiber
  for (int n = 1; n <= 6; ++n) {
    for_each_binary_tree(n, [&](const BinaryTree& t) {
      REQUIRE(tamari_le(des_inverse(des(t), n), t));
    });
  }

  // containment of descent sets transports to the Tamari order
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<int>> subsets{{}};
    for (int i = 1; i <= n - 1; ++i) {
      std::size_t count = subsets.size();
      for (std::size_t s = 0; s < count; ++s) {
        subsets.push_back(subsets[s]);
        subsets.back().push_back(i);
      }
    }
    for (const auto& r : subsets)
      for (const auto& s : subsets) {
        if (r.size() >= s.size()) continue;
        if (!std::includes(s.begin(), s.end(), r.begin(), r.end())) continue;
        REQUIRE(tamari_le(des_inverse(r, n), des_inverse(s, n)));
        REQUIRE_FALSE(tamari_le(des_inverse(s, n), des_inverse(r, n)));
      }
  }
}

TEST_CASE("Dyck avoidance predicates") {
  CHECK(dyck_avoids_run(DyckPath{"UDUDUDUD"}, 2));
  CHECK_FALSE(dyck_avoids_run(DyckPath{"UUDD"}, 2));
  CHECK(dyck_avoids_du(DyckPath{"UUDDUD"}, 2));
  CHECK_FALSE(dyck_avoids_du(DyckPath{"UDUUDD"}, 2));

  long long run3 = 0;
  for_each_plane_tree(4, [&](const MultiDegree& d) {
    if (dyck_avoids_run(plane_to_dyck(d), 3)) ++run3;
  });
  CHECK(run3 == 9);  // Motzkin

  long long du4 = 0;
  for_each_plane_tree(5, [&](const MultiDegree& d) {
    if (dyck_avoids_du(plane_to_dyck(d), 4)) ++du4;
  });
  CHECK(du4 == 41);
}

TEST_CASE("permutation avoidance predicates") {
  CHECK(perm_avoids_132({6, 7, 5, 3, 4, 8, 2, 1}));
  CHECK_FALSE(perm_avoids_132({1, 3, 2}));
  CHECK_FALSE(perm_avoids_132({2, 5, 3, 1, 4}));  // 2-5-3 with gaps

  // the identity contains every value run
  for (int k = 1; k <= 4; ++k) CHECK_FALSE(perm_avoids_value_run({1, 2, 3, 4}, k));

  long long m_family = 0, c_family = 0;
  for (const Permutation& w : all_permutations(4)) {
    if (!perm_avoids_132(w)) continue;
    if (perm_avoids_value_run(w, 3)) ++m_family;
    if (perm_avoids_c_pattern(w, 3)) ++c_family;
  }
  CHECK(m_family == 9);   // M(2,4)
  CHECK(c_family == 13);  // C(3,4)

  // the family predicate carves out exactly the images of comb1-avoiding
  // trees under position-value inversion
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= 4; ++k) {
      std::set<Permutation> from_trees;
      for_each_binary_tree(n, [&](const BinaryTree& t) {
        if (!contains_comb1(t, k)) from_trees.insert(inverse_of(tr_inverse(t)));
      });
      std::set<Permutation> by_predicate;
      for (const Permutation& w : all_permutations(n))
        if (perm_avoids_132(w) && perm_avoids_c_pattern(w, k)) by_predicate.insert(w);
      REQUIRE(from_trees == by_predicate);
    }
  }
}

TEST_CASE("classical reading of the c-pattern diverges") {
  // the fully dashed pattern 2-3-4-1 overcounts containment from k = 3 on
  long long classical = 0, vincular = 0;
  for (const Permutation& w : all_permutations(5)) {
    if (!perm_avoids_132(w)) continue;
    if (perm_avoids_c_pattern_classical(w, 3)) ++classical;
    if (perm_avoids_c_pattern(w, 3)) ++vincular;
  }
  CHECK(vincular == 35);  // C(3,5)
  CHECK(classical == 34);

  // but at k = 2 the two readings agree on 132-avoiders
  for (const Permutation& w : all_permutations(6))
    if (perm_avoids_132(w))
      CHECK(perm_avoids_c_pattern(w, 2) == perm_avoids_c_pattern_classical(w, 2));
}

TEST_CASE("tableau conditions") {
  Syt2xN figure{{1, 2, 4, 7}, {3, 5, 6, 8}};
  CHECK(syt_condition_c(figure, 3));
  CHECK_FALSE(syt_condition_m(figure, 2));  // 1, 2 sit together in the top row

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> top, bottom;
    for (int i = 1; i <= n; ++i) top.push_back(i);
    for (int i = n + 1; i <= 2 * n; ++i) bottom.push_back(i);
    for (int k = 1; k <= 4; ++k) CHECK(syt_condition_c(Syt2xN{top, bottom}, k));
  }

  for (int n = 0; n <= 7; ++n) {
    for (int k = 1; k <= 4; ++k) {
      long long m_count = 0, c_count = 0;
      for_each_plane_tree(n, [&](const MultiDegree& d) {
        Syt2xN t = dyck_to_syt(plane_to_dyck(d));
        if (syt_condition_m(t, k)) ++m_count;
        if (syt_condition_c(t, k)) ++c_count;
      });
      CHECK(Int(m_count) == m_general_alt(k - 1, n));
      CHECK(Int(c_count) == c_modular_alt(k, n));
    }
  }
}

TEST_CASE("partition conditions") {
  Partition zeros{0, 0, 0};
  for (int k = 1; k <= 5; ++k) {
    CHECK(partition_condition_c(zeros, k));
    CHECK(partition_condition_m(zeros, k) == (3 < k));
  }

  std::vector<Partition> good;
  for_each_plane_tree(3, [&](const MultiDegree& d) {
    Partition lambda = dyck_to_partition(plane_to_dyck(d));
    if (partition_condition_c(lambda, 2)) good.push_back(lambda);
  });
  CHECK(good.size() == 4);
  for (const Partition& lambda : good) {
    bool expected = partitions_equal_padded(lambda, {}) ||
                    partitions_equal_padded(lambda, {1}) ||
                    partitions_equal_padded(lambda, {2}) ||
                    partitions_equal_padded(lambda, {2, 1});
    CHECK(expected);
  }

  for (int n = 0; n <= 8; ++n) {
    for (int k = 1; k <= 5; ++k) {
      long long m_count = 0, c_count = 0;
      for_each_plane_tree(n, [&](const MultiDegree& d) {
        Partition lambda = dyck_to_partition(plane_to_dyck(d));
        if (partition_condition_m(lambda, k)) ++m_count;
        if (partition_condition_c(lambda, k)) ++c_count;
      });
      CHECK(Int(m_count) == m_general_alt(k - 1, n));
      CHECK(Int(c_count) == c_modular_alt(k, n));
    }
  }
}

TEST_CASE("counts interlace") {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 1; k <= 8; ++k) {
      CHECK(m_general_alt(k - 1, n) <= c_modular_alt(k, n));
      CHECK(c_modular_alt(k, n) <= m_general_alt(k, n));
    }
  }
}

TEST_CASE("object serialization") {
  CHECK(format_syt(Syt2xN{{1, 2, 4, 7}, {3, 5, 6, 8}}) == "1,2,4,7/3,5,6,8");
  CHECK(parse_syt("1,2,4,7/3,5,6,8") == Syt2xN{{1, 2, 4, 7}, {3, 5, 6, 8}});
  CHECK_THROWS_AS(parse_syt("1,2/3"), std::exception);
  CHECK_THROWS_AS(parse_syt("1,2,3,4"), ParseError);

  CHECK(format_perm({6, 7, 5, 3, 4, 8, 2, 1}) == "67534821");
  CHECK(parse_perm("67534821") == Permutation{6, 7, 5, 3, 4, 8, 2, 1});
  Permutation big;
  for (int i = 1; i <= 11; ++i) big.push_back(i);
  CHECK(format_perm(big) == "1,2,3,4,5,6,7,8,9,10,11");
  CHECK(parse_perm("1,2,3,4,5,6,7,8,9,10,11") == big);
  CHECK_THROWS_AS(parse_perm("1231"), ParseError);
}
