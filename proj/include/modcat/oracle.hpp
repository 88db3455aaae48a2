#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "modcat/bigint.hpp"
#include "modcat/catalan_objects.hpp"
#include "modcat/rewrite.hpp"

namespace modcat {

/// Residues of the left depth modulo k: evaluating the parenthesization in a
/// ring where a*b = wa + b for a unit w of multiplicative order k collapses a
/// tree to this vector, so two trees share it iff they are k-equivalent.
using OmegaVector = std::vector<int>;

inline OmegaVector eval_omega(const BinaryTree& t, int k) {
  if (k < 1) throw std::invalid_argument("eval_omega: k must be positive");
  LeftDepth d = left_depth(t);
  OmegaVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] % k;
  return out;
}

namespace detail {

inline void require_oracle_bound(int n, int max_n, const char* who) {
  if (n > max_n)
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " exceeds the exhaustive bound " + std::to_string(max_n));
}

}  // namespace detail

/// Connected components of the k-rotation graph on binary trees with n
/// internal nodes, computed by breadth-first search with rotations taken as
/// undirected edges. Members are sorted by multi-degree; components by their
/// first member.
inline std::vector<std::vector<BinaryTree>> classes_by_rewrite_closure(int n, int k,
                                                                       int max_n = 9) {
  if (k < 1) throw std::invalid_argument("classes_by_rewrite_closure: k must be positive");
  detail::require_oracle_bound(n, max_n, "classes_by_rewrite_closure");
  std::vector<BinaryTree> trees = enumerate_binary_trees(n);
  std::map<MultiDegree, int> index;
  for (int i = 0; i < static_cast<int>(trees.size()); ++i)
    index.emplace(binary_to_plane(trees[static_cast<std::size_t>(i)]), i);

  std::vector<int> component(trees.size(), -1);
  std::vector<std::vector<BinaryTree>> out;
  for (int start = 0; start < static_cast<int>(trees.size()); ++start) {
    if (component[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> frontier;
    frontier.push(start);
    component[static_cast<std::size_t>(start)] = id;
    while (!frontier.empty()) {
      int cur = frontier.front();
      frontier.pop();
      const BinaryTree& t = trees[static_cast<std::size_t>(cur)];
      out[static_cast<std::size_t>(id)].push_back(t);
      auto visit = [&](const BinaryTree& neighbor) {
        int idx = index.at(binary_to_plane(neighbor));
        if (component[static_cast<std::size_t>(idx)] == -1) {
          component[static_cast<std::size_t>(idx)] = id;
          frontier.push(idx);
        }
      };
      for (const RotationSite& site : right_rotation_sites(t, k))
        visit(right_k_rotation(t, site, k));
      for (const RotationSite& site : left_rotation_sites(t, k))
        visit(left_k_rotation(t, site, k));
    }
    auto& members = out.back();
    std::sort(members.begin(), members.end(),
              [](const BinaryTree& a, const BinaryTree& b) {
                return binary_to_plane(a) < binary_to_plane(b);
              });
  }
  return out;
}

namespace detail {

// Native enumerators, each walking its own object family directly so family
// counts do not lean on the bijections they are meant to check.

template <class F>
void all_binary_trees_native(int n, F&& visit) {
  std::vector<std::vector<BinaryTree>> memo(static_cast<std::size_t>(n) + 1);
  memo[0] = {leaf()};
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i)
      for (const BinaryTree& l : memo[static_cast<std::size_t>(i)])
        for (const BinaryTree& r : memo[static_cast<std::size_t>(m - 1 - i)])
          memo[static_cast<std::size_t>(m)].push_back(wedge(l, r));
  for (const BinaryTree& t : memo[static_cast<std::size_t>(n)]) visit(t);
}

template <class F>
void all_dyck_paths_native(int n, F&& visit) {
  std::string steps;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      visit(DyckPath{steps});
      return;
    }
    if (ups < n) {
      steps += 'U';
      self(self, ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps += 'D';
      self(self, ups, downs + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
}

template <class F>
void all_staircase_partitions_native(int n, F&& visit) {
  Partition lambda(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int upper) -> void {
    if (j == n) {
      visit(static_cast<const Partition&>(lambda));
      return;
    }
    int cap = std::min(upper, n - j - 1);  // staircase bound for part j+1
    for (int v = cap; v >= 0; --v) {
      lambda[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v);
    }
  };
  rec(rec, 0, n);
}

template <class F>
void all_syt_native(int n, F&& visit) {
  Syt2xN t;
  auto rec = [&](auto&& self, int value) -> void {
    if (value > 2 * n) {
      visit(static_cast<const Syt2xN&>(t));
      return;
    }
    if (static_cast<int>(t.top.size()) < n) {
      t.top.push_back(value);
      self(self, value + 1);
      t.top.pop_back();
    }
    if (t.bottom.size() < t.top.size()) {
      t.bottom.push_back(value);
      self(self, value + 1);
      t.bottom.pop_back();
    }
  };
  rec(rec, 1);
}

template <class F>
void all_permutations_native(int n, F&& visit) {
  Permutation w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    visit(static_cast<const Permutation&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace detail

/// Exhaustive count of one of the twelve restricted families. The first six
/// ids have cardinality M(k-1, n); the last six have cardinality C(k, n).
inline Int count_family(std::string_view family, int k, int n, int max_n = 12) {
  if (k < 1) throw std::invalid_argument("count_family: k must be positive");
  const bool permutation_family =
      family == "perm-132-and-value-run" || family == "perm-132-and-c-pattern";
  detail::require_oracle_bound(n, permutation_family ? std::min(max_n, 10) : max_n,
                               "count_family");
  Int count = 0;
  auto tally = [&](bool keep) {
    if (keep) ++count;
  };
  if (family == "binary-avoids-comb") {
    detail::all_binary_trees_native(n, [&](const BinaryTree& t) { tally(!contains_comb(t, k)); });
  } else if (family == "plane-degrees-lt") {
    for_each_plane_tree(n, [&](const MultiDegree& d) {
      tally(*std::max_element(d.begin(), d.end()) < k);
    });
  } else if (family == "dyck-avoids-U^k") {
    detail::all_dyck_paths_native(n, [&](const DyckPath& p) { tally(dyck_avoids_run(p, k)); });
  } else if (family == "partition-m") {
    detail::all_staircase_partitions_native(
        n, [&](const Partition& lambda) { tally(partition_condition_m(lambda, k)); });
  } else if (family == "syt-m") {
    detail::all_syt_native(n, [&](const Syt2xN& t) { tally(syt_condition_m(t, k)); });
  } else if (family == "perm-132-and-value-run") {
    detail::all_permutations_native(n, [&](const Permutation& w) {
      tally(perm_avoids_132(w) && perm_avoids_value_run(w, k));
    });
  } else if (family == "binary-avoids-comb1") {
    detail::all_binary_trees_native(n,
                                    [&](const BinaryTree& t) { tally(!contains_comb1(t, k)); });
  } else if (family == "plane-nonroot-degrees-lt") {
    for_each_plane_tree(n, [&](const MultiDegree& d) {
      bool ok = true;
      for (std::size_t i = 1; i < d.size(); ++i) ok = ok && d[i] < k;
      tally(ok);
    });
  } else if (family == "dyck-avoids-DU^k") {
    detail::all_dyck_paths_native(n, [&](const DyckPath& p) { tally(dyck_avoids_du(p, k)); });
  } else if (family == "partition-c") {
    detail::all_staircase_partitions_native(
        n, [&](const Partition& lambda) { tally(partition_condition_c(lambda, k)); });
  } else if (family == "syt-c") {
    detail::all_syt_native(n, [&](const Syt2xN& t) { tally(syt_condition_c(t, k)); });
  } else if (family == "perm-132-and-c-pattern") {
    detail::all_permutations_native(n, [&](const Permutation& w) {
      tally(perm_avoids_132(w) && perm_avoids_c_pattern(w, k));
    });
  } else {
    throw std::invalid_argument("count_family: unknown family '" + std::string(family) + "'");
  }
  return count;
}

inline const std::vector<std::string>& motzkin_family_ids() {
  static const std::vector<std::string> ids = {
      "binary-avoids-comb", "plane-degrees-lt", "dyck-avoids-U^k",
      "partition-m",        "syt-m",            "perm-132-and-value-run"};
  return ids;
}

inline const std::vector<std::string>& catalan_family_ids() {
  static const std::vector<std::string> ids = {
      "binary-avoids-comb1", "plane-nonroot-degrees-lt", "dyck-avoids-DU^k",
      "partition-c",         "syt-c",                    "perm-132-and-c-pattern"};
  return ids;
}

/// Class-size distribution of the k-components of the trees with n+1 nodes.
inline std::map<long long, long long> class_size_histogram(int n, int k, int max_n = 12) {
  detail::require_oracle_bound(n, max_n, "class_size_histogram");
  std::map<long long, long long> histogram;
  for (const KComponent& c : k_components(n, k))
    ++histogram[static_cast<long long>(c.size)];
  return histogram;
}

/// Brute-force intersection total over all Dyck paths of length 2n avoiding
/// a down-step followed by k up-steps. Each path contributes one more than
/// the root degree of its plane tree, i.e. its leading up-run plus one.
inline Int d_intersections_brute(int k, int n, int max_n = 12) {
  if (k < 1 || n < 0) throw std::invalid_argument("d_intersections_brute: bad arguments");
  detail::require_oracle_bound(n, max_n, "d_intersections_brute");
  Int total = 0;
  detail::all_dyck_paths_native(n, [&](const DyckPath& p) {
    if (!dyck_avoids_du(p, k)) return;
    int leading = 0;
    while (leading < static_cast<int>(p.steps.size()) &&
           p.steps[static_cast<std::size_t>(leading)] == 'U')
      ++leading;
    total += leading + 1;
  });
  return total;
}

}  // namespace modcat
