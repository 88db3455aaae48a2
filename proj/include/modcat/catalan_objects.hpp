#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "modcat/binary_tree.hpp"
#include "modcat/plane_tree.hpp"

namespace modcat {

/// Balanced lattice path stored as its step string over {U, D}.
struct DyckPath {
  std::string steps;

  int semilength() const { return static_cast<int>(steps.size()) / 2; }
  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.steps == b.steps; }
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.steps < b.steps; }
};

inline bool is_dyck_steps(std::string_view steps) {
  long long height = 0;
  for (char c : steps) {
    if (c == 'U')
      ++height;
    else if (c == 'D')
      --height;
    else
      return false;
    if (height < 0) return false;
  }
  return height == 0;
}

inline DyckPath parse_dyck(std::string_view text) {
  long long height = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U')
      ++height;
    else if (text[i] == 'D')
      --height;
    else
      throw ParseError(i, "expected 'U' or 'D'");
    if (height < 0) throw ParseError(i, "path dips below the axis");
  }
  if (height != 0) throw ParseError(text.size(), "path does not return to the axis");
  return DyckPath{std::string(text)};
}

/// U^{d_0} D U^{d_1} D ... D U^{d_n}; Dyck exactly when d is a valid
/// multi-degree.
inline DyckPath plane_to_dyck(const MultiDegree& d) {
  require_multi_degree(d, "plane_to_dyck");
  std::string steps;
  steps.append(static_cast<std::size_t>(d[0]), 'U');
  for (std::size_t i = 1; i < d.size(); ++i) {
    steps += 'D';
    steps.append(static_cast<std::size_t>(d[i]), 'U');
  }
  return DyckPath{std::move(steps)};
}

inline MultiDegree dyck_to_plane(const DyckPath& path) {
  if (!is_dyck_steps(path.steps)) throw std::invalid_argument("dyck_to_plane: not a Dyck path");
  MultiDegree d(1, 0);
  for (char c : path.steps) {
    if (c == 'U')
      ++d.back();
    else
      d.push_back(0);
  }
  return d;
}

/// Partition stored as a weakly decreasing sequence; trailing zeros are kept
/// when the partition records a Dyck path of known semilength.
using Partition = std::vector<int>;

inline bool is_weakly_decreasing(const Partition& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1]) return false;
  return lambda.empty() || lambda.back() >= 0;
}

/// Partitions compared with trailing zeros ignored.
inline bool partitions_equal_padded(const Partition& a, const Partition& b) {
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && a[i - 1] == 0) --i;
  while (j > 0 && b[j - 1] == 0) --j;
  if (i != j) return false;
  return std::equal(a.begin(), a.begin() + i, b.begin());
}

/// lambda_j = e_1 + ... + e_{n-j}, where e_i counts the down-steps after the
/// i-th up-step. The result has n parts and fits under (n-1, n-2, ..., 1, 0).
inline Partition dyck_to_partition(const DyckPath& path) {
  if (!is_dyck_steps(path.steps))
    throw std::invalid_argument("dyck_to_partition: not a Dyck path");
  const int n = path.semilength();
  std::vector<int> down_runs(static_cast<std::size_t>(n) + 1, 0);  // e_1..e_n at 1..n
  int ups_seen = 0;
  for (char c : path.steps) {
    if (c == 'U')
      ++ups_seen;
    else
      ++down_runs[static_cast<std::size_t>(ups_seen)];
  }
  Partition lambda(static_cast<std::size_t>(n), 0);
  int sum = 0;
  for (int m = 1; m <= n; ++m) {
    sum += down_runs[static_cast<std::size_t>(m)];
    if (m < n) lambda[static_cast<std::size_t>(n - m - 1)] = sum;  // lambda_{n-m}, 0-based
  }
  return lambda;
}

/// Inverse of dyck_to_partition for partitions under the staircase
/// (n-1, ..., 1, 0). Throws on a staircase violation.
inline DyckPath partition_to_dyck(const Partition& lambda_in, int n) {
  if (n < 0) throw std::invalid_argument("partition_to_dyck: n must be nonnegative");
  Partition lambda = lambda_in;
  if (static_cast<int>(lambda.size()) > n) {
    for (std::size_t i = static_cast<std::size_t>(n); i < lambda.size(); ++i)
      if (lambda[i] != 0)
        throw std::invalid_argument("partition_to_dyck: more than n positive parts");
    lambda.resize(static_cast<std::size_t>(n));
  } else {
    lambda.resize(static_cast<std::size_t>(n), 0);
  }
  if (!is_weakly_decreasing(lambda))
    throw std::invalid_argument("partition_to_dyck: parts must be weakly decreasing");
  for (int j = 1; j <= n; ++j)
    if (lambda[static_cast<std::size_t>(j - 1)] > n - j)
      throw std::invalid_argument("partition_to_dyck: part " + std::to_string(j) +
                                  " exceeds the staircase bound");
  std::string steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  for (int m = 1; m <= n; ++m) {
    // e_m = lambda_{n-m} - lambda_{n-m+1}, with lambda_0 read as n
    int upper = (m == n) ? n : lambda[static_cast<std::size_t>(n - m - 1)];
    int lower = lambda[static_cast<std::size_t>(n - m)];
    steps += 'U';
    steps.append(static_cast<std::size_t>(upper - lower), 'D');
  }
  return DyckPath{std::move(steps)};
}

/// Standard Young tableau with two rows of equal length; rows increase left
/// to right and columns increase top to bottom.
struct Syt2xN {
  std::vector<int> top, bottom;

  friend bool operator==(const Syt2xN& a, const Syt2xN& b) {
    return a.top == b.top && a.bottom == b.bottom;
  }
};

inline Syt2xN dyck_to_syt(const DyckPath& path) {
  if (!is_dyck_steps(path.steps)) throw std::invalid_argument("dyck_to_syt: not a Dyck path");
  Syt2xN t;
  for (std::size_t i = 0; i < path.steps.size(); ++i)
    (path.steps[i] == 'U' ? t.top : t.bottom).push_back(static_cast<int>(i) + 1);
  return t;
}

inline void require_syt(const Syt2xN& t, const char* who) {
  const std::size_t n = t.top.size();
  std::string msg(who);
  if (t.bottom.size() != n) throw std::invalid_argument(msg + ": rows differ in length");
  std::vector<char> seen(2 * n + 1, 0);
  for (const auto* row : {&t.top, &t.bottom})
    for (int v : *row) {
      if (v < 1 || v > static_cast<int>(2 * n) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument(msg + ": entries must be a permutation of 1..2n");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  for (std::size_t i = 1; i < n; ++i)
    if (t.top[i] <= t.top[i - 1] || t.bottom[i] <= t.bottom[i - 1])
      throw std::invalid_argument(msg + ": rows must increase");
  for (std::size_t i = 0; i < n; ++i)
    if (t.top[i] >= t.bottom[i])
      throw std::invalid_argument(msg + ": columns must increase");
}

inline DyckPath syt_to_dyck(const Syt2xN& t) {
  require_syt(t, "syt_to_dyck");
  std::string steps(t.top.size() + t.bottom.size(), 'D');
  for (int v : t.top) steps[static_cast<std::size_t>(v - 1)] = 'U';
  return DyckPath{std::move(steps)};
}

/// One-line permutation word w(1)..w(n).
using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

namespace detail {

inline BinaryTree tr_rec(const std::vector<int>& w, int lo, int hi) {
  if (lo == hi) return leaf();
  int best = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(best)]) best = i;
  return wedge(tr_rec(w, lo, best), tr_rec(w, best + 1, hi));
}

}  // namespace detail

/// Binary tree of a word of distinct numbers: the maximum is the root, the
/// flanks recurse into the subtrees.
inline BinaryTree tr(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("tr: entries must be distinct");
  return detail::tr_rec(word, 0, static_cast<int>(word.size()));
}

/// The canonical word mapping back to t under tr: label internal nodes
/// n, n-1, ..., 1 in pre-order and read them in in-order. Its image is
/// exactly the set of (1-3-2)-avoiding permutations.
inline Permutation tr_inverse(const BinaryTree& t) {
  const int n = t.internal_count();
  std::vector<std::array<int, 2>> kids;
  kids.reserve(static_cast<std::size_t>(n));
  auto build = [&](auto&& self, const BinaryTree& node) -> int {
    if (node.is_leaf()) return -1;
    int idx = static_cast<int>(kids.size());
    kids.push_back({-1, -1});
    kids[static_cast<std::size_t>(idx)][0] = self(self, node.left());
    kids[static_cast<std::size_t>(idx)][1] = self(self, node.right());
    return idx;
  };
  int root = build(build, t);
  Permutation out;
  out.reserve(static_cast<std::size_t>(n));
  auto emit = [&](auto&& self, int idx) -> void {
    if (idx == -1) return;
    self(self, kids[static_cast<std::size_t>(idx)][0]);
    out.push_back(n - idx);  // pre-order rank idx got label n - idx
    self(self, kids[static_cast<std::size_t>(idx)][1]);
  };
  emit(emit, root);
  return out;
}

/// Descent set of a tree: indices i in [n-1] whose plane-tree degree d_i is
/// positive (equivalently, leaf i+1 is a right child).
inline std::vector<int> des(const BinaryTree& t) {
  MultiDegree d = binary_to_plane(t);
  std::vector<int> out;
  for (int i = 1; i + 1 < static_cast<int>(d.size()); ++i)
    if (d[static_cast<std::size_t>(i)] > 0) out.push_back(i);
  return out;
}

/// The unique Tamari-minimal tree with the given descent set: degree 1 at
/// each member of S, the rest of the degree at the root.
inline BinaryTree des_inverse(const std::vector<int>& s, int n) {
  if (n < 0) throw std::invalid_argument("des_inverse: n must be nonnegative");
  MultiDegree d(static_cast<std::size_t>(n) + 1, 0);
  int used = 0;
  for (int i : s) {
    if (i < 1 || i > n - 1)
      throw std::invalid_argument("des_inverse: set members must lie in [1, n-1]");
    if (d[static_cast<std::size_t>(i)] != 0)
      throw std::invalid_argument("des_inverse: duplicate set member");
    d[static_cast<std::size_t>(i)] = 1;
    ++used;
  }
  d[0] = n - used;
  return plane_to_binary(d);
}

inline bool dyck_avoids_run(const DyckPath& path, int k) {
  if (k < 1) throw std::invalid_argument("dyck_avoids_run: k must be positive");
  int run = 0;
  for (char c : path.steps) {
    run = (c == 'U') ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

inline bool dyck_avoids_du(const DyckPath& path, int k) {
  if (k < 1) throw std::invalid_argument("dyck_avoids_du: k must be positive");
  int run = 0;
  bool after_down = false;
  for (char c : path.steps) {
    if (c == 'U') {
      if (after_down && ++run >= k) return false;
    } else {
      after_down = true;
      run = 0;
    }
  }
  return true;
}

/// Classical (fully dashed) 1-3-2 avoidance.
inline bool perm_avoids_132(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  int prefix_min = std::numeric_limits<int>::max();
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l)
      if (w[static_cast<std::size_t>(l)] < w[static_cast<std::size_t>(j)] &&
          prefix_min < w[static_cast<std::size_t>(l)])
        return false;
    prefix_min = std::min(prefix_min, w[static_cast<std::size_t>(j)]);
  }
  return true;
}

namespace detail {

inline std::vector<int> value_positions(const Permutation& w) {
  std::vector<int> pos(w.size() + 1, 0);
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  return pos;
}

}  // namespace detail

/// True iff no k consecutive values h+1, ..., h+k appear at increasing
/// positions of w (h >= 0).
inline bool perm_avoids_value_run(const Permutation& w, int k) {
  if (k < 1) throw std::invalid_argument("perm_avoids_value_run: k must be positive");
  if (!is_permutation(w)) throw std::invalid_argument("perm_avoids_value_run: not a permutation");
  const int n = static_cast<int>(w.size());
  auto pos = detail::value_positions(w);
  for (int h = 0; h + k <= n; ++h) {
    bool increasing = true;
    for (int j = 1; j < k && increasing; ++j)
      increasing = pos[static_cast<std::size_t>(h + j)] < pos[static_cast<std::size_t>(h + j + 1)];
    if (increasing) return false;
  }
  return true;
}

/// Avoidance of the pattern 2 3 ... (k+1) 1 read with the first k letters
/// adjacent and the final letter dashed: w contains it iff some ascending run
/// of k consecutive positions is followed, anywhere later, by a value below
/// the run's first entry. On (1-3-2)-avoiding permutations this reading
/// matches the comb1(k)-avoiding trees exactly; the fully dashed reading does
/// not (it diverges from k = 3 on).
inline bool perm_avoids_c_pattern(const Permutation& w, int k) {
  if (k < 1) throw std::invalid_argument("perm_avoids_c_pattern: k must be positive");
  if (!is_permutation(w)) throw std::invalid_argument("perm_avoids_c_pattern: not a permutation");
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + k <= n; ++i) {
    bool run = true;
    for (int j = 1; j < k && run; ++j)
      run = w[static_cast<std::size_t>(i + j - 1)] < w[static_cast<std::size_t>(i + j)];
    if (!run) continue;
    for (int j = i + k; j < n; ++j)
      if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

/// Classical containment of an arbitrary (fully dashed) pattern.
inline bool perm_contains_classical(const Permutation& w, const Permutation& pattern) {
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(pattern.size());
  if (m == 0) return true;
  std::vector<int> chosen(static_cast<std::size_t>(m), -1);
  auto rec = [&](auto&& self, int matched, int from) -> bool {
    if (matched == m) return true;
    for (int i = from; i < n; ++i) {
      bool ok = true;
      for (int j = 0; j < matched && ok; ++j) {
        bool want = pattern[static_cast<std::size_t>(j)] < pattern[static_cast<std::size_t>(matched)];
        bool have = w[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])] <
                    w[static_cast<std::size_t>(i)];
        ok = want == have;
      }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(matched)] = i;
      if (self(self, matched + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

/// Classical reading of 2 3 ... (k+1) 1.
inline bool perm_avoids_c_pattern_classical(const Permutation& w, int k) {
  if (k < 1) throw std::invalid_argument("perm_avoids_c_pattern_classical: k must be positive");
  Permutation pattern(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j < k; ++j) pattern[static_cast<std::size_t>(j)] = j + 2;
  pattern[static_cast<std::size_t>(k)] = 1;
  return !perm_contains_classical(w, pattern);
}

namespace detail {

inline std::vector<char> top_row_mask(const Syt2xN& t) {
  const int total = static_cast<int>(t.top.size() + t.bottom.size());
  std::vector<char> in_top(static_cast<std::size_t>(total) + 1, 0);
  for (int v : t.top) in_top[static_cast<std::size_t>(v)] = 1;
  return in_top;
}

}  // namespace detail

/// No k consecutive numbers all sit in the top row.
inline bool syt_condition_m(const Syt2xN& t, int k) {
  if (k < 1) throw std::invalid_argument("syt_condition_m: k must be positive");
  auto in_top = detail::top_row_mask(t);
  const int total = static_cast<int>(in_top.size()) - 1;
  for (int h = 0; h + k <= total; ++h) {
    bool all = true;
    for (int j = 1; j <= k && all; ++j) all = in_top[static_cast<std::size_t>(h + j)];
    if (all) return false;
  }
  return true;
}

/// Every k consecutive numbers in the top row extend the initial top-row
/// segment: no bottom-row entry h is immediately followed by h+1, ..., h+k
/// all in the top row.
inline bool syt_condition_c(const Syt2xN& t, int k) {
  if (k < 1) throw std::invalid_argument("syt_condition_c: k must be positive");
  auto in_top = detail::top_row_mask(t);
  const int total = static_cast<int>(in_top.size()) - 1;
  for (int h = 1; h + k <= total; ++h) {
    if (in_top[static_cast<std::size_t>(h)]) continue;
    bool all = true;
    for (int j = 1; j <= k && all; ++j) all = in_top[static_cast<std::size_t>(h + j)];
    if (all) return false;
  }
  return true;
}

/// Every part value, zero included, occurs fewer than k times.
inline bool partition_condition_m(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("partition_condition_m: k must be positive");
  std::size_t i = 0;
  while (i < lambda.size()) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    if (static_cast<int>(j - i) >= k) return false;
    i = j;
  }
  return true;
}

/// Every positive part occurs fewer than k times; zeros are exempt.
inline bool partition_condition_c(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("partition_condition_c: k must be positive");
  std::size_t i = 0;
  while (i < lambda.size() && lambda[i] > 0) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    if (static_cast<int>(j - i) >= k) return false;
    i = j;
  }
  return true;
}

inline std::string format_syt(const Syt2xN& t) {
  return format_sequence(t.top) + "/" + format_sequence(t.bottom);
}

inline Syt2xN parse_syt(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError(text.size(), "expected '/'");
  Syt2xN t;
  if (slash > 0) t.top = parse_sequence(text.substr(0, slash));
  if (slash + 1 < text.size()) t.bottom = parse_sequence(text.substr(slash + 1));
  require_syt(t, "parse_syt");
  return t;
}

/// One-line digits up to n = 9, comma-separated beyond.
inline std::string format_perm(const Permutation& w) {
  if (w.size() <= 9) {
    std::string out;
    for (int v : w) out += static_cast<char>('0' + v);
    return out;
  }
  return format_sequence(w);
}

inline Permutation parse_perm(std::string_view text) {
  Permutation w;
  if (text.find(',') != std::string_view::npos) {
    w = parse_sequence(text);
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '1' || text[i] > '9') throw ParseError(i, "expected a digit 1-9");
      w.push_back(text[i] - '0');
    }
  }
  if (!is_permutation(w)) throw ParseError(0, "not a permutation of 1..n");
  return w;
}

}  // namespace modcat
