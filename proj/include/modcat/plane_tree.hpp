#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modcat/binary_tree.hpp"

namespace modcat {

/// Canonical plane-tree representation: the degree of each node in pre-order.
/// A sequence (d_0..d_n) encodes a plane tree with n+1 nodes exactly when the
/// entries are nonnegative, sum to n, and every proper prefix sum satisfies
/// d_0 + ... + d_{i-1} >= i. Plane trees are never materialized as nested
/// structures; every operation works on this sequence.
using MultiDegree = std::vector<int>;

/// Index of the first failing condition, or -1 when the sequence is a valid
/// multi-degree. Prefix failures report the position i whose condition
/// d_0 + ... + d_{i-1} >= i broke; a wrong total reports the last index.
inline int first_multi_degree_violation(const MultiDegree& d) {
  if (d.empty()) return 0;
  const int n = static_cast<int>(d.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (d[i] < 0) return i;
  long long sum = 0;
  for (int i = 1; i <= n; ++i) {
    sum += d[i - 1];
    if (sum < i) return i;
  }
  if (sum + d[n] != n) return n;
  return -1;
}

inline bool is_valid_multi_degree(const MultiDegree& d) {
  return first_multi_degree_violation(d) == -1;
}

inline void require_multi_degree(const MultiDegree& d, const char* who) {
  int bad = first_multi_degree_violation(d);
  if (bad != -1)
    throw std::invalid_argument(std::string(who) + ": invalid multi-degree at index " +
                                std::to_string(bad));
}

namespace detail {

// d(s ^ u) = (d_0(s)+1, d_1(s).., d(u)): the right subtree hangs off the root
// as its new last child, after everything from the left subtree in pre-order.
inline void binary_to_plane_rec(const BinaryTree& t, MultiDegree& out) {
  if (t.is_leaf()) {
    out.push_back(0);
    return;
  }
  const std::size_t at = out.size();
  binary_to_plane_rec(t.left(), out);
  ++out[at];
  binary_to_plane_rec(t.right(), out);
}

}  // namespace detail

/// Multi-degree of the plane tree obtained by contracting the left edges of
/// a binary tree. Node i of the plane tree corresponds to leaf i of t.
inline MultiDegree binary_to_plane(const BinaryTree& t) {
  MultiDegree out;
  detail::binary_to_plane_rec(t, out);
  return out;
}

namespace detail {

inline BinaryTree plane_to_binary_rec(const MultiDegree& d, std::size_t& pos) {
  int deg = d[pos++];
  BinaryTree t;
  for (int c = 0; c < deg; ++c) t = wedge(t, plane_to_binary_rec(d, pos));
  return t;
}

}  // namespace detail

/// Inverse of binary_to_plane. Throws on an invalid multi-degree.
inline BinaryTree plane_to_binary(const MultiDegree& d) {
  require_multi_degree(d, "plane_to_binary");
  std::size_t pos = 0;
  return detail::plane_to_binary_rec(d, pos);
}

/// delta_i = d_0 + ... + d_i - i, the left depth of the corresponding
/// binary tree.
inline LeftDepth left_depth_from_multi_degree(const MultiDegree& d) {
  require_multi_degree(d, "left_depth_from_multi_degree");
  LeftDepth out(d.size());
  long long sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sum += d[i];
    out[i] = static_cast<int>(sum - static_cast<long long>(i));
  }
  return out;
}

/// Parent of each node in pre-order indexing; the root gets -1.
inline std::vector<int> preorder_parents(const MultiDegree& d) {
  require_multi_degree(d, "preorder_parents");
  const int n = static_cast<int>(d.size()) - 1;
  std::vector<int> parent(d.size(), -1);
  std::vector<std::pair<int, int>> stack;  // node, children still to attach
  stack.emplace_back(0, d[0]);
  for (int i = 1; i <= n; ++i) {
    while (stack.back().second == 0) stack.pop_back();
    parent[i] = stack.back().first;
    --stack.back().second;
    stack.emplace_back(i, d[i]);
  }
  return parent;
}

/// Children of node i in pre-order, left to right.
inline std::vector<int> children_of(const MultiDegree& d, int i) {
  auto parent = preorder_parents(d);
  std::vector<int> kids;
  for (int j = 0; j < static_cast<int>(d.size()); ++j)
    if (parent[j] == i) kids.push_back(j);
  return kids;
}

/// Visit every multi-degree of a plane tree with n+1 nodes in lexicographic
/// order. The visited reference is reused between calls; copy to keep it.
template <class F>
void for_each_plane_tree(int n, F&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_plane_tree: n must be nonnegative");
  MultiDegree d(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == n) {
      d[n] = 0;
      visit(static_cast<const MultiDegree&>(d));
      return;
    }
    // placing d[i] must keep the next prefix condition satisfiable
    int lo = std::max(0, i + 1 - sum);
    int hi = n - sum;
    for (int v = lo; v <= hi; ++v) {
      d[i] = v;
      self(self, i + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
}

inline std::vector<MultiDegree> enumerate_plane_trees(int n) {
  std::vector<MultiDegree> out;
  for_each_plane_tree(n, [&](const MultiDegree& d) { out.push_back(d); });
  return out;
}

/// Visit every binary tree with n internal nodes, in the order induced from
/// the lexicographic plane-tree order through the bijection.
template <class F>
void for_each_binary_tree(int n, F&& visit) {
  for_each_plane_tree(n, [&](const MultiDegree& d) { visit(plane_to_binary(d)); });
}

inline std::vector<BinaryTree> enumerate_binary_trees(int n) {
  std::vector<BinaryTree> out;
  for_each_binary_tree(n, [&](const BinaryTree& t) { out.push_back(t); });
  return out;
}

/// Comma-separated rendering shared by left depths and multi-degrees,
/// e.g. "2,1,0,1,0".
inline std::string format_sequence(const std::vector<int>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

inline std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError(pos, "expected an integer");
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError(start, "integer out of range");
      ++pos;
    }
    out.push_back(static_cast<int>(negative ? -value : value));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return out;
}

}  // namespace modcat
