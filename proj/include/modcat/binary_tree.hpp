#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modcat {

/// Error raised by the text parsers, carrying the offending offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Full binary tree. A default-constructed tree is a single leaf; every
/// internal node has exactly two children. Leaves carry no stored labels;
/// they are numbered 0..n left to right when serialized. Structure is
/// immutable and shared, so copies are cheap and values are safe to share
/// across threads.
class BinaryTree {
 public:
  BinaryTree() = default;

  bool is_leaf() const { return node_ == nullptr; }
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  int internal_count() const {
    return is_leaf() ? 0 : 1 + left().internal_count() + right().internal_count();
  }
  int leaf_count() const { return internal_count() + 1; }

  /// The tree whose root has left subtree s and right subtree t.
  friend BinaryTree wedge(const BinaryTree& s, const BinaryTree& t);

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf()) return false;
    return a.left() == b.left() && a.right() == b.right();
  }
  friend bool operator!=(const BinaryTree& a, const BinaryTree& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree left, right;
};

inline const BinaryTree& BinaryTree::left() const {
  if (!node_) throw std::logic_error("BinaryTree: a leaf has no children");
  return node_->left;
}

inline const BinaryTree& BinaryTree::right() const {
  if (!node_) throw std::logic_error("BinaryTree: a leaf has no children");
  return node_->right;
}

inline BinaryTree wedge(const BinaryTree& s, const BinaryTree& t) {
  BinaryTree r;
  r.node_ = std::make_shared<const BinaryTree::Node>(BinaryTree::Node{s, t});
  return r;
}

inline BinaryTree leaf() { return BinaryTree{}; }

/// Left comb: comb(0) is a leaf and comb(k) = wedge(comb(k-1), leaf).
inline BinaryTree comb(int k) {
  if (k < 0) throw std::invalid_argument("comb: negative length");
  BinaryTree t;
  for (int i = 0; i < k; ++i) t = wedge(t, leaf());
  return t;
}

/// A leaf wedged with a left comb of length k. Avoiding this pattern
/// characterizes the k-minimal trees.
inline BinaryTree comb1(int k) { return wedge(leaf(), comb(k)); }

/// Left depth sequence: entry i is the number of left edges on the path
/// from the root to leaf i. The last entry is always 0.
using LeftDepth = std::vector<int>;

namespace detail {

inline void left_depth_rec(const BinaryTree& t, int depth, LeftDepth& out) {
  if (t.is_leaf()) {
    out.push_back(depth);
    return;
  }
  left_depth_rec(t.left(), depth + 1, out);
  left_depth_rec(t.right(), depth, out);
}

}  // namespace detail

inline LeftDepth left_depth(const BinaryTree& t) {
  LeftDepth out;
  detail::left_depth_rec(t, 0, out);
  return out;
}

/// Index of the first entry at which the sequence fails to be the left depth
/// of some binary tree, or -1 if it is valid. A sequence (d_0..d_n) is valid
/// iff d_n = 0, interior entries are >= 1, and consecutive entries drop by at
/// most 1.
inline int first_left_depth_violation(const LeftDepth& d) {
  if (d.empty()) return 0;
  const int n = static_cast<int>(d.size()) - 1;
  for (int i = 0; i <= n; ++i) {
    if (d[i] < 0) return i;
    if (i < n && d[i] < 1) return i;
    if (i == n && d[i] != 0) return i;
    if (i >= 1 && d[i] < d[i - 1] - 1) return i;
  }
  return -1;
}

inline bool is_valid_left_depth(const LeftDepth& d) { return first_left_depth_violation(d) == -1; }

namespace detail {

// Rebuild the tree for the slice d[lo..hi] whose depths sit on top of `base`
// (d[hi] == base; entries before hi exceed base). The left block ends at the
// first entry equal to base + 1, which exists because entries drop by at
// most 1 per step.
inline BinaryTree from_left_depth_rec(const LeftDepth& d, int lo, int hi, int base) {
  if (lo == hi) return leaf();
  int split = lo;
  while (d[split] != base + 1) ++split;
  return wedge(from_left_depth_rec(d, lo, split, base + 1),
               from_left_depth_rec(d, split + 1, hi, base));
}

}  // namespace detail

/// Inverse of left_depth. Throws std::invalid_argument naming the first
/// violating index when the input is not a valid left depth sequence.
inline BinaryTree from_left_depth(const LeftDepth& d) {
  int bad = first_left_depth_violation(d);
  if (bad != -1)
    throw std::invalid_argument("from_left_depth: invalid sequence at index " +
                                std::to_string(bad));
  return detail::from_left_depth_rec(d, 0, static_cast<int>(d.size()) - 1, 0);
}

namespace detail {

// Number of internal nodes on the chain that starts at t and repeatedly
// follows left children.
inline int left_chain_length(const BinaryTree& t) {
  int len = 0;
  for (BinaryTree cur = t; !cur.is_leaf(); cur = cur.left()) ++len;
  return len;
}

}  // namespace detail

/// True iff the left comb of length k embeds in t, i.e. some node starts a
/// chain of at least k internal nodes linked through left children.
inline bool contains_comb(const BinaryTree& t, int k) {
  if (k < 1) throw std::invalid_argument("contains_comb: k must be positive");
  if (t.is_leaf()) return false;
  if (detail::left_chain_length(t) >= k) return true;
  return contains_comb(t.left(), k) || contains_comb(t.right(), k);
}

/// True iff comb1(k) embeds in t: some node whose right child starts a left
/// chain of at least k internal nodes.
inline bool contains_comb1(const BinaryTree& t, int k) {
  if (k < 1) throw std::invalid_argument("contains_comb1: k must be positive");
  if (t.is_leaf()) return false;
  if (!t.right().is_leaf() && detail::left_chain_length(t.right()) >= k) return true;
  return contains_comb1(t.left(), k) || contains_comb1(t.right(), k);
}

namespace detail {

inline void format_tree_rec(const BinaryTree& t, int& next_leaf, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(next_leaf++);
    return;
  }
  out += '(';
  format_tree_rec(t.left(), next_leaf, out);
  out += ' ';
  format_tree_rec(t.right(), next_leaf, out);
  out += ')';
}

}  // namespace detail

/// Nested-parentheses form over positional leaf labels, e.g. "((0 1) 2)".
inline std::string format_tree(const BinaryTree& t) {
  std::string out;
  int next_leaf = 0;
  detail::format_tree_rec(t, next_leaf, out);
  return out;
}

namespace detail {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;
  int next_leaf = 0;

  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  BinaryTree parse_node() {
    skip_spaces();
    if (pos >= text.size()) throw ParseError(pos, "unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      BinaryTree l = parse_node();
      skip_spaces();
      if (pos >= text.size() || text[pos] == ')')
        throw ParseError(pos, "expected a second subtree before ')'");
      BinaryTree r = parse_node();
      skip_spaces();
      if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
      ++pos;
      return wedge(l, r);
    }
    if (text[pos] < '0' || text[pos] > '9')
      throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
      value = value * 10 + (text[pos++] - '0');
    if (value != next_leaf)
      throw ParseError(start, "expected leaf label " + std::to_string(next_leaf));
    ++next_leaf;
    return leaf();
  }
};

}  // namespace detail

/// Parse the nested-parentheses form. Leaf labels must be 0..n in order.
inline BinaryTree parse_tree(std::string_view text) {
  detail::TreeParser p{text};
  BinaryTree t = p.parse_node();
  p.skip_spaces();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after tree");
  return t;
}

}  // namespace modcat
