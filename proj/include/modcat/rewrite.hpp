#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modcat/bigint.hpp"
#include "modcat/binary_tree.hpp"
#include "modcat/plane_tree.hpp"

namespace modcat {

/// Address of a node as the root-to-node path over {L, R}. The empty path is
/// the root.
struct RotationSite {
  std::string path;

  friend bool operator==(const RotationSite& a, const RotationSite& b) {
    return a.path == b.path;
  }
};

inline const BinaryTree& subtree_at(const BinaryTree& t, std::string_view path) {
  const BinaryTree* cur = &t;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->is_leaf())
      throw std::invalid_argument("subtree_at: path runs past a leaf at step " +
                                  std::to_string(i));
    if (path[i] == 'L')
      cur = &cur->left();
    else if (path[i] == 'R')
      cur = &cur->right();
    else
      throw std::invalid_argument("subtree_at: path must consist of 'L' and 'R'");
  }
  return *cur;
}

inline BinaryTree replace_subtree(const BinaryTree& t, std::string_view path,
                                  const BinaryTree& sub) {
  if (path.empty()) return sub;
  if (t.is_leaf()) throw std::invalid_argument("replace_subtree: path runs past a leaf");
  if (path[0] == 'L') return wedge(replace_subtree(t.left(), path.substr(1), sub), t.right());
  if (path[0] == 'R') return wedge(t.left(), replace_subtree(t.right(), path.substr(1), sub));
  throw std::invalid_argument("replace_subtree: path must consist of 'L' and 'R'");
}

namespace detail {

// The right k-rotation pattern (t_0 ^ t_1 ^ ... ^ t_k) ^ t_{k+1} matches at s
// iff s starts a chain of k+1 internal nodes linked through left children.
inline bool matches_right_rotation(const BinaryTree& s, int k) {
  BinaryTree cur = s;
  for (int j = 0; j <= k; ++j) {
    if (cur.is_leaf()) return false;
    cur = cur.left();
  }
  return true;
}

inline BinaryTree rotate_right_subtree(const BinaryTree& s, int k) {
  std::vector<BinaryTree> parts(static_cast<std::size_t>(k) + 2);
  parts[k + 1] = s.right();
  BinaryTree cur = s.left();
  for (int j = k; j >= 1; --j) {
    parts[j] = cur.right();
    cur = cur.left();
  }
  parts[0] = cur;
  BinaryTree inner = parts[1];
  for (int j = 2; j <= k + 1; ++j) inner = wedge(inner, parts[j]);
  return wedge(parts[0], inner);
}

// The left k-rotation pattern t_0 ^ (t_1 ^ ... ^ t_{k+1}) matches at s iff
// s is internal and s.right starts a left chain of k internal nodes.
inline bool matches_left_rotation(const BinaryTree& s, int k) {
  if (s.is_leaf()) return false;
  BinaryTree cur = s.right();
  for (int j = 0; j < k; ++j) {
    if (cur.is_leaf()) return false;
    cur = cur.left();
  }
  return true;
}

inline BinaryTree rotate_left_subtree(const BinaryTree& s, int k) {
  std::vector<BinaryTree> parts(static_cast<std::size_t>(k) + 2);
  parts[0] = s.left();
  parts[k + 1] = s.right().right();
  BinaryTree cur = s.right().left();
  for (int j = k; j >= 2; --j) {
    parts[j] = cur.right();
    cur = cur.left();
  }
  parts[1] = cur;
  BinaryTree spine = parts[0];
  for (int j = 1; j <= k; ++j) spine = wedge(spine, parts[j]);
  return wedge(spine, parts[k + 1]);
}

template <class Pred>
inline void collect_sites(const BinaryTree& t, std::string& path, Pred&& matches,
                          std::vector<RotationSite>& out) {
  if (t.is_leaf()) return;
  if (matches(t)) out.push_back(RotationSite{path});
  path.push_back('L');
  collect_sites(t.left(), path, matches, out);
  path.back() = 'R';
  collect_sites(t.right(), path, matches, out);
  path.pop_back();
}

}  // namespace detail

/// Rewrite (t_0 ^ ... ^ t_k) ^ t_{k+1} into t_0 ^ (t_1 ^ ... ^ t_{k+1}) at
/// the addressed node. Moves the tree strictly up in the k-associative order.
inline BinaryTree right_k_rotation(const BinaryTree& t, const RotationSite& site, int k) {
  if (k < 1) throw std::invalid_argument("right_k_rotation: k must be positive");
  const BinaryTree& s = subtree_at(t, site.path);
  if (!detail::matches_right_rotation(s, k))
    throw std::invalid_argument("right " + std::to_string(k) +
                                "-rotation does not apply at site '" + site.path + "'");
  return replace_subtree(t, site.path, detail::rotate_right_subtree(s, k));
}

/// Inverse of right_k_rotation at the same site.
inline BinaryTree left_k_rotation(const BinaryTree& t, const RotationSite& site, int k) {
  if (k < 1) throw std::invalid_argument("left_k_rotation: k must be positive");
  const BinaryTree& s = subtree_at(t, site.path);
  if (!detail::matches_left_rotation(s, k))
    throw std::invalid_argument("left " + std::to_string(k) +
                                "-rotation does not apply at site '" + site.path + "'");
  return replace_subtree(t, site.path, detail::rotate_left_subtree(s, k));
}

/// All sites where a right k-rotation applies, in pre-order.
inline std::vector<RotationSite> right_rotation_sites(const BinaryTree& t, int k) {
  std::vector<RotationSite> out;
  std::string path;
  detail::collect_sites(
      t, path, [k](const BinaryTree& s) { return detail::matches_right_rotation(s, k); }, out);
  return out;
}

inline std::vector<RotationSite> left_rotation_sites(const BinaryTree& t, int k) {
  std::vector<RotationSite> out;
  std::string path;
  detail::collect_sites(
      t, path, [k](const BinaryTree& s) { return detail::matches_left_rotation(s, k); }, out);
  return out;
}

/// Up k-slide at node v_j: its last k subtrees move to the parent, directly
/// right of v_j. Pre-order positions are unchanged, so only two entries of
/// the multi-degree move: d_parent += k, d_j -= k.
inline MultiDegree up_k_slide(const MultiDegree& d, int j, int k) {
  require_multi_degree(d, "up_k_slide");
  if (k < 1) throw std::invalid_argument("up_k_slide: k must be positive");
  const int n = static_cast<int>(d.size()) - 1;
  if (j < 1 || j > n) throw std::invalid_argument("up_k_slide: node has no parent");
  if (d[j] < k)
    throw std::invalid_argument("up_k_slide: node " + std::to_string(j) +
                                " has fewer than k subtrees");
  auto parent = preorder_parents(d);
  MultiDegree out = d;
  out[parent[j]] += k;
  out[j] -= k;
  return out;
}

/// Down k-slide at node v_j: subtrees h+1..h+k of v_j move down to become
/// children of its h-th child. Inverse of the up slide.
inline MultiDegree down_k_slide(const MultiDegree& d, int j, int k, int h) {
  require_multi_degree(d, "down_k_slide");
  if (k < 1) throw std::invalid_argument("down_k_slide: k must be positive");
  const int n = static_cast<int>(d.size()) - 1;
  if (j < 0 || j > n) throw std::invalid_argument("down_k_slide: no such node");
  if (d[j] < k + 1)
    throw std::invalid_argument("down_k_slide: node " + std::to_string(j) +
                                " needs at least k+1 subtrees");
  if (h < 1 || h > d[j] - k)
    throw std::invalid_argument("down_k_slide: child position out of range");
  auto kids = children_of(d, j);
  MultiDegree out = d;
  out[j] -= k;
  out[kids[h - 1]] += k;
  return out;
}

/// Minimal in its k-equivalence class: every non-root degree is < k.
inline bool is_k_minimal(const MultiDegree& d, int k) {
  require_multi_degree(d, "is_k_minimal");
  if (k < 1) throw std::invalid_argument("is_k_minimal: k must be positive");
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] >= k) return false;
  return true;
}

/// Maximal in its k-equivalence class: every degree (root included) is <= k.
inline bool is_k_maximal(const MultiDegree& d, int k) {
  require_multi_degree(d, "is_k_maximal");
  if (k < 1) throw std::invalid_argument("is_k_maximal: k must be positive");
  for (int v : d)
    if (v > k) return false;
  return true;
}

/// The unique k-minimal multi-degree congruent to d modulo k: reduce every
/// non-root degree mod k and give the slack to the root.
inline MultiDegree canonicalize(const MultiDegree& d, int k) {
  require_multi_degree(d, "canonicalize");
  if (k < 1) throw std::invalid_argument("canonicalize: k must be positive");
  const int n = static_cast<int>(d.size()) - 1;
  MultiDegree out(d.size());
  int rest = 0;
  for (int i = 1; i <= n; ++i) {
    out[i] = d[i] % k;
    rest += out[i];
  }
  out[0] = n - rest;
  return out;
}

/// Trees are k-equivalent iff their left depths agree componentwise mod k
/// (equivalently, their multi-degrees do).
inline bool k_equivalent(const BinaryTree& a, const BinaryTree& b, int k) {
  if (k < 1) throw std::invalid_argument("k_equivalent: k must be positive");
  LeftDepth da = left_depth(a), db = left_depth(b);
  if (da.size() != db.size())
    throw std::invalid_argument("k_equivalent: trees have different sizes");
  for (std::size_t i = 0; i < da.size(); ++i)
    if ((da[i] - db[i]) % k != 0) return false;
  return true;
}

/// One k-equivalence class of plane trees with a fixed node count.
struct KComponent {
  int k = 0;
  MultiDegree canonical;            // the k-minimal representative
  Int size = 0;                     // number of member trees
  std::vector<MultiDegree> members;  // filled only on request
};

/// All k-components of the trees with n+1 nodes, ordered lexicographically by
/// canonical multi-degree. Exhaustive: intended for desk-scale n.
inline std::vector<KComponent> k_components(int n, int k, bool with_members = false) {
  if (k < 1) throw std::invalid_argument("k_components: k must be positive");
  std::map<MultiDegree, KComponent> groups;
  for_each_plane_tree(n, [&](const MultiDegree& d) {
    MultiDegree c = canonicalize(d, k);
    auto [it, inserted] = groups.try_emplace(std::move(c));
    if (inserted) {
      it->second.k = k;
      it->second.canonical = it->first;
    }
    it->second.size += 1;
    if (with_members) it->second.members.push_back(d);
  });
  std::vector<KComponent> out;
  out.reserve(groups.size());
  for (auto& [key, component] : groups) out.push_back(std::move(component));
  return out;
}

/// Number of plane trees k-equivalent to d, by a suffix-sum walk over all
/// multi-degrees congruent to d mod k. Exact for any n.
inline Int k_class_size(const MultiDegree& d, int k) {
  require_multi_degree(d, "k_class_size");
  if (k < 1) throw std::invalid_argument("k_class_size: k must be positive");
  const int n = static_cast<int>(d.size()) - 1;
  // ways[s] = number of congruent tails (d_i..d_n) with sum s; the prefix
  // condition at position i caps the tail sum by n - i.
  std::vector<Int> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (int i = n; i >= 1; --i) {
    std::vector<Int> next(static_cast<std::size_t>(n) + 1);
    const int cap = n - i;
    const int residue = d[i] % k;
    for (int s = 0; s <= cap; ++s) {
      if (ways[s] == 0) continue;
      for (int v = residue; s + v <= cap; v += k) next[s + v] += ways[s];
    }
    ways = std::move(next);
  }
  Int total = 0;
  for (const Int& w : ways) total += w;
  return total;
}

/// Upward covers in the Tamari order: every result of a single right
/// 1-rotation.
inline std::vector<BinaryTree> tamari_covers(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  for (const RotationSite& site : right_rotation_sites(t, 1))
    out.push_back(right_k_rotation(t, site, 1));
  return out;
}

/// A multi-degree (d_0..d_n) is k-admissible when, with m the least positive
/// integer congruent to n mod k, the entries past position m vanish and
/// (d_0 - n + m, d_1, ..., d_m) is itself a valid multi-degree. These are
/// exactly the minimal representatives of the largest k-classes.
inline bool is_k_admissible(const MultiDegree& d, int k) {
  require_multi_degree(d, "is_k_admissible");
  if (k < 1) throw std::invalid_argument("is_k_admissible: k must be positive");
  const int n = static_cast<int>(d.size()) - 1;
  if (n == 0) return true;
  int m = n % k;
  if (m == 0) m = k;
  for (int i = m + 1; i <= n; ++i)
    if (d[i] != 0) return false;
  MultiDegree head(d.begin(), d.begin() + m + 1);
  head[0] -= n - m;
  if (head[0] < 0) return false;
  return is_valid_multi_degree(head);
}

inline Int count_k_admissible(int n, int k) {
  Int count = 0;
  for_each_plane_tree(n, [&](const MultiDegree& d) {
    if (is_k_admissible(d, k)) ++count;
  });
  return count;
}

/// Largest k-class size among trees with n+1 nodes, found exhaustively.
inline Int largest_class_size(int n, int k) {
  if (n == 0) return 1;
  Int best = 0;
  for (const KComponent& c : k_components(n, k))
    if (c.size > best) best = c.size;
  return best;
}

}  // namespace modcat
