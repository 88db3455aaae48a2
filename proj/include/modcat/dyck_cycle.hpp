#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modcat/bigint.hpp"
#include "modcat/catalan_objects.hpp"

namespace modcat {

/// Lattice path U^{e_0} D U^{e_1} ... D U^{e_n} stored by its up-run
/// exponents; not necessarily a Dyck path. The exponents sum to n, so the
/// path has n down-steps and length 2n.
struct LatticePath {
  std::vector<int> exponents;

  int down_steps() const { return static_cast<int>(exponents.size()) - 1; }
  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.exponents == b.exponents;
  }
  friend bool operator<(const LatticePath& a, const LatticePath& b) {
    return a.exponents < b.exponents;
  }
};

inline void require_lattice_path(const LatticePath& p, const char* who) {
  if (p.exponents.empty()) throw std::invalid_argument(std::string(who) + ": empty path");
  long long sum = 0;
  for (int e : p.exponents) {
    if (e < 0) throw std::invalid_argument(std::string(who) + ": negative exponent");
    sum += e;
  }
  if (sum != p.down_steps())
    throw std::invalid_argument(std::string(who) + ": exponents must sum to the down-step count");
}

inline bool is_dyck(const LatticePath& p) {
  require_lattice_path(p, "is_dyck");
  long long height = p.exponents[0];
  for (std::size_t i = 1; i < p.exponents.size(); ++i) {
    if (--height < 0) return false;
    height += p.exponents[i];
  }
  return true;
}

inline std::string format_path(const LatticePath& p) {
  std::string out(static_cast<std::size_t>(p.exponents[0]), 'U');
  for (std::size_t i = 1; i < p.exponents.size(); ++i) {
    out += 'D';
    out.append(static_cast<std::size_t>(p.exponents[i]), 'U');
  }
  return out;
}

inline LatticePath lattice_path_from_steps(std::string_view steps) {
  LatticePath p{{0}};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 'U')
      ++p.exponents.back();
    else if (steps[i] == 'D')
      p.exponents.push_back(0);
    else
      throw ParseError(i, "expected 'U' or 'D'");
  }
  require_lattice_path(p, "lattice_path_from_steps");
  return p;
}

/// Cyclic reordering that keeps the leading run in place and rotates the
/// remaining blocks: exponents (e_0, e_{r+1}, ..., e_n, e_1, ..., e_r).
inline LatticePath cyclic_reorder(const LatticePath& p, int r) {
  require_lattice_path(p, "cyclic_reorder");
  const int n = p.down_steps();
  if (r < 0 || r > n) throw std::invalid_argument("cyclic_reorder: r out of range");
  LatticePath out;
  out.exponents.reserve(p.exponents.size());
  out.exponents.push_back(p.exponents[0]);
  for (int i = r + 1; i <= n; ++i) out.exponents.push_back(p.exponents[static_cast<std::size_t>(i)]);
  for (int i = 1; i <= r; ++i) out.exponents.push_back(p.exponents[static_cast<std::size_t>(i)]);
  return out;
}

/// The e_0 rotation offsets r with L^{(r)} a Dyck path, listed in the order
/// r_1 > r_2 > ... > r_{e_0}. Offset r_i is determined by the subpath after
/// the leading up-run: with h its lowest height, the first point at height
/// h + i - 1 closes down-step number r_i + 1. Levels below the start of the
/// subpath are first reached by a down-step, so each r_i is well defined.
inline std::vector<int> valid_rotation_indices(const LatticePath& p) {
  require_lattice_path(p, "valid_rotation_indices");
  const int n = p.down_steps();
  const int ell = p.exponents[0];
  if (ell < 1)
    throw std::invalid_argument("valid_rotation_indices: leading run must be nonempty");
  std::map<long long, int> first_down_at;  // height -> 1-based down-step index
  long long height = ell, lowest = ell;
  for (int i = 1; i <= n; ++i) {
    --height;
    first_down_at.try_emplace(height, i);
    lowest = std::min(lowest, height);
    height += p.exponents[static_cast<std::size_t>(i)];
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ell));
  for (int i = 1; i <= ell; ++i) out.push_back(first_down_at.at(lowest + i - 1) - 1);
  return out;
}

/// A lattice path with one marked step: either the i-th up-step of the
/// leading run (domain side) or the j-th down-step of a Dyck path
/// (codomain side).
struct MarkedPath {
  LatticePath path;
  bool mark_is_up = true;
  int mark = 1;  // 1-based

  friend bool operator==(const MarkedPath& a, const MarkedPath& b) {
    return a.path == b.path && a.mark_is_up == b.mark_is_up && a.mark == b.mark;
  }
  friend bool operator<(const MarkedPath& a, const MarkedPath& b) {
    if (a.path.exponents != b.path.exponents) return a.path.exponents < b.path.exponents;
    if (a.mark_is_up != b.mark_is_up) return a.mark_is_up < b.mark_is_up;
    return a.mark < b.mark;
  }
};

/// (L, i) -> (L^{(r_i)}, n - r_i): sends an up-marked lattice path to a
/// down-marked Dyck path with the same leading run and block multiset.
inline MarkedPath dyck2_forward(const MarkedPath& mp) {
  if (!mp.mark_is_up) throw std::invalid_argument("dyck2_forward: expected an up mark");
  require_lattice_path(mp.path, "dyck2_forward");
  if (mp.mark < 1 || mp.mark > mp.path.exponents[0])
    throw std::invalid_argument("dyck2_forward: mark outside the leading run");
  const int n = mp.path.down_steps();
  int r = valid_rotation_indices(mp.path)[static_cast<std::size_t>(mp.mark - 1)];
  return MarkedPath{cyclic_reorder(mp.path, r), false, n - r};
}

inline MarkedPath dyck2_inverse(const MarkedPath& mp) {
  if (mp.mark_is_up) throw std::invalid_argument("dyck2_inverse: expected a down mark");
  require_lattice_path(mp.path, "dyck2_inverse");
  const int n = mp.path.down_steps();
  if (mp.mark < 1 || mp.mark > n)
    throw std::invalid_argument("dyck2_inverse: mark out of range");
  if (!is_dyck(mp.path)) throw std::invalid_argument("dyck2_inverse: path must be Dyck");
  const int r = n - mp.mark;
  LatticePath original = cyclic_reorder(mp.path, n - r);
  auto indices = valid_rotation_indices(original);
  for (int i = 0; i < static_cast<int>(indices.size()); ++i)
    if (indices[static_cast<std::size_t>(i)] == r)
      return MarkedPath{std::move(original), true, i + 1};
  throw std::invalid_argument("dyck2_inverse: mark does not close a rotation");
}

/// Step string with a '*' after the marked step.
inline std::string format_marked(const MarkedPath& mp) {
  std::string steps = format_path(mp.path);
  const char target = mp.mark_is_up ? 'U' : 'D';
  int seen = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == target && ++seen == mp.mark) {
      steps.insert(i + 1, 1, '*');
      return steps;
    }
  }
  throw std::invalid_argument("format_marked: mark out of range");
}

/// Number of Dyck paths U^{e_0} D U^{e_1} ... D U^{e_n} with every
/// e_1, ..., e_n in I, obtained by counting all marked lattice paths with
/// those blocks and averaging the marks: sum_ell ell * #paths / n.
inline Int count_via_cycle(const std::set<int>& I, int n) {
  if (n < 1) throw std::invalid_argument("count_via_cycle: n must be positive");
  for (int i : I)
    if (i < 0) throw std::invalid_argument("count_via_cycle: negative degree in I");
  // paths_with[j][s]: sequences (e_1..e_j) over I summing to s
  std::vector<std::vector<Int>> paths_with(
      static_cast<std::size_t>(n) + 1, std::vector<Int>(static_cast<std::size_t>(n), 0));
  paths_with[0][0] = 1;
  for (int j = 1; j <= n; ++j)
    for (int s = 0; s <= n - 1; ++s) {
      Int acc = 0;
      for (int i : I) {
        if (i > s) break;
        acc += paths_with[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s - i)];
      }
      paths_with[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = std::move(acc);
    }
  Int total = 0;
  for (int ell = 1; ell <= n; ++ell)
    total += Int(ell) * paths_with[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - ell)];
  return exact_div(total, Int(n));
}

}  // namespace modcat
