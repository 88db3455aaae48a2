#pragma once

#include <set>
#include <utility>
#include <vector>

#include "modcat/bigint.hpp"
#include "modcat/series.hpp"

namespace modcat {

inline Int catalan(long long n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  return exact_div(binomial(2 * n, n), Int(n + 1));
}

/// Plane trees with n+1 nodes of which r are internal; 0 outside 1 <= r <= n.
inline Int narayana(long long n, long long r) {
  if (n < 0) throw std::invalid_argument("narayana: n must be nonnegative");
  if (n == 0) return r == 0 ? 1 : 0;
  if (r < 1 || r > n) return 0;
  return exact_div(binomial(n, r) * binomial(n, r - 1), Int(n));
}

/// Number of plane trees with m_i nodes of degree i. Zero unless the
/// multiplicities describe a tree: sum m_i = n >= 1 and sum i*m_i = n - 1.
inline Int kreweras(const std::vector<long long>& multiplicities) {
  long long n = 0, edges = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) return 0;
    n += multiplicities[i];
    edges += static_cast<long long>(i) * multiplicities[i];
  }
  if (n < 1 || edges != n - 1) return 0;
  return exact_div(multinomial(multiplicities), Int(n));
}

namespace detail {

// Sums weight(|lambda|, multiplicities-with-m0) over all partitions lambda
// with parts in [1, max_part], at most `slots` parts in total (m_0 absorbs
// the rest) and |lambda| <= max_size.
template <class Weight>
Int sum_over_partitions(int max_part, long long slots, long long max_size, Weight&& weight) {
  std::vector<long long> mult(static_cast<std::size_t>(std::max(max_part, 0)) + 1, 0);
  Int total = 0;
  auto rec = [&](auto&& self, int part, long long used, long long size) -> void {
    if (part > max_part) {
      mult[0] = slots - used;
      total += weight(size, mult);
      return;
    }
    for (long long m = 0;; ++m) {
      mult[static_cast<std::size_t>(part)] = m;
      if (used + m > slots || size + m * part > max_size) break;
      self(self, part + 1, used + m, size + m * part);
    }
    mult[static_cast<std::size_t>(part)] = 0;
  };
  rec(rec, 1, 0, 0);
  return total;
}

}  // namespace detail

/// C(k,n) as a positive sum over partitions inside a (k-1) x n box of size
/// < n, each contributing (n - |lambda|)/n monomial-symmetric evaluations.
inline Int c_modular_msf(int k, long long n) {
  if (k < 1 || n < 0) throw std::invalid_argument("c_modular_msf: need k >= 1, n >= 0");
  if (n == 0) return 1;
  Int total = detail::sum_over_partitions(
      k - 1, n, n - 1, [&](long long size, const std::vector<long long>& mult) {
        return Int(n - size) * multinomial(mult);
      });
  Int result = exact_div(total, Int(n));
  if (result < 0) throw std::logic_error("c_modular_msf: negative result");
  return result;
}

/// C(k,n) as the alternating binomial sum.
inline Int c_modular_alt(int k, long long n) {
  if (k < 1 || n < 0) throw std::invalid_argument("c_modular_alt: need k >= 1, n >= 0");
  if (n == 0) return 1;
  Int total = 0;
  for (long long j = 0; j * k <= n - 1; ++j) {
    Int term = binomial(n, j) * binomial(2 * n - j * k, n + 1);
    total += (j % 2 == 0) ? term : -term;
  }
  Int result = exact_div(total, Int(n));
  if (result < 0) throw std::logic_error("c_modular_alt: negative result");
  return result;
}

/// M(k,n) as a positive sum over partitions of n inside a k x (n+1) box.
inline Int m_general_msf(int k, long long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("m_general_msf: need k >= 0, n >= 0");
  Int total = detail::sum_over_partitions(
      k, n + 1, n, [&](long long size, const std::vector<long long>& mult) {
        return size == n ? multinomial(mult) : Int(0);
      });
  Int result = exact_div(total, Int(n + 1));
  if (result < 0) throw std::logic_error("m_general_msf: negative result");
  return result;
}

/// M(k,n) as the alternating binomial sum.
inline Int m_general_alt(int k, long long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("m_general_alt: need k >= 0, n >= 0");
  const long long step = k + 1;
  Int total = 0;
  for (long long j = 0; j * step <= n; ++j) {
    Int term = binomial(n + 1, j) * binomial(2 * n - j * step, n);
    total += (j % 2 == 0) ? term : -term;
  }
  Int result = exact_div(total, Int(n + 1));
  if (result < 0) throw std::logic_error("m_general_alt: negative result");
  return result;
}

/// Number of plane trees whose root has degree ell and whose non-root
/// degrees all lie in I: (ell/n) [z^(n-ell)] (sum_{i in I} z^i)^n.
inline Int count_degree_constrained(const std::set<int>& I, int ell, int n) {
  if (ell < 1 || n < 1)
    throw std::invalid_argument("count_degree_constrained: need ell >= 1, n >= 1");
  if (ell > n) return 0;
  const int target = n - ell;
  TruncatedSeries poly(target);
  for (int i : I) {
    if (i < 0) throw std::invalid_argument("count_degree_constrained: negative degree in I");
    if (i <= target) poly.set_coeff(i, 1);
  }
  Int val = Int(ell) * poly.pow(n).coeff(target);
  return exact_div(val, Int(n));
}

/// Generating series of M(k, .): coefficient of z^(n+1) is M(k,n). Computed
/// by fixed-point iteration on M = z (1 + M + ... + M^k); each pass pins one
/// more coefficient.
inline TruncatedSeries series_m(int k, int order) {
  if (k < 0 || order < 1) throw std::invalid_argument("series_m: need k >= 0, order >= 1");
  TruncatedSeries m = TruncatedSeries::z(order);
  for (int pass = 0; pass < order; ++pass) {
    TruncatedSeries sum = TruncatedSeries::constant(1, order);
    TruncatedSeries power = TruncatedSeries::constant(1, order);
    for (int i = 1; i <= k; ++i) {
      power = power * m;
      sum += power;
    }
    m = sum.shift_up();
  }
  return m;
}

/// Generating series of C(k, .): z / (1 - M_{k-1}(z)).
inline TruncatedSeries series_c(int k, int order) {
  if (k < 1 || order < 1) throw std::invalid_argument("series_c: need k >= 1, order >= 1");
  TruncatedSeries denom = TruncatedSeries::constant(1, order) - series_m(k - 1, order);
  return denom.reciprocal().shift_up();
}

/// Generating series of D(k, .): z / (1 - M_{k-1}(z))^2.
inline TruncatedSeries series_d(int k, int order) {
  if (k < 1 || order < 1) throw std::invalid_argument("series_d: need k >= 1, order >= 1");
  TruncatedSeries inv =
      (TruncatedSeries::constant(1, order) - series_m(k - 1, order)).reciprocal();
  return (inv * inv).shift_up();
}

/// Total number of contacts with the x-axis over all Dyck paths of length 2n
/// avoiding a down-step followed by k up-steps.
inline Int d_intersections(int k, long long n) {
  if (k < 1 || n < 1) throw std::invalid_argument("d_intersections: need k >= 1, n >= 1");
  Int total = 0;
  for (long long j = 0; j * k <= n - 1; ++j) {
    Int term = binomial(n, j) * binomial(2 * n - j * k + 1, n + 2);
    total += (j % 2 == 0) ? term : -term;
  }
  Int result = exact_div(2 * total, Int(n));
  if (result < 0) throw std::logic_error("d_intersections: negative result");
  return result;
}

/// Size of the largest k-equivalence class of plane trees with n+1 nodes.
inline Int largest_class_size_formula(long long n, int k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("largest_class_size_formula: need n >= 1, k >= 1");
  Int total = 0;
  for (long long j = 0; j * k <= n; ++j) total += Int(n - j * k) * binomial(n + j - 1, j);
  return exact_div(total, Int(n));
}

/// M(k,n,r): trees with n+1 nodes, r internal, all degrees <= k.
/// Alternating-sum backend.
inline Int m_refined(int k, long long n, long long r) {
  if (k < 1 || n < 0 || r < 0 || r > n)
    throw std::invalid_argument("m_refined: need k >= 1, 0 <= r <= n");
  if (n == 0) return r == 0 ? 1 : 0;
  Int inner = 0;
  for (long long j = 0; j * k <= n - r; ++j) {
    Int term = binomial(r, j) * binomial(n - j * k - 1, r - 1);
    inner += (j % 2 == 0) ? term : -term;
  }
  Int result = exact_div(binomial(n + 1, r) * inner, Int(n + 1));
  if (result < 0) throw std::logic_error("m_refined: negative result");
  return result;
}

/// M(k,n,r) as a positive partition sum: partitions of n in a k x (n+1) box
/// with exactly r parts.
inline Int m_refined_msf(int k, long long n, long long r) {
  if (k < 1 || n < 0 || r < 0 || r > n)
    throw std::invalid_argument("m_refined_msf: need k >= 1, 0 <= r <= n");
  Int total = detail::sum_over_partitions(
      k, n + 1, n, [&](long long size, const std::vector<long long>& mult) {
        if (size != n) return Int(0);
        long long parts = 0;
        for (std::size_t i = 1; i < mult.size(); ++i) parts += mult[i];
        return parts == r ? multinomial(mult) : Int(0);
      });
  return exact_div(total, Int(n + 1));
}

/// C(k,n,r): trees with n+1 nodes, r internal, non-root degrees < k.
/// Alternating-sum backend.
inline Int c_refined(int k, long long n, long long r) {
  if (k < 1 || n < 0 || r < 0 || r > n)
    throw std::invalid_argument("c_refined: need k >= 1, 0 <= r <= n");
  if (n == 0) return r == 0 ? 1 : 0;
  if (k == 1) return r == 1 ? 1 : 0;  // only the star tree qualifies
  const int kk = k - 1;
  Int total = 0;
  for (long long j = 0; j * kk <= n - r; ++j) {
    Int term = binomial(n, r - 1) * binomial(r - 1, j) * binomial(n - j * kk, r);
    total += (j % 2 == 0) ? term : -term;
  }
  Int result = exact_div(total, Int(n));
  if (result < 0) throw std::logic_error("c_refined: negative result");
  return result;
}

/// C(k,n,r) as a positive partition sum. The partition collects the positive
/// non-root degrees, so a tree with r internal nodes has r - 1 parts.
inline Int c_refined_msf(int k, long long n, long long r) {
  if (k < 1 || n < 0 || r < 0 || r > n)
    throw std::invalid_argument("c_refined_msf: need k >= 1, 0 <= r <= n");
  if (n == 0) return r == 0 ? 1 : 0;
  if (r == 0) return 0;
  Int total = detail::sum_over_partitions(
      k - 1, n, n - 1, [&](long long size, const std::vector<long long>& mult) {
        long long parts = 0;
        for (std::size_t i = 1; i < mult.size(); ++i) parts += mult[i];
        return parts == r - 1 ? Int(n - size) * multinomial(mult) : Int(0);
      });
  return exact_div(total, Int(n));
}

/// Number of plane trees with root degree ell, non-root degrees in I u {0}
/// for a set I of positive degrees, and exactly r + 1 internal nodes:
/// (ell/n) C(n,r) [z^(n-ell)] (sum_{i in I} z^i)^r.
inline Int refined_degree_constrained(const std::set<int>& I, int ell, int n, int r) {
  if (ell < 0 || n < 1 || r < 0 || r > n - 1)
    throw std::invalid_argument("refined_degree_constrained: need ell >= 0, 0 <= r <= n-1");
  for (int i : I)
    if (i < 1)
      throw std::invalid_argument("refined_degree_constrained: I must be strictly positive");
  if (ell == 0 || ell > n) return 0;
  const int target = n - ell;
  TruncatedSeries poly(target);
  for (int i : I)
    if (i <= target) poly.set_coeff(i, 1);
  Int val = Int(ell) * binomial(n, r) * poly.pow(r).coeff(target);
  return exact_div(val, Int(n));
}

/// Central-binomial form of C(3,n).
inline Int c3_central(long long n) {
  if (n < 1) throw std::invalid_argument("c3_central: n must be positive");
  Int total = 0;
  for (long long i = 0; i <= n - 1; ++i) total += binomial(n - 1, i) * binomial(i, i / 2);
  return total;
}

/// Closed forms near the boundary of the table, for 1 <= ell <= k:
/// C(k, k+ell) = C_{k+ell} - binom(k+2ell, ell-1) and
/// M(k, k+ell) = C_{k+ell} - binom(k+2ell-1, ell-1).
inline std::pair<Int, Int> boundary_identities(int k, int ell) {
  if (ell < 1 || ell > k)
    throw std::domain_error("boundary_identities: need 1 <= ell <= k");
  Int base = catalan(k + ell);
  return {base - binomial(k + 2 * ell, ell - 1), base - binomial(k + 2 * ell - 1, ell - 1)};
}

}  // namespace modcat
