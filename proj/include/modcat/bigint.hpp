#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace modcat {

/// Exact arbitrary-precision integer used for every count in the library.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient with the convention that out-of-range arguments
/// (negative or b > a) give 0.
inline Int binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: i consecutive integers are divisible by i!
  }
  return result;
}

inline Int factorial(long long n) {
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Multinomial coefficient (m_0 + m_1 + ...)! / (m_0! m_1! ...).
/// Any negative multiplicity gives 0.
inline Int multinomial(const std::vector<long long>& m) {
  long long total = 0;
  Int result = 1;
  for (long long mi : m) {
    if (mi < 0) return 0;
    total += mi;
    result *= binomial(total, mi);
  }
  return result;
}

/// Integer division that must be exact; throws std::logic_error on a nonzero
/// remainder. Formula aggregates are divided once, at the end, through this.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::logic_error("exact_div: division by zero");
  Int q = a / b;
  if (q * b != a) throw std::logic_error("exact_div: inexact division");
  return q;
}

inline Int pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return Int(1) << static_cast<unsigned>(e);
}

}  // namespace modcat
