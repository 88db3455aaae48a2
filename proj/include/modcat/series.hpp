#pragma once

#include <stdexcept>
#include <vector>

#include "modcat/bigint.hpp"

namespace modcat {

/// Formal power series with exact integer coefficients, truncated at a fixed
/// order. Arithmetic keeps every coefficient up to the truncation order exact.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(check_order(order) + 1) {}

  static TruncatedSeries constant(Int value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  static TruncatedSeries z(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  void set_coeff(int i, Int v) { c_.at(static_cast<std::size_t>(i)) = std::move(v); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same(b);
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  TruncatedSeries pow(int e) const {
    if (e < 0) throw std::invalid_argument("TruncatedSeries::pow: negative exponent");
    TruncatedSeries out = constant(1, order());
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// Multiply by z, shifting coefficients up and dropping the top one.
  TruncatedSeries shift_up() const {
    TruncatedSeries out(order());
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i] = c_[i - 1];
    return out;
  }

  /// Multiplicative inverse; requires constant coefficient 1.
  TruncatedSeries reciprocal() const {
    if (c_[0] != 1)
      throw std::invalid_argument("TruncatedSeries::reciprocal: constant term must be 1");
    TruncatedSeries out(order());
    out.c_[0] = 1;
    for (std::size_t m = 1; m < c_.size(); ++m) {
      Int acc = 0;
      for (std::size_t j = 1; j <= m; ++j) acc += c_[j] * out.c_[m - j];
      out.c_[m] = -acc;
    }
    return out;
  }

  bool is_zero() const {
    for (const Int& v : c_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return order;
  }
  void check_same(const TruncatedSeries& o) const {
    if (c_.size() != o.c_.size())
      throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
  }

  std::vector<Int> c_;
};

}  // namespace modcat
