#pragma once

#include <vector>

#include "jring/rational.hpp"

namespace jring {

// Power series in t with integer coefficients, exact through t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Integer> coeffs);
  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(int order, int exponent, const Integer& c = 1);

  int order() const { return order_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Integer& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // 1 / (this); the constant term must be +1 or -1.
  TruncatedSeries inverse() const;

 private:
  int order_;
  std::vector<Integer> coeffs_;
};

// Series in t with coefficients that are polynomials in u: coeff(n, l) is the
// coefficient of u^l t^n, for 0 <= l <= max_u.
class BivariateSeries {
 public:
  BivariateSeries(int order, int max_u);

  int order() const { return order_; }
  int max_u() const { return max_u_; }
  const Integer& coeff(int n, int l) const { return coeffs_[index(n, l)]; }
  Integer& coeff(int n, int l) { return coeffs_[index(n, l)]; }

  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  BivariateSeries& operator+=(const BivariateSeries& other);

  // Substitutes a numeric value for u.
  TruncatedSeries at_u(long u) const;
  // Coefficient series of u^l.
  TruncatedSeries u_part(int l) const;

 private:
  std::size_t index(int n, int l) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(max_u_ + 1) +
           static_cast<std::size_t>(l);
  }
  int order_;
  int max_u_;
  std::vector<Integer> coeffs_;
};

}  // namespace jring
