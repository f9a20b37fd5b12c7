#pragma once

#include <map>
#include <optional>

#include "jring/combinatorics.hpp"
#include "jring/rational.hpp"

namespace jring {

// Sparse element of A = Q[x_1, x_2, ...] with deg x_i = i.  A monomial is
// keyed by its partition; zero coefficients are never stored.
class XPolynomial {
 public:
  using Terms = std::map<Partition, Rational>;

  XPolynomial() = default;
  explicit XPolynomial(Terms terms);

  static XPolynomial constant(const Rational& c);
  static XPolynomial monomial(Partition lambda, const Rational& c = 1);
  // x_i
  static XPolynomial variable(int i);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Partition& lambda) const;

  // Accumulates c * x_lambda, dropping the term if it cancels.
  void add_term(const Partition& lambda, const Rational& c);

  bool is_integral() const;
  // Degree if every term has the same degree (the zero polynomial has none).
  std::optional<int> homogeneous_degree() const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  XPolynomial& operator+=(const XPolynomial& other);
  XPolynomial& operator-=(const XPolynomial& other);
  XPolynomial& operator*=(const Rational& c);

  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(XPolynomial a, const Rational& c) { return a *= c; }
  friend XPolynomial operator*(const Rational& c, XPolynomial a) { return a *= c; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

 private:
  Terms terms_;
};

XPolynomial multiply(const XPolynomial& p, const XPolynomial& q);
XPolynomial power(const XPolynomial& p, unsigned exponent);

// dx_1 = 0, dx_i = x_{i-1}, extended by Leibniz.
XPolynomial derivation_d(const XPolynomial& p);
// delta x_i = i x_{i+1}, extended by Leibniz.
XPolynomial derivation_delta(const XPolynomial& p);

// Terms of degree exactly n (and length exactly `length` when given).
XPolynomial project(const XPolynomial& p, int n, std::optional<int> length = std::nullopt);
// Terms of degree <= max_degree.
XPolynomial truncate(const XPolynomial& p, int max_degree);

}  // namespace jring
