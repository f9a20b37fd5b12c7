#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "jring/combinatorics.hpp"
#include "jring/rational.hpp"
#include "jring/xpolynomial.hpp"

namespace jring {

// Finite integer combination of basis labels beta. Zero coefficients are not stored.
class JCombination {
 public:
  using Terms = std::map<Composition, Integer>;

  JCombination() = default;
  explicit JCombination(Terms terms);
  static JCombination basis(const Composition& beta, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Composition& beta) const;
  void add_term(const Composition& beta, const Integer& c);
  bool supported_on_zero_set() const;

  JCombination& operator+=(const JCombination& other);
  JCombination& operator*=(const Integer& c);
  friend JCombination operator+(JCombination a, const JCombination& b) { return a += b; }
  friend JCombination operator*(const Integer& c, JCombination a) { return a *= c; }
  friend bool operator==(const JCombination&, const JCombination&) = default;

 private:
  Terms terms_;
};

// g_beta = sum_lambda M_{lambda beta} x_lambda; g_(empty) = 1.
XPolynomial g_poly(const Composition& beta);
// Integer-vector overload; throws std::invalid_argument outside B.
XPolynomial g_poly(std::span<const int> entries);

// sum_beta c_beta g_beta
XPolynomial realize(const JCombination& c);

// N_{beta beta'}^{beta''} over beta'' in B^{(l + l')} of weight |beta| + |beta'|:
// the coefficient of e^beta(k) e^{beta'}(k') in e^{beta''}(k, k').
JCombination structure_constants(const Composition& beta, const Composition& beta_prime);

// Product in J'. Both arguments must be supported on B(0).
JCombination j_product(const JCombination& a, const JCombination& b);

// The displayed formulas for g_(0,a) g_(0,b) and, when c is given,
// g_(0,a) g_(0,b,c). Terms with a negative factorial argument are omitted.
JCombination product_closed_form(int a, int b, std::optional<int> c = std::nullopt);

// ch(k_1..k_l | x)_n = sum_lambda m_lambda(k) x_lambda = sum_beta e^beta(k) g_beta(x)
// for l <= n <= max_degree.
struct ChSeries {
  int length = 0;
  int max_degree = 0;
  std::map<int, std::map<Composition, XPolynomial>> e_basis;
  std::map<int, std::map<Partition, XPolynomial>> m_basis;

  // sum over the e-basis with the given numeric k substituted.
  XPolynomial evaluate(std::span<const long> k) const;
  // Same, through the monomial-symmetric expansion.
  XPolynomial evaluate_monomial(std::span<const long> k) const;
  // x_lambda == sum_beta E_{beta lambda} g_beta in every degree.
  bool consistent() const;
};

ChSeries ch_series(int length, int max_degree);

// prod_j (sum_{i>=1} k_j^i x_i), truncated at total degree max_degree.
XPolynomial ch_numeric(std::span<const long> k, int max_degree);

// e_j(k) and e^beta(k) at numeric k.
Integer elementary_value(std::span<const long> k, int j);
Integer elementary_product_value(const Composition& beta, std::span<const long> k);

// The ch-series at e_1 = 0: exponents (beta_2..beta_l) -> g_(0, beta_2, ..., beta_l),
// every such label of weight <= max_degree.
std::map<std::vector<int>, XPolynomial> chern_coefficients(int length, int max_degree);

// sum_{i = 0}^{N - n} g_{beta(i)}, beta(i) = (beta_1 + i, beta_2, ...).
// beta must be in B(0) with length >= 1. The empty label lifts to the constant 1.
XPolynomial lift_tilde(const Composition& beta, int max_degree);

// sum_{i = 0}^{N - n} delta^i f / (i! n^i) for f in J homogeneous of degree n >= 1.
XPolynomial lift_exp(const XPolynomial& f, int max_degree);

}  // namespace jring
