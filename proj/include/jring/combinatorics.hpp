#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jring {

// Weakly decreasing sequence of positive integers. Indexes the monomial
// x_lambda = x_{lambda_1} ... x_{lambda_l} and the monomial symmetric
// polynomial m_lambda.
//
// Ordering is graded: first by weight, then lexicographically on the parts.
// Within a fixed weight this is a linear extension of dominance.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  // Sorts into canonical order; parts must be positive.
  static Partition from_parts(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Multiplicity of the part `value`.
  int multiplicity(int value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Exponent vector beta = (beta_1, ..., beta_l) of the product
// e_1^{beta_1} ... e_l^{beta_l}.  Length 0 is the empty label, which has
// weight 0.  Construction enforces membership in B^{(l)}: leading entries are
// non-negative and the last entry is at least 1.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);
  static Composition empty() { return Composition(); }

  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  int length() const { return static_cast<int>(entries_.size()); }
  bool is_empty() const { return entries_.empty(); }
  // sum_i i * beta_i
  int weight() const { return weight_; }
  // sum_i beta_i
  int total() const;
  // Membership in B(0): the empty label, (1), or beta_1 == 0 for length >= 2.
  bool in_zero_set() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  // Weight, then length, then ascending lexicographic order of the
  // associated partition (equivalently: of the reversed entries).
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> entries_;
  int weight_ = 0;
};

std::string to_string(const Partition& lambda);
std::string to_string(const Composition& beta);

// B_n^{(l)}, or B_n^{(l)}(first) when `first` is given, in canonical order.
// For l = 1 the fixed-first-entry set is B_n^{(1)}(i) = {(i + 1)} at n = i + 1.
std::vector<Composition> enumerate_compositions(int n, int length,
                                                std::optional<int> first = std::nullopt);

// Lambda_n^{(l)}: partitions of n with exactly `length` parts, canonical order.
std::vector<Partition> enumerate_partitions(int n, int length);
// All partitions of n, canonical order.
std::vector<Partition> enumerate_partitions(int n);

// The partition with beta_j copies of the part j. Its largest part is the
// length of beta; its weight equals weight(beta).
Partition to_partition(const Composition& beta);
// Inverse of to_partition: beta_j = multiplicity of j, length = largest part.
Composition to_composition(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// Dominance order. Throws std::invalid_argument on unequal weights.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// omega = (n - l + 1, 1, ..., 1), the dominance-maximal element of Lambda_n^{(l)}.
Partition extreme_partition(int n, int length);

// conjugate(to_partition(beta)): the leading monomial of g_beta. It has
// exactly length(beta) parts.
Partition leading_partition(const Composition& beta);

}  // namespace jring
