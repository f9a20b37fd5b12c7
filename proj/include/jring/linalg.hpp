#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jring/rational.hpp"

namespace jring {

// Dense matrix over Q with exact Gauss-Jordan elimination.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Brings the matrix to reduced row echelon form; returns the pivot columns.
  // The pivot in each column is the nonzero entry of least bit size.
  std::vector<std::size_t> reduce();

  std::size_t rank() const;
  // Basis of {v : A v = 0}, one vector per free column (that entry 1, other
  // free entries 0).
  std::vector<std::vector<Rational>> nullspace() const;
  // Some solution of A x = rhs, or nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve(std::span<const Rational> rhs) const;

  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace jring
