#include "jring/linalg.hpp"

#include <stdexcept>

namespace jring {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

std::vector<std::size_t> RationalMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t best = rows_;
    for (std::size_t r = row; r < rows_; ++r) {
      if (at(r, col) == 0) continue;
      if (best == rows_ || bit_size(at(r, col)) < bit_size(at(best, col))) best = r;
    }
    if (best == rows_) continue;
    if (best != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(best, c));
    const Rational inv = 1 / at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Rational factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.reduce().size();
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  RationalMatrix reduced = *this;
  const auto pivots = reduced.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(std::span<const Rational> rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("right-hand side has the wrong size");
  RationalMatrix augmented(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) augmented.at(r, c) = at(r, c);
    augmented.at(r, cols_) = rhs[r];
  }
  const auto pivots = augmented.reduce();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = augmented.at(i, cols_);
  return x;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector has the wrong size");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

}  // namespace jring
