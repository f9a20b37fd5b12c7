#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "jring/combinatorics.hpp"
#include "jring/execution.hpp"
#include "jring/rational.hpp"

namespace jring {

// e^beta(k_1..k_l) written in the monomial symmetric basis: lambda -> coefficient.
using ElementaryExpansion = std::map<Partition, Integer>;

// Expands e_1^{beta_1} ... e_m^{beta_m} in `length` commuting variables
// (m = beta.length() <= length) and collects orbits into m_lambda.
ElementaryExpansion expand_elementary_product(const Composition& beta, int length);

// E_{beta lambda} for beta in B_n^{(l)}, lambda in Lambda_n^{(l)}, both in canonical order.
struct ExpansionTable {
  int degree = 0;
  int length = 0;
  std::vector<Composition> betas;
  std::vector<Partition> lambdas;
  std::vector<Integer> entries;  // row-major, betas x lambdas

  const Integer& at(std::size_t beta_index, std::size_t lambda_index) const {
    return entries[beta_index * lambdas.size() + lambda_index];
  }
};

ExpansionTable expansion_table(int n, int length, Execution exec = Execution::serial);

// M with m_lambda = sum_beta M_{lambda beta} e^beta, for fixed (n, l).
// Rows are Lambda_n^{(l)} and columns B_n^{(l)}, both in canonical order.
class TransitionMatrix {
 public:
  TransitionMatrix(int degree, int length, std::vector<Partition> lambdas,
                   std::vector<Composition> betas, std::vector<Integer> entries);

  int degree() const { return degree_; }
  int length() const { return length_; }
  const std::vector<Partition>& lambdas() const { return lambdas_; }
  const std::vector<Composition>& betas() const { return betas_; }
  std::size_t size() const { return betas_.size(); }

  const Integer& at(std::size_t row, std::size_t col) const {
    return entries_[row * betas_.size() + col];
  }
  const Integer& entry(const Partition& lambda, const Composition& beta) const;
  std::optional<std::size_t> row_of(const Partition& lambda) const;
  std::optional<std::size_t> column_of(const Composition& beta) const;
  const std::vector<Integer>& entries() const { return entries_; }

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  int degree_;
  int length_;
  std::vector<Partition> lambdas_;
  std::vector<Composition> betas_;
  std::vector<Integer> entries_;
};

// Computes M by integer back substitution on the unitriangular expansion
// table. Throws std::logic_error if the table is not unitriangular in the
// pairing beta <-> leading_partition(beta). Requires n >= l >= 1.
TransitionMatrix transition_matrix(int n, int length, Execution exec = Execution::serial);
TransitionMatrix invert_expansion_table(const ExpansionTable& table);

// Closed form for M_{omega beta}, omega = (n - l + 1, 1, ..., 1).
Integer waring_coefficient(const Composition& beta);

// Backing storage consulted by the memo on a miss and fed on every fresh
// computation.
class MatrixStore {
 public:
  virtual ~MatrixStore() = default;
  virtual std::optional<TransitionMatrix> load(int n, int length) = 0;
  virtual void save(const TransitionMatrix& matrix) = 0;
};

// Process-wide memo of transition matrices keyed by (n, l). The first value
// inserted for a key wins; readers only ever observe fully built matrices.
class TransitionCache {
 public:
  static constexpr int kVersion = 1;

  std::shared_ptr<const TransitionMatrix> get(int n, int length);
  // Inserts unless present; returns the stored value.
  std::shared_ptr<const TransitionMatrix> insert(TransitionMatrix matrix);
  void set_store(std::shared_ptr<MatrixStore> store);
  void clear();
  std::size_t size() const;
  // Fills every cell 1 <= l <= n <= n_max.
  void precompute(int n_max, Execution exec = Execution::serial);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const TransitionMatrix>> cells_;
  std::shared_ptr<MatrixStore> store_;
};

TransitionCache& transition_cache();

}  // namespace jring
