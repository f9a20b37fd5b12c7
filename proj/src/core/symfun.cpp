#include "jring/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace jring {

namespace {

using Exponents = std::vector<int>;
using KPolynomial = std::map<Exponents, Integer>;

// All j-subsets of {0, ..., length-1}.
std::vector<std::vector<int>> subsets(int length, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == j) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < length; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

KPolynomial multiply_by_elementary(const KPolynomial& p, const std::vector<std::vector<int>>& terms) {
  KPolynomial out;
  for (const auto& [exps, c] : p) {
    for (const auto& subset : terms) {
      Exponents e = exps;
      for (int i : subset) ++e[i];
      out[std::move(e)] += c;
    }
  }
  return out;
}

}  // namespace

ElementaryExpansion expand_elementary_product(const Composition& beta, int length) {
  if (beta.length() > length)
    throw std::invalid_argument("e^beta needs at least length(beta) variables");
  KPolynomial poly;
  poly.emplace(Exponents(static_cast<std::size_t>(length), 0), Integer(1));
  // Highest e_j first: once e_l divides, every intermediate monomial has all
  // exponents >= 1, which keeps the term count small.
  for (int j = beta.length(); j >= 1; --j) {
    if (beta[j - 1] == 0) continue;
    const auto terms = subsets(length, j);
    for (int r = 0; r < beta[j - 1]; ++r) poly = multiply_by_elementary(poly, terms);
  }
  ElementaryExpansion out;
  for (const auto& [exps, c] : poly) {
    if (!std::is_sorted(exps.begin(), exps.end(), std::greater<>())) continue;
    std::vector<int> parts;
    for (int e : exps)
      if (e > 0) parts.push_back(e);
    out.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

ExpansionTable expansion_table(int n, int length, Execution exec) {
  ExpansionTable table;
  table.degree = n;
  table.length = length;
  table.betas = enumerate_compositions(n, length);
  table.lambdas = enumerate_partitions(n, length);
  const auto rows = static_cast<long>(table.betas.size());
  const auto cols = table.lambdas.size();
  table.entries.assign(table.betas.size() * cols, Integer(0));

  auto fill_row = [&](long i) {
    const auto expansion = expand_elementary_product(table.betas[i], length);
    for (std::size_t j = 0; j < cols; ++j) {
      auto it = expansion.find(table.lambdas[j]);
      if (it != expansion.end()) table.entries[i * cols + j] = it->second;
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i) fill_row(i);
  } else {
    for (long i = 0; i < rows; ++i) fill_row(i);
  }
  return table;
}

TransitionMatrix::TransitionMatrix(int degree, int length, std::vector<Partition> lambdas,
                                   std::vector<Composition> betas, std::vector<Integer> entries)
    : degree_(degree),
      length_(length),
      lambdas_(std::move(lambdas)),
      betas_(std::move(betas)),
      entries_(std::move(entries)) {
  if (lambdas_.size() != betas_.size() || entries_.size() != lambdas_.size() * betas_.size())
    throw std::invalid_argument("transition matrix must be square with matching labels");
}

std::optional<std::size_t> TransitionMatrix::row_of(const Partition& lambda) const {
  auto it = std::lower_bound(lambdas_.begin(), lambdas_.end(), lambda);
  if (it == lambdas_.end() || *it != lambda) return std::nullopt;
  return static_cast<std::size_t>(it - lambdas_.begin());
}

std::optional<std::size_t> TransitionMatrix::column_of(const Composition& beta) const {
  auto it = std::lower_bound(betas_.begin(), betas_.end(), beta);
  if (it == betas_.end() || *it != beta) return std::nullopt;
  return static_cast<std::size_t>(it - betas_.begin());
}

const Integer& TransitionMatrix::entry(const Partition& lambda, const Composition& beta) const {
  auto r = row_of(lambda);
  auto c = column_of(beta);
  if (!r || !c) throw std::out_of_range("label outside this transition matrix");
  return at(*r, *c);
}

TransitionMatrix invert_expansion_table(const ExpansionTable& table) {
  const std::size_t size = table.betas.size();
  if (table.lambdas.size() != size) throw std::logic_error("expansion table is not square");

  // Pair beta_i with its leading partition lambda_i. E_{beta lambda} vanishes
  // unless lambda <= lead(beta) in dominance, so in this order E is upper
  // unitriangular.
  std::vector<std::size_t> lambda_index(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto lead = leading_partition(table.betas[i]);
    auto it = std::lower_bound(table.lambdas.begin(), table.lambdas.end(), lead);
    if (it == table.lambdas.end() || *it != lead)
      throw std::logic_error("leading partition of " + to_string(table.betas[i]) +
                             " missing from the expansion table");
    lambda_index[i] = static_cast<std::size_t>(it - table.lambdas.begin());
  }
  auto paired = [&](std::size_t i, std::size_t j) -> const Integer& {
    return table.at(i, lambda_index[j]);
  };
  for (std::size_t i = 0; i < size; ++i) {
    if (paired(i, i) != 1)
      throw std::logic_error("expansion table diagonal entry is not 1 at " +
                             to_string(table.betas[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (paired(i, j) != 0)
        throw std::logic_error("expansion table is not triangular at " +
                               to_string(table.betas[i]));
  }

  // Row i of M (in pairing order): m_{lambda_i} = e^{beta_i} - sum_{j>i} E_ij m_{lambda_j}.
  std::vector<std::vector<Integer>> rows(size, std::vector<Integer>(size, Integer(0)));
  for (std::size_t i = size; i-- > 0;) {
    rows[i][i] = 1;
    for (std::size_t j = i + 1; j < size; ++j) {
      const Integer& e = paired(i, j);
      if (e == 0) continue;
      for (std::size_t k = j; k < size; ++k) rows[i][k] -= e * rows[j][k];
    }
  }

  std::vector<Integer> entries(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 0; k < size; ++k) entries[lambda_index[i] * size + k] = rows[i][k];
  return TransitionMatrix(table.degree, table.length, table.lambdas, table.betas,
                          std::move(entries));
}

TransitionMatrix transition_matrix(int n, int length, Execution exec) {
  if (length < 1 || n < length) throw std::invalid_argument("transition matrix needs n >= l >= 1");
  return invert_expansion_table(expansion_table(n, length, exec));
}

Integer waring_coefficient(const Composition& beta) {
  const int l = beta.length();
  const int n = beta.weight();
  if (l < 1) throw std::invalid_argument("waring coefficient needs length >= 1");
  if (n == l) return Integer(1);
  const int total = beta.total();
  int even_sum = 0;
  for (int i = 2; i <= l; i += 2) even_sum += beta[i - 1];
  Integer denominator = 1;
  for (int b : beta.entries()) denominator *= factorial(static_cast<unsigned long>(b));
  Rational value(factorial(static_cast<unsigned long>(total - 1)) * beta[l - 1] * (n - l),
                 denominator * (total - 1));
  value.canonicalize();
  if ((l + 1 + even_sum) % 2 != 0) value = -value;
  if (!is_integral(value))
    throw std::logic_error("waring closed form is not integral at " + to_string(beta));
  return value.get_num();
}

std::shared_ptr<const TransitionMatrix> TransitionCache::get(int n, int length) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cells_.find({n, length}); it != cells_.end()) return it->second;
  }
  std::shared_ptr<MatrixStore> store;
  {
    std::shared_lock lock(mutex_);
    store = store_;
  }
  if (store) {
    if (auto loaded = store->load(n, length)) return insert(std::move(*loaded));
  }
  auto stored = insert(transition_matrix(n, length));
  if (store) store->save(*stored);
  return stored;
}

std::shared_ptr<const TransitionMatrix> TransitionCache::insert(TransitionMatrix matrix) {
  const std::pair key{matrix.degree(), matrix.length()};
  auto value = std::make_shared<const TransitionMatrix>(std::move(matrix));
  std::unique_lock lock(mutex_);
  return cells_.try_emplace(key, std::move(value)).first->second;
}

void TransitionCache::set_store(std::shared_ptr<MatrixStore> store) {
  std::unique_lock lock(mutex_);
  store_ = std::move(store);
}

void TransitionCache::clear() {
  std::unique_lock lock(mutex_);
  cells_.clear();
}

std::size_t TransitionCache::size() const {
  std::shared_lock lock(mutex_);
  return cells_.size();
}

void TransitionCache::precompute(int n_max, Execution exec) {
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 1; l <= n; ++l) cells.emplace_back(n, l);
  const auto count = static_cast<long>(cells.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) get(cells[i].first, cells[i].second);
  } else {
    for (long i = 0; i < count; ++i) get(cells[i].first, cells[i].second);
  }
}

TransitionCache& transition_cache() {
  static TransitionCache cache;
  return cache;
}

}  // namespace jring
