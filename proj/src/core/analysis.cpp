#include "jring/analysis.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace jring {

DerivationMatrix derivation_matrix(int n, int length) {
  DerivationMatrix out;
  out.domain = enumerate_partitions(n, length);
  out.codomain = enumerate_partitions(n - 1, length);
  out.matrix = RationalMatrix(out.codomain.size(), out.domain.size());
  for (std::size_t c = 0; c < out.domain.size(); ++c) {
    const auto image = derivation_d(XPolynomial::monomial(out.domain[c]));
    for (const auto& [lambda, coeff] : image.terms()) {
      auto it = std::lower_bound(out.codomain.begin(), out.codomain.end(), lambda);
      if (it == out.codomain.end() || *it != lambda)
        throw std::logic_error("d left the bidegree (n - 1, l)");
      out.matrix.at(static_cast<std::size_t>(it - out.codomain.begin()), c) = coeff;
    }
  }
  return out;
}

std::vector<XPolynomial> kernel_basis(int n, int length) {
  const auto d = derivation_matrix(n, length);
  std::vector<XPolynomial> basis;
  for (const auto& v : d.matrix.nullspace()) {
    XPolynomial p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(d.domain[i], v[i]);
    basis.push_back(std::move(p));
  }
  return basis;
}

std::optional<std::map<Composition, Rational>> expand_over_zero_basis(const XPolynomial& p, int n,
                                                                      int length) {
  const auto lambdas = enumerate_partitions(n, length);
  const auto betas = enumerate_compositions(n, length, 0);
  std::vector<Rational> rhs(lambdas.size(), Rational(0));
  for (const auto& [lambda, c] : p.terms()) {
    auto it = std::lower_bound(lambdas.begin(), lambdas.end(), lambda);
    if (it == lambdas.end() || *it != lambda) return std::nullopt;
    rhs[static_cast<std::size_t>(it - lambdas.begin())] = c;
  }
  RationalMatrix system(lambdas.size(), betas.size());
  for (std::size_t j = 0; j < betas.size(); ++j) {
    const auto g = g_poly(betas[j]);
    for (std::size_t i = 0; i < lambdas.size(); ++i) system.at(i, j) = g.coefficient(lambdas[i]);
  }
  auto x = system.solve(rhs);
  if (!x) return std::nullopt;
  std::map<Composition, Rational> out;
  for (std::size_t j = 0; j < betas.size(); ++j)
    if ((*x)[j] != 0) out.emplace(betas[j], (*x)[j]);
  return out;
}

int DimensionTable::total(int n) const {
  int sum = 0;
  for (int l = 1; l <= n; ++l) sum += counted[n][l];
  return sum;
}

DimensionTable dimension_table(int n_max, Execution exec) {
  if (n_max < 1) throw std::invalid_argument("dimension table needs n_max >= 1");
  DimensionTable table;
  table.n_max = n_max;
  table.counted.assign(static_cast<std::size_t>(n_max) + 1,
                       std::vector<int>(static_cast<std::size_t>(n_max) + 1, 0));
  table.kernel = table.counted;
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 1; l <= n; ++l) cells.emplace_back(n, l);
  const auto count = static_cast<long>(cells.size());
  // Each task writes only its own cell.
  auto compute = [&](long i) {
    const auto [n, l] = cells[i];
    table.counted[n][l] = static_cast<int>(enumerate_compositions(n, l, 0).size());
    table.kernel[n][l] = static_cast<int>(kernel_basis(n, l).size());
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) compute(i);
  } else {
    for (long i = 0; i < count; ++i) compute(i);
  }
  for (const auto& [n, l] : cells)
    if (table.counted[n][l] != table.kernel[n][l])
      table.mismatches.push_back("n=" + std::to_string(n) + " l=" + std::to_string(l) +
                                 ": counted " + std::to_string(table.counted[n][l]) +
                                 ", kernel " + std::to_string(table.kernel[n][l]));
  return table;
}

BivariateSeries poincare_bivariate(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  BivariateSeries product(order, order);
  product.coeff(0, 0) = 1;
  for (int i = 1; i <= order; ++i) {
    BivariateSeries geometric(order, order);
    for (int k = 0; k * i <= order; ++k) geometric.coeff(k * i, k) = 1;
    product = product * geometric;
  }
  BivariateSeries one_minus_t(order, order);
  one_minus_t.coeff(0, 0) = 1;
  one_minus_t.coeff(1, 0) = -1;
  BivariateSeries out = product * one_minus_t;
  out.coeff(1, 0) += 1;
  return out;
}

namespace {

// prod_{i=2}^{last} (1 - t^i)
TruncatedSeries finite_product(int order, int last) {
  TruncatedSeries p = TruncatedSeries::one(order);
  for (int i = 2; i <= last; ++i)
    p = p * (TruncatedSeries::one(order) - TruncatedSeries::monomial(order, i));
  return p;
}

}  // namespace

TruncatedSeries poincare_series(int order, std::optional<int> length) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  if (!length) return finite_product(order, order).inverse() + TruncatedSeries::monomial(order, 1);
  const int l = *length;
  if (l < 0) throw std::invalid_argument("length must be non-negative");
  if (l == 0) return TruncatedSeries::one(order);
  if (l == 1) return TruncatedSeries::monomial(order, 1);
  return TruncatedSeries::monomial(order, l) * finite_product(order, l).inverse();
}

namespace {

bool is_leading_block(const std::vector<int>& block) {
  if (block.size() == 1) return block[0] == 1;
  return block.size() >= 2 && block[0] == block[1];
}

// Calls visit(block, rest) for each leading block containing one copy of the
// largest element of `parts` (sorted descending).
template <typename Visit>
bool any_block_with_max(const std::vector<int>& parts, Visit visit) {
  const int top = parts[0];
  if (top == 1) {
    // Blocks of ones: (1) or (1, ..., 1) of any length.
    for (std::size_t take = 1; take <= parts.size(); ++take) {
      std::vector<int> block(take, 1);
      std::vector<int> rest(parts.begin() + static_cast<long>(take), parts.end());
      if (visit(block, rest)) return true;
    }
    return false;
  }
  if (parts.size() < 2 || parts[1] != top) return false;
  // Remaining pool after reserving two copies of top; choose any sub-multiset.
  std::vector<int> pool(parts.begin() + 2, parts.end());
  std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
  for (int v : pool) {
    if (groups.empty() || groups.back().first != v) groups.emplace_back(v, 0);
    ++groups.back().second;
  }
  std::vector<int> take(groups.size(), 0);
  while (true) {
    std::vector<int> block{top, top};
    std::vector<int> rest;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      block.insert(block.end(), static_cast<std::size_t>(take[g]), groups[g].first);
      rest.insert(rest.end(), static_cast<std::size_t>(groups[g].second - take[g]), groups[g].first);
    }
    if (visit(block, rest)) return true;
    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) return false;
    ++take[g];
  }
}

class TileSearch {
 public:
  bool tileable(const std::vector<int>& parts) {
    if (parts.empty()) return true;
    if (auto it = memo_.find(parts); it != memo_.end()) return it->second;
    const bool result = any_block_with_max(parts, [&](const std::vector<int>& block,
                                                      const std::vector<int>& rest) {
      return is_leading_block(block) && tileable(rest);
    });
    memo_.emplace(parts, result);
    return result;
  }

 private:
  std::map<std::vector<int>, bool> memo_;
};

}  // namespace

bool leading_term_decomposes(const Partition& lead) {
  std::vector<int> parts(lead.parts().begin(), lead.parts().end());
  if (parts.size() < 2) return false;
  TileSearch search;
  return any_block_with_max(parts, [&](const std::vector<int>& block, const std::vector<int>& rest) {
    return !rest.empty() && is_leading_block(block) && search.tileable(rest);
  });
}

std::vector<Composition> generator_candidates(int n_max) {
  std::vector<Composition> out;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 1; l <= n; ++l)
      for (const auto& beta : enumerate_compositions(n, l, 0))
        if (!leading_term_decomposes(leading_partition(beta))) out.push_back(beta);
  std::sort(out.begin(), out.end());
  return out;
}

JCombination evaluate_monomial(const GeneratorMonomial& monomial) {
  JCombination out = JCombination::basis(Composition::empty());
  for (const auto& beta : monomial) out = j_product(out, JCombination::basis(beta));
  return out;
}

std::vector<GeneratorMonomial> generator_monomials(int degree,
                                                   const std::vector<Composition>& generators) {
  std::vector<Composition> gens;
  for (const auto& g : generators)
    if (g.weight() > 0) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<GeneratorMonomial> out;
  GeneratorMonomial current;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      if (gens[i].weight() > remaining) continue;
      current.push_back(gens[i]);
      self(self, i, remaining - gens[i].weight());
      current.pop_back();
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RationalMatrix evaluation_matrix(const std::vector<GeneratorMonomial>& monomials) {
  std::vector<JCombination> images;
  std::set<Composition> labels;
  for (const auto& m : monomials) {
    images.push_back(evaluate_monomial(m));
    for (const auto& [beta, c] : images.back().terms()) labels.insert(beta);
  }
  const std::vector<Composition> rows(labels.begin(), labels.end());
  RationalMatrix matrix(rows.size(), monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c)
    for (const auto& [beta, coeff] : images[c].terms()) {
      const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), beta) -
                                              rows.begin());
      matrix.at(r, c) = Rational(coeff);
    }
  return matrix;
}

}  // namespace

std::vector<Relation> find_relations(int degree, const std::vector<Composition>& generators) {
  const auto monomials = generator_monomials(degree, generators);
  const auto matrix = evaluation_matrix(monomials);
  std::vector<Relation> out;
  for (const auto& v : matrix.nullspace()) {
    Relation r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) r.terms.emplace(monomials[i], v[i]);
    out.push_back(std::move(r));
  }
  return out;
}

bool in_relation_span(const std::vector<Relation>& basis, const Relation& relation) {
  std::set<GeneratorMonomial> keys;
  for (const auto& r : basis)
    for (const auto& [m, c] : r.terms) keys.insert(m);
  for (const auto& [m, c] : relation.terms) keys.insert(m);
  const std::vector<GeneratorMonomial> cols(keys.begin(), keys.end());
  auto fill = [&](RationalMatrix& matrix, std::size_t row, const Relation& r) {
    for (const auto& [m, c] : r.terms) {
      const auto col = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), m) -
                                                cols.begin());
      matrix.at(row, col) = c;
    }
  };
  RationalMatrix without(basis.size(), cols.size());
  RationalMatrix with(basis.size() + 1, cols.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    fill(without, i, basis[i]);
    fill(with, i, basis[i]);
  }
  fill(with, basis.size(), relation);
  return with.rank() == without.rank();
}

std::size_t evaluation_rank(int degree, const std::vector<Composition>& generators) {
  return evaluation_matrix(generator_monomials(degree, generators)).rank();
}

}  // namespace jring
