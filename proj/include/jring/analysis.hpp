#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jring/combinatorics.hpp"
#include "jring/execution.hpp"
#include "jring/invariants.hpp"
#include "jring/linalg.hpp"
#include "jring/series.hpp"
#include "jring/xpolynomial.hpp"

namespace jring {

// d : A_n^{(l)} -> A_{n-1}^{(l)} in the monomial bases (canonical order).
struct DerivationMatrix {
  std::vector<Partition> domain;
  std::vector<Partition> codomain;
  RationalMatrix matrix;  // codomain x domain
};

DerivationMatrix derivation_matrix(int n, int length);

// Basis of J_n^{(l)} = Ker(d) on A_n^{(l)} by exact elimination, independent
// of the g_beta construction.
std::vector<XPolynomial> kernel_basis(int n, int length);

// Coordinates of p over {g_beta : beta in B_n^{(l)}(0)}, or nullopt if p is
// not in their span.
std::optional<std::map<Composition, Rational>> expand_over_zero_basis(const XPolynomial& p, int n,
                                                                      int length);

struct DimensionTable {
  int n_max = 0;
  // counted[n][l] = |B_n^{(l)}(0)|, kernel[n][l] = dim Ker(d) on A_n^{(l)}, 1 <= l <= n.
  std::vector<std::vector<int>> counted;
  std::vector<std::vector<int>> kernel;
  std::vector<std::string> mismatches;

  int cell(int n, int l) const { return counted[n][l]; }
  int total(int n) const;
  bool agree() const { return mismatches.empty(); }
};

DimensionTable dimension_table(int n_max, Execution exec = Execution::serial);

// J(u, t) = (1 - t) / prod_{i=1}^{order} (1 - u t^i) + t.
BivariateSeries poincare_bivariate(int order);
// J(t) = 1 / prod_{i>=2} (1 - t^i) + t without a length argument,
// J^{(l)}(t) = t^l / ((1 - t^2) ... (1 - t^l)) with one (J^{(0)} = 1, J^{(1)} = t).
TruncatedSeries poincare_series(int order, std::optional<int> length = std::nullopt);

// B(0) labels of weight <= n_max whose leading partition is not a multiset
// union of two or more leading partitions of nonempty B(0) labels.
std::vector<Composition> generator_candidates(int n_max);
// True iff the leading partition of a B(0) label splits into >= 2 leading partitions.
bool leading_term_decomposes(const Partition& lead);

// A product of generators, as a sorted multiset of labels.
using GeneratorMonomial = std::vector<Composition>;

// Linear relation sum_m c_m * m = 0 among generator monomials.
struct Relation {
  std::map<GeneratorMonomial, Rational> terms;
  friend bool operator==(const Relation&, const Relation&) = default;
};

JCombination evaluate_monomial(const GeneratorMonomial& monomial);
// All generator monomials of total weight `degree`, in canonical order.
std::vector<GeneratorMonomial> generator_monomials(int degree,
                                                   const std::vector<Composition>& generators);
// RREF basis of the kernel of (monomials of weight `degree`) -> J_degree.
std::vector<Relation> find_relations(int degree, const std::vector<Composition>& generators);
// Whether `relation` lies in the span of `basis`.
bool in_relation_span(const std::vector<Relation>& basis, const Relation& relation);
// Rank of the evaluation map; equals dim J_degree when the generators span.
std::size_t evaluation_rank(int degree, const std::vector<Composition>& generators);

}  // namespace jring
