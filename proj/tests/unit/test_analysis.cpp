#include "doctest.h"
#include "jring/analysis.hpp"
#include "jring/invariants.hpp"

#include <algorithm>

using namespace jring;

namespace {

Composition C(std::initializer_list<int> v) { return Composition(std::vector<int>(v)); }

GeneratorMonomial mono(std::initializer_list<Composition> factors) {
  GeneratorMonomial m(factors);
  std::sort(m.begin(), m.end());
  return m;
}

Relation first_relation() {
  Relation r;
  r.terms[mono({C({0, 2}), C({0, 1, 2})})] = 1;
  r.terms[mono({C({0, 3}), C({0, 0, 2})})] = -1;
  r.terms[mono({C({1}), C({0, 0, 1, 2})})] = -1;
  r.terms[mono({C({1}), C({1}), C({0, 2, 2})})] = -1;
  return r;
}

Relation second_relation() {
  Relation r;
  r.terms[mono({C({0, 2}), C({0, 2}), C({0, 2})})] = 1;
  r.terms[mono({C({0, 0, 2}), C({0, 0, 2})})] = -1;
  r.terms[mono({C({1}), C({1}), C({0, 2}), C({0, 3})})] = -3;
  r.terms[mono({C({1}), C({1}), C({1}), C({0, 0, 3})})] = 2;
  r.terms[mono({C({1}), C({1}), C({1}), C({1}), C({0, 4})})] = 3;
  return r;
}

XPolynomial expand(const Relation& r) {
  XPolynomial sum;
  for (const auto& [m, c] : r.terms) {
    XPolynomial term = XPolynomial::constant(c);
    for (const auto& beta : m) term = term * g_poly(beta);
    sum += term;
  }
  return sum;
}

// Number of partitions of n with parts in [2, l] (brute force).
int restricted_partitions(int n, int l) {
  if (n == 0) return 1;
  if (l < 2) return 0;
  int count = 0;
  for (int k = 0; k * l <= n; ++k) count += restricted_partitions(n - k * l, l - 1);
  return count;
}

}  // namespace

TEST_CASE("kernel_basis examples") {
  const auto k42 = kernel_basis(4, 2);
  REQUIRE(k42.size() == 1);
  const auto g = g_poly(C({0, 2}));
  const Rational scale = k42[0].coefficient(Partition({2, 2}));
  REQUIRE(scale != 0);
  CHECK(k42[0] == g * scale);
  CHECK(kernel_basis(3, 1).empty());
  CHECK(kernel_basis(12, 6).size() == 4);
  for (const auto& v : kernel_basis(9, 3)) CHECK(derivation_d(v).is_zero());
}

TEST_CASE("derivation matrix shape") {
  const auto dm = derivation_matrix(5, 2);
  CHECK(dm.domain == enumerate_partitions(5, 2));
  CHECK(dm.codomain == enumerate_partitions(4, 2));
  CHECK(dm.matrix.rows() == dm.codomain.size());
  CHECK(dm.matrix.cols() == dm.domain.size());
  CHECK(dm.matrix.rank() + dm.matrix.nullspace().size() == dm.matrix.cols());
}

TEST_CASE("kernel dimension equals label count equals series coefficient") {
  for (int l = 1; l <= 14; ++l) {
    const auto series = poincare_series(14, l);
    for (int n = l; n <= 14; ++n) {
      const auto labels = enumerate_compositions(n, l, 0);
      const auto kernel = kernel_basis(n, l);
      CHECK_MESSAGE(kernel.size() == labels.size(), n << "," << l);
      CHECK(series[n] == Integer(static_cast<long>(labels.size())));
    }
  }
}

TEST_CASE("kernel elements expand over the zero-set basis") {
  for (int n = 1; n <= 12; ++n)
    for (int l = 1; l <= n; ++l)
      for (const auto& v : kernel_basis(n, l)) {
        const auto coords = expand_over_zero_basis(v, n, l);
        REQUIRE(coords);
        XPolynomial rebuilt;
        for (const auto& [beta, c] : *coords) rebuilt += g_poly(beta) * c;
        CHECK(rebuilt == v);
      }
  CHECK_FALSE(expand_over_zero_basis(XPolynomial::variable(1) * XPolynomial::variable(3), 4, 2));
}

TEST_CASE("dimension table rows") {
  const auto table = dimension_table(16);
  CHECK(table.agree());
  const std::vector<int> row6{0, 1, 1, 1, 0, 1};
  for (int l = 1; l <= 6; ++l) CHECK(table.cell(6, l) == row6[l - 1]);
  CHECK(table.total(6) == 4);
  CHECK(table.total(1) == 1);
  CHECK(table.total(16) == 55);
  const auto j = poincare_series(16);
  for (int n = 1; n <= 16; ++n) CHECK(j[n] == table.total(n));
}

TEST_CASE("Poincare series examples") {
  const auto j = poincare_series(24);
  CHECK(j[0] == 1);
  CHECK(j[1] == 1);
  CHECK(j[12] == 21);
  CHECK(j[24] == 320);
  const auto j2 = poincare_series(20, 2);
  for (int n = 0; n <= 20; ++n) CHECK(j2[n] == ((n >= 2 && n % 2 == 0) ? 1 : 0));
  CHECK(poincare_series(5, 0)[0] == 1);
  CHECK(poincare_series(5, 1)[1] == 1);
  CHECK(poincare_series(5, 1)[2] == 0);
  for (int l = 2; l <= 8; ++l) {
    const auto jl = poincare_series(20, l);
    for (int n = 0; n <= 20; ++n)
      CHECK(jl[n] == (n >= l ? restricted_partitions(n - l, l) : 0));
  }
  CHECK_THROWS_AS(poincare_series(0), std::invalid_argument);
}

TEST_CASE("bivariate series specializes to the univariate ones") {
  const int order = 20;
  const auto biv = poincare_bivariate(order);
  const auto at_one = biv.at_u(1);
  const auto j = poincare_series(order);
  for (int n = 0; n <= order; ++n) CHECK(at_one[n] == j[n]);
  for (int l = 0; l <= order; ++l) {
    const auto part = biv.u_part(l);
    const auto jl = poincare_series(order, l);
    for (int n = 0; n <= order; ++n) CHECK(part[n] == jl[n]);
  }
}

TEST_CASE("generator candidates") {
  const auto small = generator_candidates(7);
  CHECK(small == std::vector<Composition>{C({1}), C({0, 2}), C({0, 3}), C({0, 0, 2})});
  const auto gens = generator_candidates(12);
  CHECK(std::find(gens.begin(), gens.end(), C({0, 1})) == gens.end());
  for (const auto& g : {C({0, 1, 2}), C({0, 0, 1, 2}), C({0, 2, 2}), C({0, 0, 3}), C({0, 4})})
    CHECK(std::find(gens.begin(), gens.end(), g) != gens.end());
  for (const auto& g : gens) {
    CHECK(g.in_zero_set());
    CHECK_FALSE(leading_term_decomposes(leading_partition(g)));
  }
  CHECK(leading_term_decomposes(Partition({1, 1})));
  CHECK(leading_term_decomposes(Partition({2, 2, 1})));
  CHECK_FALSE(leading_term_decomposes(Partition({2, 2, 2})));
}

TEST_CASE("candidates generate J through degree 10") {
  const auto gens = generator_candidates(10);
  const auto table = dimension_table(10);
  for (int n = 1; n <= 10; ++n)
    CHECK_MESSAGE(evaluation_rank(n, gens) == static_cast<std::size_t>(table.total(n)), n);
}

TEST_CASE("generator monomials") {
  const std::vector<Composition> gens{C({1}), C({0, 2})};
  const auto ms = generator_monomials(5, gens);
  CHECK(ms.size() == 2);
  for (const auto& m : ms) {
    int w = 0;
    for (const auto& b : m) w += b.weight();
    CHECK(w == 5);
    CHECK(std::is_sorted(m.begin(), m.end()));
  }
  CHECK(evaluate_monomial(mono({C({1}), C({0, 2})})) == JCombination::basis(C({0, 1, 1})));
}

TEST_CASE("relations first appear in degree 12") {
  const auto gens = generator_candidates(12);
  for (int n = 4; n <= 11; ++n) CHECK_MESSAGE(find_relations(n, gens).empty(), n);
  const auto basis = find_relations(12, gens);
  CHECK_FALSE(basis.empty());
  CHECK(in_relation_span(basis, first_relation()));
  CHECK(in_relation_span(basis, second_relation()));
  Relation bogus = first_relation();
  bogus.terms.begin()->second += 1;
  CHECK_FALSE(in_relation_span(basis, bogus));
}

TEST_CASE("displayed relations vanish as polynomials") {
  CHECK(expand(first_relation()).is_zero());
  CHECK(expand(second_relation()).is_zero());
}
