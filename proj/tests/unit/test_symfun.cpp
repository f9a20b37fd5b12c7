#include <random>
#include <thread>

#include "doctest.h"
#include "jring/invariants.hpp"
#include "jring/symfun.hpp"

using namespace jring;

namespace {

Integer numeric_monomial_symmetric(const Partition& lambda, const std::vector<long>& k) {
  std::vector<int> exps(k.size(), 0);
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) exps[i] = lambda[i];
  std::sort(exps.begin(), exps.end());
  Integer sum = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) term *= k[i];
    sum += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return sum;
}

// e_j(k) straight from the subset-sum definition.
Integer numeric_elementary(int j, const std::vector<long>& k) {
  Integer sum = 0;
  const auto l = k.size();
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    if (__builtin_popcount(mask) != j) continue;
    Integer term = 1;
    for (std::size_t i = 0; i < l; ++i)
      if (mask & (1u << i)) term *= k[i];
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("expand_elementary_product examples") {
  CHECK(expand_elementary_product(Composition({0, 1}), 2) ==
        ElementaryExpansion{{Partition({1, 1}), 1}});
  CHECK(expand_elementary_product(Composition({2, 1}), 2) ==
        ElementaryExpansion{{Partition({3, 1}), 1}, {Partition({2, 2}), 2}});
  CHECK(expand_elementary_product(Composition({1, 2}), 2) ==
        ElementaryExpansion{{Partition({3, 2}), 1}});
  CHECK_THROWS_AS(expand_elementary_product(Composition({0, 1}), 1), std::invalid_argument);
}

TEST_CASE("expansion agrees with numeric evaluation at random points") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> value(-4, 4);
  for (int n = 1; n <= 9; ++n)
    for (int l = 1; l <= std::min(n, 5); ++l)
      for (const auto& beta : enumerate_compositions(n, l)) {
        const auto expansion = expand_elementary_product(beta, l);
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<long> k(static_cast<std::size_t>(l));
          for (auto& v : k) v = value(rng);
          Integer lhs = 1;
          for (int j = 1; j <= l; ++j)
            for (int r = 0; r < beta[j - 1]; ++r) lhs *= numeric_elementary(j, k);
          Integer rhs = 0;
          for (const auto& [lambda, c] : expansion) rhs += c * numeric_monomial_symmetric(lambda, k);
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("expansion table is non-negative, exactly l parts, unitriangular") {
  for (int n = 1; n <= 12; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto table = expansion_table(n, l);
      for (std::size_t i = 0; i < table.betas.size(); ++i) {
        const auto lead = leading_partition(table.betas[i]);
        for (std::size_t j = 0; j < table.lambdas.size(); ++j) {
          const auto& e = table.at(i, j);
          CHECK(e >= 0);
          if (table.lambdas[j] == lead) CHECK(e == 1);
          if (e != 0) CHECK(dominance_leq(table.lambdas[j], lead));
        }
        for (const auto& [lambda, c] : expand_elementary_product(table.betas[i], l))
          CHECK(lambda.length() == l);
      }
    }
}

TEST_CASE("transition_matrix examples") {
  const auto m22 = transition_matrix(2, 2);
  REQUIRE(m22.size() == 1);
  CHECK(m22.at(0, 0) == 1);

  const auto m42 = transition_matrix(4, 2);
  CHECK(m42.entry(Partition({3, 1}), Composition({0, 2})) == -2);
  CHECK(m42.entry(Partition({3, 1}), Composition({2, 1})) == 1);
  CHECK(m42.entry(Partition({2, 2}), Composition({0, 2})) == 1);
  CHECK(m42.entry(Partition({2, 2}), Composition({2, 1})) == 0);

  const auto m52 = transition_matrix(5, 2);
  CHECK(m52.entry(Partition({4, 1}), Composition({1, 2})) == -3);
  CHECK(m52.entry(Partition({3, 2}), Composition({1, 2})) == 1);

  CHECK_THROWS_AS(transition_matrix(2, 3), std::invalid_argument);
}

TEST_CASE("a non-triangular table is rejected") {
  auto table = expansion_table(4, 2);
  // Give the (0,2) row a term above its leading partition (2,2).
  table.entries[3] = 5;
  CHECK_THROWS_AS(invert_expansion_table(table), std::logic_error);
}

TEST_CASE("E * M is the identity for 1 <= l <= n <= 16") {
  for (int n = 1; n <= 16; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto table = expansion_table(n, l);
      const auto m = transition_matrix(n, l);
      const auto size = table.betas.size();
      REQUIRE(m.lambdas() == table.lambdas);
      REQUIRE(m.betas() == table.betas);
      bool identity = true;
      for (std::size_t i = 0; i < size && identity; ++i)
        for (std::size_t k = 0; k < size; ++k) {
          Integer sum = 0;
          for (std::size_t j = 0; j < size; ++j) sum += table.at(i, j) * m.at(j, k);
          if (sum != (i == k ? 1 : 0)) identity = false;
        }
      CHECK_MESSAGE(identity, "n=" << n << " l=" << l);
    }
}

TEST_CASE("waring coefficient") {
  CHECK(waring_coefficient(Composition({0, 2})) == -2);
  CHECK(waring_coefficient(Composition({1, 2})) == -3);
  CHECK(waring_coefficient(Composition({0, 0, 1})) == 1);
  CHECK(waring_coefficient(Composition({3})) == 1);
  for (int n = 1; n <= 14; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto m = transition_cache().get(n, l);
      const auto omega = extreme_partition(n, l);
      for (const auto& beta : m->betas()) {
        const auto expected = m->entry(omega, beta);
        CHECK(expected != 0);
        CHECK_MESSAGE(waring_coefficient(beta) == expected, to_string(beta));
      }
    }
}

TEST_CASE("transition cache: first writer wins, concurrent readers agree") {
  auto& cache = transition_cache();
  const auto first = cache.get(9, 4);
  CHECK(cache.get(9, 4) == first);
  auto other = transition_matrix(9, 4);
  CHECK(cache.insert(std::move(other)) == first);

  std::vector<std::shared_ptr<const TransitionMatrix>> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t)
    threads.emplace_back([&, t] { seen[t] = cache.get(13, 5); });
  for (auto& th : threads) th.join();
  for (const auto& s : seen) {
    CHECK(s == seen[0]);
    CHECK(*s == transition_matrix(13, 5));
  }
}

namespace {

struct CountingStore : MatrixStore {
  int loads = 0;
  int saves = 0;
  std::optional<TransitionMatrix> held;
  std::optional<TransitionMatrix> load(int, int) override {
    ++loads;
    return held;
  }
  void save(const TransitionMatrix& m) override {
    ++saves;
    held = m;
  }
};

}  // namespace

TEST_CASE("backing store is consulted on a miss and fed fresh matrices") {
  TransitionCache cache;
  auto store = std::make_shared<CountingStore>();
  cache.set_store(store);
  const auto fresh = cache.get(7, 3);
  CHECK(store->loads == 1);
  CHECK(store->saves == 1);
  cache.clear();
  const auto loaded = cache.get(7, 3);
  CHECK(store->loads == 2);
  CHECK(store->saves == 1);
  CHECK(*loaded == *fresh);
}

TEST_CASE("precompute fills every cell") {
  TransitionCache cache;
  cache.precompute(8);
  CHECK(cache.size() == 36);
}
