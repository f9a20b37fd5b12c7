#include "jring/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "jring/analysis.hpp"
#include "jring/invariants.hpp"
#include "jring/symfun.hpp"

namespace jring::cli {

namespace {

std::vector<Composition> labels_up_to(int max_weight, bool zero_only) {
  std::vector<Composition> out{Composition::empty()};
  for (int n = 1; n <= max_weight; ++n)
    for (int l = 1; l <= n; ++l)
      for (const auto& beta : enumerate_compositions(n, l))
        if (!zero_only || beta.in_zero_set()) out.push_back(beta);
  return out;
}

bool transition_inverts(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto table = expansion_table(n, l);
      const auto m = transition_cache().get(n, l);
      const std::size_t size = table.betas.size();
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          Integer sum = 0;
          for (std::size_t k = 0; k < size; ++k) sum += table.at(i, k) * m->at(k, j);
          if (sum != (i == j ? 1 : 0)) return false;
        }
    }
  return true;
}

bool basis_integral_unitriangular(int max_n) {
  for (const auto& beta : labels_up_to(max_n, false)) {
    if (beta.is_empty()) continue;
    const auto g = g_poly(beta);
    if (!g.is_integral() || g.coefficient(leading_partition(beta)) != 1) return false;
  }
  return true;
}

bool derivation_law(int max_n) {
  for (const auto& beta : labels_up_to(max_n, false)) {
    const auto dg = derivation_d(g_poly(beta));
    if (beta.in_zero_set()) {
      if (!dg.is_zero()) return false;
      continue;
    }
    std::vector<int> lowered(beta.entries().begin(), beta.entries().end());
    --lowered[0];
    if (dg != g_poly(Composition(lowered))) return false;
  }
  return true;
}

bool waring(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto m = transition_cache().get(n, l);
      const auto omega = extreme_partition(n, l);
      for (const auto& beta : m->betas())
        if (waring_coefficient(beta) != m->entry(omega, beta)) return false;
    }
  return true;
}

bool products(int max_weight) {
  const auto labels = labels_up_to(max_weight, true);
  for (const auto& a : labels)
    for (const auto& b : labels) {
      if (a.weight() + b.weight() > max_weight || b < a) continue;
      const auto prod = j_product(JCombination::basis(a), JCombination::basis(b));
      if (realize(prod) != g_poly(a) * g_poly(b)) return false;
    }
  return true;
}

bool lift_laws(int max_weight, int max_degree) {
  for (const auto& beta : labels_up_to(max_weight, true)) {
    if (beta.is_empty()) continue;
    const auto tilde = lift_tilde(beta, max_degree);
    if (derivation_d(tilde) != truncate(tilde, max_degree - 1)) return false;
    const auto exp = lift_exp(g_poly(beta), max_degree);
    if (derivation_d(exp) != truncate(exp, max_degree - 1)) return false;
  }
  return true;
}

bool dimensions(int max_n) {
  const auto table = dimension_table(max_n, Execution::parallel);
  if (!table.agree()) return false;
  const auto series = poincare_series(max_n);
  for (int n = 1; n <= max_n; ++n)
    if (series[n] != table.total(n)) return false;
  return true;
}

}  // namespace

std::vector<SuiteResult> run_verify(int max_n) {
  const int product_cap = std::min(max_n, 10);
  const int lift_cap = std::min(max_n, 6);
  const std::vector<std::pair<std::string, std::function<bool()>>> suites{
      {"transition matrix inverts the expansion table", [&] { return transition_inverts(max_n); }},
      {"g_beta integral with leading coefficient 1", [&] { return basis_integral_unitriangular(max_n); }},
      {"derivation law", [&] { return derivation_law(max_n); }},
      {"Waring closed form", [&] { return waring(max_n); }},
      {"structure constants realize products (weight <= " + std::to_string(product_cap) + ")",
       [&] { return products(product_cap); }},
      {"lift laws (weight <= " + std::to_string(lift_cap) + ", N = " + std::to_string(lift_cap + 4) + ")",
       [&] { return lift_laws(lift_cap, lift_cap + 4); }},
      {"kernel dimensions match labels and J(t)", [&] { return dimensions(max_n); }},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, check] : suites) results.push_back({name, check()});
  return results;
}

}  // namespace jring::cli
