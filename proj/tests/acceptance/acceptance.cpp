// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
// Exit status is the number of failing criteria.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jring/analysis.hpp"
#include "jring/invariants.hpp"
#include "jring/symfun.hpp"
#include "latex_poly.hpp"

using namespace jring;
using jring::testing::parse_latex_polynomial;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Non-comment lines split on '|'.
std::vector<std::vector<std::string>> read_table(const std::string& name) {
  std::ifstream in(std::string(JRING_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '|')) fields.push_back(trim(field));
    rows.push_back(fields);
  }
  return rows;
}

std::vector<int> ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<Composition> labels(int max_weight, bool zero_only) {
  std::vector<Composition> out{Composition::empty()};
  for (int n = 1; n <= max_weight; ++n)
    for (int l = 1; l <= n; ++l)
      for (const auto& beta : enumerate_compositions(n, l))
        if (!zero_only || beta.in_zero_set()) out.push_back(beta);
  return out;
}

Composition C(std::vector<int> v) { return Composition(std::move(v)); }

Outcome reference_bases() {
  Outcome o;
  const auto rows = read_table("reference_bases.txt");
  int max_length = 0;
  for (const auto& row : rows) {
    const auto beta = C(ints(row[0]));
    max_length = std::max(max_length, beta.length());
    o.require(g_poly(beta) == parse_latex_polynomial(row[1]), "g" + to_string(beta) + " differs");
  }
  o.require(rows.size() >= 40, "fewer than 40 listed polynomials");
  o.require(max_length == 7, "lengths do not reach 7");
  o.notes.insert(o.notes.begin(), std::to_string(rows.size()) + " polynomials");
  return o;
}

Outcome dimension_table_16() {
  Outcome o;
  const auto table = dimension_table(16, Execution::parallel);
  o.require(table.agree(), "label count and kernel rank disagree");
  for (const auto& row : read_table("dimension_table.txt")) {
    const int n = std::stoi(row[0]);
    const auto cells = ints(row[1]);
    for (int l = 1; l <= n; ++l) {
      o.require(table.cell(n, l) == cells[l - 1],
                "cell (" + std::to_string(n) + "," + std::to_string(l) + ")");
      o.require(table.kernel[n][l] == cells[l - 1],
                "kernel (" + std::to_string(n) + "," + std::to_string(l) + ")");
    }
    o.require(table.total(n) == std::stoi(row[2]), "total of row " + std::to_string(n));
  }
  return o;
}

Outcome poincare() {
  Outcome o;
  const auto rows = read_table("poincare_series.txt");
  const auto j = poincare_series(24);
  const auto at_one = poincare_bivariate(24).at_u(1);
  for (int n = 0; n <= 24; ++n) o.require(at_one[n] == j[n], "J(1,t) at t^" + std::to_string(n));
  for (const auto& row : rows) {
    const auto listed = ints(row[1]);
    const int top = static_cast<int>(listed.size()) - 1;
    const auto s = row[0] == "J" ? poincare_series(top) : poincare_series(top, std::stoi(row[0]));
    for (int n = 0; n <= top; ++n)
      if (s[n] != listed[n])
        o.require(false, (row[0] == "J" ? std::string("J") : "J^(" + row[0] + ")") + " at t^" +
                             std::to_string(n) + ": listed " + std::to_string(listed[n]) +
                             ", closed form " + to_string(s[n]));
  }
  return o;
}

Outcome product_oracle() {
  Outcome o;
  const auto zero = labels(12, true);
  std::size_t pairs = 0;
  for (const auto& a : zero)
    for (const auto& b : zero) {
      if (b < a || a.weight() + b.weight() > 12) continue;
      ++pairs;
      const auto prod = j_product(JCombination::basis(a), JCombination::basis(b));
      o.require(realize(prod) == g_poly(a) * g_poly(b), to_string(a) + " * " + to_string(b));
    }
  o.notes.insert(o.notes.begin(), std::to_string(pairs) + " unordered pairs");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  auto basis = [](const Composition& b) { return JCombination::basis(b); };
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      o.require(product_closed_form(a, b) == j_product(basis(C({0, a})), basis(C({0, b}))),
                "(0," + std::to_string(a) + ")(0," + std::to_string(b) + ")");
      for (int c = 1; c <= 5; ++c)
        o.require(product_closed_form(a, b, c) == j_product(basis(C({0, a})), basis(C({0, b, c}))),
                  "(0," + std::to_string(a) + ")(0," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
  o.require(j_product(basis(C({1})), basis(C({1}))) == basis(C({0, 1})), "g(1) g(1)");
  for (const auto& beta : labels(10, true)) {
    if (beta.length() < 2) continue;
    std::vector<int> shifted(beta.entries().begin(), beta.entries().end());
    --shifted.back();
    shifted.push_back(1);
    o.require(j_product(basis(C({1})), basis(beta)) == basis(C(shifted)), "g(1) g" + to_string(beta));
  }
  return o;
}

Outcome derivation_law() {
  Outcome o;
  for (const auto& beta : labels(14, false)) {
    const auto dg = derivation_d(g_poly(beta));
    if (beta.in_zero_set()) {
      o.require(dg.is_zero(), "d g" + to_string(beta) + " != 0");
      continue;
    }
    std::vector<int> lowered(beta.entries().begin(), beta.entries().end());
    --lowered[0];
    o.require(!dg.is_zero(), "g" + to_string(beta) + " in the kernel");
    o.require(dg == g_poly(C(lowered)), "d g" + to_string(beta));
  }
  return o;
}

Outcome waring() {
  Outcome o;
  for (int n = 1; n <= 14; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto m = transition_cache().get(n, l);
      const auto omega = extreme_partition(n, l);
      for (const auto& beta : m->betas())
        o.require(waring_coefficient(beta) == m->entry(omega, beta), "beta " + to_string(beta));
    }
  return o;
}

Outcome lifts() {
  Outcome o;
  const int N = 10;
  for (const auto& beta : labels(6, true)) {
    if (beta.is_empty()) continue;
    const auto tilde = lift_tilde(beta, N);
    o.require(derivation_d(tilde) == truncate(tilde, N - 1), "tilde lift of " + to_string(beta));
    const auto exp = lift_exp(g_poly(beta), N);
    o.require(derivation_d(exp) == truncate(exp, N - 1), "exp lift of " + to_string(beta));
  }
  const auto displayed_exp = parse_latex_polynomial(
      "x_1^2 + x_1x_2 + \\frac{1}{4}(x_2^2 + 2x_1x_3) + \\frac{1}{8}(x_2x_3 + x_1x_4)");
  const auto displayed_tilde = parse_latex_polynomial("x_1^2 + x_1x_2 + x_1x_3 + x_1x_4");
  const auto x11 = power(XPolynomial::variable(1), 2);
  const auto exp = lift_exp(x11, 5);
  const auto tilde = lift_tilde(C({0, 1}), 5);
  for (int d = 2; d <= 5; ++d) {
    o.require(project(exp, d) == project(displayed_exp, d),
              "exp(delta/2) x_1^2 at degree " + std::to_string(d) + ": computed " +
                  to_string(project(exp, d).coefficient(Partition({3, 2}))) +
                  " (x_2x_3 coefficient), displayed " +
                  to_string(project(displayed_exp, d).coefficient(Partition({3, 2}))));
    o.require(project(tilde, d) == project(displayed_tilde, d),
              "tilde lift of (0,1) at degree " + std::to_string(d));
  }
  o.require(project(exp, 4) - project(tilde, 4) == project(displayed_exp, 4) - project(displayed_tilde, 4),
            "degree-4 difference between the two lifts");
  o.require(project(exp, 4) != project(tilde, 4), "the lifts agree at degree 4");
  return o;
}

Outcome chern_tables() {
  Outcome o;
  const auto l2 = chern_coefficients(2, 10);
  const auto l3 = chern_coefficients(3, 9);
  std::size_t checked = 0;
  for (const auto& row : read_table("chern_expansions.txt")) {
    const int l = std::stoi(row[0]);
    const auto exps = ints(row[1]);
    const auto& table = l == 2 ? l2 : l3;
    const auto it = table.find(exps);
    ++checked;
    o.require(it != table.end() && it->second == parse_latex_polynomial(row[2]),
              "l=" + row[0] + " exponents " + row[1]);
  }
  o.notes.insert(o.notes.begin(), std::to_string(checked) + " coefficients");
  return o;
}

Outcome closing_identity() {
  Outcome o;
  const int N = 8;
  for (const std::vector<long>& k : {std::vector<long>{2, -1}, std::vector<long>{3, -1, -1}}) {
    const int l = static_cast<int>(k.size());
    XPolynomial sum;
    for (int n = l; n <= N; ++n)
      for (const auto& beta : enumerate_compositions(n, l, 0))
        sum += lift_tilde(beta, N) * Rational(elementary_product_value(beta, k));
    o.require(ch_numeric(k, N) == sum, "k of length " + std::to_string(l));
  }
  return o;
}

GeneratorMonomial monomial(std::vector<Composition> factors) {
  std::sort(factors.begin(), factors.end());
  return factors;
}

Outcome relations() {
  Outcome o;
  const auto g1 = C({1}), g02 = C({0, 2}), g03 = C({0, 3}), g04 = C({0, 4}), g002 = C({0, 0, 2}),
             g003 = C({0, 0, 3}), g012 = C({0, 1, 2}), g022 = C({0, 2, 2}), g0012 = C({0, 0, 1, 2});
  Relation first;
  first.terms[monomial({g02, g012})] = 1;
  first.terms[monomial({g03, g002})] = -1;
  first.terms[monomial({g1, g0012})] = -1;
  first.terms[monomial({g1, g1, g022})] = -1;
  Relation second;
  second.terms[monomial({g02, g02, g02})] = 1;
  second.terms[monomial({g002, g002})] = -1;
  second.terms[monomial({g1, g1, g02, g03})] = -3;
  second.terms[monomial({g1, g1, g1, g003})] = 2;
  second.terms[monomial({g1, g1, g1, g1, g04})] = 3;

  const auto gens = generator_candidates(12);
  for (int n = 4; n <= 11; ++n)
    o.require(find_relations(n, gens).empty(), "relations in degree " + std::to_string(n));
  const auto basis = find_relations(12, gens);
  o.require(in_relation_span(basis, first), "first relation not in the degree-12 relation space");
  o.require(in_relation_span(basis, second), "second relation not in the degree-12 relation space");
  for (const auto* r : {&first, &second}) {
    XPolynomial total;
    for (const auto& [m, c] : r->terms) {
      XPolynomial term = XPolynomial::constant(c);
      for (const auto& beta : m) term = term * g_poly(beta);
      total += term;
    }
    o.require(total.is_zero(), "relation does not vanish as a polynomial");
  }
  o.notes.insert(o.notes.begin(), std::to_string(basis.size()) + " relations in degree 12");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"reference basis tables", reference_bases},
      {"dimension table through n = 16", dimension_table_16},
      {"Poincare series", poincare},
      {"products realize through weight 12", product_oracle},
      {"closed product formulas", closed_forms},
      {"derivation law through weight 14", derivation_law},
      {"Waring closed form through weight 14", waring},
      {"lift laws and displayed lifts", lifts},
      {"ch-series coefficients at e_1 = 0", chern_tables},
      {"closing identity", closing_identity},
      {"relations among generator candidates", relations},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first;
    for (const auto& note : outcome.notes) std::cout << " | " << note;
    std::cout << std::endl;
  }
  return failures;
}
