#include "jring/invariants.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "jring/symfun.hpp"

namespace jring {

JCombination::JCombination(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

JCombination JCombination::basis(const Composition& beta, const Integer& c) {
  JCombination out;
  out.add_term(beta, c);
  return out;
}

Integer JCombination::coefficient(const Composition& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? Integer(0) : it->second;
}

void JCombination::add_term(const Composition& beta, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool JCombination::supported_on_zero_set() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.in_zero_set(); });
}

JCombination& JCombination::operator+=(const JCombination& other) {
  for (const auto& [beta, c] : other.terms_) add_term(beta, c);
  return *this;
}

JCombination& JCombination::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

XPolynomial g_poly(const Composition& beta) {
  if (beta.is_empty()) return XPolynomial::constant(1);
  const auto matrix = transition_cache().get(beta.weight(), beta.length());
  const auto col = *matrix->column_of(beta);
  XPolynomial::Terms terms;
  for (std::size_t row = 0; row < matrix->size(); ++row) {
    const Integer& c = matrix->at(row, col);
    if (c != 0) terms.emplace(matrix->lambdas()[row], Rational(c));
  }
  return XPolynomial(std::move(terms));
}

XPolynomial g_poly(std::span<const int> entries) {
  return g_poly(Composition(std::vector<int>(entries.begin(), entries.end())));
}

XPolynomial realize(const JCombination& c) {
  XPolynomial out;
  for (const auto& [beta, coeff] : c.terms()) out += g_poly(beta) * Rational(coeff);
  return out;
}

namespace {

using Exponents = std::vector<int>;
using EPolynomial = std::map<Exponents, Integer>;

// Coefficient of E^beta F^{beta'} in e^{beta''}(k, k'), where
// e_i(k, k') = sum_j E_j F_{i-j}. Monomials exceeding the target in any
// exponent are discarded as soon as they appear.
Integer pairing_coefficient(const Composition& target_e, const Composition& target_f,
                            const Composition& joint) {
  const int l = target_e.length();
  const int lp = target_f.length();
  Exponents target(target_e.entries().begin(), target_e.entries().end());
  target.insert(target.end(), target_f.entries().begin(), target_f.entries().end());

  EPolynomial poly;
  poly.emplace(Exponents(target.size(), 0), Integer(1));
  for (int i = joint.length(); i >= 1 && !poly.empty(); --i) {
    // (slot of E_j or -1, slot of F_{i-j} or -1)
    std::vector<std::pair<int, int>> terms;
    for (int j = std::max(0, i - lp); j <= std::min(i, l); ++j)
      terms.emplace_back(j >= 1 ? j - 1 : -1, i - j >= 1 ? l + (i - j) - 1 : -1);
    for (int r = 0; r < joint[i - 1]; ++r) {
      EPolynomial next;
      for (const auto& [exps, c] : poly) {
        for (auto [se, sf] : terms) {
          Exponents e = exps;
          if (se >= 0 && ++e[se] > target[se]) continue;
          if (sf >= 0 && ++e[sf] > target[sf]) continue;
          next[std::move(e)] += c;
        }
      }
      poly = std::move(next);
      if (poly.empty()) break;
    }
  }
  auto it = poly.find(target);
  return it == poly.end() ? Integer(0) : it->second;
}

struct ProductMemo {
  std::mutex mutex;
  std::map<std::pair<Composition, Composition>, JCombination> values;
};

ProductMemo& product_memo() {
  static ProductMemo memo;
  return memo;
}

}  // namespace

JCombination structure_constants(const Composition& beta, const Composition& beta_prime) {
  auto& memo = product_memo();
  const std::pair key{beta, beta_prime};
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.values.find(key); it != memo.values.end()) return it->second;
  }
  const int first_bound = (beta.length() ? beta[0] : 0) + (beta_prime.length() ? beta_prime[0] : 0);
  JCombination out;
  for (const auto& joint : enumerate_compositions(beta.weight() + beta_prime.weight(),
                                                  beta.length() + beta_prime.length())) {
    if (joint.length() && joint[0] > first_bound) continue;
    out.add_term(joint, pairing_coefficient(beta, beta_prime, joint));
  }
  std::lock_guard lock(memo.mutex);
  return memo.values.try_emplace(key, std::move(out)).first->second;
}

JCombination j_product(const JCombination& a, const JCombination& b) {
  if (!a.supported_on_zero_set() || !b.supported_on_zero_set())
    throw std::invalid_argument("j_product needs combinations supported on B(0)");
  JCombination out;
  for (const auto& [beta, ca] : a.terms())
    for (const auto& [beta_prime, cb] : b.terms())
      out += (ca * cb) * structure_constants(beta, beta_prime);
  if (!out.supported_on_zero_set())
    throw std::logic_error("product of B(0) labels left B(0)");
  return out;
}

JCombination product_closed_form(int a, int b, std::optional<int> c) {
  if (a < 1 || b < 1 || (c && *c < 1))
    throw std::invalid_argument("closed product formulas need positive a, b, c");
  auto fact = [](int v) { return factorial(static_cast<unsigned long>(v)); };
  JCombination out;
  if (!c) {
    for (int r = 1; 2 * r <= a + b; ++r) {
      if (a - r < 0 || b - r < 0) continue;
      const Integer coeff = fact(a + b - 2 * r) / (fact(a - r) * fact(b - r));
      out.add_term(Composition({0, a + b - 2 * r, 0, r}), coeff);
    }
    return out;
  }
  for (int s = 1; s <= *c; ++s) {
    for (int r = 0; r <= std::min(a - s, b); ++r) {
      if (a - r - s < 0 || b - r < 0) continue;
      const Integer coeff = fact(a + b - 2 * r - s) / (fact(a - r - s) * fact(b - r));
      out.add_term(Composition({0, a + b - 2 * r - s, *c - s, r, s}), coeff);
    }
  }
  return out;
}

Integer elementary_value(std::span<const long> k, int j) {
  if (j < 0) return 0;
  // e[t] after processing a prefix of k.
  std::vector<Integer> e(static_cast<std::size_t>(j) + 1, Integer(0));
  e[0] = 1;
  for (long v : k)
    for (int t = j; t >= 1; --t) e[t] += e[t - 1] * v;
  return e[j];
}

Integer elementary_product_value(const Composition& beta, std::span<const long> k) {
  Integer out = 1;
  for (int j = 1; j <= beta.length(); ++j) {
    Integer ej = elementary_value(k, j);
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), ej.get_mpz_t(), static_cast<unsigned long>(beta[j - 1]));
    out *= p;
  }
  return out;
}

namespace {

Integer monomial_symmetric_value(const Partition& lambda, std::span<const long> k) {
  std::vector<int> exps(k.size(), 0);
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) exps[i] = lambda[i];
  std::sort(exps.begin(), exps.end());
  Integer out = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < k.size(); ++i) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(k[i]).get_mpz_t(), static_cast<unsigned long>(exps[i]));
      term *= p;
    }
    out += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

}  // namespace

XPolynomial ChSeries::evaluate(std::span<const long> k) const {
  if (static_cast<int>(k.size()) != length)
    throw std::invalid_argument("number of k values must equal the series length");
  XPolynomial out;
  for (const auto& [n, cell] : e_basis)
    for (const auto& [beta, g] : cell) out += g * Rational(elementary_product_value(beta, k));
  return out;
}

XPolynomial ChSeries::evaluate_monomial(std::span<const long> k) const {
  if (static_cast<int>(k.size()) != length)
    throw std::invalid_argument("number of k values must equal the series length");
  XPolynomial out;
  for (const auto& [n, cell] : m_basis)
    for (const auto& [lambda, x] : cell) out += x * Rational(monomial_symmetric_value(lambda, k));
  return out;
}

bool ChSeries::consistent() const {
  for (const auto& [n, cell] : e_basis) {
    const auto table = expansion_table(n, length);
    const auto& m_cell = m_basis.at(n);
    for (std::size_t j = 0; j < table.lambdas.size(); ++j) {
      XPolynomial sum;
      for (std::size_t i = 0; i < table.betas.size(); ++i)
        if (table.at(i, j) != 0) sum += cell.at(table.betas[i]) * Rational(table.at(i, j));
      if (sum != m_cell.at(table.lambdas[j])) return false;
    }
  }
  return true;
}

ChSeries ch_series(int length, int max_degree) {
  if (length < 1 || max_degree < length)
    throw std::invalid_argument("ch series needs l >= 1 and max degree >= l");
  ChSeries out;
  out.length = length;
  out.max_degree = max_degree;
  for (int n = length; n <= max_degree; ++n) {
    auto& e_cell = out.e_basis[n];
    for (const auto& beta : enumerate_compositions(n, length)) e_cell.emplace(beta, g_poly(beta));
    auto& m_cell = out.m_basis[n];
    for (const auto& lambda : enumerate_partitions(n, length))
      m_cell.emplace(lambda, XPolynomial::monomial(lambda));
  }
  return out;
}

XPolynomial ch_numeric(std::span<const long> k, int max_degree) {
  if (k.empty()) throw std::invalid_argument("ch_numeric needs at least one k value");
  if (max_degree < 1) throw std::invalid_argument("ch_numeric needs max degree >= 1");
  XPolynomial out = XPolynomial::constant(1);
  for (long kj : k) {
    XPolynomial factor;
    Integer power = 1;
    for (int i = 1; i <= max_degree; ++i) {
      power *= kj;
      factor.add_term(Partition({i}), Rational(power));
    }
    out = truncate(out * factor, max_degree);
  }
  return out;
}

std::map<std::vector<int>, XPolynomial> chern_coefficients(int length, int max_degree) {
  if (length < 2) throw std::invalid_argument("chern coefficients need l >= 2");
  std::map<std::vector<int>, XPolynomial> out;
  if (max_degree < length) return out;
  const auto series = ch_series(length, max_degree);
  for (const auto& [n, cell] : series.e_basis) {
    for (const auto& [beta, g] : cell) {
      if (beta[0] != 0) continue;  // e_1 = 0 kills every other term
      out.emplace(std::vector<int>(beta.entries().begin() + 1, beta.entries().end()), g);
    }
  }
  return out;
}

XPolynomial lift_tilde(const Composition& beta, int max_degree) {
  if (!beta.in_zero_set()) throw std::invalid_argument("lift_tilde needs a label in B(0)");
  if (beta.is_empty()) return XPolynomial::constant(1);
  if (max_degree < beta.weight())
    throw std::invalid_argument("max degree below the degree of the label");
  std::vector<int> shifted(beta.entries().begin(), beta.entries().end());
  XPolynomial out;
  for (int i = 0; i <= max_degree - beta.weight(); ++i) {
    out += g_poly(Composition(shifted));
    ++shifted[0];
  }
  return out;
}

XPolynomial lift_exp(const XPolynomial& f, int max_degree) {
  const auto degree = f.homogeneous_degree();
  if (!degree || *degree < 1)
    throw std::invalid_argument("lift_exp needs a nonzero homogeneous polynomial of degree >= 1");
  if (!derivation_d(f).is_zero()) throw std::invalid_argument("lift_exp needs f with d(f) = 0");
  if (max_degree < *degree) throw std::invalid_argument("max degree below the degree of f");
  // [d, delta] is multiplication by l on monomials of length l, so each length
  // component is lifted by exp(delta / l). On J_n^{(n)} this is exp(delta / n).
  std::map<int, XPolynomial> by_length;
  for (const auto& [lambda, c] : f.terms()) by_length[lambda.length()].add_term(lambda, c);
  XPolynomial out;
  for (const auto& [length, component] : by_length) {
    XPolynomial term = component;
    out += term;
    for (int i = 1; i <= max_degree - *degree; ++i) {
      term = derivation_delta(term) * Rational(Integer(1), Integer(i * length));
      out += term;
    }
  }
  return out;
}

}  // namespace jring
