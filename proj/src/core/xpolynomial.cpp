#include "jring/xpolynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jring {

XPolynomial::XPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

XPolynomial XPolynomial::constant(const Rational& c) { return monomial(Partition(), c); }

XPolynomial XPolynomial::monomial(Partition lambda, const Rational& c) {
  XPolynomial out;
  out.add_term(lambda, c);
  return out;
}

XPolynomial XPolynomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("variables are x_1, x_2, ...");
  return monomial(Partition({i}));
}

Rational XPolynomial::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void XPolynomial::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool XPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return jring::is_integral(kv.second); });
}

std::optional<int> XPolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Map order is graded, so the first and last keys bound the degree.
  const int lo = terms_.begin()->first.weight();
  const int hi = terms_.rbegin()->first.weight();
  if (lo != hi) return std::nullopt;
  return lo;
}

std::optional<int> XPolynomial::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

std::optional<int> XPolynomial::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.weight();
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

XPolynomial& XPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

// Replaces one copy of `from` by `to` (positive) and re-sorts.
Partition shift_part(const Partition& lambda, int from, int to) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  *std::find(parts.begin(), parts.end(), from) = to;
  return Partition::from_parts(std::move(parts));
}

// Applies a derivation given by its action on a single variable, x_v -> scale(v) x_{v + step}.
template <typename Scale>
XPolynomial apply_derivation(const XPolynomial& p, int step, Scale scale) {
  XPolynomial out;
  for (const auto& [lambda, c] : p.terms()) {
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i] == parts[i - 1]) continue;
      const int v = parts[i];
      const Rational s = scale(v);
      if (s == 0) continue;
      out.add_term(shift_part(lambda, v, v + step), c * s * lambda.multiplicity(v));
    }
  }
  return out;
}

}  // namespace

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  XPolynomial out;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) out.add_term(merge(la, lb), ca * cb);
  return out;
}

XPolynomial multiply(const XPolynomial& p, const XPolynomial& q) { return p * q; }

XPolynomial power(const XPolynomial& p, unsigned exponent) {
  XPolynomial out = XPolynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

XPolynomial derivation_d(const XPolynomial& p) {
  return apply_derivation(p, -1, [](int v) { return Rational(v > 1 ? 1 : 0); });
}

XPolynomial derivation_delta(const XPolynomial& p) {
  return apply_derivation(p, +1, [](int v) { return Rational(v); });
}

XPolynomial project(const XPolynomial& p, int n, std::optional<int> length) {
  XPolynomial::Terms terms;
  for (const auto& [lambda, c] : p.terms())
    if (lambda.weight() == n && (!length || lambda.length() == *length)) terms.emplace(lambda, c);
  return XPolynomial(std::move(terms));
}

XPolynomial truncate(const XPolynomial& p, int max_degree) {
  XPolynomial::Terms terms;
  for (const auto& [lambda, c] : p.terms())
    if (lambda.weight() <= max_degree) terms.emplace(lambda, c);
  return XPolynomial(std::move(terms));
}

}  // namespace jring
