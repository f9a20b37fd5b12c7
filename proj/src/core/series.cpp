#include "jring/series.hpp"

#include <stdexcept>

namespace jring {

TruncatedSeries::TruncatedSeries(int order)
    : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, Integer(0)) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Integer> coeffs) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(order, 0); }

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, const Integer& c) {
  TruncatedSeries out(order);
  if (exponent >= 0 && exponent <= order) out[exponent] = c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series orders differ");
  TruncatedSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.order_; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("series inverse needs constant term +-1");
  TruncatedSeries out(order_);
  out[0] = c0;  // 1/c0 == c0
  for (int n = 1; n <= order_; ++n) {
    Integer sum = 0;
    for (int i = 1; i <= n; ++i) sum += (*this)[i] * out[n - i];
    out[n] = -sum * c0;
  }
  return out;
}

BivariateSeries::BivariateSeries(int order, int max_u)
    : order_(order),
      max_u_(max_u),
      coeffs_((static_cast<std::size_t>(order) + 1) * (static_cast<std::size_t>(max_u) + 1),
              Integer(0)) {
  if (order < 0 || max_u < 0) throw std::invalid_argument("series bounds must be non-negative");
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order_ != b.order_ || a.max_u_ != b.max_u_)
    throw std::invalid_argument("series bounds differ");
  BivariateSeries out(a.order_, a.max_u_);
  for (int n = 0; n <= a.order_; ++n)
    for (int l = 0; l <= a.max_u_; ++l) {
      const Integer& c = a.coeff(n, l);
      if (c == 0) continue;
      for (int m = 0; n + m <= a.order_; ++m)
        for (int k = 0; l + k <= a.max_u_; ++k)
          if (b.coeff(m, k) != 0) out.coeff(n + m, l + k) += c * b.coeff(m, k);
    }
  return out;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  if (other.order_ != order_ || other.max_u_ != max_u_)
    throw std::invalid_argument("series bounds differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries BivariateSeries::at_u(long u) const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) {
    Integer power = 1;
    for (int l = 0; l <= max_u_; ++l) {
      out[n] += coeff(n, l) * power;
      power *= u;
    }
  }
  return out;
}

TruncatedSeries BivariateSeries::u_part(int l) const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) out[n] = coeff(n, l);
  return out;
}

}  // namespace jring
