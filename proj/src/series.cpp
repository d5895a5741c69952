#include "utlab/series.hpp"

#include <algorithm>
#include <string>

#include "utlab/errors.hpp"

namespace utlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatchError("series orders differ: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 1) throw DomainError("series order must be at least 1");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("series order must be at least 1");
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  s[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::normalized(std::span<const Complex> tail, int order) {
  TruncatedSeries s = identity(order);
  const auto n = std::min<std::size_t>(tail.size(), static_cast<std::size_t>(order) - 1);
  std::copy_n(tail.begin(), n, s.coeffs_.begin() + 2);
  return s;
}

TruncatedSeries TruncatedSeries::normalized(const ForwardCoeffs& a, int order) {
  const Complex tail[] = {a.a2, a.a3, a.a4};
  return normalized(tail, order);
}

bool TruncatedSeries::is_normalized() const { return coeffs_[0] == Complex{} && coeffs_[1] == Complex{1.0}; }

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries s(order);
  const auto n = std::min(coeffs_.size(), s.coeffs_.size());
  std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int n = a.order();
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == Complex{}) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_same_order(outer, inner);
  if (inner[0] != Complex{}) throw DomainError("compose: inner series has a nonzero constant term");
  const int n = outer.order();
  TruncatedSeries acc(n);
  acc[0] = outer[n];
  for (int k = n - 1; k >= 0; --k) {
    acc = multiply(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

TruncatedSeries reverse(const TruncatedSeries& f) {
  if (!f.is_normalized()) throw DomainError("reverse: series is not of the form z + a2 z^2 + ...");
  const int n = f.order();
  TruncatedSeries g = TruncatedSeries::identity(n);
  // The w^k coefficient of f(g(w)) is g_k plus terms in g_2..g_{k-1} only,
  // so with g_k still zero the residual at order k is exactly -g_k.
  for (int k = 2; k <= n; ++k) g[k] = -compose(f, g)[k];
  return g;
}

InverseCoeffs inverse_coeffs_closed_form(const ForwardCoeffs& a) {
  const Complex a2sq = a.a2 * a.a2;
  return {-a.a2, 2.0 * a2sq - a.a3, -a.a4 + 5.0 * a.a2 * a.a3 - 5.0 * a2sq * a.a2};
}

}  // namespace utlab
