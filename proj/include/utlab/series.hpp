#pragma once

#include <span>
#include <vector>

#include "utlab/coeffs.hpp"

namespace utlab {

inline constexpr int kDefaultOrder = 4;

/// Power series sum_{k=0}^{order} coeffs[k] z^k with all arithmetic truncated
/// at `order`. A series is "normalized" when it has the shape z + a2 z^2 + ...
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit TruncatedSeries(int order = kDefaultOrder);
  /// Takes ownership of coeffs; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries identity(int order = kDefaultOrder);
  /// z + tail[0] z^2 + tail[1] z^3 + ..., zero-padded or cut to `order`.
  static TruncatedSeries normalized(std::span<const Complex> tail, int order);
  static TruncatedSeries normalized(const ForwardCoeffs& a, int order = kDefaultOrder);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  const Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Complex& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  bool is_normalized() const;
  /// Same series cut (or zero-padded) to another order.
  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(Complex scalar);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(TruncatedSeries lhs, Complex scalar) { return lhs *= scalar; }
  friend TruncatedSeries operator*(Complex scalar, TruncatedSeries rhs) { return rhs *= scalar; }

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated at the common order. Throws OrderMismatchError.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(z)) truncated at the common order, by Horner's scheme in the
/// series algebra. `inner` must have a zero constant term (DomainError).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse g of a normalized f, so that f(g(w)) = w up to the
/// truncation order. Coefficients are solved one order at a time.
TruncatedSeries reverse(const TruncatedSeries& f);

/// Closed-form inverse coefficients through fourth order:
/// A2 = -a2, A3 = 2 a2^2 - a3, A4 = -a4 + 5 a2 a3 - 5 a2^3.
InverseCoeffs inverse_coeffs_closed_form(const ForwardCoeffs& a);

}  // namespace utlab
