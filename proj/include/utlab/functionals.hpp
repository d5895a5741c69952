#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "utlab/coeffs.hpp"

namespace utlab {

/// Toeplitz (T21, T31) and symmetric Toeplitz (TS22, TS23, TS31, TS32)
/// determinants of the coefficient sequence 1, a2, a3, a4.
enum class FunctionalId { T21, T31, TS22, TS23, TS31, TS32 };

inline constexpr std::array<FunctionalId, 6> kAllFunctionals = {
    FunctionalId::T21, FunctionalId::T31, FunctionalId::TS22,
    FunctionalId::TS23, FunctionalId::TS31, FunctionalId::TS32};

std::string_view to_string(FunctionalId id);
/// Accepts "t21", "TS32", ... (case-insensitive).
std::optional<FunctionalId> parse_functional(std::string_view text);

/// True for T21 and T31, whose values are real and compared signed rather
/// than by modulus.
constexpr bool is_hermitian(FunctionalId id) { return id == FunctionalId::T21 || id == FunctionalId::T31; }
/// Whether the functional reads a4.
constexpr bool reads_a4(FunctionalId id) { return id == FunctionalId::TS23 || id == FunctionalId::TS32; }

double t21(Complex a2);
/// 2 Re(a2^2 conj(a3)) - 2|a2|^2 - |a3|^2 + 1
double t31(Complex a2, Complex a3);

Complex ts22(Complex a2, Complex a3);
Complex ts23(Complex a3, Complex a4);
Complex ts31(Complex a2, Complex a3);
/// (a2 - a4)(a2^2 - 2 a3^2 + a2 a4)
Complex ts32(Complex a2, Complex a3, Complex a4);

/// Dispatch by id. T21/T31 come back as real-valued complex numbers.
Complex evaluate(FunctionalId id, Complex a2, Complex a3, Complex a4);
inline Complex evaluate(FunctionalId id, const ForwardCoeffs& a) { return evaluate(id, a.a2, a.a3, a.a4); }
inline Complex evaluate(FunctionalId id, const InverseCoeffs& a) { return evaluate(id, a.a2, a.a3, a.a4); }

/// The quantity compared against a bound: the signed value for T21/T31, the
/// modulus for the symmetric determinants.
double bound_quantity(FunctionalId id, Complex value);

struct InversionInvariance {
  double t21_f;
  double t21_inverse;
  Complex ts31_f;
  Complex ts31_inverse;
};

/// Evaluates T21 and TS31 on f and on f^{-1}, with (A2, A3) from the
/// closed-form inverse coefficients. Both pairs agree for every (a2, a3).
InversionInvariance inversion_invariance_check(Complex a2, Complex a3);

}  // namespace utlab
