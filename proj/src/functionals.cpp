#include "utlab/functionals.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace utlab {

std::string_view to_string(FunctionalId id) {
  switch (id) {
    case FunctionalId::T21: return "T21";
    case FunctionalId::T31: return "T31";
    case FunctionalId::TS22: return "TS22";
    case FunctionalId::TS23: return "TS23";
    case FunctionalId::TS31: return "TS31";
    case FunctionalId::TS32: return "TS32";
  }
  return "?";
}

std::optional<FunctionalId> parse_functional(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (FunctionalId id : kAllFunctionals) {
    if (to_string(id) == upper) return id;
  }
  return std::nullopt;
}

double t21(Complex a2) { return 1.0 - std::norm(a2); }

double t31(Complex a2, Complex a3) {
  return 2.0 * std::real(a2 * a2 * std::conj(a3)) - 2.0 * std::norm(a2) - std::norm(a3) + 1.0;
}

Complex ts22(Complex a2, Complex a3) { return a2 * a2 - a3 * a3; }

Complex ts23(Complex a3, Complex a4) { return a3 * a3 - a4 * a4; }

Complex ts31(Complex a2, Complex a3) {
  const Complex a2sq = a2 * a2;
  return 1.0 - 2.0 * a2sq + 2.0 * a2sq * a3 - a3 * a3;
}

Complex ts32(Complex a2, Complex a3, Complex a4) {
  return (a2 - a4) * (a2 * a2 - 2.0 * a3 * a3 + a2 * a4);
}

Complex evaluate(FunctionalId id, Complex a2, Complex a3, Complex a4) {
  switch (id) {
    case FunctionalId::T21: return t21(a2);
    case FunctionalId::T31: return t31(a2, a3);
    case FunctionalId::TS22: return ts22(a2, a3);
    case FunctionalId::TS23: return ts23(a3, a4);
    case FunctionalId::TS31: return ts31(a2, a3);
    case FunctionalId::TS32: return ts32(a2, a3, a4);
  }
  return {};
}

double bound_quantity(FunctionalId id, Complex value) {
  return is_hermitian(id) ? value.real() : std::abs(value);
}

InversionInvariance inversion_invariance_check(Complex a2, Complex a3) {
  const Complex inv2 = -a2;
  const Complex inv3 = 2.0 * a2 * a2 - a3;
  return {t21(a2), t21(inv2), ts31(a2, a3), ts31(inv2, inv3)};
}

}  // namespace utlab
