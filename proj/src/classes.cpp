#include "utlab/classes.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "utlab/errors.hpp"
#include "utlab/series.hpp"

namespace utlab {

namespace {

void require_parametrized(ClassId cls) {
  if (cls == ClassId::S) {
    throw UnsupportedClassError("class S has no Schwarz parametrization; use the extremal catalog");
  }
}

constexpr Complex kI{0.0, 1.0};

ExtremalEntry make_entry(ClassId cls, std::string label, std::string formula, ForwardCoeffs a,
                         std::vector<std::pair<FunctionalId, Rational>> attained,
                         std::optional<SchurParams> witness = std::nullopt) {
  return {cls,          std::move(label), std::move(formula), a, inverse_coeffs_closed_form(a),
          std::move(attained), witness};
}

}  // namespace

std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::S: return "S";
    case ClassId::R: return "R";
    case ClassId::Starlike: return "STARLIKE";
    case ClassId::Convex: return "CONVEX";
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "s") return ClassId::S;
  if (lower == "r") return ClassId::R;
  if (lower == "star" || lower == "starlike") return ClassId::Starlike;
  if (lower == "c" || lower == "convex") return ClassId::Convex;
  return std::nullopt;
}

ForwardCoeffs forward_map(ClassId cls, const SchwarzCoeffs& c) {
  require_parametrized(cls);
  const Complex c1sq = c.c1 * c.c1;
  const Complex c1cu = c1sq * c.c1;
  const Complex c1c2 = c.c1 * c.c2;
  switch (cls) {
    case ClassId::R:
      return {c.c1, (2.0 / 3.0) * (c.c2 + c1sq), 0.5 * (c.c3 + 2.0 * c1c2 + c1cu)};
    case ClassId::Starlike:
      return {2.0 * c.c1, c.c2 + 3.0 * c1sq, (2.0 / 3.0) * (c.c3 + 5.0 * c1c2 + 6.0 * c1cu)};
    case ClassId::Convex:
      return {c.c1, (c.c2 + 3.0 * c1sq) / 3.0, (c.c3 + 5.0 * c1c2 + 6.0 * c1cu) / 6.0};
    case ClassId::S: break;
  }
  return {};
}

InverseCoeffs inverse_map(ClassId cls, const SchwarzCoeffs& c) {
  require_parametrized(cls);
  const Complex c1sq = c.c1 * c.c1;
  const Complex c1cu = c1sq * c.c1;
  const Complex c1c2 = c.c1 * c.c2;
  switch (cls) {
    case ClassId::R:
      return {-c.c1, (4.0 / 3.0) * c1sq - (2.0 / 3.0) * c.c2,
              -0.5 * (c.c3 - (14.0 / 3.0) * c1c2 + (13.0 / 3.0) * c1cu)};
    case ClassId::Starlike:
      // The c1 c2 coefficient is -10 (not -10/3): it must agree with the
      // closed-form reversion of the forward map.
      return {-2.0 * c.c1, 5.0 * c1sq - c.c2, -(2.0 / 3.0) * (c.c3 - 10.0 * c1c2 + 21.0 * c1cu)};
    case ClassId::Convex:
      return {-c.c1, -(c.c2 - 3.0 * c1sq) / 3.0, -(c.c3 - 5.0 * c1c2 + 6.0 * c1cu) / 6.0};
    case ClassId::S: break;
  }
  return {};
}

const std::vector<ExtremalEntry>& extremal_catalog() {
  using F = FunctionalId;
  static const std::vector<ExtremalEntry> catalog = [] {
    const SchurParams rotated{kI, 0.0, 0.0};
    const ForwardCoeffs f2{2.0 * kI, -3.0, -4.0 * kI};
    std::vector<ExtremalEntry> entries;
    entries.push_back(make_entry(ClassId::S, "koebe", "z/(1-z)^2", {2.0, 3.0, 4.0},
                                 {{F::T21, Rational(-3)}, {F::T31, Rational(8)}}));
    entries.push_back(make_entry(ClassId::S, "f1", "z/(1-z+z^2)", {1.0, 0.0, -1.0},
                                 {{F::T31, Rational(-1)}}));
    entries.push_back(make_entry(ClassId::S, "f2", "z/(1-iz)^2", f2,
                                 {{F::TS22, Rational(29)}, {F::TS23, Rational(221)}, {F::TS31, Rational(24)}}));
    entries.push_back(make_entry(ClassId::Starlike, "f2", "z/(1-iz)^2", f2,
                                 {{F::TS22, Rational(29)},
                                  {F::TS23, Rational(221)},
                                  {F::TS31, Rational(24)},
                                  {F::TS32, Rational(416)}},
                                 rotated));
    entries.push_back(make_entry(ClassId::R, "bounded-turning", "f'(z) = (1+iz)/(1-iz)",
                                 {kI, -2.0 / 3.0, -0.5 * kI},
                                 {{F::TS22, Rational(25, 9)}, {F::TS23, Rational(233, 36)}, {F::TS32, Rational(817, 108)}},
                                 rotated));
    entries.push_back(make_entry(ClassId::Convex, "convex", "z/(1-iz)", {kI, -1.0, -kI},
                                 {{F::TS22, Rational(2)}, {F::TS23, Rational(2)}, {F::TS32, Rational(4)}},
                                 rotated));
    return entries;
  }();
  return catalog;
}

}  // namespace utlab
