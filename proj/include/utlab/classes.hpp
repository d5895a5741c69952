#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "utlab/coeffs.hpp"
#include "utlab/functionals.hpp"
#include "utlab/rational.hpp"
#include "utlab/schwarz.hpp"

namespace utlab {

/// S: all univalent functions. R: Re f' > 0. Starlike: Re zf'/f > 0.
/// Convex: Re(1 + zf''/f') > 0. Only R, Starlike and Convex have a Schwarz
/// parametrization here; S is represented by its extremal functions alone.
enum class ClassId { S, R, Starlike, Convex };

std::string_view to_string(ClassId id);
/// Accepts "s", "r", "star"/"starlike", "c"/"convex" (case-insensitive).
std::optional<ClassId> parse_class(std::string_view text);

/// (a2, a3, a4) of the class member generated by a Schwarz function with
/// initial coefficients c. Throws UnsupportedClassError for S.
ForwardCoeffs forward_map(ClassId cls, const SchwarzCoeffs& c);

/// (A2, A3, A4) of the inverse of that member, in closed form. Identical to
/// inverse_coeffs_closed_form(forward_map(cls, c)).
InverseCoeffs inverse_map(ClassId cls, const SchwarzCoeffs& c);

struct ExtremalEntry {
  ClassId cls;
  std::string label;
  std::string formula;
  ForwardCoeffs forward;
  InverseCoeffs inverse;
  /// Exact attained value per functional, evaluated on the inverse: signed for
  /// T21/T31, modulus for the symmetric determinants.
  std::vector<std::pair<FunctionalId, Rational>> attained;
  /// Schur parameters generating the entry, for the parametrized classes.
  std::optional<SchurParams> schur_witness;
};

/// Koebe, f1, f2 (under S and under Starlike), and the R and C extremals.
const std::vector<ExtremalEntry>& extremal_catalog();

}  // namespace utlab
