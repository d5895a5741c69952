#pragma once

#include <complex>

namespace utlab {

using Complex = std::complex<double>;

/// First three Taylor coefficients (c1, c2, c3) of a Schwarz function
/// omega(z) = c1 z + c2 z^2 + c3 z^3 + ...
struct SchwarzCoeffs {
  Complex c1;
  Complex c2;
  Complex c3;
};

/// Coefficients (a2, a3, a4) of a normalized f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...
struct ForwardCoeffs {
  Complex a2;
  Complex a3;
  Complex a4;
};

/// Coefficients (A2, A3, A4) of the inverse f^{-1}(w) = w + A2 w^2 + A3 w^3 + A4 w^4 + ...
struct InverseCoeffs {
  Complex a2;
  Complex a3;
  Complex a4;
};

}  // namespace utlab
