#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "utlab/coeffs.hpp"

namespace utlab {

/// Tolerance on |gamma_k| <= 1 accepted by schur_to_coeffs.
inline constexpr double kSchurTolerance = 1e-12;

/// Three Schur parameters in the closed unit disk. Every reachable first-three
/// coefficient triple (c1, c2, c3) of a Schwarz function is the image of some
/// SchurParams under schur_to_coeffs.
struct SchurParams {
  Complex gamma0;
  Complex gamma1;
  Complex gamma2;
};

/// c1 = g0, c2 = (1-|g0|^2) g1, c3 = (1-|g0|^2)((1-|g1|^2) g2 - conj(g0) g1^2).
/// Throws DomainError if any |gamma_k| > 1 + kSchurTolerance.
SchwarzCoeffs schur_to_coeffs(const SchurParams& g);

/// One boundary-biased draw, fully determined by (seed, index). Each gamma is
/// uniform on the unit circle with probability kBoundaryWeight, otherwise
/// uniform in the disk.
SchurParams sample_param(std::uint64_t seed, std::uint64_t index);
std::vector<SchurParams> sample_params(std::uint64_t seed, std::size_t count);

inline constexpr double kBoundaryWeight = 0.25;

enum class PSRegion { D4, D6, D7 };

std::string_view to_string(PSRegion region);

/// First of D4, D6, D7 containing (mu, nu), all taken as closed sets:
///   D4: |mu| >= 1/2, nu <= -(2/3)(|mu| + 1)
///   D6: |mu| >= 4,   nu >= (2/3)(|mu| - 1)
///   D7: 2 <= |mu| <= 4, nu >= (mu^2 + 8) / 12
std::optional<PSRegion> region_member(double mu, double nu);

/// |c3 + mu c1 c2 + nu c1^3|; bounded by |nu| whenever (mu, nu) is in a region.
double ps_functional(const SchwarzCoeffs& c, double mu, double nu);

}  // namespace utlab
