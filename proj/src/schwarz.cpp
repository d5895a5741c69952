#include "utlab/schwarz.hpp"

#include <cmath>
#include <numbers>

#include "utlab/errors.hpp"
#include "utlab/random.hpp"

namespace utlab {

namespace {

void check_disk(Complex g, const char* name) {
  if (!(std::abs(g) <= 1.0 + kSchurTolerance)) {
    throw DomainError(std::string("Schur parameter ") + name + " lies outside the closed unit disk");
  }
}

Complex draw_gamma(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pick = unit(rng);
  const double u = unit(rng);
  const double theta = 2.0 * std::numbers::pi * unit(rng);
  const double r = pick < kBoundaryWeight ? 1.0 : std::sqrt(u);
  return std::polar(r, theta);
}

}  // namespace

SchwarzCoeffs schur_to_coeffs(const SchurParams& g) {
  check_disk(g.gamma0, "gamma0");
  check_disk(g.gamma1, "gamma1");
  check_disk(g.gamma2, "gamma2");
  // Rounding can push 1 - |g|^2 slightly negative on the boundary.
  const double w0 = std::max(0.0, 1.0 - std::norm(g.gamma0));
  const double w1 = std::max(0.0, 1.0 - std::norm(g.gamma1));
  return {g.gamma0, w0 * g.gamma1, w0 * (w1 * g.gamma2 - std::conj(g.gamma0) * g.gamma1 * g.gamma1)};
}

SchurParams sample_param(std::uint64_t seed, std::uint64_t index) {
  auto rng = derived_engine(seed, index);
  SchurParams p;
  p.gamma0 = draw_gamma(rng);
  p.gamma1 = draw_gamma(rng);
  p.gamma2 = draw_gamma(rng);
  return p;
}

std::vector<SchurParams> sample_params(std::uint64_t seed, std::size_t count) {
  std::vector<SchurParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_param(seed, i));
  return out;
}

std::string_view to_string(PSRegion region) {
  switch (region) {
    case PSRegion::D4: return "D4";
    case PSRegion::D6: return "D6";
    case PSRegion::D7: return "D7";
  }
  return "?";
}

std::optional<PSRegion> region_member(double mu, double nu) {
  const double m = std::abs(mu);
  if (m >= 0.5 && nu <= -(2.0 / 3.0) * (m + 1.0)) return PSRegion::D4;
  if (m >= 4.0 && nu >= (2.0 / 3.0) * (m - 1.0)) return PSRegion::D6;
  if (m >= 2.0 && m <= 4.0 && nu >= (mu * mu + 8.0) / 12.0) return PSRegion::D7;
  return std::nullopt;
}

double ps_functional(const SchwarzCoeffs& c, double mu, double nu) {
  return std::abs(c.c3 + mu * c.c1 * c.c2 + nu * c.c1 * c.c1 * c.c1);
}

}  // namespace utlab
