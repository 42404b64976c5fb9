#pragma once

#include <cstdint>
#include <string_view>

#include "pertsum/numkernel.hpp"

namespace pertsum {

/// Seeded random Hermitian matrix with every |entry| <= scale.
///
/// Generator: std::mt19937_64(seed), consumed through
/// std::generate_canonical<double, 53> in row-major order over the upper
/// triangle. A diagonal entry draws one uniform u and is scale*(2u - 1); an
/// off-diagonal entry draws (r, t) and is scale*r*exp(2 pi i t). The lower
/// triangle is the conjugate mirror.
HermitianMatrix random_hermitian(std::uint64_t seed, std::size_t n, double scale);

enum class PotentialKind { Constant, Linear, Quadratic };

/// V(x) = V0, lambda*x or kappa*x^2 on [0, L].
struct Potential {
  PotentialKind kind = PotentialKind::Constant;
  double parameter = 0.0;

  double operator()(double x) const noexcept;
};

/// Parses "const:v", "linear:l" or "quadratic:k". Throws ParseError.
Potential parse_potential(std::string_view text);

/// Infinite square well of width L truncated to the lowest n_levels states,
/// in units hbar = m = 1.
struct BoxModelSpec {
  std::size_t n_levels = 1;
  double width = 1.0;
  Potential potential;
};

inline constexpr std::size_t kDefaultQuadraturePoints = 2048;

/// diag(n^2 pi^2 / (2 L^2)), n = 1..n_levels.
HermitianMatrix box_hamiltonian(const BoxModelSpec& spec);

/// <m|V|n> = (2/L) int_0^L sin(m pi x/L) V(x) sin(n pi x/L) dx by composite
/// Simpson over `quadrature_points` (even) subintervals.
HermitianMatrix box_potential_matrix(const BoxModelSpec& spec,
                                     std::size_t quadrature_points = kDefaultQuadraturePoints);

}  // namespace pertsum
