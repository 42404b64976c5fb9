#include "pertsum/models.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "pertsum/errors.hpp"

namespace pertsum {
namespace {

void validate(const BoxModelSpec& spec) {
  if (spec.n_levels == 0) throw Error(ErrorKind::InvalidArgument, "box model needs n_levels >= 1");
  if (!(spec.width > 0.0) || !std::isfinite(spec.width)) {
    throw Error(ErrorKind::InvalidArgument, "box width must be positive and finite");
  }
  if (!std::isfinite(spec.potential.parameter)) {
    throw Error(ErrorKind::NonFiniteValue, "potential parameter");
  }
}

}  // namespace

HermitianMatrix random_hermitian(std::uint64_t seed, std::size_t n, double scale) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::InvalidArgument, "scale must be > 0");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return std::generate_canonical<double, 53>(rng); };

  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = scale * (2.0 * uniform() - 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = scale * uniform();
      const double angle = 2.0 * std::numbers::pi * uniform();
      const Complex z = std::polar(r, angle);
      e[i * n + j] = z;
      e[j * n + i] = std::conj(z);
    }
  }
  return HermitianMatrix::from_entries(n, std::move(e));
}

double Potential::operator()(double x) const noexcept {
  switch (kind) {
    case PotentialKind::Constant: return parameter;
    case PotentialKind::Linear: return parameter * x;
    case PotentialKind::Quadratic: return parameter * x * x;
  }
  return 0.0;
}

Potential parse_potential(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "potential '" + std::string(text) + "' lacks ':'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view value = text.substr(colon + 1);

  Potential p;
  if (name == "const") {
    p.kind = PotentialKind::Constant;
  } else if (name == "linear") {
    p.kind = PotentialKind::Linear;
  } else if (name == "quadratic") {
    p.kind = PotentialKind::Quadratic;
  } else {
    throw Error(ErrorKind::ParseError, "unsupported potential '" + std::string(name) + "'");
  }
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p.parameter);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty() || !std::isfinite(p.parameter)) {
    throw Error(ErrorKind::ParseError, "bad potential parameter '" + std::string(value) + "'");
  }
  return p;
}

HermitianMatrix box_hamiltonian(const BoxModelSpec& spec) {
  validate(spec);
  std::vector<double> levels(spec.n_levels);
  const double unit = std::numbers::pi * std::numbers::pi / (2.0 * spec.width * spec.width);
  for (std::size_t k = 0; k < spec.n_levels; ++k) {
    const double n = static_cast<double>(k + 1);
    levels[k] = n * n * unit;
  }
  return HermitianMatrix::diagonal(levels);
}

HermitianMatrix box_potential_matrix(const BoxModelSpec& spec, std::size_t quadrature_points) {
  validate(spec);
  if (quadrature_points < 2 || quadrature_points % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "Simpson rule needs an even number of subintervals");
  }
  const std::size_t levels = spec.n_levels;
  const double L = spec.width;
  const double h = L / static_cast<double>(quadrature_points);

  // Simpson weights times V(x_k), computed once and reused for every pair.
  std::vector<double> weighted(quadrature_points + 1);
  std::vector<double> xs(quadrature_points + 1);
  for (std::size_t k = 0; k <= quadrature_points; ++k) {
    const double x = (k == quadrature_points) ? L : h * static_cast<double>(k);
    const double w = (k == 0 || k == quadrature_points) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    xs[k] = x;
    weighted[k] = w * spec.potential(x);
  }

  std::vector<std::vector<double>> modes(levels, std::vector<double>(quadrature_points + 1));
  for (std::size_t m = 0; m < levels; ++m) {
    const double kx = static_cast<double>(m + 1) * std::numbers::pi / L;
    for (std::size_t k = 0; k <= quadrature_points; ++k) modes[m][k] = std::sin(kx * xs[k]);
  }

  std::vector<Complex> e(levels * levels);
  const double prefactor = (2.0 / L) * (h / 3.0);
  for (std::size_t m = 0; m < levels; ++m)
    for (std::size_t n = m; n < levels; ++n) {
      double s = 0.0;
      for (std::size_t k = 0; k <= quadrature_points; ++k) s += weighted[k] * modes[m][k] * modes[n][k];
      e[m * levels + n] = prefactor * s;
      e[n * levels + m] = prefactor * s;
    }
  return HermitianMatrix::from_entries(levels, std::move(e));
}

}  // namespace pertsum
