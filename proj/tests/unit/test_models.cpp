#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pertsum/errors.hpp"
#include "pertsum/models.hpp"
#include "test_support.hpp"

using namespace pertsum;
using pertsum::testing::box_position_element;
using pertsum::testing::midpoint_box_element;

TEST_CASE("random_hermitian is Hermitian, bounded and deterministic") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const double scale = 0.5 + seed;
    const HermitianMatrix m = random_hermitian(seed, n, scale);
    CHECK(m.dim() == n);
    CHECK(check_hermitian(n, m.entries()));
    CHECK(m.max_abs_entry() <= scale);
    CHECK(random_hermitian(seed, n, scale) == m);
  }
  const HermitianMatrix one = random_hermitian(7, 1, 2.0);
  CHECK(one(0, 0).imag() == 0.0);
  CHECK(std::abs(one(0, 0).real()) <= 2.0);
  CHECK_FALSE(random_hermitian(1, 4, 1.0) == random_hermitian(2, 4, 1.0));
}

TEST_CASE("box_hamiltonian levels") {
  const HermitianMatrix h3 = box_hamiltonian({3, std::numbers::pi, {}});
  CHECK(h3(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h3(1, 1).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(h3(2, 2).real() == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(h3(0, 1) == Complex(0.0));
  CHECK(box_hamiltonian({1, std::numbers::pi, {}})(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));

  const HermitianMatrix h = box_hamiltonian({12, 0.37, {}});
  for (std::size_t n = 0; n + 1 < 12; ++n) CHECK(h(n, n).real() < h(n + 1, n + 1).real());
}

TEST_CASE("constant potential reproduces V0 * I") {
  const double v0 = -2.75;
  const HermitianMatrix m = box_potential_matrix({8, 1.7, {PotentialKind::Constant, v0}});
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(std::abs(m(i, j) - (i == j ? v0 : 0.0)) <= 1e-10);
}

TEST_CASE("linear potential matches analytic position elements") {
  const double L = std::numbers::pi;
  const HermitianMatrix m = box_potential_matrix({6, L, {PotentialKind::Linear, 1.0}});
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      const double analytic = box_position_element(i, j, L);
      CHECK(std::abs(m(i - 1, j - 1).real() - analytic) <= 1e-10);
      CHECK(m(i - 1, j - 1).imag() == 0.0);
    }
  CHECK(m(0, 0).real() == doctest::Approx(L / 2.0).epsilon(1e-12));
  CHECK(m(0, 1).real() == doctest::Approx(-16.0 / (9.0 * std::numbers::pi)).epsilon(1e-10));
  CHECK(m(0, 1).real() == doctest::Approx(-0.56588).epsilon(1e-5));
}

TEST_CASE("quadratic potential agrees with an independent midpoint rule") {
  const double L = 2.0;
  const double kappa = 0.8;
  const HermitianMatrix m = box_potential_matrix({4, L, {PotentialKind::Quadratic, kappa}});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const double ref = midpoint_box_element(i, j, L, [&](double x) { return kappa * x * x; });
      CHECK(std::abs(m(i - 1, j - 1).real() - ref) <= 1e-9);
    }
}

TEST_CASE("doubling quadrature points changes entries by <= 1e-10") {
  for (auto kind : {PotentialKind::Constant, PotentialKind::Linear, PotentialKind::Quadratic}) {
    const BoxModelSpec spec{8, 3.0, {kind, 1.3}};
    const HermitianMatrix coarse = box_potential_matrix(spec, 2048);
    const HermitianMatrix fine = box_potential_matrix(spec, 4096);
    CHECK(pertsum::testing::max_abs_diff(coarse.entries(), fine.entries()) <= 1e-10);
  }
}

TEST_CASE("parse_potential") {
  CHECK(parse_potential("const:1").kind == PotentialKind::Constant);
  CHECK(parse_potential("linear:-0.5").parameter == -0.5);
  CHECK(parse_potential("quadratic:2e-1").parameter == 0.2);
  for (const char* bad : {"cubic:1", "linear", "linear:", "linear:abc", "const:1x", "quadratic:nan"}) {
    try {
      parse_potential(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}

TEST_CASE("invalid box specs") {
  CHECK_THROWS_AS(box_hamiltonian({0, 1.0, {}}), Error);
  CHECK_THROWS_AS(box_hamiltonian({2, -1.0, {}}), Error);
  CHECK_THROWS_AS(box_potential_matrix({2, 1.0, {}}, 7), Error);
}
