#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "actdyn/spectral.hpp"
#include "actdyn/synth.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace actdyn;

TEST_CASE("largest eigenvalue closed forms") {
  CHECK(largest_eigenvalue(testing::complete(2)).kappa1 == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k : {1, 2, 4, 9, 30}) {
    CHECK(largest_eigenvalue(testing::star(k)).kappa1 == doctest::Approx(std::sqrt(double(k))).epsilon(1e-10));
  }
  CHECK(largest_eigenvalue(testing::complete(6)).kappa1 == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(largest_eigenvalue(testing::ring(10)).kappa1 == doctest::Approx(2.0).epsilon(1e-10));
  auto empty = testing::from_edges(5, {});
  CHECK(largest_eigenvalue(empty).kappa1 == 0.0);
}

TEST_CASE("karate club spectral radius") {
  auto r = largest_eigenvalue(karate_club());
  CHECK(r.kappa1 == doctest::Approx(6.726).epsilon(0.001 / 6.726));
  CHECK(r.residual <= 1e-10);
  for (double v : r.eigenvector) CHECK(v > 0.0);
}

TEST_CASE("disconnected graph: max over components") {
  // K4 (kappa 3) plus a star with 4 leaves (kappa 2) plus an isolated node
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) e.emplace_back(i, j);
  for (std::size_t j = 5; j <= 8; ++j) e.emplace_back(4, j);
  auto net = testing::from_edges(10, e);
  CHECK(largest_eigenvalue(net).kappa1 == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("non-convergence reports last residual") {
  try {
    largest_eigenvalue(karate_club(), 1e-10, 2);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_residual() > 1e-10);
  }
}

TEST_CASE("full spectrum examples") {
  auto tri = full_spectrum_small(testing::complete(3));
  REQUIRE(tri.size() == 3);
  CHECK(tri[0] == doctest::Approx(2.0));
  CHECK(tri[1] == doctest::Approx(-1.0));
  CHECK(tri[2] == doctest::Approx(-1.0));
  auto k2 = full_spectrum_small(testing::complete(2));
  CHECK(k2[0] == doctest::Approx(1.0));
  CHECK(k2[1] == doctest::Approx(-1.0));
  // characteristic polynomial of P3: -l^3 + 2l = 0
  auto p3 = full_spectrum_small(testing::path(3));
  CHECK(p3[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(p3[1] == doctest::Approx(0.0));
  CHECK(p3[2] == doctest::Approx(-std::sqrt(2.0)));
  CHECK_THROWS_AS(full_spectrum_small(testing::path(20), 10), std::invalid_argument);
}

TEST_CASE("spectrum properties on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 99;
    const double p = 0.02 + 0.2 * double(rng() % 100) / 100.0;
    auto edges = testing::random_edges(n, p, rng);
    auto net = testing::from_edges(n, edges);
    auto spectrum = full_spectrum_small(net);
    CHECK(std::accumulate(spectrum.begin(), spectrum.end(), 0.0) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
    CHECK(std::abs(largest_eigenvalue(net).kappa1 - spectrum.front()) <= 1e-6);

    // adding an edge never lowers kappa1
    const std::size_t i = rng() % n, j = rng() % n;
    if (i != j) {
      edges.emplace_back(i, j);
      auto bigger = testing::from_edges(n, edges);
      CHECK(largest_eigenvalue(bigger).kappa1 >= largest_eigenvalue(net).kappa1 - 1e-9);
    }
  }
}
