#include <cmath>
#include <numeric>
#include <random>

#include "actdyn/dynamics.hpp"
#include "actdyn/spectral.hpp"
#include "actdyn/synth.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace actdyn;

TEST_CASE("peer influence anchors and shape") {
  CHECK(peer_influence(0.0) == 0.0);
  CHECK(peer_influence(5.0) == doctest::Approx(5.0 / std::sqrt(26.0)));
  CHECK(peer_influence(5.0) == doctest::Approx(0.9806).epsilon(1e-4));
  CHECK(peer_influence(0.1) == doctest::Approx(0.0995).epsilon(1e-3));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 200; ++k) {
    const double x = u(rng);
    CHECK(peer_influence(-x) == -peer_influence(x));
    CHECK(std::abs(peer_influence(x)) < 1.0);
    CHECK(peer_influence(x + 0.5) > peer_influence(x));
  }
}

TEST_CASE("influence growth rate") {
  CHECK(influence_growth_rate(0.0, {2.0, 1.0}) == 2.0);
  CHECK(influence_growth_rate(1e12, {2.0, 1.0}) < 1e-20);

  // central difference of g(a) = q a / sqrt(a_c^2 + a^2)
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uq(0.1, 10.0), ua(-20.0, 20.0);
  for (int k = 0; k < 100; ++k) {
    PeerInfluenceParams p{uq(rng), uq(rng)};
    const double a = ua(rng);
    const double h = 1e-5 * std::max(1.0, std::abs(a));
    const double fd = (influence(a + h, p) - influence(a - h, p)) / (2 * h);
    CHECK(influence_growth_rate(a, p) == doctest::Approx(fd).epsilon(1e-6));
    CHECK(influence_growth_rate(0.0, p) == p.mu());
  }
}

TEST_CASE("dimensionless conversions") {
  PeerInfluenceParams p{3.0, 2.0};
  CHECK(p.mu() == 1.5);
  CHECK(to_relative_activity(4.0, p) == 2.0);
  CHECK(to_dimensionless_time(2.0, p) == 3.0);
  CHECK(ratio_from_rates(3.0, p) == 2.0);
}

TEST_CASE("derivative examples") {
  auto k2 = testing::complete(2);
  auto d = derivative(k2, ActivityState{{1.0, 0.0}, 0.0}, 1.0);
  CHECK(d[0] == doctest::Approx(-1.0));
  CHECK(d[1] == doctest::Approx(1.0 / std::sqrt(2.0)));

  auto karate = karate_club();
  auto zero = derivative(karate, ActivityState{std::vector<double>(34, 0.0), 0.0}, 3.0);
  for (double v : zero) CHECK(v == 0.0);

  auto single = testing::from_edges(1, {});
  CHECK(derivative(single, ActivityState{{2.5}, 0.0}, 0.4)[0] == doctest::Approx(-1.0));
}

TEST_CASE("euler integrate basics") {
  auto karate = karate_club();
  DynamicsParams p{2.0, 0.01, 1.0};
  auto t = euler_integrate(karate, std::vector<double>(34, 0.0), p, 5);
  REQUIRE(t.states.size() == 6);
  for (const auto& s : t.states)
    for (double v : s.x) CHECK(v == 0.0);
  CHECK(t.states.back().tau == doctest::Approx(5.0));

  auto x0 = random_initial_activity(karate, 0.0, 0.1, 9);
  auto t2 = euler_integrate(karate, x0, p, 3);
  for (std::size_t k = 0; k < t2.states.size(); ++k) {
    CHECK(t2.aggregate[k] == std::accumulate(t2.states[k].x.begin(), t2.states[k].x.end(), 0.0));
  }
  CHECK_THROWS_AS(euler_integrate(karate, x0, p, 0), std::invalid_argument);
  CHECK_THROWS_AS(euler_integrate(karate, x0, DynamicsParams{1.0, 0.5, 0.1}, 1), std::invalid_argument);
}

TEST_CASE("euler first order convergence on isolated decay") {
  auto single = testing::from_edges(1, {});
  for (double r : {0.5, 1.0, 2.0}) {
    auto err = [&](double dtau) {
      auto t = euler_integrate(single, std::vector<double>{1.0}, DynamicsParams{r, dtau, 1.0}, 5);
      return std::abs(t.states.back().x[0] - std::exp(-5.0 * r));
    };
    const double ratio = err(0.01) / err(0.005);
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
  }
}

TEST_CASE("divergence and negativity are reported") {
  // ratio * dtau > 2 makes the Euler map expansive around zero
  auto single = testing::from_edges(1, {});
  auto t = euler_integrate(single, std::vector<double>{1.0}, DynamicsParams{300.0, 0.01, 1.0}, 10);
  CHECK(t.diverged);
  CHECK(t.states.size() < 11);

  auto osc = euler_integrate(single, std::vector<double>{1.0}, DynamicsParams{150.0, 0.01, 0.01}, 3);
  CHECK_FALSE(osc.diverged);
  CHECK(osc.negativity_events >= 1);
  CHECK(osc.states[1].x[0] < 0.0);  // not clamped
}

TEST_CASE("stability classification") {
  CHECK(classify_stability(6.726, 7.0).stability == Stability::Stable);
  CHECK(classify_stability(6.726, 6.0).stability == Stability::Unstable);
  auto b = classify_stability(3.0, 3.0);
  CHECK(b.stability == Stability::Unstable);
  CHECK(b.marginal);
  CHECK_FALSE(classify_stability(6.726, 6.0).marginal);
}

TEST_CASE("active fixed point") {
  auto karate = karate_club();
  const double k1 = largest_eigenvalue(karate).kappa1;
  std::vector<double> init(34, 0.05);

  auto active = find_active_fixed_point(karate, 0.5 * k1, init, 1e-8);
  REQUIRE(active.found);
  for (double v : active.x) CHECK(v > 0.0);
  std::vector<double> d(34);
  derivative(karate, active.x, 0.5 * k1, d);
  for (double v : d) CHECK(std::abs(v) < 1e-8);

  CHECK_FALSE(find_active_fixed_point(karate, 2.0 * k1, init, 1e-8).found);
  auto single = testing::from_edges(1, {});
  CHECK_FALSE(find_active_fixed_point(single, 0.3, std::vector<double>{1.0}, 1e-8).found);
}

TEST_CASE("linearized coefficient") {
  CHECK(linearized_coefficient_decay(2.0, 2.0, 7.0, 3.5) == 3.5);
  CHECK(linearized_coefficient_decay(1.0, 2.0, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(linearized_coefficient_decay(4.0, 2.0, 0.0, 1.5) == 1.5);
}

TEST_CASE("small perturbations follow the dominant linear mode") {
  auto karate = karate_club();
  auto spec = largest_eigenvalue(karate);
  const double vmax = *std::max_element(spec.eigenvector.begin(), spec.eigenvector.end());
  std::vector<double> x0;
  for (double v : spec.eigenvector) x0.push_back(1e-6 * v / vmax);
  for (double ratio : {spec.kappa1 - 1.0, spec.kappa1 + 1.0}) {
    auto t = euler_integrate(karate, x0, DynamicsParams{ratio, 0.01, 1.0}, 1);
    const double rate = std::log(t.aggregate[1] / t.aggregate[0]);
    const double predicted = std::log(linearized_coefficient_decay(spec.kappa1, ratio, 1.0, 1.0));
    CHECK(std::abs(rate - predicted) <= 0.05 * std::abs(predicted));
  }
}

TEST_CASE("stability dichotomy on random connected graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng() % 46;
    auto net = testing::random_connected(n, 0.1, rng);
    const double k1 = largest_eigenvalue(net).kappa1;
    auto x0 = testing::random_vector(n, rng, 1e-6, 0.1);
    auto above = euler_integrate(net, x0, DynamicsParams{1.05 * k1, 0.01, 1.0}, 200);
    auto below = euler_integrate(net, x0, DynamicsParams{0.95 * k1, 0.01, 1.0}, 200);
    CHECK(above.aggregate.back() < 1e-6);
    CHECK(below.aggregate.back() > 1e-3);
  }
}
