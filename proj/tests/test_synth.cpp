#include <numeric>

#include "actdyn/spectral.hpp"
#include "actdyn/synth.hpp"
#include "doctest.h"

using namespace actdyn;

TEST_CASE("karate club fixture") {
  auto net = karate_club();
  CHECK(net.node_count() == 34);
  CHECK(net.edge_count() == 78);
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < 34; ++i) {
    degree_sum += net.degree(i);
    CHECK_FALSE(net.has_edge(i, i));
    for (auto j : net.neighbors(i)) CHECK(net.has_edge(j, i));
  }
  CHECK(degree_sum == 156);
  CHECK(net.degree(0) == 16);
  CHECK(net.degree(33) == 17);
  CHECK(largest_eigenvalue(net).kappa1 == doctest::Approx(6.726).epsilon(0.001 / 6.726));
}

TEST_CASE("portable generator is the documented mt19937_64 mapping") {
  // first output of std::mt19937_64 with the default seed is specified by the standard
  PortableUniform u(5489u);
  CHECK(u.next() == double(14514284786278117030ull >> 11) * 0x1.0p-53);
}

TEST_CASE("random initial activity") {
  auto net = karate_club();
  auto a = random_initial_activity(net, 0.0, 0.1, 3);
  CHECK(a == random_initial_activity(net, 0.0, 0.1, 3));
  CHECK(a != random_initial_activity(net, 0.0, 0.1, 4));
  for (double v : a) {
    CHECK(v >= 0.0);
    CHECK(v < 0.1);
  }
  for (double v : random_initial_activity(net, 0.5, 0.5 + 1e-9, 1)) CHECK(v == doctest::Approx(0.5));
  CHECK_THROWS_AS(random_initial_activity(net, 0.2, 0.1, 1), std::invalid_argument);
}

TEST_CASE("scenario series") {
  auto net = karate_club();
  ScenarioSpec inc{ScenarioKind::Increasing, 5, 1, 10.0, 2.0};
  auto s = scenario_series(inc, net);
  s.validate();
  auto totals = s.weekly_totals();
  const std::vector<double> expected{10, 12, 14, 16, 18};
  for (std::size_t k = 0; k < 5; ++k) CHECK(totals[k] == doctest::Approx(expected[k]));
  // hub 33 (degree 17) gets 18 / (156 + 34) of each week
  CHECK(s.at(33, 0) == doctest::Approx(10.0 * 18.0 / 190.0));

  ScenarioSpec dec{ScenarioKind::Decreasing, 8, 1, 5.0, 2.0};
  auto d = scenario_series(dec, net).weekly_totals();
  CHECK(d[2] == doctest::Approx(1.0));
  for (std::size_t k = 3; k < 8; ++k) CHECK(d[k] == 0.0);

  ScenarioSpec var{ScenarioKind::Variable, 20, 9, 10.0, 3.0};
  auto v1 = scenario_series(var, net), v2 = scenario_series(var, net);
  CHECK(v1.values == v2.values);
  for (double t : v1.weekly_totals()) {
    CHECK(t >= 7.0);
    CHECK(t <= 13.0);
  }
  for (double x : v1.values) CHECK(x >= 0.0);
}
