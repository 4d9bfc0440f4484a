#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "actdyn/graph.hpp"
#include "actdyn/preprocess.hpp"

namespace actdyn {

/// Seeded uniform doubles in [0, 1): std::mt19937_64 output shifted right by
/// 11 bits and scaled by 2^-53. Bit-identical on every conforming platform.
class PortableUniform {
 public:
  explicit PortableUniform(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

/// Zachary's karate club: 34 members labelled "0".."33", 78 edges.
CollaborationNetwork karate_club();

std::vector<double> random_initial_activity(const CollaborationNetwork& net, double lo = 0.0,
                                            double hi = 0.1, std::uint64_t seed = 1);

enum class ScenarioKind { Increasing, Decreasing, Variable };

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Increasing;
  int n_weeks = 13;
  std::uint64_t seed = 1;
  double base_level = 30.0;
  double step = 2.0;  // weekly change, or fluctuation half-width for Variable
};

/// Weekly series whose aggregate follows the scenario trend, split over users
/// in proportion to degree + 1. Weeks start on Monday 2020-01-06.
ActivitySeries scenario_series(const ScenarioSpec& spec, const CollaborationNetwork& net);

}  // namespace actdyn
