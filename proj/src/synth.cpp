#include "actdyn/synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace actdyn {

CollaborationNetwork karate_club() {
  static constexpr Edge kEdges[] = {
      {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
      {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
      {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
      {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
      {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
      {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
      {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
      {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
      {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
      {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
  };
  std::vector<std::string> users;
  for (int i = 0; i < 34; ++i) users.push_back(std::to_string(i));
  return CollaborationNetwork::from_index_edges(std::move(users), kEdges);
}

std::vector<double> random_initial_activity(const CollaborationNetwork& net, double lo, double hi,
                                            std::uint64_t seed) {
  if (!(lo >= 0.0) || !(lo < hi)) throw std::invalid_argument("random_initial_activity: need 0 <= lo < hi");
  PortableUniform rng(seed);
  std::vector<double> x(net.node_count());
  for (auto& v : x) v = rng.next(lo, hi);
  return x;
}

ActivitySeries scenario_series(const ScenarioSpec& spec, const CollaborationNetwork& net) {
  if (spec.n_weeks < 2) throw std::invalid_argument("scenario needs at least two weeks");
  if (!(spec.base_level > 0.0)) throw std::invalid_argument("scenario base level must be positive");
  if (net.node_count() == 0) throw std::invalid_argument("scenario needs a nonempty network");

  std::vector<double> aggregate(static_cast<std::size_t>(spec.n_weeks));
  PortableUniform rng(spec.seed);
  for (std::size_t k = 0; k < aggregate.size(); ++k) {
    const double kd = static_cast<double>(k);
    switch (spec.kind) {
      case ScenarioKind::Increasing:
        aggregate[k] = spec.base_level + spec.step * kd;
        break;
      case ScenarioKind::Decreasing:
        aggregate[k] = std::max(0.0, spec.base_level - spec.step * kd);
        break;
      case ScenarioKind::Variable:
        aggregate[k] = std::max(0.0, spec.base_level + rng.next(-spec.step, spec.step));
        break;
    }
  }

  std::vector<double> weight(net.node_count());
  double wsum = 0.0;
  for (std::size_t i = 0; i < weight.size(); ++i) {
    weight[i] = static_cast<double>(net.degree(i) + 1);
    wsum += weight[i];
  }

  ActivitySeries out;
  out.users = net.users();
  out.provenance = Provenance::Smoothed;
  const Day start{std::chrono::year{2020} / std::chrono::January / 6};
  for (std::size_t k = 0; k < aggregate.size(); ++k) {
    out.weeks.push_back(start + std::chrono::days{7 * static_cast<long>(k)});
    out.days_covered.push_back(7);
  }
  out.values.resize(out.users.size() * aggregate.size());
  for (std::size_t i = 0; i < weight.size(); ++i) {
    for (std::size_t k = 0; k < aggregate.size(); ++k) out.at(i, k) = aggregate[k] * weight[i] / wsum;
  }
  return out;
}

}  // namespace actdyn
