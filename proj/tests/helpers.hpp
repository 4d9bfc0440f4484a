#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "actdyn/graph.hpp"

// Small graph families used only by the tests.
namespace testing {

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back("u" + std::to_string(i));
  return u;
}

inline actdyn::CollaborationNetwork from_edges(std::size_t n, const std::vector<actdyn::Edge>& e) {
  return actdyn::CollaborationNetwork::from_index_edges(names(n), e);
}

inline actdyn::CollaborationNetwork path(std::size_t n) {
  std::vector<actdyn::Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

inline actdyn::CollaborationNetwork star(std::size_t leaves) {
  std::vector<actdyn::Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_edges(leaves + 1, e);
}

inline actdyn::CollaborationNetwork complete(std::size_t n) {
  std::vector<actdyn::Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

inline actdyn::CollaborationNetwork ring(std::size_t n) {
  std::vector<actdyn::Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

/// Erdos-Renyi G(n, p) edge list.
inline std::vector<actdyn::Edge> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<actdyn::Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return e;
}

/// Connected random graph: a random spanning tree plus G(n, p) edges.
inline actdyn::CollaborationNetwork random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  auto e = random_edges(n, p, rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    e.emplace_back(pick(rng), i);
  }
  return from_edges(n, e);
}

inline std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace testing
