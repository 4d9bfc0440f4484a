#include <algorithm>
#include <random>
#include <set>

#include "actdyn/error.hpp"
#include "actdyn/graph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace actdyn;

namespace {

ContributionEvent post(std::int64_t t, std::string user, std::string artifact) {
  return {t, std::move(user), EventKind::Post, std::move(artifact), ""};
}

ContributionEvent reply(std::int64_t t, std::string user, std::string artifact, std::string parent) {
  return {t, std::move(user), EventKind::Reply, std::move(artifact), std::move(parent)};
}

ContributionEvent edit(std::int64_t t, std::string user, std::string article) {
  return {t, std::move(user), EventKind::Reply, std::move(article), ""};
}

std::set<std::pair<std::string, std::string>> named_edges(const CollaborationNetwork& net) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [i, j] : net.edges()) {
    auto a = net.user(i), b = net.user(j);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

void check_invariants(const CollaborationNetwork& net) {
  std::size_t adjacency_sum = 0;
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    CHECK_FALSE(net.has_edge(i, i));
    for (std::size_t j : net.neighbors(i)) CHECK(net.has_edge(j, i));
    adjacency_sum += net.degree(i);
  }
  CHECK(adjacency_sum == 2 * net.edge_count());
}

}  // namespace

TEST_CASE("qa network: single interaction") {
  std::vector<ContributionEvent> ev{post(0, "A", "Q1"), reply(1, "B", "A1", "Q1")};
  auto net = build_qa_network(ev);
  CHECK(net.node_count() == 2);
  CHECK(net.edge_count() == 1);
}

TEST_CASE("qa network: self reply is dropped but the user is kept") {
  std::vector<ContributionEvent> ev{post(0, "A", "Q1"), reply(1, "A", "A1", "Q1")};
  auto net = build_qa_network(ev);
  CHECK(net.node_count() == 1);
  CHECK(net.edge_count() == 0);
  CHECK(net.isolated_node_count() == 1);
}

TEST_CASE("qa network: comment on an answer links to the answer author") {
  std::vector<ContributionEvent> ev{post(0, "A", "Q1"), reply(1, "B", "A1", "Q1"), reply(2, "C", "A2", "Q1"),
                                    reply(3, "C", "C1", "A1")};
  auto net = build_qa_network(ev);
  CHECK(net.edge_count() == 3);
  CHECK(named_edges(net) == std::set<std::pair<std::string, std::string>>{{"A", "B"}, {"A", "C"}, {"B", "C"}});
}

TEST_CASE("qa network: dangling reference is rejected with the event") {
  std::vector<ContributionEvent> ev{post(0, "A", "Q1"), reply(1, "B", "A1", "Q9")};
  CHECK_THROWS_WITH_AS(build_qa_network(ev), doctest::Contains("Q9"), InputError);
}

TEST_CASE("qa network: duplicate artifact ids are rejected") {
  std::vector<ContributionEvent> ev{post(0, "A", "Q1"), post(1, "B", "Q1")};
  CHECK_THROWS_AS(build_qa_network(ev), InputError);
}

TEST_CASE("wiki network: consecutive distinct editors") {
  SUBCASE("A, B, A on one article") {
    std::vector<ContributionEvent> ev{edit(1, "A", "X"), edit(2, "B", "X"), edit(3, "A", "X")};
    auto net = build_wiki_network(ev);
    CHECK(net.edge_count() == 1);
    CHECK(named_edges(net) == std::set<std::pair<std::string, std::string>>{{"A", "B"}});
  }
  SUBCASE("single editor") {
    std::vector<ContributionEvent> ev{edit(1, "A", "X"), edit(2, "A", "X"), edit(3, "A", "X")};
    auto net = build_wiki_network(ev);
    CHECK(net.node_count() == 1);
    CHECK(net.edge_count() == 0);
  }
  SUBCASE("two articles") {
    std::vector<ContributionEvent> ev{edit(1, "A", "X"), edit(1, "B", "Y"), edit(2, "B", "X"), edit(3, "C", "Y")};
    auto net = build_wiki_network(ev);
    CHECK(named_edges(net) == std::set<std::pair<std::string, std::string>>{{"A", "B"}, {"B", "C"}});
  }
  SUBCASE("sorted by time, ties kept in input order") {
    // chronological order A(1) B(2) C(2) -> A-B, B-C; input order is scrambled
    std::vector<ContributionEvent> ev{edit(2, "B", "X"), edit(1, "A", "X"), edit(2, "C", "X")};
    auto net = build_wiki_network(ev);
    CHECK(named_edges(net) == std::set<std::pair<std::string, std::string>>{{"A", "B"}, {"B", "C"}});
  }
}

TEST_CASE("apply_adjacency examples") {
  CHECK(apply_adjacency(testing::complete(2), std::vector<double>{1, 0}) == std::vector<double>{0, 1});
  CHECK(apply_adjacency(testing::complete(3), std::vector<double>{1, 1, 1}) == std::vector<double>{2, 2, 2});
  CHECK(apply_adjacency(testing::star(4), std::vector<double>(5, 1.0)) == std::vector<double>{4, 1, 1, 1, 1});
  CHECK_THROWS_AS(apply_adjacency(testing::star(4), std::vector<double>(3, 1.0)), std::invalid_argument);
}

TEST_CASE("apply_adjacency is linear and symmetric") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + trial;
    auto net = testing::from_edges(n, testing::random_edges(n, 0.2, rng));
    auto v = testing::random_vector(n, rng), w = testing::random_vector(n, rng);
    CHECK(testing::dot(apply_adjacency(net, v), w) ==
          doctest::Approx(testing::dot(v, apply_adjacency(net, w))).epsilon(1e-12));
    std::vector<double> combo(n);
    for (std::size_t i = 0; i < n; ++i) combo[i] = 2.0 * v[i] - 3.0 * w[i];
    auto av = apply_adjacency(net, v), aw = apply_adjacency(net, w), ac = apply_adjacency(net, combo);
    for (std::size_t i = 0; i < n; ++i) CHECK(ac[i] == doctest::Approx(2.0 * av[i] - 3.0 * aw[i]));
  }
}

TEST_CASE("fuzzed logs: invariants and order insensitivity") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> user_pick(0, 9);
    std::vector<ContributionEvent> ev;
    std::vector<std::string> artifacts;
    for (int k = 0; k < 60; ++k) {
      const std::string user = "user" + std::to_string(user_pick(rng));
      const std::string id = "a" + std::to_string(k);
      if (artifacts.empty() || rng() % 4 == 0) {
        ev.push_back(post(k, user, id));
      } else {
        ev.push_back(reply(k, user, id, artifacts[rng() % artifacts.size()]));
      }
      artifacts.push_back(id);
    }
    auto qa = build_qa_network(ev);
    check_invariants(qa);
    auto wiki_ev = ev;
    for (auto& e : wiki_ev) e.artifact = "page" + std::to_string(rng() % 5);
    check_invariants(build_wiki_network(wiki_ev));

    auto shuffled = ev;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto qa2 = build_qa_network(shuffled);
    CHECK(named_edges(qa) == named_edges(qa2));
    CHECK(qa.users() == qa2.users());
  }
}

TEST_CASE("network keeps isolated nodes and rejects duplicate ids") {
  auto net = CollaborationNetwork::from_named_edges({"z", "solo"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "a"}, {"a", "a"}});
  CHECK(net.node_count() == 4);
  CHECK(net.edge_count() == 1);
  CHECK(net.isolated_node_count() == 2);
  CHECK(net.index_of("solo").has_value());
  CHECK_FALSE(net.index_of("nobody").has_value());
  CHECK_THROWS_AS(CollaborationNetwork::from_index_edges({"a", "a"}, {}), InputError);
}
