#include "actdyn/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "actdyn/error.hpp"

namespace actdyn {

CollaborationNetwork CollaborationNetwork::from_index_edges(std::vector<std::string> users,
                                                            std::span<const Edge> edges) {
  CollaborationNetwork net;
  const std::size_t n = users.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!net.index_.emplace(users[i], i).second) {
      throw InputError("duplicate user id '" + users[i] + "'");
    }
  }
  net.users_ = std::move(users);

  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (a == b) continue;
    directed.emplace_back(a, b);
    directed.emplace_back(b, a);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  net.offsets_.assign(n + 1, 0);
  for (const auto& e : directed) ++net.offsets_[e.first + 1];
  std::partial_sum(net.offsets_.begin(), net.offsets_.end(), net.offsets_.begin());
  net.targets_.reserve(directed.size());
  for (const auto& e : directed) net.targets_.push_back(e.second);
  return net;
}

CollaborationNetwork CollaborationNetwork::from_named_edges(
    std::vector<std::string> users,
    std::span<const std::pair<std::string, std::string>> edges) {
  for (const auto& [a, b] : edges) {
    users.push_back(a);
    users.push_back(b);
  }
  std::sort(users.begin(), users.end());
  users.erase(std::unique(users.begin(), users.end()), users.end());

  std::unordered_map<std::string_view, std::size_t> idx;
  for (std::size_t i = 0; i < users.size(); ++i) idx.emplace(users[i], i);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) indexed.emplace_back(idx.at(a), idx.at(b));
  return from_index_edges(std::move(users), indexed);
}

std::size_t CollaborationNetwork::max_degree() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < node_count(); ++i) d = std::max(d, degree(i));
  return d;
}

std::size_t CollaborationNetwork::isolated_node_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < node_count(); ++i) c += degree(i) == 0;
  return c;
}

std::optional<std::size_t> CollaborationNetwork::index_of(std::string_view user) const {
  auto it = index_.find(std::string(user));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> CollaborationNetwork::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < node_count(); ++i) {
    for (std::size_t j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

bool CollaborationNetwork::has_edge(std::size_t i, std::size_t j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

void apply_adjacency(const CollaborationNetwork& net, std::span<const double> v,
                     std::span<double> out) {
  const std::size_t n = net.node_count();
  if (v.size() != n || out.size() != n) {
    throw std::invalid_argument("apply_adjacency: vector length does not match node count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j : net.neighbors(i)) s += v[j];
    out[i] = s;
  }
}

std::vector<double> apply_adjacency(const CollaborationNetwork& net,
                                    std::span<const double> v) {
  std::vector<double> out(net.node_count());
  apply_adjacency(net, v, out);
  return out;
}

namespace {

std::string describe(const ContributionEvent& e, std::size_t pos) {
  std::ostringstream os;
  os << "event #" << pos << " (timestamp=" << e.timestamp << ", user=" << e.user
     << ", kind=" << (e.kind == EventKind::Post ? "post" : "reply")
     << ", artifact=" << e.artifact << ", parent=" << e.parent << ")";
  return os.str();
}

std::vector<std::string> all_users(std::span<const ContributionEvent> events) {
  std::vector<std::string> users;
  users.reserve(events.size());
  for (const auto& e : events) users.push_back(e.user);
  return users;
}

}  // namespace

CollaborationNetwork build_qa_network(std::span<const ContributionEvent> events) {
  std::unordered_map<std::string, std::string> author;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    if (e.user.empty()) throw InputError("empty user in " + describe(e, k));
    if (e.artifact.empty()) {
      if (e.kind == EventKind::Post) throw InputError("post without artifact id in " + describe(e, k));
      continue;
    }
    auto [it, inserted] = author.emplace(e.artifact, e.user);
    if (!inserted) throw InputError("duplicate artifact id in " + describe(e, k));
  }

  std::vector<std::pair<std::string, std::string>> links;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    if (e.kind != EventKind::Reply) continue;
    auto it = author.find(e.parent);
    if (e.parent.empty() || it == author.end()) {
      throw InputError("reply references unknown artifact '" + e.parent + "' in " + describe(e, k));
    }
    links.emplace_back(e.user, it->second);
  }
  return CollaborationNetwork::from_named_edges(all_users(events), links);
}

CollaborationNetwork build_wiki_network(std::span<const ContributionEvent> events) {
  // article -> positions of its events, in input order
  std::map<std::string, std::vector<std::size_t>> by_article;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    if (e.user.empty()) throw InputError("empty user in " + describe(e, k));
    if (e.artifact.empty()) throw InputError("edit without article id in " + describe(e, k));
    by_article[e.artifact].push_back(k);
  }

  std::vector<std::pair<std::string, std::string>> links;
  for (auto& [article, positions] : by_article) {
    std::stable_sort(positions.begin(), positions.end(), [&](std::size_t a, std::size_t b) {
      return events[a].timestamp < events[b].timestamp;
    });
    for (std::size_t k = 1; k < positions.size(); ++k) {
      const auto& prev = events[positions[k - 1]].user;
      const auto& cur = events[positions[k]].user;
      if (prev != cur) links.emplace_back(prev, cur);
    }
  }
  return CollaborationNetwork::from_named_edges(all_users(events), links);
}

}  // namespace actdyn
