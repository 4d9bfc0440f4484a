#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace actdyn {

enum class EventKind { Post, Reply };

/// One row of a contribution log.
///
/// For Q&A logs `artifact` is the id of the content the event created (question,
/// answer or comment) and `parent` is the id of the content a reply directly
/// responds to. For wiki logs `artifact` is the article id; posts create the
/// article and replies are subsequent edits, `parent` is unused.
struct ContributionEvent {
  std::int64_t timestamp = 0;  // UTC seconds
  std::string user;
  EventKind kind = EventKind::Post;
  std::string artifact;
  std::string parent;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph over named users with CSR adjacency.
///
/// Immutable after construction. Self-loops are dropped and parallel edges
/// collapsed by the factories; nodes without edges are kept.
class CollaborationNetwork {
 public:
  CollaborationNetwork() = default;

  /// Nodes are `users` in the given order; edges index into it.
  static CollaborationNetwork from_index_edges(std::vector<std::string> users,
                                               std::span<const Edge> edges);

  /// Nodes are the union of `users` and edge endpoints, indexed in sorted id order.
  static CollaborationNetwork from_named_edges(
      std::vector<std::string> users,
      std::span<const std::pair<std::string, std::string>> edges);

  std::size_t node_count() const { return users_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::size_t max_degree() const;
  std::size_t isolated_node_count() const;

  std::span<const std::size_t> neighbors(std::size_t i) const {
    return {targets_.data() + offsets_[i], degree(i)};
  }

  const std::string& user(std::size_t i) const { return users_[i]; }
  const std::vector<std::string>& users() const { return users_; }
  std::optional<std::size_t> index_of(std::string_view user) const;

  /// Edge list with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;
  bool has_edge(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::string> users_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> targets_;
};

/// out[i] = sum of v[j] over neighbours j of i. `out` must not alias `v`.
void apply_adjacency(const CollaborationNetwork& net, std::span<const double> v,
                     std::span<double> out);
std::vector<double> apply_adjacency(const CollaborationNetwork& net,
                                    std::span<const double> v);

/// Links the author of every reply to the author of the artifact it directly
/// responds to. Input order does not matter.
CollaborationNetwork build_qa_network(std::span<const ContributionEvent> events);

/// Links chronologically consecutive distinct editors of each article. Equal
/// timestamps keep their input order.
CollaborationNetwork build_wiki_network(std::span<const ContributionEvent> events);

}  // namespace actdyn
