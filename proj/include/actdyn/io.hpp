#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "actdyn/dynamics.hpp"
#include "actdyn/estimate.hpp"
#include "actdyn/graph.hpp"
#include "actdyn/preprocess.hpp"

namespace actdyn::io {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// ISO-8601 date or date-time (optional fraction and Z / +hh:mm offset), or
/// integer epoch seconds. Returns UTC seconds.
std::int64_t parse_timestamp(std::string_view text);

std::string format_date(Day d);
Day parse_date(std::string_view text);

/// CSV with header `timestamp,user,kind,artifact,parent`. Errors carry line numbers.
std::vector<ContributionEvent> read_events_csv(std::istream& in);

/// One `userA<TAB>userB` line per edge, endpoints in node order.
void write_edge_list(std::ostream& out, const CollaborationNetwork& net);

/// Reads an edge list. `extra_users` adds nodes without edges.
CollaborationNetwork read_edge_list(std::istream& in, const std::vector<std::string>& extra_users = {});

/// JSON sidecar {n, m, isolated_node_count, isolated_users[, kappa1]}.
std::string network_sidecar_json(const CollaborationNetwork& net, const double* kappa1 = nullptr);
std::vector<std::string> sidecar_isolated_users(std::istream& in);

/// Loads `<edges>` and, if present, its sidecar `<edges>.json`.
CollaborationNetwork load_network(const std::filesystem::path& edges);
void save_network(const std::filesystem::path& edges, const CollaborationNetwork& net,
                  const double* kappa1 = nullptr);

/// Long CSV `user,week_start,value`; missing (user, week) cells read as 0.
void write_activity_csv(std::ostream& out, const ActivitySeries& series);
ActivitySeries read_activity_csv(std::istream& in);

/// CSV `target_week,ratio,converged,iterations,objective`. Target weeks are
/// labelled by the Monday following the fitting window.
void write_ratio_csv(std::ostream& out, const RatioSeries& ratios, const std::vector<Day>& weeks);

struct RatioRow {
  Day target_week{};
  double ratio = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  double objective = 0.0;
};
std::vector<RatioRow> read_ratio_csv(std::istream& in);

/// CSV `step,tau,aggregate_activity`.
void write_trace_csv(std::ostream& out, const SimulationTrace& trace);
/// CSV `step,tau,<user>...` with one column per node.
void write_trace_wide_csv(std::ostream& out, const SimulationTrace& trace,
                          const CollaborationNetwork& net);

/// Flat `key = value` file; `#` starts a comment.
std::map<std::string, std::string> read_config(std::istream& in);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace actdyn::io
