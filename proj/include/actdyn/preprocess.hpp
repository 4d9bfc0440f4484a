#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "actdyn/graph.hpp"

namespace actdyn {

using Day = std::chrono::sys_days;

enum class Provenance { Raw, Smoothed };

/// Dense per-user daily series over [first_day, first_day + n_days).
struct DailySeries {
  std::vector<std::string> users;
  Day first_day{};
  std::size_t n_days = 0;
  std::vector<double> values;  // users.size() x n_days, row-major by user
  Provenance provenance = Provenance::Raw;

  double at(std::size_t u, std::size_t d) const { return values[u * n_days + d]; }
  std::span<const double> row(std::size_t u) const { return {values.data() + u * n_days, n_days}; }
};

/// Per-user weekly activity over consecutive ISO weeks (labelled by their Monday).
struct ActivitySeries {
  std::vector<std::string> users;
  std::vector<Day> weeks;
  std::vector<int> days_covered;  // days of data inside each week, 7 for interior weeks
  std::vector<double> values;     // users.size() x weeks.size(), row-major by user
  Provenance provenance = Provenance::Smoothed;

  std::size_t n_users() const { return users.size(); }
  std::size_t n_weeks() const { return weeks.size(); }
  double at(std::size_t u, std::size_t w) const { return values[u * weeks.size() + w]; }
  double& at(std::size_t u, std::size_t w) { return values[u * weeks.size() + w]; }
  double user_total(std::size_t u) const;
  std::vector<double> weekly_totals() const;

  /// Throws InputError if dimensions, week spacing or values are invalid.
  void validate() const;
};

struct PreprocessConfig {
  int rolling_window_days = 7;
  double min_total_activity = 1.0;
  int window_weeks = 52;
  int lead_weeks = 3;
};

struct TrimResult {
  ActivitySeries series;
  std::vector<std::string> warnings;
};

Day day_of(std::int64_t utc_seconds);
/// Monday of the ISO week containing `d`.
Day iso_week_start(Day d);

/// Event counts per user per UTC day, dense between the first and last event day.
DailySeries bin_daily(std::span<const ContributionEvent> events);

/// Trailing mean over `window_days`; the first days average over the history available.
DailySeries rolling_mean(const DailySeries& daily, int window_days);

/// Sums daily values per ISO calendar week.
ActivitySeries bin_weekly(const DailySeries& daily);

/// Drops incomplete boundary weeks, keeps the last window_weeks + lead_weeks
/// weeks, then removes users whose total activity is below min_total_activity.
TrimResult filter_and_trim(const ActivitySeries& series, const PreprocessConfig& cfg);

/// bin_daily -> rolling_mean -> bin_weekly -> filter_and_trim.
TrimResult preprocess_events(std::span<const ContributionEvent> events,
                             const PreprocessConfig& cfg);

/// Weekly states in network index order: result[w][i] is the activity of node i
/// in week w. Network users absent from the series get zero activity.
std::vector<std::vector<double>> align_to_network(const ActivitySeries& series,
                                                  const CollaborationNetwork& net);

}  // namespace actdyn
