#include "actdyn/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "actdyn/error.hpp"

namespace actdyn {

using std::chrono::days;

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

}  // namespace

Day day_of(std::int64_t utc_seconds) {
  // floor division so pre-1970 timestamps land on the right day
  std::int64_t d = utc_seconds / kSecondsPerDay;
  if (utc_seconds % kSecondsPerDay < 0) --d;
  return Day{days{d}};
}

Day iso_week_start(Day d) {
  const std::chrono::weekday wd{d};
  return d - days{wd.iso_encoding() - 1};
}

double ActivitySeries::user_total(std::size_t u) const {
  const auto* first = values.data() + u * n_weeks();
  return std::accumulate(first, first + n_weeks(), 0.0);
}

std::vector<double> ActivitySeries::weekly_totals() const {
  std::vector<double> totals(n_weeks(), 0.0);
  for (std::size_t u = 0; u < n_users(); ++u) {
    for (std::size_t w = 0; w < n_weeks(); ++w) totals[w] += at(u, w);
  }
  return totals;
}

void ActivitySeries::validate() const {
  if (values.size() != users.size() * weeks.size()) {
    throw InputError("activity series: value matrix does not match users x weeks");
  }
  if (!days_covered.empty() && days_covered.size() != weeks.size()) {
    throw InputError("activity series: coverage length does not match weeks");
  }
  for (std::size_t w = 0; w < weeks.size(); ++w) {
    if (iso_week_start(weeks[w]) != weeks[w]) throw InputError("activity series: week label is not a Monday");
    if (w > 0 && weeks[w] - weeks[w - 1] != days{7}) {
      throw InputError("activity series: weeks are not consecutive");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) throw InputError("activity series: values must be finite and nonnegative");
  }
}

DailySeries bin_daily(std::span<const ContributionEvent> events) {
  if (events.empty()) throw InputError("no events");
  std::map<std::string, std::size_t> user_index;
  Day lo = day_of(events.front().timestamp), hi = lo;
  for (const auto& e : events) {
    user_index.emplace(e.user, 0);
    const Day d = day_of(e.timestamp);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  DailySeries out;
  out.first_day = lo;
  out.n_days = static_cast<std::size_t>((hi - lo).count()) + 1;
  std::size_t k = 0;
  for (auto& [user, idx] : user_index) {
    idx = k++;
    out.users.push_back(user);
  }
  out.values.assign(out.users.size() * out.n_days, 0.0);
  for (const auto& e : events) {
    const auto d = static_cast<std::size_t>((day_of(e.timestamp) - lo).count());
    out.values[user_index[e.user] * out.n_days + d] += 1.0;
  }
  return out;
}

DailySeries rolling_mean(const DailySeries& daily, int window_days) {
  if (window_days < 1) throw std::invalid_argument("rolling_mean: window must be at least one day");
  DailySeries out = daily;
  out.provenance = Provenance::Smoothed;
  const auto w = static_cast<std::size_t>(window_days);
  for (std::size_t u = 0; u < daily.users.size(); ++u) {
    auto in = daily.row(u);
    for (std::size_t d = 0; d < daily.n_days; ++d) {
      const std::size_t lo = d + 1 >= w ? d + 1 - w : 0;
      double sum = 0.0;
      for (std::size_t k = lo; k <= d; ++k) sum += in[k];
      out.values[u * daily.n_days + d] = sum / static_cast<double>(d + 1 - lo);
    }
  }
  return out;
}

ActivitySeries bin_weekly(const DailySeries& daily) {
  ActivitySeries out;
  out.users = daily.users;
  out.provenance = daily.provenance;
  if (daily.n_days == 0) return out;
  const Day first = iso_week_start(daily.first_day);
  const Day last = iso_week_start(daily.first_day + days{static_cast<long>(daily.n_days) - 1});
  const std::size_t n_weeks = static_cast<std::size_t>((last - first).count() / 7) + 1;
  for (std::size_t w = 0; w < n_weeks; ++w) out.weeks.push_back(first + days{7 * static_cast<long>(w)});
  out.days_covered.assign(n_weeks, 0);
  out.values.assign(out.users.size() * n_weeks, 0.0);
  for (std::size_t d = 0; d < daily.n_days; ++d) {
    const auto w = static_cast<std::size_t>((daily.first_day + days{static_cast<long>(d)} - first).count() / 7);
    ++out.days_covered[w];
    for (std::size_t u = 0; u < out.users.size(); ++u) out.at(u, w) += daily.at(u, d);
  }
  return out;
}

TrimResult filter_and_trim(const ActivitySeries& series, const PreprocessConfig& cfg) {
  if (cfg.window_weeks < 1 || cfg.lead_weeks < 0 || cfg.rolling_window_days < 1) {
    throw std::invalid_argument("filter_and_trim: invalid configuration");
  }
  TrimResult res;
  std::size_t begin = 0, end = series.n_weeks();
  auto coverage = [&](std::size_t w) { return series.days_covered.empty() ? 7 : series.days_covered[w]; };
  if (end > begin && coverage(begin) < 7) ++begin;
  if (end > begin && coverage(end - 1) < 7) --end;

  const auto wanted = static_cast<std::size_t>(cfg.window_weeks + cfg.lead_weeks);
  if (end - begin > wanted) {
    begin = end - wanted;
  } else if (end - begin < wanted) {
    res.warnings.push_back("dataset has " + std::to_string(end - begin) + " complete weeks, fewer than the " +
                           std::to_string(wanted) + " requested; keeping all of them");
  }

  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < series.n_users(); ++u) {
    double total = 0.0;
    for (std::size_t w = begin; w < end; ++w) total += series.at(u, w);
    if (total >= cfg.min_total_activity) keep.push_back(u);
  }
  if (keep.empty() || begin == end) throw InputError("no activity left after filtering: empty dataset");

  auto& out = res.series;
  out.provenance = series.provenance;
  out.weeks.assign(series.weeks.begin() + static_cast<std::ptrdiff_t>(begin),
                   series.weeks.begin() + static_cast<std::ptrdiff_t>(end));
  for (std::size_t w = begin; w < end; ++w) out.days_covered.push_back(coverage(w));
  for (std::size_t u : keep) {
    out.users.push_back(series.users[u]);
    for (std::size_t w = begin; w < end; ++w) out.values.push_back(series.at(u, w));
  }
  return res;
}

TrimResult preprocess_events(std::span<const ContributionEvent> events, const PreprocessConfig& cfg) {
  return filter_and_trim(bin_weekly(rolling_mean(bin_daily(events), cfg.rolling_window_days)), cfg);
}

std::vector<std::vector<double>> align_to_network(const ActivitySeries& series,
                                                  const CollaborationNetwork& net) {
  std::vector<std::vector<double>> states(series.n_weeks(), std::vector<double>(net.node_count(), 0.0));
  for (std::size_t u = 0; u < series.n_users(); ++u) {
    auto idx = net.index_of(series.users[u]);
    if (!idx) throw InputError("user '" + series.users[u] + "' in activity series is not in the network");
    for (std::size_t w = 0; w < series.n_weeks(); ++w) states[w][*idx] = series.at(u, w);
  }
  return states;
}

}  // namespace actdyn
