#include "actdyn/metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "actdyn/error.hpp"

namespace actdyn {

double normalized_ratio_sd(std::span<const double> ratios, double kappa1) {
  if (ratios.size() < 2) throw InputError("normalized ratio sd needs at least two ratios");
  if (!(kappa1 > 0.0)) throw InputError("kappa1 must be positive");
  const double n = static_cast<double>(ratios.size());
  const double mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) / n;
  double ss = 0.0;
  for (double r : ratios) ss += (r - mean) * (r - mean);
  return std::sqrt(ss / n) / kappa1;
}

double normalized_ratio_sd(const RatioSeries& ratios, double kappa1) {
  const auto values = ratios.ratios();
  return normalized_ratio_sd(values, kappa1);
}

MomentumReport momentum(double rho, double activity_mean_weekly, double activity_last_month) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw NumericalError("zero variance: mass undefined (rho must be positive and finite)");
  }
  MomentumReport r;
  r.rho = rho;
  r.system_mass = 1.0 / rho;
  r.activity_mean_weekly = activity_mean_weekly;
  r.activity_last_month = activity_last_month;
  r.momentum_average = r.system_mass * activity_mean_weekly;
  r.momentum_last_month = r.system_mass * activity_last_month;
  return r;
}

MomentumReport momentum(double rho, std::span<const double> weekly_activity, std::size_t last_weeks) {
  if (weekly_activity.empty()) throw InputError("momentum needs a nonempty activity series");
  const double total = std::accumulate(weekly_activity.begin(), weekly_activity.end(), 0.0);
  const std::size_t k = std::min(last_weeks, weekly_activity.size());
  const double last = std::accumulate(weekly_activity.end() - static_cast<std::ptrdiff_t>(k),
                                      weekly_activity.end(), 0.0);
  return momentum(rho, total / static_cast<double>(weekly_activity.size()), last);
}

double rmse_per_user_week(const std::vector<std::vector<double>>& empirical,
                          const std::vector<std::vector<double>>& predicted) {
  if (empirical.size() != predicted.size() || empirical.empty()) {
    throw std::invalid_argument("rmse: week counts differ or are zero");
  }
  double ss = 0.0;
  std::size_t count = 0;
  for (std::size_t w = 0; w < empirical.size(); ++w) {
    if (empirical[w].size() != predicted[w].size() || empirical[w].size() != empirical[0].size()) {
      throw std::invalid_argument("rmse: user counts differ");
    }
    for (std::size_t i = 0; i < empirical[w].size(); ++i) {
      const double e = empirical[w][i] - predicted[w][i];
      ss += e * e;
    }
    count += empirical[w].size();
  }
  if (count == 0) throw std::invalid_argument("rmse: no users");
  return std::sqrt(ss / static_cast<double>(count));
}

}  // namespace actdyn
