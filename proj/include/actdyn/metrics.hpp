#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "actdyn/estimate.hpp"

namespace actdyn {

struct MomentumReport {
  double rho = 0.0;
  double system_mass = 0.0;           // 1 / rho
  double activity_mean_weekly = 0.0;  // posts + replies per week
  double activity_last_month = 0.0;   // posts + replies in the final four weeks
  double momentum_average = 0.0;
  double momentum_last_month = 0.0;
};

/// Population standard deviation of the ratios divided by kappa1.
double normalized_ratio_sd(std::span<const double> ratios, double kappa1);
double normalized_ratio_sd(const RatioSeries& ratios, double kappa1);

/// Mass and momenta from already aggregated activity figures.
MomentumReport momentum(double rho, double activity_mean_weekly, double activity_last_month);

/// Mass and momenta from a weekly activity series; "last month" is the final
/// `last_weeks` weeks.
MomentumReport momentum(double rho, std::span<const double> weekly_activity,
                        std::size_t last_weeks = 4);

/// Root mean squared error per user and week. Both arguments are indexed
/// [week][user] and must have identical shapes.
double rmse_per_user_week(const std::vector<std::vector<double>>& empirical,
                          const std::vector<std::vector<double>>& predicted);

}  // namespace actdyn
