// Growth-exponent experiments: run the counting engine over a B schedule,
// fit log N against log B by ordinary least squares over the fit window
// (default: the ceil(n/2) rows with the largest B — small-B rows are lattice
// noise), and report plot-ready rows.
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqsums/counting.hpp"
#include "eqsums/exponents.hpp"
#include "eqsums/nat.hpp"

namespace eqsums {

struct ScalingRow {
  std::uint32_t B = 0;
  Nat nontrivial;
  std::optional<Nat> primitive;
  double seconds = 0;
  std::optional<double> ratio_b3logb;  // N / (B^3 ln B), absent at B = 1
};

struct FitWindow {
  std::uint32_t B_min = 0;
  std::uint32_t B_max = 0;
};

struct ScalingTable {
  ExponentPair exponents;
  std::vector<ScalingRow> rows;
  std::optional<double> fitted_exponent;
  FitWindow fit_window;
};

// OLS slope of y against x; nullopt with fewer than two points.
inline std::optional<double> ols_slope(const std::vector<double>& x,
                                       const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double xm = 0, ym = 0;
  for (std::size_t i = 0; i < x.size(); ++i) { xm += x[i]; ym += y[i]; }
  xm /= double(x.size());
  ym /= double(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - xm) * (y[i] - ym);
    sxx += (x[i] - xm) * (x[i] - xm);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

inline ScalingTable scaling_experiment(CountingEngine& engine, const ExponentPair& e,
                                       const std::vector<std::uint32_t>& schedule,
                                       bool with_primitive = true) {
  if (schedule.empty())
    throw std::invalid_argument("scaling_experiment: empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("scaling_experiment: schedule must be strictly increasing");

  ScalingTable table{e, {}, std::nullopt, {}};
  for (std::uint32_t B : schedule) {
    auto t0 = std::chrono::steady_clock::now();
    CountReport rep = engine.count_report(e, B, with_primitive);
    auto t1 = std::chrono::steady_clock::now();
    ScalingRow row;
    row.B = B;
    row.nontrivial = rep.nontrivial_ordered;
    row.primitive = rep.primitive_nontrivial;
    row.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (B >= 2) {
      double n = rep.nontrivial_ordered.convert_to<double>();
      row.ratio_b3logb = n / (double(B) * B * B * std::log(double(B)));
    }
    table.rows.push_back(std::move(row));
  }

  // fit window: the ceil(n/2) largest-B rows of the schedule
  std::size_t start = schedule.size() - (schedule.size() + 1) / 2;
  table.fit_window = {schedule[start], schedule.back()};

  std::vector<double> xs, ys;
  for (const auto& row : table.rows) {
    if (row.B < table.fit_window.B_min || row.B > table.fit_window.B_max) continue;
    if (row.nontrivial == 0) continue;
    xs.push_back(std::log(double(row.B)));
    ys.push_back(std::log(row.nontrivial.convert_to<double>()));
  }
  table.fitted_exponent = ols_slope(xs, ys);
  return table;
}

}  // namespace eqsums
