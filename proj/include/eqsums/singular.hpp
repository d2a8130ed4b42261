// Heuristic singular-locus candidate enumeration for X_{c,d}. At a singular
// point with two non-zero coordinates the Jacobian criterion forces the
// 2(d-c)-th powers of all non-zero coordinates to coincide, so up to
// projective scaling every candidate is: each coordinate 0 or a 2(d-c)-th
// root of unity, first non-zero coordinate = 1. Each pattern is tested
// numerically (both forms + the fifteen 2x2 Jacobian minors); the report is
// floating-point and labeled heuristic.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqsums/exponents.hpp"

namespace eqsums {

struct SingularCandidate {
  // per coordinate: nullopt = 0, otherwise root exponent t, value exp(2*pi*i*t/M)
  std::array<std::optional<std::uint32_t>, 6> pattern{};
  double residual_c = 0;  // |G_c(xi)|
  double residual_d = 0;  // |G_d(xi)|
  double max_minor = 0;   // largest |2x2 Jacobian minor|
};

struct SingularReport {
  ExponentPair exponents;
  double tolerance = 0;
  bool heuristic = true;  // floating-point check, not a certification
  std::uint32_t root_order = 0;          // M = 2(d-c)
  std::uint64_t patterns_checked = 0;
  std::uint64_t pattern_bound = 0;       // (1+M)^6
  std::vector<SingularCandidate> candidates;
};

inline SingularReport singular_candidates(const ExponentPair& e, double tolerance = 1e-9) {
  if (!(tolerance > 0) || tolerance > 1e-6)
    throw std::invalid_argument("singular_candidates: tolerance must be in (0, 1e-6]");

  const std::uint32_t M = 2 * (e.d - e.c);
  const double pi = 3.14159265358979323846;
  const std::array<int, 6> signs{1, 1, 1, -1, -1, -1};

  SingularReport report{e, tolerance, true, M, 0, 1, {}};
  for (int i = 0; i < 6; ++i) report.pattern_bound *= (1 + M);

  auto root_val = [&](std::uint32_t t, std::uint32_t power) {
    double a = 2.0 * pi * double(std::uint64_t(t) * power % M) / double(M);
    return std::complex<double>(std::cos(a), std::sin(a));
  };

  // supports with the first support coordinate normalized to exponent 0
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    std::vector<int> support;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) support.push_back(i);
    const std::size_t free_coords = support.size() - 1;
    std::vector<std::uint32_t> exps(free_coords, 0);
    for (;;) {
      report.patterns_checked += 1;
      std::array<std::optional<std::uint32_t>, 6> pattern{};
      pattern[support[0]] = 0;
      for (std::size_t i = 0; i < free_coords; ++i) pattern[support[i + 1]] = exps[i];

      std::complex<double> gc = 0, gd = 0;
      std::array<std::complex<double>, 6> jc{}, jd{};
      for (int i = 0; i < 6; ++i) {
        if (!pattern[i]) continue;
        std::uint32_t t = *pattern[i];
        gc += double(signs[i]) * root_val(t, e.c);
        gd += double(signs[i]) * root_val(t, e.d);
        jc[i] = double(signs[i] * int(e.c)) * root_val(t, e.c - 1);
        jd[i] = double(signs[i] * int(e.d)) * root_val(t, e.d - 1);
      }
      if (std::abs(gc) <= tolerance && std::abs(gd) <= tolerance) {
        double max_minor = 0;
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j)
            max_minor = std::max(max_minor, std::abs(jc[i] * jd[j] - jc[j] * jd[i]));
        if (max_minor <= tolerance)
          report.candidates.push_back({pattern, std::abs(gc), std::abs(gd), max_minor});
      }

      std::size_t pos = 0;
      while (pos < free_coords) {
        if (++exps[pos] < M) break;
        exps[pos] = 0;
        ++pos;
      }
      if (pos == free_coords) break;
    }
  }
  return report;
}

}  // namespace eqsums
