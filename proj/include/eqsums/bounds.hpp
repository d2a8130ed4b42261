// Published upper-bound exponents for N_{c,d}(B), kept as exact rationals so
// boundary comparisons are decided by integer arithmetic, not rounding.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsums/exponents.hpp"

namespace eqsums {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("Frac: positive denominator required");
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return double(num) / double(den); }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Frac& a, const Frac& b) {
    return a.num * b.den < b.num * a.den;  // denominators stay tiny here
  }
  friend bool operator<=(const Frac& a, const Frac& b) { return a == b || a < b; }
};

inline Frac frac_max(const Frac& a, const Frac& b) { return a < b ? b : a; }

struct BoundEntry {
  std::string name;
  Frac exponent;
};

// Every applicable bound for (c,d); inapplicable ones are absent, not zeroed.
struct BoundCatalog {
  ExponentPair exponents;
  std::optional<Frac> theorem;          // max(11/4, 5/2 + 5/(3cd)), valid d >= 4
  std::optional<Frac> greaves;          // 17/6, valid c = 1
  std::optional<Frac> skinner_wooley;   // 8/3 + 1/(d-1), valid c = 1
  std::optional<Frac> wooley_23;        // 7/3, valid (c,d) = (2,3)
  std::optional<Frac> tsui_wooley_24;   // 36/13, valid (c,d) = (2,4)

  std::vector<BoundEntry> entries() const {
    std::vector<BoundEntry> out;
    if (theorem) out.push_back({"theorem", *theorem});
    if (greaves) out.push_back({"greaves", *greaves});
    if (skinner_wooley) out.push_back({"skinner_wooley", *skinner_wooley});
    if (wooley_23) out.push_back({"wooley_23", *wooley_23});
    if (tsui_wooley_24) out.push_back({"tsui_wooley_24", *tsui_wooley_24});
    return out;
  }

  std::optional<BoundEntry> smallest() const {
    std::optional<BoundEntry> best;
    for (const auto& e : entries())
      if (!best || e.exponent < best->exponent) best = e;
    return best;
  }
};

inline BoundCatalog bound_catalog(const ExponentPair& e) {
  BoundCatalog cat{e, {}, {}, {}, {}, {}};
  std::int64_t cd = std::int64_t(e.c) * e.d;
  if (e.d >= 4)
    cat.theorem = frac_max(Frac(11, 4), Frac(15 * cd + 10, 6 * cd));  // 5/2 + 5/(3cd)
  if (e.c == 1) {
    cat.greaves = Frac(17, 6);
    cat.skinner_wooley = Frac(8 * (std::int64_t(e.d) - 1) + 3, 3 * (std::int64_t(e.d) - 1));
  }
  if (e.c == 2 && e.d == 3) cat.wooley_23 = Frac(7, 3);
  if (e.c == 2 && e.d == 4) cat.tsui_wooley_24 = Frac(36, 13);
  return cat;
}

}  // namespace eqsums
