// Roots of unity as integer exponents in a cyclic group: the element with
// numerator n and order k is exp(i*pi*n/k), a 2k-th root of unity. All plane
// bookkeeping stays in this exact exponent arithmetic; complex values appear
// only in the heuristic singular-locus check.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace eqsums {

struct RootOfUnity {
  std::uint32_t numerator = 0;  // in [0, 2*order)
  std::uint32_t order = 1;      // value = exp(i*pi*numerator/order)

  RootOfUnity() = default;
  RootOfUnity(std::uint32_t num, std::uint32_t ord) : numerator(num), order(ord) {
    if (ord == 0) throw std::invalid_argument("RootOfUnity: order must be >= 1");
    if (num >= 2 * ord) throw std::invalid_argument("RootOfUnity: numerator out of range");
  }

  bool is_one() const { return numerator == 0; }
  bool is_minus_one() const { return numerator == order; }

  RootOfUnity pow(std::uint64_t e) const {
    return RootOfUnity(std::uint32_t((std::uint64_t(numerator) * e) % (2 * order)), order);
  }

  // this * other, same order required.
  RootOfUnity times(const RootOfUnity& o) const {
    if (order != o.order) throw std::invalid_argument("RootOfUnity::times: order mismatch");
    return RootOfUnity((numerator + o.numerator) % (2 * order), order);
  }

  // zeta^k == -1, i.e. k*numerator == order (mod 2*order).
  bool kth_power_is_minus_one(std::uint64_t k) const {
    return (std::uint64_t(numerator) * k) % (2 * order) == order;
  }
  bool kth_power_is_one(std::uint64_t k) const {
    return (std::uint64_t(numerator) * k) % (2 * order) == 0;
  }

  // Equality as complex numbers, across representations with different orders.
  bool same_value(const RootOfUnity& o) const {
    std::uint64_t lhs = std::uint64_t(numerator) * o.order;
    std::uint64_t rhs = std::uint64_t(o.numerator) * order;
    return lhs % (2ull * order * o.order) == rhs % (2ull * order * o.order);
  }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  std::complex<double> value() const {
    const double pi = 3.14159265358979323846;
    double a = pi * double(numerator) / double(order);
    return {std::cos(a), std::sin(a)};
  }
};

}  // namespace eqsums
