#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pgeom/numeric.hpp"

namespace pgeom {

/// Decimal digit cap above which bound values are kept symbolic.
inline constexpr std::size_t kDefaultDigitCap = 1'000'000;

/**
 * Result of a bound evaluation.
 *
 *  - exact: `value` holds the integer.
 *  - tower_symbolic: the value is T_height(arg) and would exceed the digit cap.
 *  - over_cap: the value exceeds the digit cap and has no tower shape; only
 *    produced by the recursive evaluator, whose trace shows where it overflowed.
 */
struct BoundValue {
  enum class Kind { exact, tower_symbolic, over_cap };

  Kind kind = Kind::exact;
  BigInt value;
  std::uint64_t height = 0;
  BigInt arg;

  static BoundValue exact(BigInt v) { return BoundValue{Kind::exact, std::move(v), 0, 0}; }
  static BoundValue tower(std::uint64_t h, BigInt s) { return BoundValue{Kind::tower_symbolic, 0, h, std::move(s)}; }
  static BoundValue over_cap() { return BoundValue{Kind::over_cap, 0, 0, 0}; }

  bool is_exact() const noexcept { return kind == Kind::exact; }

  /// "12345", "T_2(65536)" or ">10^cap".
  std::string describe() const;
};

/// T_0(s) = s, T_i(s) = T_{i-1}(2^s).
BoundValue tower(std::uint64_t c, const BigInt& s, std::size_t digit_cap = kDefaultDigitCap);

/// 2^(m-2) * ceil(1 - log2 eps) for m >= 2, 0 < eps <= 1.
BigInt r_mdhj_binary(const BigInt& m, const Rational& eps);

/// Same value, but kept symbolic (over_cap) when it would exceed the digit cap.
BoundValue r_mdhj_binary_capped(const BigInt& m, const Rational& eps, std::size_t digit_cap = kDefaultDigitCap);

/// d = ceil(log2 ceil(2 - log2 eps)).
long binary_tower_offset(const Rational& eps);

/// T_c(m + d) for m > c >= 1, 0 < eps <= 1.
BoundValue r_main2_binary(const BigInt& m, std::uint64_t c, const Rational& eps,
                          std::size_t digit_cap = kDefaultDigitCap);

/**
 * Least t >= r such that q^(1-c) (q^r - 1) <= (eps/2)(q^n - q^r) for every n > t.
 * The left side is constant and the right side increases with n, so this is
 * the least t >= r with the inequality true at n = t + 1. Works for
 * astronomically large r without forming q^r.
 */
BigInt smallest_t(int q, int c, const BigInt& r, const Rational& eps);

/// Value of the c = 1 bound R(m, q, eps); injected because only q = 2 has a closed form.
using BaseBound = std::function<BoundValue(const BigInt& m, int q, const Rational& eps)>;

/// r_mdhj_binary as a BaseBound (requires q = 2).
BaseBound binary_base(std::size_t digit_cap = kDefaultDigitCap);

struct RecursionLevel {
  std::uint64_t c = 0;
  BigInt m;
  Rational eps;
  BoundValue r;       // base(m - c + 1, q, eps / 2); for c = 1 the base value itself
  BigInt t;           // smallest_t(q, c, r, eps); unset for c = 1
  BoundValue result;  // value returned by this level
};

struct RecursiveBound {
  BoundValue value;
  std::vector<RecursionLevel> trace;  // outermost level first
};

/**
 * R(m, q, c, eps): base(m, q, eps) when c = 1, otherwise
 * max(t, R(r, q, c - 1, q^(2-c) - q^(1-c))) with r = base(m - c + 1, q, eps/2)
 * and t = smallest_t(q, c, r, eps).
 *
 * Throws Error(invalid_epsilon) if an epsilon is not positive and
 * Error(invalid_argument) if a level leaves the range m > c >= 1.
 */
RecursiveBound r_main2_recursive(const BigInt& m, int q, std::uint64_t c, const Rational& eps, const BaseBound& base);

}  // namespace pgeom
