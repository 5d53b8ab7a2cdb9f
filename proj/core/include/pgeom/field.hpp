#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace pgeom {

/// A field element is stored by its code in [0, q). The base-p digits of the
/// code are the polynomial coefficients, least significant digit = constant term.
using Elem = std::uint8_t;

/**
 * GF(q) for prime powers q <= 16.
 *
 * Extension fields use one frozen modulus per order so that point and flat
 * indices are reproducible across runs:
 *
 *   GF(4)  x^2 + x + 1
 *   GF(8)  x^3 + x + 1
 *   GF(9)  x^2 + 2x + 2
 *   GF(16) x^4 + x + 1
 *
 * Addition is digit-wise mod p (XOR for p = 2); multiplication goes through
 * log/antilog tables built once at construction. Instances are immutable.
 */
class Field {
 public:
  static constexpr int kMaxOrder = 16;

  /// Throws Error(not_prime_power) or Error(unsupported) for q > 16.
  static Field make(int q);

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return q_; }

  /// Monic modulus, highest degree first (x^2 + 2x + 2 -> {1, 2, 2}); empty for prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a][b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a][neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws Error(division_by_zero) for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned e) const noexcept;

  /// Smallest code generating the multiplicative group.
  Elem generator() const noexcept { return generator_; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.q_ == b.q_; }

 private:
  Field() = default;

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  Elem generator_ = 0;
  std::array<std::array<Elem, kMaxOrder>, kMaxOrder> add_{};
  std::array<Elem, kMaxOrder> neg_{};
  std::array<Elem, 2 * kMaxOrder> exp_{};
  std::array<int, kMaxOrder> log_{};
};

/// Factors q = p^k; returns false when q is not a prime power.
bool prime_power(int q, int& p, int& k);

/// Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
/// Coefficients are highest degree first and the polynomial must be monic.
bool is_irreducible(int p, std::span<const int> monic);

}  // namespace pgeom
