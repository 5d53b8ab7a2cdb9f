#include "pgeom/bounds.hpp"

#include <string>

#include "pgeom/error.hpp"

namespace pgeom {
namespace {

unsigned long to_ulong(const BigInt& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw Error(ErrorCode::unsupported, std::string(what) + " is too large to evaluate");
  return x.get_ui();
}

// Whether 2^e has at most `cap` decimal digits. 8^cap < 10^cap < 16^cap decides
// everything outside [3 cap, 4 cap); inside that window the power is formed.
bool pow2_fits(const BigInt& e, std::size_t cap) {
  const BigInt lo = BigInt(static_cast<unsigned long>(cap)) * 3;
  const BigInt hi = BigInt(static_cast<unsigned long>(cap)) * 4;
  if (e <= lo) return true;
  if (e >= hi) return false;
  return decimal_digits(big_pow(2, e.get_ui())) <= cap;
}

BigInt shifted(const BigInt& x, unsigned long bits) {
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), x.get_mpz_t(), bits);
  return out;
}

void require_unit_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw Error(ErrorCode::invalid_epsilon, "epsilon must lie in (0, 1], got " + format_rational(eps));
}

}  // namespace

std::string BoundValue::describe() const {
  switch (kind) {
    case Kind::exact: return value.get_str();
    case Kind::tower_symbolic: return "T_" + std::to_string(height) + "(" + arg.get_str() + ")";
    case Kind::over_cap: return ">10^cap";
  }
  return {};
}

BoundValue tower(std::uint64_t c, const BigInt& s, std::size_t digit_cap) {
  if (s < 0) throw Error(ErrorCode::invalid_argument, "tower argument must be non-negative");
  BigInt x = s;
  for (std::uint64_t level = c; level > 0; --level) {
    if (!pow2_fits(x, digit_cap)) return BoundValue::tower(level, x);
    x = big_pow(2, x.get_ui());
  }
  return BoundValue::exact(std::move(x));
}

BigInt r_mdhj_binary(const BigInt& m, const Rational& eps) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "r_mdhj_binary needs m >= 2");
  require_unit_epsilon(eps);
  // ceil(1 - log2 eps) = 1 + ceil(log2(1/eps))
  const long k = 1 + ceil_log2(1 / eps);
  return shifted(BigInt(k), to_ulong(m - 2, "exponent m - 2"));
}

BoundValue r_mdhj_binary_capped(const BigInt& m, const Rational& eps, std::size_t digit_cap) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "r_mdhj_binary needs m >= 2");
  require_unit_epsilon(eps);
  // the factor ceil(1 - log2 eps) is tiny next to 2^(m-2); 16^cap already has more than cap digits
  if (m - 2 >= BigInt(static_cast<unsigned long>(digit_cap)) * 4) return BoundValue::over_cap();
  BigInt v = r_mdhj_binary(m, eps);
  if (decimal_digits(v) > digit_cap) return BoundValue::over_cap();
  return BoundValue::exact(std::move(v));
}

long binary_tower_offset(const Rational& eps) {
  require_unit_epsilon(eps);
  // ceil(2 - log2 eps) = 2 + ceil(log2(1/eps))
  const long inner = 2 + ceil_log2(1 / eps);
  return ceil_log2(Rational(inner));
}

BoundValue r_main2_binary(const BigInt& m, std::uint64_t c, const Rational& eps, std::size_t digit_cap) {
  if (c < 1 || m <= c) throw Error(ErrorCode::invalid_argument, "r_main2_binary needs m > c >= 1");
  const long d = binary_tower_offset(eps);
  return tower(c, m + d, digit_cap);
}

BigInt smallest_t(int q, int c, const BigInt& r, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::invalid_epsilon, "epsilon must be positive");
  if (c < 1 || r < 1 || q < 2) throw Error(ErrorCode::invalid_argument, "smallest_t needs q >= 2, c >= 1, r >= 1");
  // At n = r + j the inequality reads A (1 - q^-r) <= E (q^j - 1) with A = q^(1-c),
  // E = eps/2, i.e. D_j := A - E (q^j - 1) <= A q^-r.
  const Rational a(BigInt(1), big_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(c - 1)));
  const Rational e = eps / 2;
  for (unsigned long j = 1;; ++j) {
    const Rational d = a - e * Rational(big_pow(static_cast<unsigned long>(q), j) - 1);
    if (d <= 0) return r + (j - 1);
    const Rational ratio = a / d;  // need q^r <= ratio
    const BigInt floor_ratio = ratio.get_num() / ratio.get_den();
    if (floor_ratio == 0) continue;
    const BigInt bits(static_cast<unsigned long>(mpz_sizeinbase(floor_ratio.get_mpz_t(), 2)));
    if (r >= bits) continue;  // q^r >= 2^r > floor_ratio
    if (big_pow(static_cast<unsigned long>(q), r.get_ui()) <= floor_ratio) return r + (j - 1);
  }
}

BaseBound binary_base(std::size_t digit_cap) {
  return [digit_cap](const BigInt& m, int q, const Rational& eps) {
    if (q != 2) throw Error(ErrorCode::unsupported, "no closed-form base bound for q > 2");
    return r_mdhj_binary_capped(m, eps, digit_cap);
  };
}

RecursiveBound r_main2_recursive(const BigInt& m, int q, std::uint64_t c, const Rational& eps, const BaseBound& base) {
  if (eps <= 0) throw Error(ErrorCode::invalid_epsilon, "epsilon must be positive, got " + format_rational(eps));
  if (c < 1 || m <= c)
    throw Error(ErrorCode::invalid_argument,
                "recursion needs m > c >= 1, got m = " + m.get_str() + ", c = " + std::to_string(c));
  RecursionLevel level;
  level.c = c;
  level.m = m;
  level.eps = eps;
  if (c == 1) {
    level.r = base(m, q, eps);
    level.result = level.r;
    RecursiveBound out{level.result, {level}};
    return out;
  }
  level.r = base(m - c + 1, q, eps / 2);
  if (!level.r.is_exact()) {
    level.result = BoundValue::over_cap();
    return RecursiveBound{level.result, {level}};
  }
  level.t = smallest_t(q, static_cast<int>(c), level.r.value, eps);
  // q^(2-c) - q^(1-c) = (q - 1) / q^(c-1)
  const Rational next_eps(BigInt(q - 1), big_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(c - 1)));
  RecursiveBound inner = r_main2_recursive(level.r.value, q, c - 1, next_eps, base);
  if (inner.value.is_exact()) {
    level.result = BoundValue::exact(inner.value.value > level.t ? inner.value.value : level.t);
  } else {
    level.result = inner.value;
  }
  RecursiveBound out{level.result, {level}};
  out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
  return out;
}

}  // namespace pgeom
