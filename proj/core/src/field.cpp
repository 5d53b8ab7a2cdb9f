#include "pgeom/field.hpp"

#include <string>

#include "pgeom/error.hpp"

namespace pgeom {
namespace {

std::vector<int> fixed_modulus(int q) {
  switch (q) {
    case 4: return {1, 1, 1};
    case 8: return {1, 0, 1, 1};
    case 9: return {1, 2, 2};
    case 16: return {1, 0, 0, 1, 1};
    default: return {};
  }
}

std::vector<int> digits(int code, int p, int k) {
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

int from_digits(const std::vector<int>& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

// Product of two codes as polynomials modulo the (monic, highest-first) modulus.
int poly_mulmod(int a, int b, int p, int k, const std::vector<int>& modulus) {
  if (k == 1) return (a * b) % p;
  const auto da = digits(a, p, k);
  const auto db = digits(b, p, k);
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // x^k = -(lower terms of modulus)
  for (int deg = 2 * k - 2; deg >= k; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 1; i <= k; ++i) {
      const int coeff = modulus[i];  // coefficient of x^(k-i)
      const int target = deg - i;
      prod[target] = ((prod[target] - c * coeff) % p + p) % p;
    }
  }
  prod.resize(k);
  return from_digits(prod, p);
}

// Remainder of a by monic b over GF(p); both highest degree first.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size();
  while (a.size() >= db) {
    const int lead = a.front();
    if (lead != 0) {
      for (std::size_t i = 0; i < db; ++i) a[i] = ((a[i] - lead * b[i]) % p + p) % p;
    }
    a.erase(a.begin());
  }
  return a;
}

}  // namespace

bool prime_power(int q, int& p, int& k) {
  if (q < 2) return false;
  int d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  int rest = q;
  int e = 0;
  while (rest % d == 0) {
    rest /= d;
    ++e;
  }
  if (rest != 1) return false;
  p = d;
  k = e;
  return true;
}

bool is_irreducible(int p, std::span<const int> monic) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1 || monic[0] != 1) return false;
  const std::vector<int> poly(monic.begin(), monic.end());
  for (int d = 1; 2 * d <= deg; ++d) {
    // every monic polynomial of degree d: leading 1 followed by d free coefficients
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> divisor(d + 1);
      divisor[0] = 1;
      int c = code;
      for (int i = d; i >= 1; --i) {
        divisor[i] = c % p;
        c /= p;
      }
      const auto rem = poly_rem(poly, divisor, p);
      bool zero = true;
      for (int r : rem) zero = zero && r == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field Field::make(int q) {
  int p = 0;
  int k = 0;
  if (!prime_power(q, p, k))
    throw Error(ErrorCode::not_prime_power, std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder)
    throw Error(ErrorCode::unsupported, "GF(" + std::to_string(q) + ") exceeds the supported order 16");

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  f.modulus_ = fixed_modulus(q);

  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f.add_[a][b] = static_cast<Elem>(from_digits(s, p));
    }
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - da[i]) % p;
    f.neg_[a] = static_cast<Elem>(from_digits(n, p));
  }

  for (int g = 1; g < q; ++g) {
    std::array<bool, kMaxOrder> seen{};
    int x = 1;
    int order = 0;
    do {
      seen[x] = true;
      x = poly_mulmod(x, g, p, k, f.modulus_);
      ++order;
    } while (x != 1);
    if (order != q - 1) continue;
    f.generator_ = static_cast<Elem>(g);
    x = 1;
    for (int e = 0; e < q - 1; ++e) {
      f.exp_[e] = static_cast<Elem>(x);
      f.exp_[e + q - 1] = static_cast<Elem>(x);
      f.log_[x] = e;
      x = poly_mulmod(x, g, p, k, f.modulus_);
    }
    break;
  }
  return f;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, unsigned e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned long>(log_[a]) * e) % static_cast<unsigned>(q_ - 1)];
}

}  // namespace pgeom
