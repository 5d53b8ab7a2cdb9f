#include "pgeom/numeric.hpp"

#include <cctype>
#include <string>

#include "pgeom/error.hpp"

namespace pgeom {
namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorCode::parse_error, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(ErrorCode::parse_error, "expected an integer, got '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(text);
  } else {
    num = parse_integer(text.substr(0, slash));
    den = parse_integer(text.substr(slash + 1));
  }
  if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt big_pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::size_t decimal_digits(const BigInt& x) {
  if (x == 0) return 1;
  BigInt a = abs(x);
  std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10);  // exact or one too large
  if (d > 1 && a < big_pow(10, d - 1)) --d;
  return d;
}

long ceil_log2(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::invalid_argument, "ceil_log2 needs a positive argument");
  // start from the bit-length estimate and correct by exact comparison
  long k = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  auto pow2 = [](long e) {
    Rational r;
    if (e >= 0) {
      r = Rational(big_pow(2, static_cast<unsigned long>(e)));
    } else {
      r = Rational(BigInt(1), big_pow(2, static_cast<unsigned long>(-e)));
    }
    return r;
  };
  while (pow2(k) < x) ++k;
  while (pow2(k - 1) >= x) --k;
  return k;
}

}  // namespace pgeom
