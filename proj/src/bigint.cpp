#include "latdeg/bigint.hpp"

#include <algorithm>

namespace latdeg {

BigInt big_from_u128(unsigned __int128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &hi);
  out <<= 64;
  BigInt low;
  mpz_import(low.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
  return out + low;
}

BigInt big_from_i64(std::int64_t v) {
  if (v >= 0) return big_from_u128(static_cast<unsigned __int128>(v));
  // -(v+1) avoids overflow on INT64_MIN
  return -big_from_u128(static_cast<unsigned __int128>(-(v + 1))) - 1;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt falling_factorial(std::uint64_t m, unsigned r) {
  if (r > m) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < r; ++i) out *= BigInt(static_cast<unsigned long>(m - i));
  return out;
}

BigInt factorial(unsigned r) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), r);
  return out;
}

BigInt binomial(std::uint64_t m, unsigned r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), r);
  return out;
}

BinomialInverse invert_binomial(const BigInt& value, unsigned r) {
  if (r == 0) throw std::invalid_argument("invert_binomial: r must be positive");
  if (value < 0) throw std::invalid_argument("invert_binomial: negative value");
  // Incremental search: C(m, r) is strictly increasing for m >= r.
  std::uint64_t m = r;
  BigInt c = 1;  // C(r, r)
  if (value == 0) return {r - 1, true};
  while (c < value) {
    ++m;
    c = c * BigInt(static_cast<unsigned long>(m)) / BigInt(static_cast<unsigned long>(m - r));
  }
  if (c == value) return {m, true};
  return {m - 1, false};
}

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational floor_dyadic(const Rational& q, unsigned bits) {
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits);
  Rational out(floor_of(scaled));
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Rational ceil_dyadic(const Rational& q, unsigned bits) {
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits);
  Rational out(ceil_of(scaled));
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

BigInt iroot_floor(const BigInt& x, unsigned k) {
  if (x < 0) throw std::invalid_argument("iroot_floor: negative radicand");
  if (k == 0) throw std::invalid_argument("iroot_floor: zeroth root");
  BigInt out;
  mpz_root(out.get_mpz_t(), x.get_mpz_t(), k);
  return out;
}

std::string to_decimal(const Rational& q, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const BigInt scaled = floor_of(q * Rational(scale));
  const bool negative = scaled < 0;
  std::string body = BigInt(abs(scaled)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return out;
}

std::string to_decimal_up(const Rational& q, unsigned digits) {
  const std::string down = to_decimal(-q, digits);
  if (down.front() == '-') return down.substr(1);
  if (down.find_first_not_of("0.") == std::string::npos) return down;
  return "-" + down;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text, 10));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    return make_rational(BigInt(digits, 10), den);
  }
  return make_rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
}

}  // namespace latdeg
