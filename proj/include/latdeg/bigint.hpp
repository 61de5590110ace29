#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdeg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its iteration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A consistency check inside a counter failed; signals a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

BigInt big_from_u128(unsigned __int128 v);
BigInt big_from_i64(std::int64_t v);

/// Reduced rational num/den; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// m (m-1) ... (m-r+1); zero when r > m.
BigInt falling_factorial(std::uint64_t m, unsigned r);
BigInt binomial(std::uint64_t m, unsigned r);
BigInt factorial(unsigned r);

/// Largest m with C(m, r) <= value, and whether equality holds.
struct BinomialInverse {
  std::uint64_t m = 0;
  bool exact = false;
};
BinomialInverse invert_binomial(const BigInt& value, unsigned r);

/// Dyadic outward rounding: floor/ceil of q onto the grid 2^-bits.
Rational floor_dyadic(const Rational& q, unsigned bits);
Rational ceil_dyadic(const Rational& q, unsigned bits);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

/// Integer floor of the k-th root of a nonnegative integer.
BigInt iroot_floor(const BigInt& x, unsigned k);

/// Truncated decimal expansion with `digits` fractional digits, rounded toward -inf.
std::string to_decimal(const Rational& q, unsigned digits);
/// Same, rounded toward +inf.
std::string to_decimal_up(const Rational& q, unsigned digits);

/// "num/den" (or just "num" for integers), always reduced.
std::string to_fraction_string(const Rational& q);
Rational parse_rational(const std::string& text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace latdeg
