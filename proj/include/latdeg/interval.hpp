#pragma once

#include <string>

#include "latdeg/bigint.hpp"

namespace latdeg {

/// Working precision of outward rounding, in fractional bits.
inline constexpr unsigned kIntervalBits = 256;

/// Rational enclosure [lo, hi] of a real number.
struct CertifiedInterval {
  Rational lo;
  Rational hi;
  std::string note;

  CertifiedInterval() = default;
  CertifiedInterval(Rational l, Rational h, std::string n = {});
  static CertifiedInterval point(const Rational& q, std::string note = {});

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const CertifiedInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  /// Rounds lo down and hi up onto the 2^-bits grid.
  CertifiedInterval rounded(unsigned bits = kIntervalBits) const;
};

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b);
CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b);
CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b);
/// Throws std::domain_error when b contains zero.
CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b);

}  // namespace latdeg
