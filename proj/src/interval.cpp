#include "latdeg/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace latdeg {

CertifiedInterval::CertifiedInterval(Rational l, Rational h, std::string n)
    : lo(std::move(l)), hi(std::move(h)), note(std::move(n)) {
  lo.canonicalize();
  hi.canonicalize();
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

CertifiedInterval CertifiedInterval::point(const Rational& q, std::string note) {
  return {q, q, std::move(note)};
}

CertifiedInterval CertifiedInterval::rounded(unsigned bits) const {
  return {floor_dyadic(lo, bits), ceil_dyadic(hi, bits), note};
}

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b) {
  return CertifiedInterval(a.lo + b.lo, a.hi + b.hi).rounded();
}

CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b) {
  return CertifiedInterval(a.lo - b.hi, a.hi - b.lo).rounded();
}

CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b) {
  const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return CertifiedInterval(*mn, *mx).rounded();
}

CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval containing zero");
  return a * CertifiedInterval(1 / b.hi, 1 / b.lo);
}

}  // namespace latdeg
