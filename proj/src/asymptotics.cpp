#include "latdeg/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace latdeg {

namespace {

// sum_{k=lo}^{hi} k^-s as P/Q, by binary splitting.
void zeta_split(std::uint64_t lo, std::uint64_t hi, unsigned s, BigInt& P, BigInt& Q) {
  if (lo == hi) {
    P = 1;
    mpz_ui_pow_ui(Q.get_mpz_t(), static_cast<unsigned long>(lo), s);
    return;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  BigInt P1, Q1, P2, Q2;
  zeta_split(lo, mid, s, P1, Q1);
  zeta_split(mid + 1, hi, s, P2, Q2);
  P = P1 * Q2 + P2 * Q1;
  Q = Q1 * Q2;
}

Rational pow_rational(std::uint64_t base, int e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(p) : make_rational(1, p);
}

}  // namespace

CertifiedInterval zeta_interval(unsigned s, std::uint64_t K) {
  if (s < 2) throw std::invalid_argument("divergent");
  if (K < 1) throw std::invalid_argument("zeta_interval requires K >= 1");
  BigInt P, Q;
  zeta_split(1, K, s, P, Q);
  const Rational partial = make_rational(P, Q);
  const int e = 1 - static_cast<int>(s);
  const Rational tail_lo = pow_rational(K + 1, e) / (s - 1);
  const Rational tail_hi = pow_rational(K, e) / (s - 1);
  CertifiedInterval out(partial + tail_lo, partial + tail_hi,
                        "zeta(" + std::to_string(s) + "), K=" + std::to_string(K));
  return out.rounded();
}

CertifiedInterval collinear_leading_constant(unsigned r, std::uint64_t K) {
  if (r <= 3) throw std::invalid_argument("formula requires r > 3");
  const auto pick = [K](unsigned s) -> std::uint64_t {
    if (K) return K;
    const double want = std::ceil(std::pow(2.0, 80.0 / (s - 1)));
    return static_cast<std::uint64_t>(std::clamp(want, 1.0, 1e4));
  };
  const CertifiedInterval num = zeta_interval(r - 2, pick(r - 2));
  const CertifiedInterval den = zeta_interval(r - 1, pick(r - 1));
  const auto factor = CertifiedInterval::point(make_rational(2 * (r + 3), r + 1));
  CertifiedInterval out = factor * num / den;
  out.note = "collinear leading constant, r=" + std::to_string(r);
  return out;
}

Rational f_ab(std::int64_t a, std::int64_t b) {
  if (!(1 <= b && b < a)) throw std::invalid_argument("f_ab requires 1 <= b < a");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("f_ab requires gcd(a, b) = 1");
  const BigInt A = big_from_i64(a), B = big_from_i64(b);
  BigInt a2 = A * A, b2 = B * B;
  const BigInt num = 20 * a2 * a2 * a2 + 25 * a2 * a2 * A * B - 7 * a2 * a2 * b2 + 28 * a2 * A * b2 * B -
                     20 * a2 * b2 * b2 + 3 * A * b2 * b2 * B - b2 * b2 * b2;
  const BigInt den = 240 * a2 * a2 * A * (A + B) * (A + B) * (a2 + b2);
  return make_rational(num, den);
}

Rational area_P_prime(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t m) {
  if (!(0 < b && b < a) || std::gcd(a, b) != 1) throw std::invalid_argument("area_P_prime requires 0 < b < a, coprime");
  if (m < 1) throw std::invalid_argument("area_P_prime requires m >= 1");
  if (c < (b - a) * m || c > 2 * b * m) throw std::invalid_argument("axis misses the square");
  const Rational A(a), B(b), M(m), C(c);
  if (c >= 0) {
    const Rational w = 2 * M - C / B;
    return B / (2 * A) * w * w;
  }
  const std::int64_t knee = ((a - b) * (a - b) * m) / a;  // floor, all terms positive
  const Rational h = -C / A;
  const Rational base = 2 * B / A * M * M + 2 * M * h;
  const Rational k = A * B / (A * A - B * B);
  if (c >= -knee) return base - k * h * h;
  const Rational wp = A / B * h - Rational((a - b) * (a - b)) / (A * B) * M;
  return base - k * (h * h + wp * wp);
}

std::string to_string(GrowthId id) {
  switch (id) {
    case GrowthId::FAff: return "f_aff";
    case GrowthId::GLin: return "g_lin";
    case GrowthId::AAffine: return "a_affine";
    case GrowthId::LLinear: return "l_linear";
  }
  return "";
}

GrowthId parse_growth_id(const std::string& text) {
  for (GrowthId id : {GrowthId::FAff, GrowthId::GLin, GrowthId::AAffine, GrowthId::LLinear})
    if (to_string(id) == text) return id;
  throw std::invalid_argument("unknown growth formula: " + text);
}

void GrowthFormula::validate() const {
  if (d < 1 || k < 1 || r < 1) throw std::invalid_argument("d, k, r must be positive");
  switch (id) {
    case GrowthId::FAff:
    case GrowthId::AAffine:
      if (!(k < d)) throw std::invalid_argument("requires k < d");
      if (!(r >= k + 2)) throw std::invalid_argument("requires r >= k + 2");
      break;
    case GrowthId::GLin:
      if (!(k < d)) throw std::invalid_argument("requires k < d");
      if (!(r >= k + 1)) throw std::invalid_argument("requires r >= k + 1");
      break;
    case GrowthId::LLinear:
      if (!(k < std::min(d, r))) throw std::invalid_argument("requires k < min(d, r)");
      break;
  }
}

double GrowthValue::approx(std::int64_t n) const {
  const double nn = static_cast<double>(n);
  double v = std::pow(nn, n_exponent.get_d());
  if (log_exponent != 0) v *= std::pow(std::log(nn), log_exponent.get_d());
  return v;
}

GrowthValue predicted_growth(const GrowthFormula& f, std::int64_t n) {
  f.validate();
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::int64_t d = f.d, k = f.k, r = f.r;
  GrowthValue out;
  switch (f.id) {
    case GrowthId::FAff:
      if (r <= d) {
        out.n_exponent = Rational(d) * (1 - make_rational(k, r - 1));
      } else {
        out.n_exponent = d - k;
        if (r == d + 1) out.log_exponent = make_rational(-1, d);
      }
      break;
    case GrowthId::GLin:
      if (r < d) {
        out.n_exponent = make_rational(d * (r - k), r - 1);
      } else {
        out.n_exponent = make_rational(d * (d - k), d - 1);
        out.log_exponent = make_rational(-1, d - 1);
      }
      break;
    case GrowthId::AAffine:
      if (r - 1 != d) {
        out.n_exponent = d + k * std::max(r - 1, d);
      } else {
        out.n_exponent = d * (k + 1);
        out.log_exponent = 1;
      }
      break;
    case GrowthId::LLinear:
      if (r != d) {
        out.n_exponent = k * std::max(r, d);
      } else {
        out.n_exponent = k * d;
        out.log_exponent = 1;
      }
      break;
  }
  out.n_exponent.canonicalize();
  out.log_exponent.canonicalize();
  // floor(n^(p/q)) = floor((n^p)^(1/q))
  const unsigned long p = out.n_exponent.get_num().get_ui();
  const unsigned long q = out.n_exponent.get_den().get_ui();
  BigInt np;
  mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), p);
  out.leading = iroot_floor(np, static_cast<unsigned>(q));
  BigInt back;
  mpz_pow_ui(back.get_mpz_t(), out.leading.get_mpz_t(), q);
  out.exact = back == np;
  return out;
}

Rational spencer_bound(unsigned r, const Rational& V, const Rational& E) {
  if (r < 2) throw std::invalid_argument("spencer_bound requires r >= 2");
  if (V <= 0) throw std::invalid_argument("spencer_bound requires V > 0");
  if (E <= 0) throw std::invalid_argument("spencer_bound requires E > 0 (with no edges the bound is V)");
  // ((r-1)^(r-1) V^r / (r^r E))^(1/(r-1)), floored on the 2^-F grid
  constexpr unsigned F = 64;
  BigInt rm1, rr;
  mpz_ui_pow_ui(rm1.get_mpz_t(), r - 1, r - 1);
  mpz_ui_pow_ui(rr.get_mpz_t(), r, r);
  Rational vr = 1;
  for (unsigned i = 0; i < r; ++i) vr *= V;
  Rational x = Rational(rm1) * vr / (Rational(rr) * E);
  mpq_mul_2exp(x.get_mpq_t(), x.get_mpq_t(), F * (r - 1));
  const BigInt root = iroot_floor(floor_of(x), r - 1);
  Rational out(root);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), F);
  return out;
}

CertifiedInterval pi_interval() {
  const Rational lo = parse_rational("3.14159265358979323846264338327950288419716939937510");
  const Rational hi = parse_rational("3.14159265358979323846264338327950288419716939937511");
  return {lo, hi, "pi, 50 digits"};
}

CertifiedInterval forbidden_quadruple_density() {
  static const CertifiedInterval cached = [] {
    const CertifiedInterval gamma = gamma_interval(5500);
    const CertifiedInterval pi = pi_interval();
    const CertifiedInterval collinear =
        CertifiedInterval::point(make_rational(7, 360)) * pi * pi / zeta_interval(3, 10000);
    CertifiedInterval out = gamma + collinear;
    out.note = "gamma(N=5500) + 7 pi^2 / (360 zeta(3))";
    return out;
  }();
  return cached;
}

}  // namespace latdeg
