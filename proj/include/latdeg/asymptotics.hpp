#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latdeg/bigint.hpp"
#include "latdeg/interval.hpp"

namespace latdeg {

/// Enclosure of zeta(s) from the exact partial sum up to K plus integral-test tail bounds.
CertifiedInterval zeta_interval(unsigned s, std::uint64_t K);

/// 2(r+3)/(r+1) * zeta(r-2)/zeta(r-1): leading coefficient of the ordered collinear
/// r-tuple count in [n]^2 (divided by n^(r+1)). K = 0 picks the truncation automatically.
CertifiedInterval collinear_leading_constant(unsigned r, std::uint64_t K = 0);

/// The rational weight f(a, b) of the pair (a, b) in the trapezium constant.
Rational f_ab(std::int64_t a, std::int64_t b);

/// Fixed-point precision of the gamma partial sum.
inline constexpr unsigned kGammaFracBits = 128;

struct GammaChunk {
  std::int64_t a_lo = 0;  // inclusive
  std::int64_t a_hi = 0;  // inclusive
  std::uint64_t terms = 0;
  std::uint64_t inexact_terms = 0;
  BigInt floor_sum;  // sum of floor(term * 2^kGammaFracBits)
};

/// Everything needed to re-check a gamma enclosure by hand.
struct GammaCertificate {
  std::int64_t N = 0;
  unsigned frac_bits = kGammaFracBits;
  std::vector<GammaChunk> chunks;
  Rational s_lo;
  Rational s_hi;
  Rational rounding_budget;  // inexact_terms * 2^-frac_bits
  Rational tail_bound;       // 2.2 / N
  CertifiedInterval interval;
};

GammaCertificate gamma_certificate(std::int64_t N);
/// [4/15 + s_N, 4/15 + s_N + 2.2/N] with s_N enclosed by per-term outward rounding.
CertifiedInterval gamma_interval(std::int64_t N);

/// Area of the lower half-body P' for the axis b x - a y = c in the square of side 2m.
Rational area_P_prime(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t m);

enum class GrowthId { FAff, GLin, AAffine, LLinear };

std::string to_string(GrowthId id);
GrowthId parse_growth_id(const std::string& text);

struct GrowthFormula {
  GrowthId id = GrowthId::FAff;
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;

  /// Throws std::invalid_argument naming the failed hypothesis.
  void validate() const;
};

/// n^n_exponent * (log n)^log_exponent; `leading` is floor(n^n_exponent).
struct GrowthValue {
  Rational n_exponent;
  Rational log_exponent;
  BigInt leading;
  bool exact = false;  // leading equals n^n_exponent exactly

  /// Approximate value including the log factor, for sampling heuristics only.
  double approx(std::int64_t n) const;
};

GrowthValue predicted_growth(const GrowthFormula& f, std::int64_t n);

/// Certified lower value of (r-1)/r^(r/(r-1)) * V^(r/(r-1)) / E^(1/(r-1)).
Rational spencer_bound(unsigned r, const Rational& V, const Rational& E);

/// Stored 50-digit enclosure of pi.
CertifiedInterval pi_interval();

/// gamma_interval(5500) + 7 pi^2 / (360 zeta(3)): the normalized edge density of the
/// no-four-on-a-circle hypergraph.
CertifiedInterval forbidden_quadruple_density();

}  // namespace latdeg
