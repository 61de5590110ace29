#include <numeric>
#include <stdexcept>

#include "latdeg/asymptotics.hpp"
#include "latdeg/parallel.hpp"

namespace latdeg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

void set_u128(mpz_t z, u128 v) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
  mpz_import(z, 2, -1, sizeof(std::uint64_t), 0, 0, words);
}

// Numerator and denominator of f(a, b) scaled by the parity weight 2(3 + (-1)^(a+b)).
// Fits 128-bit arithmetic for a < 7000; beyond that the big-integer path is taken.
void weighted_term(std::int64_t a, std::int64_t b, mpz_t num, mpz_t den) {
  const std::int64_t w = (a + b) % 2 == 0 ? 8 : 4;
  if (a < 7000) {
    const i128 A = a, B = b;
    const i128 a2 = A * A, b2 = B * B;
    const i128 n = 20 * a2 * a2 * a2 + 25 * a2 * a2 * A * B - 7 * a2 * a2 * b2 + 28 * a2 * A * b2 * B -
                   20 * a2 * b2 * b2 + 3 * A * b2 * b2 * B - b2 * b2 * b2;
    const u128 d = static_cast<u128>(240) * static_cast<u128>(a2 * a2 * A) * static_cast<u128>((A + B) * (A + B)) *
                   static_cast<u128>(a2 + b2);
    set_u128(num, static_cast<u128>(n) * static_cast<u128>(w));
    set_u128(den, d);
    return;
  }
  const Rational f = f_ab(a, b) * w;
  mpz_set(num, f.get_num_mpz_t());
  mpz_set(den, f.get_den_mpz_t());
}

}  // namespace

GammaCertificate gamma_certificate(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("gamma_interval requires N >= 2");
  GammaCertificate cert;
  cert.N = N;
  cert.frac_bits = kGammaFracBits;

  // Fixed chunk boundaries over a (independent of thread count); each term is floored onto
  // the 2^-128 grid and every inexact floor widens the upper end by one ulp.
  const std::int64_t span = N - 1;
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::int64_t>(span, 64));
  cert.chunks.resize(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    cert.chunks[c].a_lo = 2 + static_cast<std::int64_t>(c) * span / static_cast<std::int64_t>(chunks);
    cert.chunks[c].a_hi = 1 + static_cast<std::int64_t>(c + 1) * span / static_cast<std::int64_t>(chunks);
  }
  parallel_chunks(chunks, [&](std::size_t c) {
    GammaChunk& ch = cert.chunks[c];
    mpz_t num, den, q, r, acc;
    mpz_inits(num, den, q, r, acc, nullptr);
    for (std::int64_t a = ch.a_lo; a <= ch.a_hi; ++a) {
      for (std::int64_t b = 1; b < a; ++b) {
        if (std::gcd(a, b) != 1) continue;
        weighted_term(a, b, num, den);
        mpz_mul_2exp(num, num, kGammaFracBits);
        mpz_fdiv_qr(q, r, num, den);
        mpz_add(acc, acc, q);
        ++ch.terms;
        if (mpz_sgn(r) != 0) ++ch.inexact_terms;
      }
    }
    ch.floor_sum = BigInt(acc);
    mpz_clears(num, den, q, r, acc, nullptr);
  });

  BigInt floor_total = 0;
  std::uint64_t inexact = 0;
  for (const auto& ch : cert.chunks) {
    floor_total += ch.floor_sum;
    inexact += ch.inexact_terms;
  }
  const auto scaled = [](const BigInt& v) {
    Rational q(v);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), kGammaFracBits);
    return q;
  };
  cert.s_lo = scaled(floor_total);
  cert.s_hi = scaled(floor_total + static_cast<unsigned long>(inexact));
  cert.rounding_budget = scaled(BigInt(static_cast<unsigned long>(inexact)));
  cert.tail_bound = make_rational(11, 5 * N);
  const Rational base = make_rational(4, 15);
  cert.interval = CertifiedInterval(base + cert.s_lo, base + cert.s_hi + cert.tail_bound,
                                    "gamma, N=" + std::to_string(N));
  return cert;
}

CertifiedInterval gamma_interval(std::int64_t N) { return gamma_certificate(N).interval; }

}  // namespace latdeg
