#pragma once

// Complex-argument Gamma machinery and the scalar Wiener-Hopf factors built
// from Gamma ratios. Everything here is a pure function of its arguments.

#include <cstdlib>

#include "wedgecrack/common.hpp"

namespace wedgecrack {

namespace detail {

// Lanczos rational approximation, 13 terms, g chosen for double precision.
// Valid for Re z >= 0.5; callers reflect/recur into that region.
inline constexpr double kLanczosG = 6.024680040776729583740234375;

inline constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};

inline constexpr std::array<double, 13> kLanczosDen = {
    0.0,          39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0,   13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,       66.0,       1.0,
};

struct RatioVal {
  Cplx value;       // N(z)/D(z)
  Cplx log_deriv;   // d/dz log(N/D)
};

inline RatioVal lanczos_sum(Cplx z) {
  Cplx num{0.0}, dnum{0.0}, den{0.0}, dden{0.0};
  for (int i = 12; i >= 0; --i) {
    dnum = dnum * z + num;
    num = num * z + kLanczosNum[static_cast<std::size_t>(i)];
    dden = dden * z + den;
    den = den * z + kLanczosDen[static_cast<std::size_t>(i)];
  }
  return {num / den, dnum / num - dden / den};
}

// Stirling series with Bernoulli corrections; used for |z| >= 20, Re z > 0.
inline Cplx ln_gamma_stirling(Cplx z) {
  const Cplx lz = std::log(z);
  const Cplx iz = 1.0 / z;
  const Cplx iz2 = iz * iz;
  Cplx corr = iz * (1.0 / 12.0);
  corr += iz * iz2 * (-1.0 / 360.0);
  corr += iz * iz2 * iz2 * (1.0 / 1260.0);
  corr += iz * iz2 * iz2 * iz2 * (-1.0 / 1680.0);
  return (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi) + corr;
}

inline Cplx digamma_stirling(Cplx z) {
  const Cplx iz = 1.0 / z;
  const Cplx iz2 = iz * iz;
  Cplx corr = -iz2 * (1.0 / 12.0);
  corr += iz2 * iz2 * (1.0 / 120.0);
  corr += -iz2 * iz2 * iz2 * (1.0 / 252.0);
  corr += iz2 * iz2 * iz2 * iz2 * (1.0 / 240.0);
  return std::log(z) - 0.5 * iz + corr;
}

// log(sin(pi z)) on a branch that is smooth for large |Im z|; used only in
// multiplicative identities, never where the principal branch matters.
inline Cplx log_sin_pi(Cplx z) {
  if (std::abs(z.imag()) < 1.0) return std::log(std::sin(kPi * z));
  const Cplx w = kPi * z;
  if (z.imag() > 0.0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw})
    return Cplx(0.0, 1.0) * (-w) + std::log(Cplx(0.0, 0.5)) +
           std::log(1.0 - std::exp(Cplx(0.0, 2.0) * w));
  }
  return Cplx(0.0, 1.0) * w + std::log(Cplx(0.0, -0.5)) +
         std::log(1.0 - std::exp(Cplx(0.0, -2.0) * w));
}

inline bool near_nonpositive_integer(Cplx z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = z.real();
  if (r > 0.5) return false;
  return std::abs(r - std::round(r)) < tol;
}

}  // namespace detail

// Principal branch of log Gamma. exp(ln_gamma) tracks Gamma to ~1e-13
// relative on the right half-plane.
inline Cplx ln_gamma(Cplx z) {
  if (detail::near_nonpositive_integer(z))
    throw pole_eval_error("ln_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // Reflection; branch is smooth in |Im|, adequate for all ratio uses.
    return std::log(Cplx(kPi)) - detail::log_sin_pi(z) - ln_gamma(1.0 - z);
  }
  if (std::abs(z) >= 20.0) return detail::ln_gamma_stirling(z);
  const auto s = detail::lanczos_sum(z);
  const Cplx t = z + (detail::kLanczosG - 0.5);
  return (z - 0.5) * std::log(t) - t + std::log(s.value);
}

inline Cplx gamma_fn(Cplx z) { return std::exp(ln_gamma(z)); }

// psi(z) = Gamma'(z)/Gamma(z), by analytic differentiation of the same
// Lanczos form (no finite differences).
inline Cplx digamma(Cplx z) {
  if (detail::near_nonpositive_integer(z))
    throw pole_eval_error("digamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  if (std::abs(z) >= 20.0) return detail::digamma_stirling(z);
  const auto s = detail::lanczos_sum(z);
  const Cplx t = z + (detail::kLanczosG - 0.5);
  return std::log(t) + (z - 0.5) / t - 1.0 + s.log_deriv;
}

namespace detail {

// Gamma(z)/Gamma(z+1/2) for large |z|, Re z > 0, via the Stirling difference.
inline Cplx gamma_half_ratio_large(Cplx z) {
  return std::exp(ln_gamma_stirling(z) - ln_gamma_stirling(z + 0.5));
}

}  // namespace detail

// Factors of cot(pi s) = K+(s)/K-(s):
//   K+(s) = -Gamma(-s)/Gamma(1/2 - s),   K-(s) = Gamma(1/2 + s)/Gamma(1 + s).
// K+ is holomorphic and nonzero on Re s < 0, K- on Re s > -1/2, with
// K+(s) ~ -(-s)^{-1/2} and K-(s) ~ s^{-1/2} at infinity.
inline Cplx k_plus(Cplx s) {
  const Cplx z = -s;
  if (detail::near_nonpositive_integer(z))  // s in {0,1,2,...}
    throw pole_eval_error("k_plus: pole at non-negative integer s");
  if (z.real() > 0.0 && std::abs(z) >= 50.0) return -detail::gamma_half_ratio_large(z);
  return -std::exp(ln_gamma(z) - ln_gamma(0.5 + z));
}

inline Cplx k_minus(Cplx s) {
  const Cplx w = s + 0.5;
  if (detail::near_nonpositive_integer(w))
    throw pole_eval_error("k_minus: pole at s = -1/2 - n");
  if (w.real() > 0.0 && std::abs(w) >= 50.0) return detail::gamma_half_ratio_large(w);
  return std::exp(ln_gamma(0.5 + s) - ln_gamma(1.0 + s));
}

// Meromorphic parts of the half-plane scalar factorization:
//   a+(s) = Gamma(1/2 - s/2)/Gamma(-s/2),  a-(s) = Gamma(1 + s/2)/Gamma(1/2 + s/2).
inline Cplx a_plus(Cplx s) {
  const Cplx w = 0.5 * (1.0 - s);
  if (detail::near_nonpositive_integer(w))
    throw pole_eval_error("a_plus: pole at positive odd integer s");
  return std::exp(ln_gamma(w) - ln_gamma(-0.5 * s));
}

inline Cplx a_minus(Cplx s) {
  const Cplx w = 0.5 * (1.0 + s);
  if (detail::near_nonpositive_integer(w + 0.5) || detail::near_nonpositive_integer(w))
    throw pole_eval_error("a_minus: pole at negative even/odd integer s");
  return std::exp(ln_gamma(1.0 + 0.5 * s) - ln_gamma(0.5 + 0.5 * s));
}

// d/ds a-(s); needed to 1e-10 near s = 0 where it tends to log(2)/sqrt(pi).
inline Cplx a_minus_deriv(Cplx s) {
  return 0.5 * a_minus(s) * (digamma(1.0 + 0.5 * s) - digamma(0.5 + 0.5 * s));
}

}  // namespace wedgecrack
