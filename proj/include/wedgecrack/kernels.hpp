#pragma once

// Kernel functions of the boundary-value problems: d, the 2x2 matrices G and
// G0 (general wedge and the side-crack specialisation), their eigenvalue
// data, and the half-plane scalar kernels L, L0. All evaluation paths are
// stable at the removable points s = 0, +-1 and for large |Im s|.

#include "wedgecrack/common.hpp"

namespace wedgecrack {

enum class WedgeCase { general, side_crack, halfplane };

struct WedgeGeometry {
  double alpha1 = kPi / 2.0;  // radians, in (0, pi)
  double alpha2 = kPi;        // radians, in (0, pi]

  void validate() const {
    if (!(alpha1 > 0.0 && alpha1 < kPi))
      throw validation_error("WedgeGeometry: alpha1 must lie in (0, pi)");
    if (!(alpha2 > 0.0 && alpha2 <= kPi))
      throw validation_error("WedgeGeometry: alpha2 must lie in (0, pi]");
  }

  WedgeCase case_tag() const {
    validate();
    const double tol = 1e-14;
    if (std::abs(alpha2 - kPi) < tol) return WedgeCase::side_crack;
    if (std::abs(alpha1 - kPi / 2.0) < tol && std::abs(alpha2 - kPi / 2.0) < tol)
      return WedgeCase::halfplane;
    return WedgeCase::general;
  }
};

namespace detail {

inline Cplx sinc_c(Cplx z) {
  if (std::abs(z) < 1e-3) {
    const Cplx z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
  }
  return std::sin(z) / z;
}

// tan(pi s)/s, stable through s = 0 (and reusable for tan(pi e)/e near
// integers, since tan has period pi).
inline Cplx tan_pi_over(Cplx s) {
  if (std::abs(s) < 1e-3) {
    const Cplx w = kPi * s, w2 = w * w;
    return kPi * (1.0 + w2 / 3.0 + 2.0 * w2 * w2 / 15.0 + 17.0 * w2 * w2 * w2 / 315.0);
  }
  return std::tan(kPi * s) / s;
}

// d(s, alpha)/(s -+ 1) via the Taylor series of d about s = +-1.
inline Cplx d_over_shift(Cplx e, double at, double alpha) {
  const double sa = std::sin(alpha);
  const Cplx d1 = 2.0 * at * sa * sa - alpha * std::sin(2.0 * alpha * at);
  const Cplx d2 = 2.0 * sa * sa - 2.0 * alpha * alpha * std::cos(2.0 * alpha * at);
  const Cplx d3 = 4.0 * alpha * alpha * alpha * std::sin(2.0 * alpha * at);
  const Cplx d4 = 8.0 * alpha * alpha * alpha * alpha * std::cos(2.0 * alpha * at);
  const Cplx d5 = -16.0 * std::pow(alpha, 5) * std::sin(2.0 * alpha * at);
  return d1 + e * (d2 / 2.0 + e * (d3 / 6.0 + e * (d4 / 24.0 + e * d5 / 120.0)));
}

}  // namespace detail

// d(s, theta) = s^2 sin^2 theta - sin^2(theta s)
inline Cplx d_fun(Cplx s, double theta) {
  const double st = std::sin(theta);
  const Cplx sts = std::sin(theta * s);
  return s * s * (st * st) - sts * sts;
}

// d(s, alpha)/s^2, stable through s = 0.
inline Cplx d_over_s2(Cplx s, double alpha) {
  const double sa = std::sin(alpha);
  const Cplx sc = detail::sinc_c(alpha * s);
  return sa * sa - alpha * alpha * sc * sc;
}

inline void pole_guard_d(Cplx s, double alpha) {
  const Cplx d = d_fun(s, alpha);
  if (std::abs(d) < 1e-12 * (1.0 + std::norm(s)))
    throw pole_eval_error("kernel evaluated at (or too close to) a zero of d(s, alpha)");
}

// Entries b1deg, b2deg of the regular matrix G0 for the side-crack wedge
// (alpha2 = pi). Removable points s = 0, +-1 switch to series-reduced forms;
// large alpha*|Im s| switches to scaled exponentials.
struct G0Entries {
  Cplx b1, b2;
};

inline G0Entries g0_entries(Cplx s, double alpha) {
  const double sa = std::sin(alpha);
  const double series_window = 1e-3;

  if (std::abs(s) < series_window) {
    const Cplx tps = detail::tan_pi_over(s);                 // tan(pi s)/s
    const Cplx dos = d_over_s2(s, alpha);                    // d/s^2
    const Cplx sin2a_over = 2.0 * alpha * detail::sinc_c(2.0 * alpha * s);  // sin(2 alpha s)/s
    return {0.5 * (1.0 - tps * sin2a_over / (2.0 * dos)), -tps * sa / (2.0 * dos)};
  }
  for (const double at : {1.0, -1.0}) {
    const Cplx e = s - at;
    if (std::abs(e) < series_window) {
      // both tan(pi s) = tan(pi e) and d vanish linearly; divide the shift out
      const Cplx tps_over_d = detail::tan_pi_over(e) / detail::d_over_shift(e, at, alpha);
      return {0.5 * (1.0 - tps_over_d * std::sin(2.0 * alpha * s) / 2.0),
              -s * tps_over_d * sa / 2.0};
    }
  }

  const double tau = s.imag();
  if (alpha * std::abs(tau) > 200.0) {
    if (tau < 0.0) {
      const auto c = g0_entries(std::conj(s), alpha);
      return {std::conj(c.b1), std::conj(c.b2)};
    }
    // scaled form with E = exp(2 i alpha s), P = exp(2 i pi s), both tiny
    const Cplx E = std::exp(Cplx(0.0, 2.0) * alpha * s);
    const Cplx P = std::exp(Cplx(0.0, 2.0 * kPi) * s);
    const Cplx T = Cplx(0.0, -1.0) * (P - 1.0) / (P + 1.0);  // tan(pi s)
    const Cplx denom = 4.0 * E * s * s * (sa * sa) + (E - 1.0) * (E - 1.0);
    const Cplx sin2a_over_d = Cplx(0.0, -2.0) * (E * E - 1.0) / denom;
    const Cplx inv_d = 4.0 * E / denom;
    return {0.5 * (1.0 - T * sin2a_over_d / 2.0), -s * T * sa * inv_d / 2.0};
  }

  const Cplx T = std::tan(kPi * s);
  const Cplx d = d_fun(s, alpha);
  if (std::abs(d) == 0.0) throw pole_eval_error("g0_entries: d vanished off the removable set");
  return {0.5 * (1.0 - T * std::sin(2.0 * alpha * s) / (2.0 * d)), -s * T * sa / (2.0 * d)};
}

// G0(s): the "regular" factor of the dominant-scalar split G = 4 cot(pi s) G0.
inline Mat2 g0_side(Cplx s, double alpha) {
  const auto e = g0_entries(s, alpha);
  const double l = std::cos(alpha), sa = std::sin(alpha);
  const Cplx mp = (s - 1.0) * sa, mm = (-s - 1.0) * sa;
  return {e.b1 + e.b2 * l, e.b2 * mp, e.b2 * mm, e.b1 - e.b2 * l};
}

// G(s) for the side-crack wedge. Raises on evaluation at (or near) a pole;
// residues there are the caller's job.
inline Mat2 g_side(Cplx s, double alpha) {
  pole_guard_d(s, alpha);
  const Cplx sp = std::sin(kPi * s);
  if (std::abs(sp) < 1e-12 * (1.0 + std::abs(s)))
    throw pole_eval_error("g_side: pole of cot(pi s) at integer s");
  const Cplx cot = std::cos(kPi * s) / sp;
  return 4.0 * cot * g0_side(s, alpha);
}

// General-wedge matrix of the order-4 problem. Contains no material
// constants. Poles at the zeros of d(s, alpha1), d(s, alpha2) are guarded.
inline Mat2 g_general(Cplx s, const WedgeGeometry& geom) {
  geom.validate();
  const double a1 = geom.alpha1, a2 = geom.alpha2;
  pole_guard_d(s, a1);
  pole_guard_d(s, a2);
  const Cplx d1 = d_fun(s, a1), d2 = d_fun(s, a2);
  const double s2a1 = std::sin(2.0 * a1), s2a2 = std::sin(2.0 * a2);
  const double sq1 = std::sin(a1) * std::sin(a1), sq2 = std::sin(a2) * std::sin(a2);

  Mat2 g;
  const Cplx sin2a1s = std::sin(2.0 * a1 * s), sin2a2s = std::sin(2.0 * a2 * s);
  // diagonal: j = 1 uses +s sin 2a, j = 2 uses -s sin 2a
  g.a = -(sin2a1s + s * s2a1) / d1 - (sin2a2s + s * s2a2) / d2;
  g.d = -(sin2a1s - s * s2a1) / d1 - (sin2a2s - s * s2a2) / d2;
  const Cplx bracket = -sq1 / d1 + sq2 / d2;
  g.b = 2.0 * s * (s - 1.0) * bracket;
  g.c = 2.0 * s * (-s - 1.0) * bracket;
  return g;
}

// Eigenvalue data of G0 at a point: lambda_{1,2} = b1 +- b2 f^{1/2},
// Delta = det G0 = lambda1 lambda2, eps = (1/2) log(lambda1/lambda2),
// f(s) = 1 - s^2 sin^2 alpha with the branch normalised by f^{1/2}(0) = 1
// (principal square root; its cut is exactly |Re s| >= 1/sin alpha).
struct KernelEigenData {
  Cplx lambda1, lambda2, delta, eps, f, f_half;
};

inline KernelEigenData kernel_eigens(Cplx s, double alpha) {
  const auto e = g0_entries(s, alpha);
  const double sa = std::sin(alpha);
  const Cplx f = 1.0 - s * s * (sa * sa);
  const Cplx fh = std::sqrt(f);
  const Cplx l1 = e.b1 + e.b2 * fh, l2 = e.b1 - e.b2 * fh;
  if (std::abs(l1) == 0.0 || std::abs(l2) == 0.0)
    throw numerical_error("kernel_eigens: vanishing eigenvalue");
  return {l1, l2, l1 * l2, 0.5 * std::log(l1 / l2), f, fh};
}

// Real-valued kernel data on the imaginary axis s = i tau: the integrands of
// the factorization quadratures. log Delta(i tau) and eps(i tau) are real,
// bounded at tau = 0, and decay like tau^2 exp(-2 alpha tau).
struct AxisKernel {
  double log_delta;  // log Delta(i tau)
  double eps;        // eps(i tau)
  double w;          // f^{1/2}(i tau) = sqrt(1 + tau^2 sin^2 alpha)
};

inline AxisKernel axis_kernel(double alpha, double tau) {
  const auto e = g0_entries(Cplx(0.0, tau), alpha);
  const double b1 = e.b1.real(), b2 = e.b2.real();
  const double sa = std::sin(alpha);
  const double w = std::sqrt(1.0 + tau * tau * sa * sa);
  if (!(b1 > 0.0)) throw numerical_error("axis_kernel: b1 not positive on the axis");
  const double x = b2 * w / b1;
  if (!(std::abs(x) < 1.0))
    throw numerical_error("axis_kernel: eigenvalue ratio left the positive cone");
  return {2.0 * std::log(b1) + std::log1p(-x * x), std::atanh(x), w};
}

// ---------------------------------------------------------------------------
// Half-plane scalar kernels (alpha1 = alpha2 = pi/2).
// ---------------------------------------------------------------------------

// L0(s) = 1 - s^2 / sin^2(pi s / 2); analytic at 0 with L0(0) = 1 - 4/pi^2.
inline Cplx l0_fun(Cplx s) {
  const Cplx sc = detail::sinc_c(kPi * s / 2.0);
  if (std::abs(sc) < 1e-13)
    throw pole_eval_error("l0_fun: pole at a nonzero even integer");
  const Cplx ratio = (2.0 / kPi) / sc;  // s / sin(pi s/2)
  return 1.0 - ratio * ratio;
}

// L(s) = (sin^2(pi s/2) - s^2) / (2 sin(pi s)) = (1/4) tan(pi s/2) L0(s).
inline Cplx l_fun(Cplx s) {
  const double series_window = 1e-3;
  if (std::abs(s) < series_window) {
    const Cplx sc2 = detail::sinc_c(kPi * s / 2.0);
    const Cplx num_over_s2 = (kPi * kPi / 4.0) * sc2 * sc2 - 1.0;  // (sin^2 - s^2)/s^2
    return s * num_over_s2 / (2.0 * kPi * detail::sinc_c(kPi * s));
  }
  for (const double at : {1.0, -1.0}) {
    const Cplx e = s - at;
    if (std::abs(e) < series_window) {
      // sin^2(pi s/2) = cos^2(pi e/2); numerator/e and denominator/e are regular
      const Cplx half = kPi * e / 2.0;
      const Cplx sc = detail::sinc_c(half);
      const Cplx num_over_e = -e * (kPi * kPi / 4.0) * sc * sc - 2.0 * at - e;
      const Cplx den_over_e = (at > 0 ? -2.0 : 2.0) * kPi * detail::sinc_c(kPi * e);
      return num_over_e / den_over_e;
    }
  }
  const Cplx sp = std::sin(kPi * s);
  if (std::abs(sp) < 1e-12 * (1.0 + std::abs(s)))
    throw pole_eval_error("l_fun: pole at an integer of modulus >= 2");
  const Cplx sh = std::sin(kPi * s / 2.0);
  return (sh * sh - s * s) / (2.0 * sp);
}

// log L0(i tau) = log(1 - tau^2 / sinh^2(pi tau / 2)), overflow-free.
inline double log_l0_axis(double tau) {
  if (tau == 0.0) return std::log1p(-4.0 / (kPi * kPi));
  const double u = std::exp(-kPi * tau / 2.0);
  const double sinh_val = (1.0 - u * u) / (2.0 * u);  // sinh(pi tau/2), u in (0,1)
  const double x = tau / sinh_val;
  return std::log1p(-x * x);
}

}  // namespace wedgecrack
