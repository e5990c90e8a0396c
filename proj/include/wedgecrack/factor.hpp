#pragma once

// Khrapkov factorization of the side-crack matrix kernel G0 = X+ [X-]^{-1}
// and the half-plane scalar factorization, together with every boundary
// value, limit, and derivative the downstream linear systems need.
//
// X(s) = B(s) [ c+ s+ ; s- c- ] with
//   c+-(s) = cosh(f^{1/2} beta) +- (l/f^{1/2}) sinh(f^{1/2} beta),
//   s+-(s) = m+-(s) sinh(f^{1/2} beta)/f^{1/2},
// and B, beta given by semi-infinite integrals of log det G0 and the
// eigenvalue splitting on the imaginary axis. c+- , s+- are assembled from
// even power series in w = f beta^2, so every formula here is independent of
// the branch of f^{1/2}.

#include <utility>
#include <vector>

#include "wedgecrack/kernels.hpp"
#include "wedgecrack/quadrature.hpp"
#include "wedgecrack/roots.hpp"
#include "wedgecrack/specfun.hpp"

namespace wedgecrack {

enum class Side { plus, minus };

namespace detail {

// cosh(sqrt(w)) and sinh(sqrt(w))/sqrt(w) with derivatives in w; even in
// sqrt(w), hence branch-free.
struct EvenHyp {
  Cplx c, sig, dc, dsig;
};

inline EvenHyp even_hyp(Cplx w) {
  if (std::abs(w) < 0.25) {
    Cplx c = 1.0, sig = 1.0, dc = 0.5, dsig = 1.0 / 6.0;
    Cplx term = 1.0;
    double fact2k = 1.0;
    // sum to w^7: ~1e-19 truncation at |w| = 0.25
    for (int k = 1; k <= 7; ++k) {
      term *= w;
      fact2k *= (2.0 * k - 1.0) * (2.0 * k);
      c += term / fact2k;
      sig += term / (fact2k * (2.0 * k + 1.0));
      if (k >= 1) {
        dc += (k + 1.0) * term / (fact2k * (2.0 * k + 1.0) * (2.0 * k + 2.0));
        dsig += (k + 1.0) * term / (fact2k * (2.0 * k + 1.0) * (2.0 * k + 2.0) * (2.0 * k + 3.0));
      }
    }
    return {c, sig, dc, dsig};
  }
  const Cplx g = std::sqrt(w);
  const Cplx c = std::cosh(g);
  const Cplx sig = std::sinh(g) / g;
  return {c, sig, 0.5 * sig, (c - sig) / (2.0 * w)};
}

inline Cplx cot_pi_safe(Cplx s) {
  if (std::abs(s.imag()) > 20.0) {
    const Cplx P = std::exp(Cplx(0.0, 2.0 * kPi) * (s.imag() > 0 ? s : std::conj(s)));
    const Cplx v = Cplx(0.0, 1.0) * (P + 1.0) / (P - 1.0);
    return s.imag() > 0 ? v : std::conj(v);
  }
  return std::cos(kPi * s) / std::sin(kPi * s);
}

// Cancellation-free evaluation of the removable ratio (g(z) - g(0))/z^2 for
// small real z, for g analytic and even near 0: the ratio is recovered from
// Cauchy samples of g on a circle where the difference carries no
// cancellation. Trapezoidal sums on the circle converge geometrically.
template <class G>
class CauchyEvenRatio {
public:
  CauchyEvenRatio(G g, double radius, int points) : r_(radius), m_(points) {
    const auto g0 = g(Cplx(0.0, 0.0));
    zeta_.reserve(static_cast<std::size_t>(m_));
    h_.reserve(static_cast<std::size_t>(m_));
    for (int j = 0; j < m_; ++j) {
      const Cplx z = std::polar(r_, 2.0 * kPi * (j + 0.5) / m_);
      zeta_.push_back(z);
      h_.push_back((1.0 / (z * z)) * (g(z) - g0));
    }
  }

  double radius() const { return r_; }

  // valid for |tau| <= ~0.6 * radius
  auto eval(double tau) const {
    auto acc = h_.front();
    acc = 0.0 * acc;
    for (int j = 0; j < m_; ++j) {
      const Cplx w = zeta_[static_cast<std::size_t>(j)] /
                     (zeta_[static_cast<std::size_t>(j)] - tau);
      acc = acc + w * h_[static_cast<std::size_t>(j)];
    }
    return (1.0 / m_) * acc;
  }

private:
  double r_;
  int m_;
  std::vector<Cplx> zeta_;
  std::vector<decltype(std::declval<G>()(Cplx{}))> h_;
};

}  // namespace detail

struct FactorPoint {
  Cplx B, beta;
};

struct FactorPointDeriv {
  Cplx dlogB, dbeta;
};

// ---------------------------------------------------------------------------
// Matrix (Khrapkov) factorization data for one wedge angle.
// ---------------------------------------------------------------------------

class KhrapkovFactor {
public:
  KhrapkovFactor(double alpha, QuadratureSettings settings = tight_settings())
      : alpha_(alpha), quad_(settings) {
    if (!(alpha > 0.0 && alpha < kPi))
      throw validation_error("KhrapkovFactor: alpha must be in (0, pi)");
    quad_.validate();
    build();
  }

  static QuadratureSettings tight_settings() {
    QuadratureSettings s;
    s.rel_tol = 1e-12;
    s.abs_tol = 1e-13;
    s.truncation_guard = 1e-15;
    return s;
  }

  double alpha() const { return alpha_; }
  double q() const { return q_; }
  const QuadratureSettings& settings() const { return quad_; }
  double quad_error() const { return quad_error_; }

  // height above which the axis data has decayed below the truncation guard;
  // evaluation arbitrarily close to the imaginary axis is safe beyond it
  double safe_axis_height() const {
    return std::max(40.0, -std::log(quad_.truncation_guard) / (2.0 * alpha_)) + 2.0;
  }

  Mat2 x_inf() const { return Mat2::rotation(q_); }
  Mat2 x_inf_inv() const { return Mat2::rotation(-q_); }

  // cached limits and derivatives
  Mat2 x_plus_0, x_minus_0;            // Plemelj values at s = 0
  Mat2 x_minus_inv_0;
  Mat2 dx_minus_0, dx_minus_inv_0;     // d/ds at s = 0 from the D- side
  Mat2 x_plus_m1, x_plus_inv_m1;       // X+(-1) and inverse
  Mat2 dx_plus_m1, dx_plus_inv_m1;     // d/ds X+(-1), d/ds [X+(-1)]^{-1}
  Mat2 g0_0, g0_inv_0, g0_m1, g0_inv_m1;
  Mat2 g0_prime_m1;                    // d/ds G0 at s = -1
  Mat2 g0_prime_0;                     // d/ds G0 at s = 0 (= b2(0) J', not zero)
  double log_delta0 = 0.0, eps0 = 0.0;

  // B(s), beta(s) for s off the imaginary axis. Valid when |Re s| >= 0.4, or
  // anywhere once |Im s| clears the decayed part of the integrand.
  FactorPoint bbeta(Cplx s) const {
    check_interior(s);
    auto integrand = [&](double tau) -> Vec2 {
      const auto k = kernel_axis(tau);
      const Cplx kern = 1.0 / (tau * tau + s * s);
      return {k.log_delta * kern, (k.eps / k.w) * kern};
    };
    const auto r = integrate_decaying<Vec2>(integrand, 2.0 * alpha_, quad_);
    return {std::exp(-(s / (2.0 * kPi)) * r.value.x), -(s / kPi) * r.value.y};
  }

  FactorPointDeriv bbeta_deriv(Cplx s) const {
    check_interior(s);
    auto integrand = [&](double tau) -> Vec2 {
      const auto k = kernel_axis(tau);
      const Cplx t2 = tau * tau, s2 = s * s;
      const Cplx kern = (t2 - s2) / ((t2 + s2) * (t2 + s2));
      return {k.log_delta * kern, (k.eps / k.w) * kern};
    };
    const auto r = integrate_decaying<Vec2>(integrand, 2.0 * alpha_, quad_);
    return {-r.value.x / (2.0 * kPi), -r.value.y / kPi};
  }

  // The factor matrix assembled from an already-computed (B, beta) pair.
  Mat2 x_value(const FactorPoint& p, Cplx s) const { return assemble(p.B, p.beta, s); }

  // The factor matrix at an interior point of the requested half-plane.
  Mat2 x_matrix(Cplx s, Side side) const {
    if (side == Side::plus && s.real() > -1e-12 && std::abs(s.imag()) < 45.0)
      throw wrong_half_plane_error("x_matrix: plus factor requested right of the contour");
    if (side == Side::minus && s.real() < 1e-12 && std::abs(s.imag()) < 45.0)
      throw wrong_half_plane_error("x_matrix: minus factor requested left of the contour");
    const auto p = bbeta(s);
    return assemble(p.B, p.beta, s);
  }

  // Boundary values on the imaginary axis by the half-residue
  // Sokhotski-Plemelj formulas.
  Mat2 x_boundary(double tau0, Side side) const {
    const auto p = bbeta_boundary(tau0, side);
    return assemble(p.B, p.beta, Cplx(0.0, tau0));
  }

  FactorPoint bbeta_boundary(double tau0, Side side) const {
    const double sign = (side == Side::plus) ? 1.0 : -1.0;
    if (std::abs(tau0) < 1e-12) {
      return {std::exp(sign * 0.25 * log_delta0), sign * 0.5 * eps0};
    }
    auto g_logdet = [&](double tau) { return kernel_axis(tau).log_delta; };
    auto g_epsw = [&](double tau) {
      const auto k = kernel_axis(tau);
      return k.eps / k.w;
    };
    const auto pv_b = pv_symmetric_halfaxis<double>(g_logdet, tau0, 2.0 * alpha_, quad_);
    const auto pv_beta = pv_symmetric_halfaxis<double>(g_epsw, tau0, 2.0 * alpha_, quad_);
    const auto k0 = kernel_axis(tau0);
    const Cplx expo = -Cplx(0.0, pv_b.value) / (2.0 * kPi) + sign * 0.25 * k0.log_delta;
    const Cplx beta = -Cplx(0.0, pv_beta.value) / kPi + sign * 0.5 * (k0.eps / k0.w);
    return {std::exp(expo), beta};
  }

  // X-(s_n) and [X+(-s_n)]^{-1} from a single (B, beta) evaluation, using
  // B(-s) = 1/B(s), beta(-s) = -beta(s).
  struct RootFactors {
    Mat2 x_minus_at;       // X-(s_n)
    Mat2 x_plus_inv_at_neg;  // [X+(-s_n)]^{-1}
  };

  RootFactors factors_at_root(Cplx s) const {
    FactorPoint p;
    if (std::abs(s) < 1e-12) {
      // s0 = 0: boundary values; X+(0) = [X-(0)]^{-1}
      return {x_minus_0, x_minus_0};
    }
    p = bbeta(s);
    const Mat2 xm = assemble(p.B, p.beta, s);
    const Mat2 xp_neg = assemble(1.0 / p.B, -p.beta, -s);
    return {xm, xp_neg.inverse()};
  }

  // X with its s-derivative at an interior point (used at s = -1 and in the
  // finite-difference cross-checks).
  struct XWithDeriv {
    Mat2 x, dx;
  };

  XWithDeriv x_with_deriv(Cplx s) const {
    const auto p = bbeta(s);
    const auto d = bbeta_deriv(s);
    return assemble_with_deriv(p.B, p.beta, d.dlogB, d.dbeta, s);
  }

  // G0 boundary reconstruction X+(t)[X-(t)]^{-1} at t = i tau.
  Mat2 g0_from_factors(double tau) const {
    return x_boundary(tau, Side::plus) * x_boundary(tau, Side::minus).inverse();
  }

private:
  double alpha_;
  QuadratureSettings quad_;
  double q_ = 0.0;
  mutable double quad_error_ = 0.0;

  AxisKernel kernel_axis(double tau) const { return axis_kernel(alpha_, tau); }

  void check_interior(Cplx s) const {
    // the kernel 1/(tau^2+s^2) pinches the path when Re s -> 0 with Im s in
    // the live range of the integrand; a finite Re s only sharpens a peak
    if (std::abs(s.real()) < 5e-3 && std::abs(s.imag()) < safe_axis_height() - 1.0)
      throw wrong_half_plane_error(
          "bbeta: evaluation too close to the contour; use the boundary formulas");
  }

  Mat2 assemble(Cplx B, Cplx beta, Cplx s) const {
    const double sa = std::sin(alpha_), l = std::cos(alpha_);
    const Cplx f = 1.0 - s * s * (sa * sa);
    const auto h = detail::even_hyp(f * beta * beta);
    const Cplx C = h.c, S = beta * h.sig;
    const Cplx sp = (s - 1.0) * sa * S, sm = (-s - 1.0) * sa * S;
    return B * Mat2{C + l * S, sp, sm, C - l * S};
  }

  XWithDeriv assemble_with_deriv(Cplx B, Cplx beta, Cplx dlogB, Cplx dbeta, Cplx s) const {
    const double sa = std::sin(alpha_), l = std::cos(alpha_);
    const Cplx f = 1.0 - s * s * (sa * sa);
    const Cplx df = -2.0 * s * (sa * sa);
    const Cplx w = f * beta * beta;
    const Cplx dw = df * beta * beta + 2.0 * f * beta * dbeta;
    const auto h = detail::even_hyp(w);
    const Cplx C = h.c, S = beta * h.sig;
    const Cplx dC = h.dc * dw;
    const Cplx dS = dbeta * h.sig + beta * h.dsig * dw;
    const Cplx mp = (s - 1.0) * sa, mm = (-s - 1.0) * sa;
    const Mat2 core{C + l * S, mp * S, mm * S, C - l * S};
    const Mat2 dcore{dC + l * dS, sa * S + mp * dS, -sa * S + mm * dS, dC - l * dS};
    const Mat2 x = B * core;
    return {x, dlogB * x + B * dcore};
  }

  // d/ds of (B, beta) at s = 0 from the D- side: the subtracted kernels
  // (t^2 - s^2)/(t^2 + s^2)^2 integrate the constant part to zero, so only
  // the variation of the axis data enters. Near tau = 0 the second divided
  // difference is rebuilt from Cauchy circle samples to avoid cancellation.
  FactorPointDeriv bbeta_deriv_zero_minus() const {
    // g(z) = (log Delta(iz), eps(iz)/f^{1/2}(iz)), analytic and even in
    // |z| < 1/2 (nearest singularities: the tan(pi s) poles at s = +-1/2).
    auto g = [&](Cplx z) -> Vec2 {
      const auto k = kernel_eigens(Cplx(0.0, 1.0) * z, alpha_);
      const Cplx logd = std::log(k.lambda1 * k.lambda2);
      return {logd, k.eps / k.f_half};
    };
    const detail::CauchyEvenRatio ratio(g, 0.35, 128);
    const double cut = 0.2;
    auto integrand = [&](double tau) -> Vec2 {
      if (tau < cut) {
        const Vec2 v = ratio.eval(tau);
        return v.real_part();
      }
      const auto k = kernel_axis(tau);
      const double t2 = tau * tau;
      return {(k.log_delta - log_delta0) / t2, (k.eps / k.w - eps0) / t2};
    };
    // the subtracted integrand decays like -g(0)/tau^2 once the kernel data
    // dies off; integrate the head and restore the algebraic tail exactly
    const double tail_start =
        std::max(40.0, -std::log(quad_.truncation_guard) / (2.0 * alpha_));
    Vec2 head{0.0, 0.0};
    double lo = 0.0, step = 1.0;
    while (lo < tail_start) {
      const double hi = std::min(lo + step, tail_start);
      head += integrate_adaptive<Vec2>(integrand, lo, hi, quad_).value;
      lo = hi;
      step *= 1.6;
    }
    const Vec2 total = head + Vec2{-log_delta0 / tail_start, -eps0 / tail_start};
    return {-total.x / (2.0 * kPi), -total.y / kPi};
  }

  void build() {
    const auto k0 = kernel_axis(0.0);
    log_delta0 = k0.log_delta;
    eps0 = k0.eps;

    // q of the rotation limit X_inf (3.28-type integral)
    auto qint = [&](double tau) {
      const auto k = kernel_axis(tau);
      return k.eps / k.w;
    };
    const auto qres = integrate_decaying<double>(qint, 2.0 * alpha_, quad_);
    q_ = std::sin(alpha_) / kPi * qres.value;
    quad_error_ = std::max(quad_error_, qres.error);

    // Plemelj values at s = 0 (exact closed forms: the PV parts vanish)
    x_plus_0 = assemble(std::exp(0.25 * log_delta0), 0.5 * eps0, Cplx(0.0, 0.0));
    x_minus_0 = assemble(std::exp(-0.25 * log_delta0), -0.5 * eps0, Cplx(0.0, 0.0));
    x_minus_inv_0 = x_minus_0.inverse();
    if (max_abs(x_minus_0 * x_plus_0 - Mat2::identity()) > 1e-8)
      throw numerical_error("KhrapkovFactor: X-(0) X+(0) failed to reproduce the identity");

    // derivatives at 0 from the minus side
    {
      const auto d0 = bbeta_deriv_zero_minus();
      const auto xd = assemble_with_deriv(std::exp(-0.25 * log_delta0), -0.5 * eps0, d0.dlogB,
                                          d0.dbeta, Cplx(0.0, 0.0));
      dx_minus_0 = xd.dx;
      dx_minus_inv_0 = -1.0 * (x_minus_inv_0 * dx_minus_0 * x_minus_inv_0);
    }

    // X+(-1) and its derivative
    {
      const auto xd = x_with_deriv(Cplx(-1.0, 0.0));
      x_plus_m1 = xd.x;
      dx_plus_m1 = xd.dx;
      x_plus_inv_m1 = x_plus_m1.inverse();
      dx_plus_inv_m1 = -1.0 * (x_plus_inv_m1 * dx_plus_m1 * x_plus_inv_m1);
    }

    g0_0 = g0_side(Cplx(0.0, 0.0), alpha_);
    g0_inv_0 = g0_0.inverse();
    g0_m1 = g0_side(Cplx(-1.0, 0.0), alpha_);
    g0_inv_m1 = g0_m1.inverse();
    {
      // complex-step derivatives: exact to machine precision for the real
      // analytic entries (no subtractive cancellation)
      const double h = 1e-8;
      const Mat2 gh = g0_side(Cplx(-1.0, h), alpha_);
      g0_prime_m1 = Mat2{gh.a.imag() / h, gh.b.imag() / h, gh.c.imag() / h, gh.d.imag() / h};
      const Mat2 g0h = g0_side(Cplx(0.0, h), alpha_);
      g0_prime_0 = Mat2{g0h.a.imag() / h, g0h.b.imag() / h, g0h.c.imag() / h, g0h.d.imag() / h};
    }
  }
};

// Residue of G(s) at a pole of the merged table (5.14-type formulas):
// integers carry (4/pi) G0(+-n); sigma zeros carry the explicit matrix over
// d'(sigma).
inline Mat2 residue_g(const Root& root, double alpha, bool at_negative) {
  if (root.kind == RootKind::integer_pole) {
    const double n = root.s.real();
    const Cplx at = at_negative ? Cplx(-n, 0.0) : Cplx(n, 0.0);
    return (4.0 / kPi) * g0_side(at, alpha);
  }
  const Cplx sg = root.s;
  const double sa = std::sin(alpha), s2a = std::sin(2.0 * alpha);
  const Cplx denom = 2.0 * sg * (sa * sa) - alpha * std::sin(2.0 * alpha * sg);
  const Cplx sgn = at_negative ? -1.0 : 1.0;
  const Cplx s2as = std::sin(2.0 * alpha * sg);
  Mat2 m{-s2as - sg * s2a, -2.0 * sg * (sgn * sg - 1.0) * (sa * sa),
         2.0 * sg * (sgn * sg + 1.0) * (sa * sa), -s2as + sg * s2a};
  return (1.0 / denom) * m;
}

// ---------------------------------------------------------------------------
// Scalar factorization for the half-plane problem (7.5-type formulas).
// ---------------------------------------------------------------------------

class ScalarFactor {
public:
  explicit ScalarFactor(QuadratureSettings settings = KhrapkovFactor::tight_settings())
      : quad_(settings) {
    quad_.validate();
    build();
  }

  const QuadratureSettings& settings() const { return quad_; }

  double x_minus_0 = 0.0;   // pi / sqrt(pi^2 - 4)
  double l_minus_0 = 0.0;   // sqrt(pi / (pi^2 - 4))
  double x1 = 0.0;          // log-derivative integral of X- at 0
  double l0_const = 0.0;    // x1 + log 2
  double gamma_koiter = 0.0;
  double quad_error = 0.0;

  // X(s) = exp(-(s/pi) int_0^inf log L0(i tau) dtau / (tau^2 + s^2));
  // the plus/minus factor according to the half-plane of s.
  Cplx x_side(Cplx s) const {
    if (std::abs(s.real()) < 5e-3 && std::abs(s.imag()) < 45.0)
      throw wrong_half_plane_error("ScalarFactor::x_side: use the boundary formulas");
    auto integrand = [&](double tau) { return log_l0_axis(tau) / (tau * tau + s * s); };
    const auto r = integrate_decaying<Cplx>(integrand, kPi, quad_);
    return std::exp(-(s / kPi) * r.value);
  }

  Cplx x_boundary(double tau0, Side side) const {
    const double sign = (side == Side::plus) ? 1.0 : -1.0;
    if (std::abs(tau0) < 1e-12) return std::exp(sign * 0.5 * log_l0_axis(0.0));
    const auto pv = pv_symmetric_halfaxis<double>([](double t) { return log_l0_axis(t); }, tau0,
                                                  kPi, quad_);
    return std::exp(-Cplx(0.0, pv.value) / kPi + sign * 0.5 * log_l0_axis(tau0));
  }

  // L+-(s) = a+-(s) X+-(s)
  Cplx l_plus(Cplx s) const { return a_plus(s) * x_side(s); }
  Cplx l_minus(Cplx s) const { return a_minus(s) * x_side(s); }
  Cplx l_plus_boundary(double tau, Side = Side::plus) const {
    return a_plus(Cplx(0.0, tau)) * x_boundary(tau, Side::plus);
  }
  Cplx l_minus_boundary(double tau) const {
    return a_minus(Cplx(0.0, tau)) * x_boundary(tau, Side::minus);
  }

  double l_plus_m1() const { return l_plus_m1_; }

private:
  QuadratureSettings quad_;
  double l_plus_m1_ = 0.0;

  void build() {
    x_minus_0 = std::exp(-0.5 * log_l0_axis(0.0));
    l_minus_0 = x_minus_0 / kSqrtPi;  // a-(0) = 1/sqrt(pi)

    // X1: bounded integrand with limit pi^2/(3 (4 - pi^2)) at 0, exponential
    // decay at rate pi. Near 0 both numerator and denominator vanish like
    // tau^2; the Bernoulli series of x coth x and sinh^2 x remove the
    // cancellation.
    auto x1_integrand = [](double tau) {
      const double x = kPi * tau / 2.0;
      if (x <= 0.2) {
        const double x2 = x * x;
        // (x coth x - 1)/x^2 and (sinh^2 x)/x^2
        const double num = 1.0 / 3.0 +
                           x2 * (-1.0 / 45.0 +
                                 x2 * (2.0 / 945.0 + x2 * (-1.0 / 4725.0 + x2 * (2.0 / 93555.0))));
        const double sh2 = 1.0 + x2 * (1.0 / 3.0 +
                                       x2 * (2.0 / 45.0 + x2 * (1.0 / 315.0 + x2 * (2.0 / 14175.0))));
        // tau^2 - sinh^2 x = tau^2 (1 - (pi^2/4) sh2)
        return (kPi * kPi / 4.0) * num / (1.0 - (kPi * kPi / 4.0) * sh2);
      }
      const double u = std::exp(-x);
      const double sh = (1.0 - u * u) / (2.0 * u);
      const double ch = (1.0 + u * u) / (2.0 * u);
      return (x * (ch / sh) - 1.0) / (tau * tau - sh * sh);
    };
    const auto rx1 = integrate_decaying<double>(x1_integrand, kPi, quad_);
    x1 = 2.0 / kPi * rx1.value;
    l0_const = x1 + kLog2;
    quad_error = std::max(quad_error, rx1.error);

    // gamma = 1/X+(-1) (7.33-type exponential integral)
    auto gamma_integrand = [](double tau) { return log_l0_axis(tau) / (tau * tau + 1.0); };
    const auto rg = integrate_decaying<double>(gamma_integrand, kPi, quad_);
    gamma_koiter = std::exp(-rg.value / kPi);
    quad_error = std::max(quad_error, rg.error);

    // L+(-1) = a+(-1) X+(-1) = 1/(sqrt(pi) gamma)
    l_plus_m1_ = 1.0 / (kSqrtPi * gamma_koiter);
  }
};

// Koiter's constant for the edge crack normal to a half-plane boundary.
inline double koiter_gamma(QuadratureSettings settings = KhrapkovFactor::tight_settings()) {
  auto integrand = [](double tau) { return log_l0_axis(tau) / (tau * tau + 1.0); };
  const auto r = integrate_decaying<double>(integrand, kPi, settings);
  return std::exp(-r.value / kPi);
}

// Logarithmic-derivative constant of L- at 0.
inline double l0_const(const ScalarFactor& fact) { return fact.l0_const; }

}  // namespace wedgecrack
