#pragma once

// Numerical integration: adaptive Gauss-Legendre panels, semi-infinite
// integrals of exponentially decaying integrands, Cauchy principal values
// with singularity subtraction, and the bent Mellin contour used by the
// weight-matrix quadrature.

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "wedgecrack/common.hpp"

namespace wedgecrack {

struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_panels = 4000;
  double truncation_guard = 1e-14;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(truncation_guard > 0.0))
      throw validation_error("QuadratureSettings: tolerances must be > 0");
    if (max_panels < 4) throw validation_error("QuadratureSettings: max_panels >= 4");
  }
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
};

namespace detail {

inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(Cplx v) { return std::abs(v); }
inline double quad_norm(const Vec2& v) { return v.norm(); }
inline double quad_norm(const Mat2& m) { return m.max_abs(); }

inline double quad_conj(double v) { return v; }
inline Cplx quad_conj(Cplx v) { return std::conj(v); }
inline Vec2 quad_conj(const Vec2& v) { return v.conj(); }
inline Mat2 quad_conj(const Mat2& m) { return m.conj(); }

template <class T>
T quad_zero() {
  return T{};
}

// Gauss-Legendre nodes/weights on [-1,1], generated once by Newton iteration
// on the Legendre recurrence.
template <int N>
struct GaussRule {
  std::array<double, N> x{}, w{};

  GaussRule() {
    const int m = (N + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (N + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < N; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = N * (z * p1 - p2) / (z * z - 1.0);
        const double dz = p1 / pp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      x[static_cast<std::size_t>(i)] = -z;
      x[static_cast<std::size_t>(N - 1 - i)] = z;
      w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[static_cast<std::size_t>(N - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
  }
};

inline const GaussRule<12>& gauss12() {
  static const GaussRule<12> rule;
  return rule;
}
inline const GaussRule<24>& gauss24() {
  static const GaussRule<24> rule;
  return rule;
}

template <class T, class F, int N>
T gauss_panel(F&& f, double a, double b, const GaussRule<N>& rule) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  T acc = quad_zero<T>();
  for (int i = 0; i < N; ++i) {
    acc = acc + rule.w[static_cast<std::size_t>(i)] *
                    f(mid + half * rule.x[static_cast<std::size_t>(i)]);
  }
  return half * acc;
}

}  // namespace detail

// Adaptive integration of f over [a, b]. The 12/24 point pair supplies the
// error estimate; panels split worst-first until the global target is met.
template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, double a, double b, const QuadratureSettings& settings,
                                 int initial_panels = 1) {
  settings.validate();
  struct Panel {
    double a, b;
    T value;
    double err;
  };

  auto eval_panel = [&](double pa, double pb) -> Panel {
    const T coarse = detail::gauss_panel<T>(f, pa, pb, detail::gauss12());
    const T fine = detail::gauss_panel<T>(f, pa, pb, detail::gauss24());
    return {pa, pb, fine, detail::quad_norm(fine - coarse)};
  };

  std::vector<Panel> panels;
  initial_panels = std::max(1, initial_panels);
  panels.reserve(static_cast<std::size_t>(initial_panels) + 16);
  for (int i = 0; i < initial_panels; ++i) {
    const double pa = a + (b - a) * i / initial_panels;
    const double pb = a + (b - a) * (i + 1) / initial_panels;
    panels.push_back(eval_panel(pa, pb));
  }

  for (;;) {
    T total = detail::quad_zero<T>();
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total = total + panels[i].value;
      err += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    const double target = std::max(settings.abs_tol, settings.rel_tol * detail::quad_norm(total));
    if (err <= target || panels[worst].err == 0.0) return {total, err};
    if (static_cast<int>(panels.size()) >= settings.max_panels)
      throw non_convergence_error("integrate_adaptive: panel budget exhausted");
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    panels[worst] = eval_panel(p.a, mid);
    panels.push_back(eval_panel(mid, p.b));
  }
}

// Integral over [0, inf) of an integrand bounded by C exp(-decay_rate * tau)
// beyond a finite head. The truncation point T keeps the dropped tail below
// truncation_guard; panels grow geometrically to track the decay.
template <class T, class F>
QuadResult<T> integrate_decaying(F&& f, double decay_rate, const QuadratureSettings& settings) {
  settings.validate();
  if (!(decay_rate > 0.0))
    throw validation_error("integrate_decaying: decay_rate must be > 0");
  const double tail =
      std::max(40.0, -std::log(settings.truncation_guard) / decay_rate);

  std::vector<double> edges{0.0};
  double step = std::min(1.0, tail / 8.0);
  double pos = 0.0;
  while (pos < tail) {
    pos = std::min(pos + step, tail);
    edges.push_back(pos);
    step *= 1.6;
  }

  T total = detail::quad_zero<T>();
  double err = 0.0;
  QuadratureSettings per = settings;
  per.abs_tol = settings.abs_tol / static_cast<double>(edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto piece = integrate_adaptive<T>(f, edges[i], edges[i + 1], per);
    total = total + piece.value;
    err += piece.error;
  }
  return {total, err + settings.truncation_guard};
}

// Cauchy principal value over a finite interval (a, b) with t inside:
//   P.V. int f(tau)/(tau - t) dtau
//     = int (f(tau) - f(t))/(tau - t) dtau + f(t) log((b - t)/(t - a)).
template <class T, class F>
QuadResult<T> pv_cauchy(F&& f, double t, double a, double b, const QuadratureSettings& settings) {
  if (!(a < t && t < b)) throw validation_error("pv_cauchy: t must lie inside (a, b)");
  const T ft = f(t);
  auto reg = [&](double tau) -> T {
    const double d = tau - t;
    if (std::abs(d) < 1e-9) {
      // symmetric difference tracks f'(t) through the removable point
      const double h = 1e-6 * std::max(1.0, std::abs(t));
      return (1.0 / (2.0 * h)) * (f(t + h) - f(t - h));
    }
    return (1.0 / d) * (f(tau) - ft);
  };
  auto res = integrate_adaptive<T>(reg, a, b, settings, 8);
  res.value = res.value + std::log((b - t) / (t - a)) * ft;
  return res;
}

// P.V. int_0^inf g(tau) * tau0 / (tau^2 - tau0^2) dtau for real-analytic g
// decaying like exp(-decay_rate tau). Uses that the bare kernel has zero
// principal value over (0, inf), so subtracting g(tau0) regularises exactly;
// the remaining tail beyond T is restored in closed form.
template <class T, class F>
QuadResult<T> pv_symmetric_halfaxis(F&& g, double tau0, double decay_rate,
                                    const QuadratureSettings& settings) {
  settings.validate();
  if (!(tau0 > 0.0)) throw validation_error("pv_symmetric_halfaxis: tau0 must be > 0");
  const T g0 = g(tau0);
  const double tail =
      std::max({40.0, 2.0 * tau0 + 10.0, -std::log(settings.truncation_guard) / decay_rate});

  auto reg = [&](double tau) -> T {
    const double denom = tau * tau - tau0 * tau0;
    if (std::abs(tau - tau0) < 1e-9 * std::max(1.0, tau0)) {
      const double h = 1e-6 * std::max(1.0, tau0);
      return (0.5 / h) * 0.5 * (g(tau0 + h) - g(tau0 - h));
    }
    return (tau0 / denom) * (g(tau) - g0);
  };

  // refined panels around the subtracted point
  std::vector<double> edges{0.0, 0.5 * tau0, 0.9 * tau0, tau0, 1.1 * tau0, 2.0 * tau0, tail};
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  T total = detail::quad_zero<T>();
  double err = 0.0;
  QuadratureSettings per = settings;
  per.abs_tol = settings.abs_tol / 6.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1])) continue;
    auto piece = integrate_adaptive<T>(reg, edges[i], edges[i + 1], per, 4);
    total = total + piece.value;
    err += piece.error;
  }
  // beyond T: g ~ 0, so the subtracted term integrates in closed form
  total = total + (-0.5 * std::log((tail + tau0) / (tail - tau0))) * g0;
  return {total, err + settings.truncation_guard};
}

// Contour integral int_Omega F(t) r^t dt for r in (0, 1), Omega the upward
// vertical line Re t = omega. F must satisfy F(conj t) = conj F(t) and be
// analytic right of Omega above/below |Im t| = turn_height (poles there are
// confined near the real axis). The contour runs up the segment
// [omega, omega + i turn_height] and then out along a 45 degree ray where
// r^t decays at rate |log r|/sqrt(2); the lower half follows by symmetry.
template <class T, class F>
QuadResult<T> mellin_contour(F&& f, double omega, double r, double turn_height,
                             const QuadratureSettings& settings) {
  settings.validate();
  if (!(r > 0.0 && r < 1.0)) throw validation_error("mellin_contour: r must lie in (0,1)");
  if (!(turn_height > 0.0)) throw validation_error("mellin_contour: turn_height must be > 0");
  const double logr = std::log(r);

  // vertical piece: t = omega + i tau, dt = i dtau
  auto vertical = [&](double tau) -> T {
    const Cplx t(omega, tau);
    return Cplx(0.0, 1.0) * std::exp(t * logr) * f(t);
  };
  const int osc_panels =
      std::max(4, static_cast<int>(turn_height * std::abs(logr) / (2.0 * kPi)) + 1);
  auto seg = integrate_adaptive<T>(vertical, 0.0, turn_height, settings, osc_panels);

  // ray piece: t = omega + i turn_height + rho e^{i pi/4}
  const Cplx dir = std::polar(1.0, kPi / 4.0);
  const Cplx corner(omega, turn_height);
  auto ray = [&](double rho) -> T {
    const Cplx t = corner + rho * dir;
    return dir * std::exp(t * logr) * f(t);
  };
  const double ray_decay = -logr / std::sqrt(2.0);
  auto tailpiece = integrate_decaying<T>(ray, ray_decay, settings);

  const T upper = seg.value + tailpiece.value;
  // lower half-contour is the Schwarz reflection: total = upper - conj(upper)
  return {upper - detail::quad_conj(upper), 2.0 * (seg.error + tailpiece.error)};
}

}  // namespace wedgecrack
