#pragma once

// Edge crack along a wedge side: stress intensity factors for constant
// loads, general loads via the weight matrix or the Cauchy-integral route,
// and eigen-solution loading of the reentrant wedge.

#include <functional>
#include <memory>

#include "wedgecrack/factor.hpp"

namespace wedgecrack {

// Loads are described by the crack-line stress samples sigma(br) =
// (sigma_theta, tau_rtheta) = -(p_theta, p_rtheta) on r in (0, 1), plus an
// optional closed form of the transform g-(s) = int_0^1 sigma(br) r^s dr.
struct EdgeLoad {
  std::function<Vec2(double)> sigma;
  std::function<Vec2(Cplx)> transform;  // empty -> computed by quadrature
  Vec2 sigma_at_tip{0.0, 0.0};          // sigma(b^-), used for tail subtraction
  double min_power = 0.0;  // sigma ~ r^{min_power} as r -> 0

  static EdgeLoad constant(double p1, double p2) {
    EdgeLoad load;
    const Vec2 val{-p1, -p2};
    load.sigma = [val](double) { return val; };
    load.transform = [val](Cplx s) { return (1.0 / (s + 1.0)) * val; };
    load.sigma_at_tip = val;
    return load;
  }

  // sigma(br) = coef * r^{mu-1}
  static EdgeLoad power(Vec2 coef, double mu) {
    EdgeLoad load;
    load.sigma = [coef, mu](double r) { return std::pow(r, mu - 1.0) * coef; };
    load.transform = [coef, mu](Cplx s) { return (1.0 / (s + mu)) * coef; };
    load.sigma_at_tip = coef;
    load.min_power = mu - 1.0;
    return load;
  }
};

// g-(s) for an arbitrary sampler, via the substitution r = exp(-x).
inline Vec2 edge_load_transform(const EdgeLoad& load, Cplx s, const QuadratureSettings& qs) {
  if (load.transform) return load.transform(s);
  auto f = [&](double x) -> Vec2 { return std::exp(-(s + 1.0) * x) * load.sigma(std::exp(-x)); };
  const double decay = s.real() + 1.0 + load.min_power;
  if (!(decay > 0.05))
    throw validation_error("edge_load_transform: load too singular for this contour");
  return integrate_decaying<Vec2>(f, decay, qs).value;
}

struct EdgeSif {
  double k1 = 0.0, k2 = 0.0;  // K_I, K_II
  Mat2 dmat;                  // b^{-1/2} K = D P decomposition (constant load)
  double quad_error = 0.0;

  Vec2 k() const { return {k1, k2}; }
};

// Constant loads p_theta = P1, p_rtheta = P2 on the faces:
// K = 2 sqrt(2 b / pi) Xinf^{-1} X+(-1) P.
inline EdgeSif sif_edge_constant(const KhrapkovFactor& fact, double b, double p1, double p2) {
  if (!(b > 0.0)) throw validation_error("sif_edge_constant: b must be > 0");
  EdgeSif out;
  out.dmat = 2.0 * std::sqrt(2.0 / kPi) * (fact.x_inf_inv() * fact.x_plus_m1);
  const Vec2 k = std::sqrt(b) * (out.dmat * Vec2{p1, p2});
  out.k1 = k.x.real();
  out.k2 = k.y.real();
  out.quad_error = fact.quad_error();
  return out;
}

namespace detail {

// K+(t) X+(t), continued into the right half-plane through
// K+ X+ = (K-/4) G X- (the bent contour stays above every kernel pole).
inline Mat2 kx_plus_continued(const KhrapkovFactor& fact, Cplx t) {
  const auto p = fact.bbeta(t);
  const Mat2 x = fact.x_value(p, t);
  if (t.real() <= -0.05) return k_plus(t) * x;
  const Mat2 g = 4.0 * cot_pi_safe(t) * g0_side(t, fact.alpha());
  return (k_minus(t) / 4.0) * (g * x);
}

// Barycentric Chebyshev interpolation on first-kind nodes mapped to [0, 1].
template <class T>
class ChebSeries {
public:
  template <class F>
  ChebSeries(F&& f, int n) : n_(n) {
    nodes_.resize(static_cast<std::size_t>(n));
    vals_.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double x = std::cos(kPi * (k + 0.5) / n);
      nodes_[static_cast<std::size_t>(k)] = 0.5 * (x + 1.0);
      vals_.push_back(f(nodes_[static_cast<std::size_t>(k)]));
    }
  }

  T operator()(double u) const {
    // barycentric weights for first-kind nodes: (-1)^k sin((2k+1)pi/2n)
    T num{};
    double den = 0.0;
    for (int k = 0; k < n_; ++k) {
      const double d = u - nodes_[static_cast<std::size_t>(k)];
      if (std::abs(d) < 1e-14) return vals_[static_cast<std::size_t>(k)];
      const double w = ((k % 2) ? -1.0 : 1.0) * std::sin((2.0 * k + 1.0) * kPi / (2.0 * n_));
      num = num + (w / d) * vals_[static_cast<std::size_t>(k)];
      den += w / d;
    }
    return (1.0 / den) * num;
  }

private:
  int n_;
  std::vector<double> nodes_;
  std::vector<T> vals_;
};

}  // namespace detail

// Weight matrix W(r): K = int_0^1 W(r) sigma(br) dr, entries real on (0,1).
// Convergence slows as r -> 1 where the contour decay rate |log r|
// degenerates (the sqrt tip singularity of W).
inline Mat2 weight_matrix(const KhrapkovFactor& fact, double b, double r,
                          QuadratureSettings qs = {}) {
  if (!(r > 0.0 && r < 1.0)) throw validation_error("weight_matrix: r must lie in (0,1)");
  if (!(b > 0.0)) throw validation_error("weight_matrix: b must be > 0");
  const double omega = -0.25;
  // the bent rays cross the imaginary axis; the turn height keeps the
  // crossing above the live range of the factorization integrands
  const double turn = fact.safe_axis_height() + 0.5;
  // the inner factor quadratures carry ~1e-12 relative noise; demanding more
  // from the contour only spins the adaptive refinement
  qs.rel_tol = std::max(qs.rel_tol, 1e-11);
  auto f = [&](Cplx t) { return detail::kx_plus_continued(fact, t); };
  const auto contour = mellin_contour<Mat2>(f, omega, r, turn, qs);
  const Mat2 w = (Cplx(0.0, -1.0) / kPi) * std::sqrt(b / 2.0) * (fact.x_inf_inv() * contour.value);
  return w.real_part();
}

// SIFs by integrating the weight matrix against the load. In u = sqrt(1-r)
// the combination u W(1-u^2) is smooth on [0,1], so W is tabulated once on a
// Chebyshev grid and the load integral runs over the interpolant.
inline EdgeSif sif_edge_weighted(const KhrapkovFactor& fact, double b, const EdgeLoad& load,
                                 int cheb_nodes = 32) {
  QuadratureSettings wq;
  wq.rel_tol = 1e-9;
  wq.abs_tol = 1e-11;
  detail::ChebSeries<Mat2> table(
      [&](double u) -> Mat2 {
        const double r = 1.0 - u * u;
        return u * weight_matrix(fact, b, r, wq);
      },
      cheb_nodes);
  auto w_of_r = [&](double r) -> Mat2 {
    const double u = std::sqrt(std::max(0.0, 1.0 - r));
    return (1.0 / std::max(u, 1e-300)) * table(u);
  };

  QuadratureSettings rq;
  rq.rel_tol = 1e-9;
  rq.abs_tol = 1e-11;

  // tip region r in (r0, 1): u = sqrt(1-r) removes the weight singularity
  const double r0 = 0.3, u0 = std::sqrt(1.0 - r0), x0 = -std::log(r0);
  auto tip = [&](double u) -> Vec2 { return 2.0 * (table(u) * load.sigma(1.0 - u * u)); };
  const auto tip_part = integrate_adaptive<Vec2>(tip, 0.0, u0, rq, 8);

  // vertex region r in (0, r0): x = x0 + y, r = exp(-x) handles
  // power-singular loads through the exponential decay rate 1 + min_power
  auto vertex = [&](double y) -> Vec2 {
    const double r = std::exp(-(x0 + y));
    return r * (w_of_r(r) * load.sigma(r));
  };
  const auto vertex_part = integrate_decaying<Vec2>(vertex, 1.0 + load.min_power, rq);

  EdgeSif out;
  const Vec2 k = tip_part.value + vertex_part.value;
  out.k1 = k.x.real();
  out.k2 = k.y.real();
  out.quad_error = tip_part.error + vertex_part.error;
  out.dmat = 2.0 * std::sqrt(2.0 / kPi) * (fact.x_inf_inv() * fact.x_plus_m1);
  return out;
}

// ---------------------------------------------------------------------------
// Eigen-solutions of the traction-free reentrant wedge (total angle pi+alpha)
// ---------------------------------------------------------------------------

enum class EigenKind { first, second };

struct EigenSolution {
  double alpha = 0.0;
  double mu = 0.0;      // stress exponent: fields decay like r^{mu-1}
  double k_star = 0.0;  // shear-to-normal ratio on the crack line
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;  // normalised so k_theta(0) = 1
  double d0 = 0.0;

  // angular stress profiles (exponent s = mu - 1)
  double k_theta(double theta) const {
    const double s = mu - 1.0;
    return c1 * std::cos(s * theta) + c2 * std::cos((s + 2.0) * theta) +
           c3 * std::sin(s * theta) + c4 * std::sin((s + 2.0) * theta);
  }
  double k_rtheta(double theta) const {
    const double s = mu - 1.0;
    return s / (s + 2.0) * c1 * std::sin(s * theta) + c2 * std::sin((s + 2.0) * theta) -
           s / (s + 2.0) * c3 * std::cos(s * theta) - c4 * std::cos((s + 2.0) * theta);
  }
};

inline EigenSolution eigen_solution(double alpha, EigenKind which) {
  const auto cr = char_roots(alpha);
  EigenSolution e;
  e.alpha = alpha;
  if (which == EigenKind::second) {
    if (!cr.mu0)
      throw validation_error("eigen_solution: no second characteristic root at this angle");
    e.mu = *cr.mu0;
  } else {
    e.mu = cr.mu;
  }
  const double mu = e.mu, sa = std::sin(alpha);
  e.d0 = (mu - 1.0) * std::cos(mu * kPi) - mu * std::cos(mu * kPi - 2.0 * alpha) +
         std::cos(mu * (kPi + 2.0 * alpha));
  e.c4 = e.d0 / (4.0 * mu * std::sin(mu * kPi) * sa * sa);
  const double scale = e.c4 / e.d0;
  e.c1 = scale * ((mu + 1.0) * std::sin(mu * kPi) + std::sin(mu * (kPi + 2.0 * alpha)) -
                  mu * std::sin(mu * kPi + 2.0 * alpha));
  e.c2 = scale * ((mu - 1.0) * std::sin(mu * kPi) - std::sin(mu * (kPi + 2.0 * alpha)) -
                  mu * std::sin(mu * kPi - 2.0 * alpha));
  e.c3 = scale * ((mu + 1.0) * std::cos(mu * kPi) - std::cos(mu * (kPi + 2.0 * alpha)) -
                  mu * std::cos(mu * kPi + 2.0 * alpha));
  e.k_star = (mu * (mu + 1.0) * std::cos(mu * kPi - 2.0 * alpha) +
              mu * (mu - 1.0) * std::cos(mu * kPi + 2.0 * alpha) -
              2.0 * std::cos(mu * (kPi + 2.0 * alpha)) -
              2.0 * (mu * mu - 1.0) * std::cos(mu * kPi)) /
             (4.0 * mu * (mu + 1.0) * std::sin(mu * kPi) * sa * sa);
  return e;
}

// Eigen-solution loading p_theta = k_theta0 r^{mu-1}, p_rtheta = k* k_theta0
// r^{mu-1} on (0, b):  K / (b^{mu-1/2} k_theta0) = -sqrt2 K+(-mu) Xinf^{-1}
// X+(-mu) (1, k*)^T, a function of the angle alone.
inline EdgeSif sif_edge_eigen(const KhrapkovFactor& fact, double b, double k_theta0,
                              EigenKind which) {
  if (!(b > 0.0)) throw validation_error("sif_edge_eigen: b must be > 0");
  const auto eig = eigen_solution(fact.alpha(), which);
  const Cplx kp = k_plus(Cplx(-eig.mu, 0.0));
  const Mat2 xpm = fact.x_matrix(Cplx(-eig.mu, 0.0), Side::plus);
  EdgeSif out;
  out.dmat = (-std::sqrt(2.0)) * kp * (fact.x_inf_inv() * xpm);
  const Vec2 k = (std::pow(b, eig.mu - 0.5) * k_theta0) * (out.dmat * Vec2{1.0, eig.k_star});
  out.k1 = k.x.real();
  out.k2 = k.y.real();
  out.quad_error = fact.quad_error();
  return out;
}

// ---------------------------------------------------------------------------
// General loads: the Cauchy-integral route.
// ---------------------------------------------------------------------------

namespace detail {

// Cauchy integrals of K+(t) X+(t) g-(t) along Re t = omega. The leading
// -(-t)^{-1/2} Xinf sigma_b / (t+1) behaviour is subtracted and restored in
// closed form, leaving an |t|^{-5/2} remainder.
class EdgePsi {
public:
  EdgePsi(const KhrapkovFactor& fact, EdgeLoad load, QuadratureSettings qs)
      : fact_(&fact), load_(std::move(load)), qs_(qs) {
    xinf_sb_ = fact.x_inf() * load_.sigma_at_tip;
    qs_.rel_tol = std::max(qs_.rel_tol, 1e-11);
    qs_.abs_tol = std::max(qs_.abs_tol, 1e-12);
  }

  // subtracted integrand F(t) = K+ X+ g- + (-t)^{-1/2} Xinf sigma_b/(t+1)
  Vec2 subtracted(Cplx t) const {
    const Mat2 kx = kx_plus_continued(*fact_, t);
    const Vec2 g = edge_load_transform(load_, t, qs_);
    return kx * g + (1.0 / (std::sqrt(-t) * (t + 1.0))) * xinf_sb_;
  }

  // Psi0 = (1/2 pi i) int F dt  -  Xinf sigma_b
  Vec2 psi0() const {
    auto f = [&](double tau) -> Vec2 { return Cplx(0.0, 1.0) * subtracted(Cplx(omega_, tau)); };
    const Vec2 upper = integrate_vertical(f);
    const Vec2 total = upper - quad_conj(upper);  // Schwarz reflection
    return (Cplx(0.0, -0.5) / kPi) * total - xinf_sb_;
  }

  // Psi(s) on either side of the contour
  Vec2 psi_at(Cplx s, Side side) const {
    Vec2 acc{0.0, 0.0};
    for (double dir : {1.0, -1.0}) {
      auto f = [&](double tau) -> Vec2 {
        const Cplx t(omega_, dir * tau);
        return Cplx(0.0, dir) * ((1.0 / (t - s)) * subtracted(t));
      };
      acc += integrate_vertical(f);
    }
    Vec2 psi = (Cplx(0.0, -0.5) / kPi) * acc;
    // closed form of the subtracted piece: -Xinf sb/(s+1) [J(s) - 1],
    // J(s) = (-s)^{-1/2} left of the contour, 0 right of it.
    const Cplx js = (side == Side::plus) ? 1.0 / std::sqrt(-s) : Cplx(0.0);
    psi += (-(js - 1.0) / (s + 1.0)) * xinf_sb_;
    return psi;
  }

private:
  const KhrapkovFactor* fact_;
  EdgeLoad load_;
  QuadratureSettings qs_;
  Vec2 xinf_sb_;
  double omega_ = -0.25;

  template <class F>
  Vec2 integrate_vertical(F&& f) const {
    // geometric panels; the integrand decays like tau^{-5/2}
    const double tail_tol = 1e-10;
    const double T = std::pow(1.0 / tail_tol, 2.0 / 3.0);
    QuadratureSettings per = qs_;
    per.abs_tol = qs_.abs_tol / 40.0;
    Vec2 acc{0.0, 0.0};
    double lo = 0.0, hi = 1.0;
    while (lo < T) {
      acc += integrate_adaptive<Vec2>(f, lo, std::min(hi, T), per).value;
      lo = hi;
      hi *= 2.0;
    }
    return acc;
  }
};

}  // namespace detail

struct EdgeGeneralSolution {
  Vec2 psi0;    // (1/2 pi i) int K+ X+ g- dt
  EdgeSif sif;  // K = sqrt(2b) Xinf^{-1} psi0
  std::function<Vec2(Cplx)> sigma_plus;  // transform, holomorphic in D+
  std::function<Vec2(Cplx)> chi_minus;   // transform, holomorphic in D-
};

inline EdgeGeneralSolution solve_edge_general(const KhrapkovFactor& fact, double b,
                                              const EdgeLoad& load,
                                              QuadratureSettings qs = {}) {
  if (!(b > 0.0)) throw validation_error("solve_edge_general: b must be > 0");
  auto psi = std::make_shared<detail::EdgePsi>(fact, load, qs);
  EdgeGeneralSolution sol;
  sol.psi0 = psi->psi0();
  const Vec2 k = std::sqrt(2.0 * b) * (fact.x_inf_inv() * sol.psi0);
  sol.sif.k1 = k.x.real();
  sol.sif.k2 = k.y.real();
  sol.sif.dmat = 2.0 * std::sqrt(2.0 / kPi) * (fact.x_inf_inv() * fact.x_plus_m1);

  const KhrapkovFactor* fp = &fact;
  sol.sigma_plus = [psi, fp](Cplx s) -> Vec2 {
    const Vec2 p = psi->psi_at(s, Side::plus);
    return (-1.0 / k_plus(s)) * (fp->x_matrix(s, Side::plus).inverse() * p);
  };
  sol.chi_minus = [psi, fp](Cplx s) -> Vec2 {
    const Vec2 p = psi->psi_at(s, Side::minus);
    return (-4.0 / k_minus(s)) * (fp->x_matrix(s, Side::minus).inverse() * p);
  };
  return sol;
}

}  // namespace wedgecrack
