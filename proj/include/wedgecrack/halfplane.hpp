#pragma once

// Internal crack orthogonal to the boundary of a half-plane under constant
// normal load: the scalar truncated system, closure constant, stress
// intensity factors at both tips, the Koiter constant, and asymptotics.

#include <Eigen/Dense>

#include "wedgecrack/factor.hpp"
#include "wedgecrack/internal.hpp"

namespace wedgecrack {

struct HalfplaneOptions {
  double trunc_tol = 1e-14;
  int max_roots = 400;
  int n_roots_override = 0;
};

// Per-problem data independent of delta: zero table and factor values.
struct HalfplaneData {
  const ScalarFactor* fact = nullptr;
  RootTable zeros;                // complex zeros, upper half, ordered by Re
  std::vector<Cplx> delta_minus;  // (7.10-type), n >= 1
  std::vector<Cplx> delta_plus;
  double p_load = 1.0;
  double p_plus = 0.0, p_minus = 0.0;
};

inline HalfplaneData build_halfplane_data(const ScalarFactor& fact, double p_load, int n_zeros) {
  HalfplaneData data;
  data.fact = &fact;
  data.zeros = halfplane_zero_table(n_zeros);
  data.p_load = p_load;
  data.p_plus = p_load / fact.l_plus_m1();
  data.p_minus = kPi * p_load * fact.l_plus_m1() / 4.0;
  data.delta_minus.resize(data.zeros.size() + 1);
  data.delta_plus.resize(data.zeros.size() + 1);
  for (std::size_t n = 0; n < data.zeros.size(); ++n) {
    const Cplx sn = data.zeros[n].s;
    const Cplx x = fact.x_side(sn);  // X-(s_n); X+(-s_n) = 1/x
    const Cplx lm = a_minus(sn) * x;
    const Cplx lp = a_plus(-sn) / x;
    const Cplx kern = std::sin(kPi * sn) / (kPi * std::sin(kPi * sn) - 4.0 * sn);
    data.delta_minus[n + 1] = kern / (lm * lm);
    data.delta_plus[n + 1] = kern * lp * lp;
  }
  return data;
}

struct HalfplaneSystem {
  RootTable zeros;
  double a0_plus = 0.0;
  std::vector<Cplx> a_plus, a_minus;  // [1..N], upper-half representatives
  double c_circ = 0.0;
  double p_plus = 0.0, p_minus = 0.0;
  double log_delta = 0.0;
  double residual = 0.0;
  double closure_defect = 0.0;
  double cond_estimate = 0.0;
  // partial sums of the split representation (7.24-type), kept for tests
  double a01p = 0.0, a11p = 0.0;
};

namespace detail {

struct ScalarRealified {
  Eigen::MatrixXd mat;
  Eigen::VectorXd rhs;

  // coefficient z of a complex unknown (2 reals) in a complex equation pair
  void add_cc(int row, int col, Cplx m, Cplx mc) {
    mat(row, col) += m.real() + mc.real();
    mat(row, col + 1) += -m.imag() + mc.imag();
    mat(row + 1, col) += m.imag() + mc.imag();
    mat(row + 1, col + 1) += m.real() - mc.real();
  }
  // complex coefficient of a real unknown in a complex equation pair
  void add_cr(int row, int col, Cplx m) {
    mat(row, col) += m.real();
    mat(row + 1, col) += m.imag();
  }
  // real equation, complex unknown (folded with its conjugate)
  void add_rc(int row, int col, Cplx m, Cplx mc) {
    mat(row, col) += m.real() + mc.real();
    mat(row, col + 1) += -m.imag() + mc.imag();
  }
};

}  // namespace detail

// Joint solve of the truncated system with the closure row.
inline HalfplaneSystem solve_halfplane_system(const HalfplaneData& data, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw validation_error("solve_halfplane_system: delta must lie in (0,1)");
  const ScalarFactor& fact = *data.fact;
  const double logd = std::log(delta);
  const double l0c = fact.l0_const;
  const std::size_t nz = data.zeros.size();

  // layout: [A0+ | ReA_n+, ImA_n+ ... | ReA_n-, ImA_n- ... | C0]
  const int col_a0 = 0;
  auto col_ap = [&](std::size_t n) { return 1 + 2 * static_cast<int>(n - 1); };
  auto col_am = [&](std::size_t n) {
    return 1 + 2 * static_cast<int>(nz) + 2 * static_cast<int>(n - 1);
  };
  const int col_c = 1 + 4 * static_cast<int>(nz);
  const int ncols = col_c + 1;

  detail::ScalarRealified sys;
  sys.mat = Eigen::MatrixXd::Zero(ncols, ncols);
  sys.rhs = Eigen::VectorXd::Zero(ncols);
  auto dpow = [&](Cplx e) { return std::exp(e * logd); };

  // n = 0 row: A0+ - delta*Delta0-(C0 + p- + sum A_m-/s_m) = 0, Delta0- = 2
  {
    const double pref = 2.0 * delta;
    sys.mat(col_a0, col_a0) += 1.0;
    sys.mat(col_a0, col_c) += -pref;
    for (std::size_t mm = 1; mm <= nz; ++mm) {
      const Cplx sm = data.zeros[mm - 1].s;
      sys.add_rc(col_a0, col_am(mm), -pref / sm, -pref / std::conj(sm));
    }
    sys.rhs(col_a0) += pref * data.p_minus;
  }

  // A_n+ rows, n >= 1
  for (std::size_t n = 1; n <= nz; ++n) {
    const Cplx sn = data.zeros[n - 1].s;
    const Cplx pref = dpow(sn + 1.0) * data.delta_minus[n];
    const int row = col_ap(n);
    sys.add_cc(row, col_ap(n), 1.0, 0.0);
    sys.add_cr(row, col_c, -pref);
    for (std::size_t mm = 1; mm <= nz; ++mm) {
      const Cplx sm = data.zeros[mm - 1].s;
      sys.add_cc(row, col_am(mm), -pref / (sn + sm), -pref / (sn + std::conj(sm)));
    }
    const Cplx r = pref * data.p_minus / (sn + 1.0);
    sys.rhs(row) += r.real();
    sys.rhs(row + 1) += r.imag();
  }

  // A_n- rows, n >= 1: A_n- + d^{s_n-1} Dp_n sum_{m>=0} A_m+/(s_n+s_m) = d^{s_n-1} Dp_n p+/(s_n-1)
  for (std::size_t n = 1; n <= nz; ++n) {
    const Cplx sn = data.zeros[n - 1].s;
    const Cplx pref = dpow(sn - 1.0) * data.delta_plus[n];
    const int row = col_am(n);
    sys.add_cc(row, col_am(n), 1.0, 0.0);
    sys.add_cr(row, col_a0, pref / sn);  // m = 0 term
    for (std::size_t mm = 1; mm <= nz; ++mm) {
      const Cplx sm = data.zeros[mm - 1].s;
      sys.add_cc(row, col_ap(mm), pref / (sn + sm), pref / (sn + std::conj(sm)));
    }
    const Cplx r = pref * data.p_plus / (sn - 1.0);
    sys.rhs(row) += r.real();
    sys.rhs(row + 1) += r.imag();
  }

  // closure row:
  // 2 d (log d - L0) C0 + 2 d (log d - L0) a1- - 2 d a2- + a1+ - L0 A0+
  //   = -2 d (log d - L0) p- + 2 d p- - p+
  {
    const int row = col_c;
    const double fac = 2.0 * delta * (logd - l0c);
    sys.mat(row, col_c) += fac;
    sys.mat(row, col_a0) += -l0c;
    for (std::size_t mm = 1; mm <= nz; ++mm) {
      const Cplx sm = data.zeros[mm - 1].s;
      sys.add_rc(row, col_am(mm), fac / sm - 2.0 * delta / (sm * sm),
                 fac / std::conj(sm) - 2.0 * delta / (std::conj(sm) * std::conj(sm)));
      sys.add_rc(row, col_ap(mm), 1.0 / sm, 1.0 / std::conj(sm));
    }
    sys.rhs(row) = -fac * data.p_minus + 2.0 * delta * data.p_minus - data.p_plus;
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.mat);
  const Eigen::VectorXd sol = lu.solve(sys.rhs);
  const double res = (sys.mat * sol - sys.rhs).lpNorm<Eigen::Infinity>();

  HalfplaneSystem out;
  out.zeros = data.zeros;
  out.p_plus = data.p_plus;
  out.p_minus = data.p_minus;
  out.log_delta = logd;
  out.a0_plus = sol(col_a0);
  out.c_circ = sol(col_c);
  out.a_plus.resize(nz + 1);
  out.a_minus.resize(nz + 1);
  for (std::size_t n = 1; n <= nz; ++n) {
    out.a_plus[n] = Cplx(sol(col_ap(n)), sol(col_ap(n) + 1));
    out.a_minus[n] = Cplx(sol(col_am(n)), sol(col_am(n) + 1));
  }
  const double scale = sys.rhs.lpNorm<Eigen::Infinity>() +
                       sys.mat.lpNorm<Eigen::Infinity>() * sol.lpNorm<Eigen::Infinity>();
  out.residual = scale > 0 ? res / scale : res;
  // closure defect = residual of the closure identity with solved values
  {
    double a1p = 0.0, a1m = 0.0, a2m = 0.0;
    for (std::size_t n = 1; n <= nz; ++n) {
      const Cplx sm = data.zeros[n - 1].s;
      a1p += 2.0 * (out.a_plus[n] / sm).real();
      a1m += 2.0 * (out.a_minus[n] / sm).real();
      a2m += 2.0 * (out.a_minus[n] / (sm * sm)).real();
    }
    out.closure_defect =
        std::abs(2.0 * delta * ((out.c_circ + a1m + data.p_minus) * (logd - l0c) - a2m -
                                data.p_minus) +
                 a1p + data.p_plus - l0c * out.a0_plus);
  }
  // crude condition estimate from a few +-1 probes
  {
    double worst = 0.0;
    for (int probe = 0; probe < 3; ++probe) {
      Eigen::VectorXd x(ncols);
      for (int i = 0; i < ncols; ++i) x(i) = ((i * 2654435761u + probe * 97u) & 1u) ? 1.0 : -1.0;
      worst = std::max(worst, lu.solve(x).lpNorm<1>() / x.lpNorm<1>());
    }
    double a1 = 0.0;
    for (int c = 0; c < ncols; ++c) a1 = std::max(a1, sys.mat.col(c).cwiseAbs().sum());
    out.cond_estimate = a1 * worst;
  }
  return out;
}

// The paper's two-system decomposition (7.21-7.25 style): eliminates C0 and
// solves homogeneous/inhomogeneous pairs; kept as the verification path.
inline double halfplane_c0_split(const HalfplaneData& data, double delta) {
  const ScalarFactor& fact = *data.fact;
  const double logd = std::log(delta);
  const double l0c = fact.l0_const;
  const std::size_t nz = data.zeros.size();
  const int nunk = 1 + 4 * static_cast<int>(nz);  // A0+, A_n+, A_n- (realified)

  auto solve_one = [&](bool j_one) {
    detail::ScalarRealified sys;
    sys.mat = Eigen::MatrixXd::Zero(nunk, nunk);
    sys.rhs = Eigen::VectorXd::Zero(nunk);
    const int col_a0 = 0;
    auto col_ap = [&](std::size_t n) { return 1 + 2 * static_cast<int>(n - 1); };
    auto col_am = [&](std::size_t n) {
      return 1 + 2 * static_cast<int>(nz) + 2 * static_cast<int>(n - 1);
    };
    auto dpow = [&](Cplx e) { return std::exp(e * logd); };

    // n = 0: A0+ = 2 delta (f0- + sum A_m-/s_m);  f0- = 1 or p-/(s+1)|_{s=0} = p-
    {
      sys.mat(col_a0, col_a0) += 1.0;
      const double pref = 2.0 * delta;
      for (std::size_t mm = 1; mm <= nz; ++mm) {
        const Cplx sm = data.zeros[mm - 1].s;
        sys.add_rc(col_a0, col_am(mm), -pref / sm, -pref / std::conj(sm));
      }
      sys.rhs(col_a0) = pref * (j_one ? data.p_minus : 1.0);
    }
    for (std::size_t n = 1; n <= nz; ++n) {
      const Cplx sn = data.zeros[n - 1].s;
      {
        const Cplx pref = dpow(sn + 1.0) * data.delta_minus[n];
        const int row = col_ap(n);
        sys.add_cc(row, col_ap(n), 1.0, 0.0);
        for (std::size_t mm = 1; mm <= nz; ++mm) {
          const Cplx sm = data.zeros[mm - 1].s;
          sys.add_cc(row, col_am(mm), -pref / (sn + sm), -pref / (sn + std::conj(sm)));
        }
        const Cplx f = j_one ? data.p_minus / (sn + 1.0) : Cplx(1.0);
        const Cplx r = pref * f;
        sys.rhs(row) += r.real();
        sys.rhs(row + 1) += r.imag();
      }
      {
        const Cplx pref = dpow(sn - 1.0) * data.delta_plus[n];
        const int row = col_am(n);
        sys.add_cc(row, col_am(n), 1.0, 0.0);
        sys.add_cr(row, col_a0, pref / sn);
        for (std::size_t mm = 1; mm <= nz; ++mm) {
          const Cplx sm = data.zeros[mm - 1].s;
          sys.add_cc(row, col_ap(mm), pref / (sn + sm), pref / (sn + std::conj(sm)));
        }
        const Cplx f = j_one ? data.p_plus / (sn - 1.0) : Cplx(0.0);
        const Cplx r = pref * f;
        sys.rhs(row) += r.real();
        sys.rhs(row + 1) += r.imag();
      }
    }
    Eigen::VectorXd sol = sys.mat.partialPivLu().solve(sys.rhs);
    struct Sums {
      double a0, a1p, a1m, a2m;
    };
    Sums s{sol(0), 0.0, 0.0, 0.0};
    for (std::size_t n = 1; n <= nz; ++n) {
      const Cplx sm = data.zeros[n - 1].s;
      const Cplx ap{sol(col_ap(n)), sol(col_ap(n) + 1)};
      const Cplx am{sol(col_am(n)), sol(col_am(n) + 1)};
      s.a1p += 2.0 * (ap / sm).real();
      s.a1m += 2.0 * (am / sm).real();
      s.a2m += 2.0 * (am / (sm * sm)).real();
    }
    return s;
  };

  const auto s0 = solve_one(false);
  const auto s1 = solve_one(true);
  // elimination of C0 through the closure identity; note the printed form of
  // this formula in the source carries sign slips, the correct grouping is
  // C = -(V + W)/(X + Y) with V, W, X, Y as below
  const double num = -(s1.a1p + data.p_plus - l0c * s1.a0 +
                       2.0 * delta * ((logd - l0c) * (s1.a1m + data.p_minus) - s1.a2m -
                                      data.p_minus));
  const double den = s0.a1p - l0c * s0.a0 +
                     2.0 * delta * ((logd - l0c) * (1.0 + s0.a1m) - s0.a2m);
  return num / den;
}

// Full half-plane solve. a = 0 routes to the edge limit K_I = sqrt(pi b) P gamma.
inline SifResult solve_halfplane(const ScalarFactor& fact, double a, double b, double p_load,
                                 const MaterialSpec& material = {},
                                 const HalfplaneOptions& opts = {}) {
  if (!(b > 0.0) || a < 0.0 || !(a < b))
    throw validation_error("solve_halfplane: need 0 <= a < b");
  const double e = material.effective_young();

  if (a == 0.0) {
    SifResult out;
    out.k1_plus = std::sqrt(kPi * b) * p_load * fact.gamma_koiter;
    out.k1_minus = 0.0;
    out.du_plus = out.k1_plus * out.k1_plus / e;
    out.quad_error = fact.quad_error;
    return out;
  }

  const double delta = a / b;
  int n_zeros;
  if (opts.n_roots_override > 0) {
    n_zeros = opts.n_roots_override;
  } else {
    const double re_needed = std::max(2.0, std::log(opts.trunc_tol) / std::log(delta));
    n_zeros = std::min(opts.max_roots, static_cast<int>(re_needed / 2.0) + 3);
  }
  const auto data = build_halfplane_data(fact, p_load, n_zeros);
  const auto sys = solve_halfplane_system(data, delta);

  double sum_ap = sys.a0_plus;
  for (std::size_t n = 1; n < sys.a_plus.size(); ++n) sum_ap += 2.0 * sys.a_plus[n].real();

  SifResult out;
  out.k1_minus = 2.0 * std::sqrt(a) * sys.c_circ;
  out.k1_plus = std::sqrt(b) * (p_load / fact.l_plus_m1() - sum_ap);
  out.k2_minus = out.k2_plus = 0.0;
  out.closure_defect = sys.closure_defect;
  out.residual = sys.residual;
  out.cond_estimate = sys.cond_estimate;
  out.quad_error = fact.quad_error;
  out.n_roots = static_cast<int>(data.zeros.size());
  out.trunc_bound = std::pow(delta, data.zeros.roots.empty()
                                        ? 2.0
                                        : data.zeros.roots.back().s.real()) *
                    sys.cond_estimate;

  out.du_plus = out.k1_plus * out.k1_plus / e;
  out.du_minus = out.k1_minus * out.k1_minus / e;
  const double k_edge = std::sqrt(kPi * b) * p_load * fact.gamma_koiter;
  const double ld = std::log(delta);
  out.du_minus_near_vertex = k_edge * k_edge / (e * delta * ld * ld);
  out.du_minus_near_vertex_as_printed = k_edge * k_edge / (e * delta * std::abs(ld));
  out.near_vertex_regime = delta < 1e-2;
  return out;
}

// Transform evaluators of the solved half-plane problem, for verification.
class HalfplaneTransforms {
public:
  HalfplaneTransforms(const ScalarFactor& fact, const HalfplaneSystem& sys, double delta,
                      double p_load)
      : fact_(&fact), sys_(&sys), delta_(delta), p_(p_load) {}

  Cplx lambda_plus(Cplx s) const {
    Cplx acc = sys_->a0_plus / s;
    for (std::size_t n = 1; n < sys_->a_plus.size(); ++n) {
      const Cplx sn = sys_->zeros[n - 1].s;
      acc += sys_->a_plus[n] / (s - sn) + std::conj(sys_->a_plus[n]) / (s - std::conj(sn));
    }
    return acc;
  }
  Cplx lambda_minus(Cplx s) const {
    Cplx acc = 0.0;
    for (std::size_t n = 1; n < sys_->a_minus.size(); ++n) {
      const Cplx sn = sys_->zeros[n - 1].s;
      acc += sys_->a_minus[n] / (s + sn) + std::conj(sys_->a_minus[n]) / (s + std::conj(sn));
    }
    return acc;
  }

  Cplx chi_minus(Cplx s) const {
    const Cplx lm = a_minus(s) * fact_->x_side(s);
    return std::exp((s + 1.0) * std::log(delta_)) / (lm * l_fun(s)) *
               (lambda_minus(s) + sys_->c_circ + sys_->p_minus / (s + 1.0)) -
           4.0 * lm * (lambda_plus(s) - sys_->p_plus / (s + 1.0));
  }

  Cplx chi_plus(Cplx s) const {
    const Cplx lp = a_plus(s) * fact_->x_side(s);
    return std::exp(-(s + 1.0) * std::log(delta_)) * lp / l_fun(s) *
               (lambda_plus(s) - sys_->p_plus / (s + 1.0)) -
           4.0 / lp * (lambda_minus(s) + sys_->c_circ + sys_->p_minus / (s + 1.0));
  }

  Cplx chi_minus_boundary(double tau) const {
    const Cplx s(0.0, tau);
    const Cplx lm = a_minus(s) * fact_->x_boundary(tau, Side::minus);
    return std::exp((s + 1.0) * std::log(delta_)) / (lm * l_fun(s)) *
               (lambda_minus(s) + sys_->c_circ + sys_->p_minus / (s + 1.0)) -
           4.0 * lm * (lambda_plus(s) - sys_->p_plus / (s + 1.0));
  }

  Cplx chi_plus_boundary(double tau) const {
    const Cplx s(0.0, tau);
    const Cplx lp = a_plus(s) * fact_->x_boundary(tau, Side::plus);
    return std::exp(-(s + 1.0) * std::log(delta_)) * lp / l_fun(s) *
               (lambda_plus(s) - sys_->p_plus / (s + 1.0)) -
           4.0 / lp * (lambda_minus(s) + sys_->c_circ + sys_->p_minus / (s + 1.0));
  }

  Cplx sigma_plus(Cplx s) const {
    const Cplx lp = a_plus(s) * fact_->x_side(s);
    return p_ / (s + 1.0) + lp * (lambda_plus(s) - sys_->p_plus / (s + 1.0));
  }

private:
  const ScalarFactor* fact_;
  const HalfplaneSystem* sys_;
  double delta_;
  double p_;
};

}  // namespace wedgecrack
