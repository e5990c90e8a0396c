#pragma once

// Internal crack along a wedge side: assembly and solution of the truncated
// infinite linear system for the residue coefficients A_n+-, joint closure
// for the constant vector C0, stress intensity factors at both tips, energy
// release rates, and the near-vertex asymptotics.
//
// Since the loads are real, coefficients at conjugate pole pairs are
// conjugate; the system is assembled over upper-half representatives with
// realified unknowns, which halves the dimension and makes the SIFs real by
// construction.

#include <Eigen/Dense>

#include "wedgecrack/edge.hpp"

namespace wedgecrack {

struct CrackConfig {
  double a = 0.0;  // inner tip radius, >= 0
  double b = 1.0;  // outer tip radius, > a

  void validate() const {
    if (!(b > 0.0) || a < 0.0) throw validation_error("CrackConfig: need 0 <= a < b");
    if (!(a < b)) throw validation_error("CrackConfig: crack has zero length (a = b)");
  }
  double delta() const {
    validate();
    return a / b;
  }
};

struct InternalOptions {
  double trunc_tol = 1e-14;  // keep roots until delta^{Re s} < trunc_tol
  int max_roots = 400;       // cap on the merged table length
  int n_roots_override = 0;  // > 0: force the number of roots beyond s1
};

// Per-angle data reused across crack geometries: the merged pole table and
// the factorization matrices at every pole.
struct InternalSystemData {
  const KhrapkovFactor* fact = nullptr;
  RootTable roots;
  std::vector<Mat2> delta_minus;  // (5.14-type) coefficient at +s_n, n >= 0
  std::vector<Mat2> delta_plus;   // coefficient at -s_n, n >= 1 ([0] unused)
  std::vector<Mat2> x_minus_at;   // X-(s_n), kept for diagnostics/tests
};

inline InternalSystemData build_internal_data(const KhrapkovFactor& fact,
                                              const RootTable& roots) {
  InternalSystemData data;
  data.fact = &fact;
  data.roots = roots;
  const std::size_t m = roots.size();
  data.delta_minus.resize(m);
  data.delta_plus.resize(m);
  data.x_minus_at.resize(m);
  for (std::size_t n = 0; n < m; ++n) {
    const Root& rt = roots[n];
    const auto rf = fact.factors_at_root(rt.s);
    data.x_minus_at[n] = rf.x_minus_at;
    const Mat2 res_pos = residue_g(rt, fact.alpha(), false);
    const Cplx km = k_minus(rt.s);
    data.delta_minus[n] = (-0.25 * km * km) * (res_pos * (rf.x_minus_at * rf.x_minus_at));
    if (n >= 1) {
      const Mat2 res_neg = residue_g(rt, fact.alpha(), true);
      const Cplx kp = k_plus(-rt.s);
      data.delta_plus[n] =
          (-0.25 / (kp * kp)) * (res_neg * (rf.x_plus_inv_at_neg * rf.x_plus_inv_at_neg));
    }
  }
  return data;
}

// Truncation rule: keep s0, s1 and every further root with
// delta^{Re s} >= trunc_tol, capped at max_roots.
inline RootTable truncated_pole_table(double alpha, double delta, const InternalOptions& opts) {
  double re_needed =
      opts.n_roots_override > 0
          ? static_cast<double>(opts.n_roots_override)
          : std::log(opts.trunc_tol) / std::log(delta);
  re_needed = std::max(re_needed, 1.5);
  // merged density: one integer per unit Re plus one sigma pair per pi/alpha
  int n_beyond = static_cast<int>(re_needed * (1.0 + alpha / kPi)) + 6;
  n_beyond = std::min(n_beyond, opts.max_roots);
  RootTable table = pole_table(alpha, n_beyond);
  if (opts.n_roots_override <= 0) {
    while (table.roots.size() > 3 && table.roots.back().s.real() > re_needed + 1e-12)
      table.roots.pop_back();
  }
  const double tail = std::pow(delta, table.roots.back().s.real());
  if (tail > 1e-6)
    throw truncation_error("internal system: truncation cap leaves delta^{Re s_N} > 1e-6");
  return table;
}

struct TruncatedSystem {
  RootTable roots;
  std::vector<Vec2> a_plus;   // coefficients at +s_n (upper-half reps)
  std::vector<Vec2> a_minus;  // coefficients at -s_n ([0] unused)
  Vec2 c_circ;                // closure constant (real entries)
  Vec2 n1_plus, n2_plus, n1_minus;
  double log_delta = 0.0;
  double residual = 0.0;
  double closure_defect = 0.0;
  double cond_estimate = 0.0;
  double trunc_bound = 0.0;
  double decay_slope = 0.0;  // fitted log|A_n| / (Re s_n log delta)
};

namespace detail {

// Realified assembly helper: complex 2-vector unknowns/equations laid out as
// [Re1 Re2] for real roots and [Re1 Re2 Im1 Im2] for upper-half roots.
struct RealBlocks {
  Eigen::MatrixXd mat;
  Eigen::VectorXd rhs;

  // scatter coefficient M (of unknown U) and Mc (of conj U) into the block
  // at (row_off, col_off); row/col widths are 2 or 4
  void add(int row_off, bool row_cplx, int col_off, bool col_cplx, const Mat2& m_coef,
           const Mat2& mc_coef) {
    const Mat2 re_m = m_coef.real_part();
    const Mat2 im_m{m_coef.a.imag(), m_coef.b.imag(), m_coef.c.imag(), m_coef.d.imag()};
    const Mat2 re_c = mc_coef.real_part();
    const Mat2 im_c{mc_coef.a.imag(), mc_coef.b.imag(), mc_coef.c.imag(), mc_coef.d.imag()};
    auto put = [&](int r, int c, const Mat2& blk) {
      mat(r, c) += blk.a.real();
      mat(r, c + 1) += blk.b.real();
      mat(r + 1, c) += blk.c.real();
      mat(r + 1, c + 1) += blk.d.real();
    };
    if (!col_cplx) {
      // contribution (M + Mc) U with U real
      put(row_off, col_off, re_m + re_c);
      if (row_cplx) put(row_off + 2, col_off, im_m + im_c);
    } else {
      // U = X + iY: M U + Mc conj(U)
      put(row_off, col_off, re_m + re_c);
      put(row_off, col_off + 2, -1.0 * im_m + im_c);
      if (row_cplx) {
        put(row_off + 2, col_off, im_m + im_c);
        put(row_off + 2, col_off + 2, re_m - re_c);
      }
    }
  }

  void add_rhs(int row_off, bool row_cplx, const Vec2& v) {
    rhs(row_off) += v.x.real();
    rhs(row_off + 1) += v.y.real();
    if (row_cplx) {
      rhs(row_off + 2) += v.x.imag();
      rhs(row_off + 3) += v.y.imag();
    }
  }
};

// Hager-style 1-norm condition estimate from an LU factorization.
inline double cond_estimate_1norm(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                                  const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    const Eigen::VectorXd y = lu.solve(x);
    est = y.lpNorm<1>();
    Eigen::VectorXd xi(n);
    for (Eigen::Index i = 0; i < n; ++i) xi(i) = (y(i) >= 0.0 ? 1.0 : -1.0);
    const Eigen::VectorXd z = lu.matrixLU().template triangularView<Eigen::Upper>().transpose().solve(
        Eigen::VectorXd(xi));
    (void)z;
    // single Hager sweep via the transpose solve
    const Eigen::VectorXd zt = a.transpose().partialPivLu().solve(xi);
    Eigen::Index j = 0;
    zt.cwiseAbs().maxCoeff(&j);
    if (iter > 0 && std::abs(zt(j)) <= zt.dot(x)) break;
    x.setZero();
    x(j) = 1.0;
  }
  double a1 = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) a1 = std::max(a1, a.col(c).cwiseAbs().sum());
  return a1 * est;
}

}  // namespace detail

// Assemble and solve the truncated system jointly with the closure rows.
inline TruncatedSystem assemble_internal(const InternalSystemData& data, double delta,
                                         Vec2 load_p) {
  if (!(delta > 0.0 && delta < 1.0))
    throw validation_error("assemble_internal: delta must lie in (0,1)");
  const KhrapkovFactor& fact = *data.fact;
  const RootTable& roots = data.roots;
  const std::size_t m = roots.size();
  const double logd = std::log(delta);

  // constant vectors of the reduced problem
  const double c1 = 2.0 * (1.0 - kLog2);
  const double c_log = c1 + logd;
  const Vec2 g0p = fact.g0_m1 * load_p;
  const Vec2 n1p = (2.0 / kSqrtPi) * ((c_log * fact.x_plus_inv_m1 - fact.dx_plus_inv_m1) * g0p);
  const Vec2 n2p = (-2.0 / kSqrtPi) * (fact.g0_m1 * (fact.x_plus_inv_m1 * load_p));
  const Vec2 n1m = (8.0 / kSqrtPi) * (fact.x_plus_m1 * load_p);

  // constant part of the double-pole row at s = -1, from the exact
  // (s+1)^{-1} cancellation condition of the chi+ representation. The
  // derivative factors do not commute with the rest, so the order matters:
  //   H = -(pi/16) Y0 (R Y1 + G1 Y0) N1- + (2/sqrt(pi)) Y1 G0(-1) P
  //       - Y0 X1 N2+ - c1 N2+,
  // with R = (4/pi) G0(-1), G1 = (4/pi) G0'(-1), Y = [X+]^{-1}, X = X+ at -1.
  Vec2 h_row;
  {
    const Mat2& y0 = fact.x_plus_inv_m1;
    const Mat2& y1 = fact.dx_plus_inv_m1;
    const Mat2& x1 = fact.dx_plus_m1;
    const Mat2 r_res = (4.0 / kPi) * fact.g0_m1;
    const Mat2 g1 = (4.0 / kPi) * fact.g0_prime_m1;
    h_row = (-kPi / 16.0) * (y0 * ((r_res * y1 + g1 * y0) * n1m)) +
            (2.0 / kSqrtPi) * (y1 * g0p) - (y0 * x1) * n2p - c1 * n2p;
  }

  // unknown layout
  std::vector<int> col_ap(m, -1), col_am(m, -1);
  std::vector<bool> is_cplx(m, false);
  int ncols = 0;
  for (std::size_t n = 0; n < m; ++n) {
    is_cplx[n] = !roots[n].is_real();
    col_ap[n] = ncols;
    ncols += is_cplx[n] ? 4 : 2;
  }
  for (std::size_t n = 1; n < m; ++n) {
    col_am[n] = ncols;
    ncols += is_cplx[n] ? 4 : 2;
  }
  const int col_c = ncols;
  ncols += 2;

  detail::RealBlocks sys;
  sys.mat = Eigen::MatrixXd::Zero(ncols, ncols);
  sys.rhs = Eigen::VectorXd::Zero(ncols);
  const Mat2 ident = Mat2::identity();
  const Mat2 zero{};

  auto dpow = [&](Cplx e) { return std::exp(e * logd); };  // delta^e

  // --- rows for A_n+ : A_n+ - d^{s_n+1} Dm_n [C0 + sum A_m-/(s_n+s_m)] = rhs
  for (std::size_t n = 0; n < m; ++n) {
    const int row = col_ap[n];
    const bool rc = is_cplx[n];
    const Cplx sn = roots[n].s;
    const Mat2 pref = dpow(sn + 1.0) * data.delta_minus[n];

    sys.add(row, rc, col_ap[n], rc, ident, zero);
    sys.add(row, rc, col_c, false, -1.0 * pref, zero);
    for (std::size_t mm = 1; mm < m; ++mm) {
      const Cplx sm = roots[mm].s;
      const Mat2 coef = (-1.0 / (sn + sm)) * pref;
      const Mat2 coef_conj =
          is_cplx[mm] ? (-1.0 / (sn + std::conj(sm))) * pref : zero;
      sys.add(row, rc, col_am[mm], is_cplx[mm], coef, coef_conj);
    }
    const Vec2 rhs_n = pref * ((1.0 / (sn + 1.0)) * n1p + (1.0 / ((sn + 1.0) * (sn + 1.0))) * n2p);
    sys.add_rhs(row, rc, rhs_n);
  }

  // --- rows for A_n- : A_n- + d^{s_n-1} Dp_n sum A_m+/(s_n+s_m) = d^{s_n-1} Dp_n h_n N1-
  for (std::size_t n = 1; n < m; ++n) {
    const int row = col_am[n];
    const bool rc = is_cplx[n];
    const Cplx sn = roots[n].s;
    const Mat2 pref = dpow(sn - 1.0) * data.delta_plus[n];

    sys.add(row, rc, col_am[n], rc, ident, zero);
    for (std::size_t mm = 0; mm < m; ++mm) {
      const Cplx sm = roots[mm].s;
      const Mat2 coef = (1.0 / (sn + sm)) * pref;
      const Mat2 coef_conj = is_cplx[mm] ? (1.0 / (sn + std::conj(sm))) * pref : zero;
      sys.add(row, rc, col_ap[mm], is_cplx[mm], coef, coef_conj);
    }
    Vec2 rhs_n;
    if (n == 1) {
      rhs_n = h_row;  // pref = Delta_1+ is already folded into h_row's derivation
    } else {
      rhs_n = (1.0 / (1.0 - sn)) * (pref * n1m);
    }
    sys.add_rhs(row, rc, rhs_n);
  }

  // --- closure rows (joint solve): the O(1) limit of chi-(s) at s -> 0 set
  // to zero,
  //   M0 (C0 + a1- + N1+ + N2+) - X-(0)(a2- + N1+ + 2 N2+)
  //     + (1/d) G0(0)^{-1} { Z A0+ - [X-(0)]^{-1} a1+ } =
  //     -(1/d) G0(0)^{-1} [X-(0)]^{-1} N1-,
  // where M0 = dX-(0) + log(d/4) X-(0) + G0(0)^{-1} G0'(0) X-(0). The last
  // piece exists because G0 is not even: its off-diagonals carry the linear
  // factors m+-(s), so G0'(0) = b2(0) J' with J' = [0 sin a; -sin a 0].
  {
    const int row = col_c;
    const Mat2 m0 = fact.dx_minus_0 + std::log(delta / 4.0) * fact.x_minus_0 +
                    fact.g0_inv_0 * (fact.g0_prime_0 * fact.x_minus_0);
    const Mat2 z = (2.0 * kLog2) * fact.x_minus_inv_0 + fact.dx_minus_inv_0;
    const Mat2 ginv_xinv = fact.g0_inv_0 * fact.x_minus_inv_0;

    sys.add(row, false, col_c, false, m0, zero);
    sys.add(row, false, col_ap[0], false, (1.0 / delta) * (fact.g0_inv_0 * z), zero);
    for (std::size_t mm = 1; mm < m; ++mm) {
      const Cplx sm = roots[mm].s;
      // a1-, a2- terms
      Mat2 coef = (1.0 / sm) * m0 - (1.0 / (sm * sm)) * fact.x_minus_0;
      Mat2 coef_conj = zero;
      if (is_cplx[mm])
        coef_conj = (1.0 / std::conj(sm)) * m0 - (1.0 / (std::conj(sm) * std::conj(sm))) * fact.x_minus_0;
      sys.add(row, false, col_am[mm], is_cplx[mm], coef, coef_conj);
      // a1+ term
      Mat2 coefp = (-1.0 / (delta * sm)) * ginv_xinv;
      Mat2 coefp_conj = is_cplx[mm] ? (-1.0 / (delta * std::conj(sm))) * ginv_xinv : zero;
      sys.add(row, false, col_ap[mm], is_cplx[mm], coefp, coefp_conj);
    }
    const Vec2 rhs_c = -1.0 * (m0 * (n1p + n2p)) + fact.x_minus_0 * (n1p + 2.0 * n2p) -
                       (1.0 / delta) * (ginv_xinv * n1m);
    sys.add_rhs(row, false, rhs_c);
  }

  // --- solve
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.mat);
  const Eigen::VectorXd sol = lu.solve(sys.rhs);
  const double res_norm = (sys.mat * sol - sys.rhs).lpNorm<Eigen::Infinity>();
  const double scale = sys.rhs.lpNorm<Eigen::Infinity>() +
                       sys.mat.lpNorm<Eigen::Infinity>() * sol.lpNorm<Eigen::Infinity>();

  TruncatedSystem out;
  out.roots = roots;
  out.log_delta = logd;
  out.n1_plus = n1p;
  out.n2_plus = n2p;
  out.n1_minus = n1m;
  out.a_plus.resize(m);
  out.a_minus.resize(m);
  auto unpack = [&](int off, bool cplx) -> Vec2 {
    if (!cplx) return {sol(off), sol(off + 1)};
    return {Cplx(sol(off), sol(off + 2)), Cplx(sol(off + 1), sol(off + 3))};
  };
  for (std::size_t n = 0; n < m; ++n) out.a_plus[n] = unpack(col_ap[n], is_cplx[n]);
  for (std::size_t n = 1; n < m; ++n) out.a_minus[n] = unpack(col_am[n], is_cplx[n]);
  out.c_circ = {sol(col_c), sol(col_c + 1)};
  out.residual = scale > 0.0 ? res_norm / scale : res_norm;
  out.cond_estimate = detail::cond_estimate_1norm(lu, sys.mat);
  out.trunc_bound = std::pow(delta, roots.roots.back().s.real()) * out.cond_estimate;

  // closure defect: the O(1) term of chi-(s) at s -> 0, re-evaluated from the
  // solved coefficients
  {
    Vec2 a1m{0.0, 0.0}, a2m{0.0, 0.0}, a1p{0.0, 0.0};
    for (std::size_t mm = 1; mm < m; ++mm) {
      const Cplx sm = roots[mm].s;
      a1m += (1.0 / sm) * out.a_minus[mm];
      a2m += (1.0 / (sm * sm)) * out.a_minus[mm];
      a1p += (1.0 / sm) * out.a_plus[mm];
      if (is_cplx[mm]) {
        a1m += (1.0 / std::conj(sm)) * out.a_minus[mm].conj();
        a2m += (1.0 / (std::conj(sm) * std::conj(sm))) * out.a_minus[mm].conj();
        a1p += (1.0 / std::conj(sm)) * out.a_plus[mm].conj();
      }
    }
    const Mat2 m0 = fact.dx_minus_0 + std::log(delta / 4.0) * fact.x_minus_0 +
                    fact.g0_inv_0 * (fact.g0_prime_0 * fact.x_minus_0);
    const Mat2 z = (2.0 * kLog2) * fact.x_minus_inv_0 + fact.dx_minus_inv_0;
    const Vec2 v = out.c_circ + a1m + n1p + n2p;
    const Vec2 chi0 = (delta / kSqrtPi) * (fact.g0_0 * (m0 * v - fact.x_minus_0 * (a2m + n1p + 2.0 * n2p))) +
                      (1.0 / kSqrtPi) * (z * out.a_plus[0]) +
                      (1.0 / kSqrtPi) * (fact.x_minus_inv_0 * (n1m - a1p));
    out.closure_defect = chi0.norm();
  }

  // exponential decay slope of |A_n| against delta^{Re s_n}
  {
    double sxx = 0.0, sxy = 0.0;
    int cnt = 0;
    for (std::size_t n = 2; n < m; ++n) {
      const double an = std::max(out.a_plus[n].norm(), out.a_minus[n].norm());
      if (an <= 0.0) continue;
      const double x = roots[n].s.real() * logd;
      const double y = std::log(an);
      // slope through the first retained coefficient as origin
      const double a0 = std::max(out.a_plus[1].norm(), out.a_minus[1].norm());
      const double x0 = roots[1].s.real() * logd;
      if (a0 <= 0.0) continue;
      sxx += (x - x0) * (x - x0);
      sxy += (x - x0) * (std::log(an) - std::log(a0));
      (void)y;
      ++cnt;
    }
    out.decay_slope = cnt > 0 ? sxy / sxx : 0.0;
  }
  return out;
}

struct SifResult {
  double k1_minus = 0.0, k2_minus = 0.0;  // tip r = a
  double k1_plus = 0.0, k2_plus = 0.0;    // tip r = b
  double du_minus = 0.0, du_plus = 0.0;   // energy release per unit advance
  double du_minus_near_vertex = 0.0;      // h/(E d log^2 d) |K_edge|^2 regime
  double du_minus_near_vertex_as_printed = 0.0;  // log d variant, reported only
  bool near_vertex_regime = false;
  double closure_defect = 0.0;
  double residual = 0.0;
  double trunc_bound = 0.0;
  double cond_estimate = 0.0;
  double quad_error = 0.0;
  int n_roots = 0;

  Vec2 k_minus() const { return {k1_minus, k2_minus}; }
  Vec2 k_plus() const { return {k1_plus, k2_plus}; }
};

// Q = Xinf^2: the load-independent rotation connecting the inner-tip SIFs to
// the edge-crack SIFs as the crack approaches the vertex.
inline Mat2 q_matrix(const KhrapkovFactor& fact) { return Mat2::rotation(2.0 * fact.q()); }

inline double energy_release(const Vec2& k, const MaterialSpec& material, double h) {
  if (!(h > 0.0)) throw validation_error("energy_release: h must be > 0");
  const double e = material.effective_young();
  return h / e * (std::norm(k.x) + std::norm(k.y));
}

// Full solve for an internal crack (a, b) under constant face loads P.
inline SifResult solve_internal(const KhrapkovFactor& fact, const InternalSystemData& data,
                                double a, double b, Vec2 load_p,
                                const MaterialSpec& material = {}) {
  CrackConfig cfg{a, b};
  const double delta = cfg.delta();
  auto sys = assemble_internal(data, delta, load_p);

  const std::size_t m = sys.roots.size();
  Vec2 sum_ap = sys.a_plus[0];
  for (std::size_t n = 1; n < m; ++n) {
    sum_ap += sys.a_plus[n];
    if (!sys.roots[n].is_real()) sum_ap += sys.a_plus[n].conj();
  }
  const Vec2 kp = (0.5 * std::sqrt(b / 2.0)) * (fact.x_inf_inv() * (sys.n1_minus + sum_ap));
  const Vec2 km = (0.5 * std::sqrt(a / 2.0)) * (fact.x_inf() * sys.c_circ);

  SifResult out;
  out.k1_plus = kp.x.real();
  out.k2_plus = kp.y.real();
  out.k1_minus = km.x.real();
  out.k2_minus = km.y.real();
  out.closure_defect = sys.closure_defect;
  out.residual = sys.residual;
  out.trunc_bound = sys.trunc_bound;
  out.cond_estimate = sys.cond_estimate;
  out.quad_error = fact.quad_error();
  out.n_roots = static_cast<int>(m);

  out.du_plus = energy_release(out.k_plus(), material, 1.0);
  out.du_minus = energy_release(out.k_minus(), material, 1.0);

  // near-vertex estimates from the edge-crack factors
  const auto edge = sif_edge_constant(fact, b, load_p.x.real(), load_p.y.real());
  const double k_edge_sq = edge.k1 * edge.k1 + edge.k2 * edge.k2;
  const double e = material.effective_young();
  const double ld = std::log(delta);
  out.du_minus_near_vertex = k_edge_sq / (e * delta * ld * ld);
  out.du_minus_near_vertex_as_printed = k_edge_sq / (e * delta * std::abs(ld));
  out.near_vertex_regime = delta < 1e-2;
  return out;
}

// Convenience: build everything for one (alpha, a, b) call.
inline SifResult solve_internal(double alpha, double a, double b, Vec2 load_p,
                                const MaterialSpec& material = {},
                                const InternalOptions& opts = {}) {
  CrackConfig cfg{a, b};
  const double delta = cfg.delta();
  KhrapkovFactor fact(alpha);
  const RootTable roots = truncated_pole_table(alpha, delta, opts);
  const auto data = build_internal_data(fact, roots);
  return solve_internal(fact, data, a, b, load_p, material);
}

// ---------------------------------------------------------------------------
// Solved-transform evaluators (5.11-type representations) for verification.
// ---------------------------------------------------------------------------

class InternalTransforms {
public:
  InternalTransforms(const KhrapkovFactor& fact, const TruncatedSystem& sys, double delta,
                     Vec2 load_p)
      : fact_(&fact), sys_(&sys), delta_(delta), p_(load_p) {}

  Vec2 lambda_plus(Cplx s) const {
    Vec2 acc = (1.0 / s) * sys_->a_plus[0];
    for (std::size_t n = 1; n < sys_->roots.size(); ++n) {
      const Cplx sn = sys_->roots[n].s;
      acc += (1.0 / (s - sn)) * sys_->a_plus[n];
      if (!sys_->roots[n].is_real()) acc += (1.0 / (s - std::conj(sn))) * sys_->a_plus[n].conj();
    }
    return acc;
  }

  Vec2 lambda_minus(Cplx s) const {
    Vec2 acc{0.0, 0.0};
    for (std::size_t n = 1; n < sys_->roots.size(); ++n) {
      const Cplx sn = sys_->roots[n].s;
      acc += (1.0 / (s + sn)) * sys_->a_minus[n];
      if (!sys_->roots[n].is_real()) acc += (1.0 / (s + std::conj(sn))) * sys_->a_minus[n].conj();
    }
    return acc;
  }

  Vec2 sigma_one(Cplx s) const { return (1.0 / (s + 1.0)) * sys_->n1_minus + lambda_plus(s); }

  Vec2 sigma_two(Cplx s) const {
    return sys_->c_circ + (1.0 / (s + 1.0)) * sys_->n1_plus +
           (1.0 / ((s + 1.0) * (s + 1.0))) * sys_->n2_plus + lambda_minus(s);
  }

  // interior evaluations (s away from the imaginary axis and from poles)
  Vec2 chi_minus(Cplx s) const {
    const Mat2 xm = fact_->x_matrix(s, Side::minus);
    const Mat2 g = g_side(s, fact_->alpha());
    const Cplx km = k_minus(s);
    return (0.25 * std::exp((s + 1.0) * std::log(delta_)) * km) * (g * (xm * sigma_two(s))) +
           (1.0 / km) * (xm.inverse() * sigma_one(s));
  }

  Vec2 chi_plus(Cplx s) const {
    const Mat2 xp = fact_->x_matrix(s, Side::plus);
    const Mat2 g = g_side(s, fact_->alpha());
    const Cplx kp = k_plus(s);
    return (0.25 * std::exp(-(s + 1.0) * std::log(delta_)) / kp) *
               (g * (xp.inverse() * sigma_one(s))) +
           kp * (xp * sigma_two(s));
  }

  // boundary evaluations on the imaginary axis (both one-sided limits)
  Vec2 chi_minus_boundary(double tau) const {
    const Mat2 xm = fact_->x_boundary(tau, Side::minus);
    const Cplx s(0.0, tau);
    const Mat2 g = g_side(s, fact_->alpha());
    const Cplx km = k_minus(s);
    return (0.25 * std::exp((s + 1.0) * std::log(delta_)) * km) * (g * (xm * sigma_two(s))) +
           (1.0 / km) * (xm.inverse() * sigma_one(s));
  }

  Vec2 chi_plus_boundary(double tau) const {
    const Mat2 xp = fact_->x_boundary(tau, Side::plus);
    const Cplx s(0.0, tau);
    const Mat2 g = g_side(s, fact_->alpha());
    const Cplx kp = k_plus(s);
    return (0.25 * std::exp(-(s + 1.0) * std::log(delta_)) / kp) *
               (g * (xp.inverse() * sigma_one(s))) +
           kp * (xp * sigma_two(s));
  }

  Vec2 sigma_plus(Cplx s) const {
    const Mat2 xp = fact_->x_matrix(s, Side::plus);
    return (1.0 / (s + 1.0)) * p_ + (0.25 / k_plus(s)) * (xp.inverse() * sigma_one(s));
  }

  Vec2 sigma_minus(Cplx s) const {
    const Mat2 xm = fact_->x_matrix(s, Side::minus);
    return (-1.0 / (s + 1.0)) * p_ + (0.25 * k_minus(s)) * (xm * sigma_two(s));
  }

private:
  const KhrapkovFactor* fact_;
  const TruncatedSystem* sys_;
  double delta_;
  Vec2 p_;
};

}  // namespace wedgecrack
