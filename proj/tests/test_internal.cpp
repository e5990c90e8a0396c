#include <catch_amalgamated.hpp>

#include "wedgecrack/internal.hpp"

using namespace wedgecrack;

namespace {

struct Solved {
  KhrapkovFactor fact;
  RootTable roots;
  InternalSystemData data;
  TruncatedSystem sys;

  Solved(double alpha, double delta, Vec2 p, InternalOptions opts = {})
      : fact(alpha),
        roots(truncated_pole_table(alpha, delta, opts)),
        data(build_internal_data(fact, roots)),
        sys(assemble_internal(data, delta, p)) {}
};

}  // namespace

TEST_CASE("zero load gives the zero solution") {
  Solved s(kPi / 3.0, 0.4, Vec2{0.0, 0.0});
  CHECK(s.sys.c_circ.norm() < 1e-14);
  for (const auto& a : s.sys.a_plus) CHECK(a.norm() < 1e-14);
}

TEST_CASE("residue of G at integer poles") {
  const double alpha = 1.05;
  // res_{s=0} G = (4/pi) G0(0); numeric probe s G(s) at small s
  const Mat2 target = (4.0 / kPi) * g0_side(Cplx(0.0, 0.0), alpha);
  const Cplx s(1e-5, 1e-5);
  const Mat2 probe = s * g_side(s, alpha);
  CHECK(max_abs(probe - target) < 1e-4 * max_abs(target));
  // integers >= 2 carry (2/pi) I
  const Mat2 r3 = residue_g(Root{Cplx(3.0, 0.0), RootKind::integer_pole}, alpha, false);
  CHECK(max_abs(r3 - (2.0 / kPi) * Mat2::identity()) < 1e-12);
}

TEST_CASE("transform identity chi-(s) = delta^{s+1} chi+(s) on the contour") {
  const double delta = 0.3;
  Solved s(kPi / 3.0, delta, Vec2{1.0, 0.5});
  InternalTransforms tr(s.fact, s.sys, delta, Vec2{1.0, 0.5});
  for (double tau : {0.3, 0.7, 1.3, 2.1, 3.7, 5.5, 8.0, 11.0, 17.0, 25.0}) {
    const Vec2 cm = tr.chi_minus_boundary(tau);
    const Vec2 cp = tr.chi_plus_boundary(tau);
    const Cplx fac = std::exp((Cplx(0.0, tau) + 1.0) * std::log(delta));
    CHECK((cm - fac * cp).norm() < 1e-10 * (1.0 + cm.norm()));
  }
}

TEST_CASE("closure: chi-(s) vanishes at the origin") {
  const double delta = 0.3;
  Solved s(kPi / 3.0, delta, Vec2{1.0, 0.5});
  CHECK(s.sys.closure_defect < 1e-8);
  InternalTransforms tr(s.fact, s.sys, delta, Vec2{1.0, 0.5});
  // direct evaluation shrinks linearly in s
  const double v5 = tr.chi_minus(Cplx(0.05, 0.0)).norm();
  const double v1 = tr.chi_minus(Cplx(0.01, 0.0)).norm();
  CHECK(v1 < 0.45 * v5);
}

TEST_CASE("represented transforms stay bounded at the removed poles") {
  const double delta = 0.3;
  const Vec2 p{1.0, 0.5};
  Solved s(kPi / 3.0, delta, p);
  InternalTransforms tr(s.fact, s.sys, delta, p);
  const double typical = tr.chi_minus(Cplx(0.6, 0.4)).norm();
  for (std::size_t n = 2; n < std::min<std::size_t>(s.roots.size(), 8); ++n) {
    const Vec2 v = tr.chi_minus(s.roots[n].s + Cplx(1e-6, 1e-6));
    CHECK(v.norm() < 1e3 * typical);
  }
  // the double pole at s = -1 in chi+ cancels too
  const double near1 = tr.chi_plus(Cplx(-1.0 + 1e-4, 1e-4)).norm();
  const double near2 = tr.chi_plus(Cplx(-1.0 + 1e-5, 1e-5)).norm();
  CHECK(near2 < 10.0 * std::max(near1, typical));
}

TEST_CASE("exponential coefficient decay") {
  Solved s(kPi / 3.0, 0.3, Vec2{1.0, 0.5});
  CHECK(std::abs(s.sys.decay_slope - 1.0) < 0.1);
}

TEST_CASE("closure constant asymptote under vertex approach") {
  const double alpha = kPi / 2.0;
  KhrapkovFactor fact(alpha);
  const Vec2 p{1.0, 1.0};
  const Vec2 target = fact.x_plus_m1 * p;
  // Richardson-style extrapolation of the scaled constant over a ladder
  std::vector<double> x, r1, r2;
  for (double ld : {-6.0, -8.0, -10.0}) {
    const double delta = std::pow(10.0, ld);
    const auto roots = truncated_pole_table(alpha, delta, {});
    const auto data = build_internal_data(fact, roots);
    const auto sys = assemble_internal(data, delta, p);
    const Vec2 scaled = (-delta * std::log(delta) * kSqrtPi / 8.0) * sys.c_circ;
    x.push_back(1.0 / std::log(delta));
    r1.push_back(scaled.x.real() / target.x.real());
    r2.push_back(scaled.y.real() / target.y.real());
  }
  auto neville = [&](const std::vector<double>& y) {
    // quadratic extrapolation to x = 0
    const double x0 = x[0], x1 = x[1], x2 = x[2];
    const double y01 = (x0 * y[1] - x1 * y[0]) / (x0 - x1);
    const double y12 = (x1 * y[2] - x2 * y[1]) / (x1 - x2);
    return (x0 * y12 - x2 * y01) / (x0 - x2);
  };
  CHECK(std::abs(neville(r1) - 1.0) < 0.05);
  CHECK(std::abs(neville(r2) - 1.0) < 0.05);
}

TEST_CASE("outer-tip factors approach the edge limit at the logarithmic rate") {
  const double alpha = kPi / 2.0;
  KhrapkovFactor fact(alpha);
  const auto edge = sif_edge_constant(fact, 1.0, 1.0, 1.0);
  const double delta = 1e-6;
  const auto r = solve_internal(alpha, delta, 1.0, Vec2{1.0, 1.0});
  const double pred = 1.0 + 1.0 / std::log(delta);
  const double bound = 3.0 / std::pow(std::log(delta), 2);
  CHECK(std::abs(r.k1_plus / edge.k1 - pred) < bound);
  CHECK(std::abs(r.k2_plus / edge.k2 - pred) < bound);
  // and the share of the deviation carried by the coefficient sum is O(1/log)
  const auto r2 = solve_internal(alpha, 1e-4, 1.0, Vec2{1.0, 1.0});
  const double dev1 = std::abs(r.k1_plus - edge.k1), dev2 = std::abs(r2.k1_plus - edge.k1);
  CHECK(std::abs(dev2 / dev1 - std::log(1e-6) / std::log(1e-4)) < 0.35);
}

TEST_CASE("doubling the truncation leaves the factors unchanged") {
  const double alpha = kPi / 2.0, delta = 0.5;
  InternalOptions o1, o2;
  o1.n_roots_override = 48;
  o2.n_roots_override = 96;
  const auto r1 = solve_internal(alpha, delta, 1.0, Vec2{1.0, 1.0}, MaterialSpec{}, o1);
  const auto r2 = solve_internal(alpha, delta, 1.0, Vec2{1.0, 1.0}, MaterialSpec{}, o2);
  CHECK(std::abs(r1.k1_plus - r2.k1_plus) < 1e-8);
  CHECK(std::abs(r1.k2_plus - r2.k2_plus) < 1e-8);
  CHECK(std::abs(r1.k1_minus - r2.k1_minus) < 1e-8);
  CHECK(std::abs(r1.k2_minus - r2.k2_minus) < 1e-8);
}

TEST_CASE("q matrix") {
  KhrapkovFactor fact(kPi / 3.0);
  const Mat2 q = q_matrix(fact);
  CHECK(std::abs(q.det() - 1.0) < 1e-14);
  CHECK(max_abs(q.transpose() * q - Mat2::identity()) < 1e-14);
  CHECK(max_abs(q - fact.x_inf() * fact.x_inf()) < 1e-14);
  KhrapkovFactor near_pi(0.999 * kPi);
  CHECK(std::abs(near_pi.q()) < 0.02);
}

TEST_CASE("energy release") {
  MaterialSpec m{1.0, 0.0, StrainState::plane_stress};
  CHECK(std::abs(energy_release(Vec2{1.0, 0.0}, m, 1.0) - 1.0) < 1e-15);
  MaterialSpec m2{2.0, 0.0, StrainState::plane_stress};
  CHECK(std::abs(energy_release(Vec2{3.0, 4.0}, m2, 0.1) - 1.25) < 1e-14);

  // identity dU = (K_I^2 + K_II^2)/E holds exactly by construction
  const auto r = solve_internal(kPi / 2.0, 0.2, 1.0, Vec2{1.0, 1.0});
  CHECK(std::abs(r.du_plus - (r.k1_plus * r.k1_plus + r.k2_plus * r.k2_plus)) < 1e-14);

  // Poisson ratio never enters the factors (bitwise)
  const auto ra = solve_internal(kPi / 2.0, 0.2, 1.0, Vec2{1.0, 1.0},
                                 MaterialSpec{1.0, 0.0, StrainState::plane_stress});
  const auto rb = solve_internal(kPi / 2.0, 0.2, 1.0, Vec2{1.0, 1.0},
                                 MaterialSpec{1.0, 0.3, StrainState::plane_stress});
  CHECK(ra.k1_plus == rb.k1_plus);
  CHECK(ra.k1_minus == rb.k1_minus);
}

TEST_CASE("degenerate crack geometries") {
  CHECK_THROWS_AS(solve_internal(kPi / 2.0, 1.0, 1.0, Vec2{1.0, 0.0}), validation_error);
  CHECK_THROWS_AS((CrackConfig{-0.1, 1.0}.validate()), validation_error);
}
