#pragma once

// Independent verification path: direct Gauss-Chebyshev collocation of the
// singular integral equation for the internal crack orthogonal to a
// half-plane boundary,
//   (1/4pi) int_a^b chi1(rho) [ 1/(rho-r) + (r^2+4 r rho - rho^2)/(rho+r)^3 ] drho = p(r),
// with the closure condition int_a^b chi1 = 0. The density is chi1(rho) =
// phi(u)/sqrt(1-u^2) on Chebyshev abscissae; collocation at the complementary
// points gives spectral accuracy for the smooth regular kernel.

#include <algorithm>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "wedgecrack/common.hpp"

namespace wedgecrack {

struct CollocationGrid {
  int n_nodes = 64;
  double a = 0.0, b = 1.0;

  void validate() const {
    if (n_nodes < 8) throw validation_error("CollocationGrid: need n_nodes >= 8");
    if (!(a >= 0.0 && a < b)) throw validation_error("CollocationGrid: need 0 <= a < b");
  }
  double node(int k) const {  // density abscissae, k = 1..n
    return std::cos(kPi * (2.0 * k - 1.0) / (2.0 * n_nodes));
  }
  double collocation_point(int j) const {  // j = 1..n-1
    return std::cos(kPi * j / n_nodes);
  }
  double map(double u) const { return 0.5 * (a + b) + 0.5 * (b - a) * u; }
};

struct SieSolution {
  CollocationGrid grid;
  std::vector<double> phi;  // density values at the nodes
  double k_plus = 0.0;      // K_I at r = b
  double k_minus = 0.0;     // K_I at r = a
  double side_condition = 0.0;

  // Chebyshev endpoint values by the discrete cosine expansion
  double phi_at(double u) const {
    const int n = grid.n_nodes;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      double c = 0.0;
      for (int k = 1; k <= n; ++k)
        c += phi[static_cast<std::size_t>(k - 1)] *
             std::cos(j * kPi * (2.0 * k - 1.0) / (2.0 * n));
      c *= (j == 0 ? 1.0 : 2.0) / n;
      acc += c * std::cos(j * std::acos(std::clamp(u, -1.0, 1.0)));
    }
    return acc;
  }
};

// include_regular_kernel = false reproduces the isolated pressurized crack
// (the dominant-kernel calibration case).
inline SieSolution sie_solve(double a, double b, const std::function<double(double)>& load,
                             int n_nodes, bool include_regular_kernel = true) {
  CollocationGrid grid;
  grid.n_nodes = n_nodes;
  grid.a = a;
  grid.b = b;
  grid.validate();
  const int n = n_nodes;
  const double c = 0.5 * (b - a);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);

  for (int j = 1; j <= n - 1; ++j) {
    const double v = grid.collocation_point(j);
    const double r = grid.map(v);
    for (int k = 1; k <= n; ++k) {
      const double u = grid.node(k);
      const double rho = grid.map(u);
      double kern = 1.0 / (u - v) / c;  // 1/(rho - r)
      if (include_regular_kernel) {
        kern += (r * r + 4.0 * r * rho - rho * rho) / std::pow(rho + r, 3);
      }
      m(j - 1, k - 1) = (1.0 / (4.0 * kPi)) * (kPi / n) * c * kern;
    }
    rhs(j - 1) = load(r);
  }
  // closure: int chi1 drho = c (pi/n) sum phi = 0
  for (int k = 1; k <= n; ++k) m(n - 1, k - 1) = kPi / n;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::VectorXd sol = qr.solve(rhs);
  if (qr.rank() < n)
    throw numerical_error("sie_solve: collocation matrix is rank deficient (n too small?)");

  SieSolution out;
  out.grid = grid;
  out.phi.assign(sol.data(), sol.data() + n);
  double side = 0.0;
  for (double p : out.phi) side += p;
  out.side_condition = std::abs(side) * kPi / n;

  // K = +- sqrt(pi c)/4 phi(+-1): calibrated against the pressurized isolated
  // crack K = P sqrt(pi (b-a)/2)
  out.k_plus = std::sqrt(kPi * c) / 4.0 * out.phi_at(1.0);
  out.k_minus = -std::sqrt(kPi * c) / 4.0 * out.phi_at(-1.0);
  return out;
}

}  // namespace wedgecrack
