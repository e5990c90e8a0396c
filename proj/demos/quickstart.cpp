// Minimal usage example: factorize once, then query stress intensity
// factors for an edge crack and an internal crack at the same wedge angle.

#include <cstdio>

#include "wedgecrack/wedgecrack.hpp"

int main() {
  using namespace wedgecrack;
  const double alpha = kPi / 2.0;  // wedge occupies -pi < theta < pi/2

  KhrapkovFactor fact(alpha);
  const auto edge = sif_edge_constant(fact, /*b=*/1.0, /*P1=*/1.0, /*P2=*/1.0);
  std::printf("edge crack:     K_I = %.6f   K_II = %.6f\n", edge.k1, edge.k2);

  const auto inner = solve_internal(alpha, /*a=*/0.2, /*b=*/1.0, Vec2{1.0, 1.0});
  std::printf("internal crack: K_I- = %.6f  K_II- = %.6f  K_I+ = %.6f  K_II+ = %.6f\n",
              inner.k1_minus, inner.k2_minus, inner.k1_plus, inner.k2_plus);
  std::printf("energy release per unit advance: inner tip %.6f, outer tip %.6f\n",
              inner.du_minus, inner.du_plus);

  // half-plane configuration with the collocation cross-check
  ScalarFactor scalar;
  const auto hp = solve_halfplane(scalar, 0.5, 1.0, 1.0);
  const auto sie = sie_solve(0.5, 1.0, [](double) { return 1.0; }, 96);
  std::printf("half-plane:     K_I- = %.8f vs oracle %.8f\n", hp.k1_minus, sie.k_minus);
  return 0;
}
