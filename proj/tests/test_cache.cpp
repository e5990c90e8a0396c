#include <catch_amalgamated.hpp>

#include <filesystem>

#include "wedgecrack/cache.hpp"

using namespace wedgecrack;

TEST_CASE("factor tables round-trip through the disk cache bit-exactly") {
  const double alpha = kPi / 3.0;
  KhrapkovFactor fact(alpha);
  const auto roots = truncated_pole_table(alpha, 0.3, {});
  const auto dir = std::filesystem::temp_directory_path() / "wedgecrack_cache_test";
  std::filesystem::remove_all(dir);

  const auto fresh = cached_internal_data(fact, roots, dir);   // builds + writes
  const auto cached = cached_internal_data(fact, roots, dir);  // must hit

  REQUIRE(cached.roots.size() == fresh.roots.size());
  for (std::size_t n = 0; n < fresh.roots.size(); ++n) {
    CHECK(cached.roots[n].s == fresh.roots[n].s);
    CHECK(max_abs(cached.delta_minus[n] - fresh.delta_minus[n]) == 0.0);
    CHECK(max_abs(cached.delta_plus[n] - fresh.delta_plus[n]) == 0.0);
  }

  // solves from cached data reproduce fresh solves bitwise
  const auto r1 = solve_internal(fact, fresh, 0.3, 1.0, Vec2{1.0, 0.5});
  const auto r2 = solve_internal(fact, cached, 0.3, 1.0, Vec2{1.0, 0.5});
  CHECK(r1.k1_plus == r2.k1_plus);
  CHECK(r1.k1_minus == r2.k1_minus);

  // a different tolerance key misses the cache and rebuilds
  QuadratureSettings other = KhrapkovFactor::tight_settings();
  other.rel_tol = 1e-11;
  KhrapkovFactor fact2(alpha, other);
  const auto rebuilt = cached_internal_data(fact2, roots, dir);
  CHECK(rebuilt.roots.size() == roots.size());

  std::filesystem::remove_all(dir);
}
