#include <catch_amalgamated.hpp>

#include "wedgecrack/roots.hpp"

using namespace wedgecrack;

TEST_CASE("half-plane zero table") {
  const auto table = halfplane_zero_table(6);
  REQUIRE(table.size() == 6);

  // first zero of s^2 - sin^2(pi s/2) with Re, Im > 0 (argument-principle
  // scan plus Newton; the box (1.5,4)x(0.1,3) holds exactly one zero)
  CHECK(std::abs(table[0].s - Cplx(2.73959335632, 1.11902453434)) < 1e-9);

  for (std::size_t i = 0; i < table.size(); ++i) {
    const Cplx s = table[i].s;
    CHECK(s.real() > 1.0);   // the real zeros 0 and 1 are excluded
    CHECK(s.imag() > 0.0);
    const Cplx f = s * s - std::pow(std::sin(kPi * s / 2.0), 2);
    CHECK(std::abs(f) < 1e-12 * (1.0 + std::norm(s)));
    if (i) CHECK(table[i].s.real() > table[i - 1].s.real());
  }

  // growth pattern: Im s_n ~ (2/pi) log(2 |s_n|) (brute-force verified)
  for (std::size_t i = 4; i < table.size(); ++i) {
    const double pred = (2.0 / kPi) * std::log(2.0 * std::abs(table[i].s));
    CHECK(std::abs(table[i].s.imag() - pred) < 0.10 * pred);
  }
}

TEST_CASE("argument-principle audit of the zero count") {
  // box counts must match the table exactly (integers, no tolerance)
  const auto table = halfplane_zero_table(5);
  const int in_box = count_zeros_in_box(kPi / 2.0, 1.5, 12.0, 0.1, 4.0);
  int expect = 0;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].s.real() < 12.0) ++expect;
  CHECK(in_box == expect);
}

TEST_CASE("merged pole table for the side-crack kernel") {
  const double alpha = kPi / 2.0;
  const auto table = pole_table(alpha, 10);
  REQUIRE(table.size() == 12);
  CHECK(table[0].s == Cplx(0.0, 0.0));
  CHECK(table[1].s == Cplx(1.0, 0.0));

  int integer_count = 0;
  for (std::size_t i = 2; i < table.size(); ++i) {
    const Root& r = table[i];
    if (i) CHECK(table[i].s.real() >= table[i - 1].s.real() - 1e-12);
    if (r.kind == RootKind::integer_pole) {
      CHECK(std::abs(r.s.imag()) == 0.0);
      CHECK(std::abs(r.s.real() - std::round(r.s.real())) == 0.0);
      ++integer_count;
    } else {
      CHECK(std::abs(d_fun(r.s, alpha)) < 1e-12 * (1.0 + std::norm(r.s)));
    }
  }
  // integers m >= 2 each appear exactly once within the window
  CHECK(integer_count >= 4);
}

TEST_CASE("characteristic roots of the reentrant wedge") {
  // single root below the threshold angle
  {
    const auto cr = char_roots(kPi / 8.0);
    CHECK(std::abs(cr.mu - 0.800766) < 2e-6);
    CHECK(!cr.mu0);
  }
  // two roots above it
  {
    const auto cr = char_roots(kPi / 2.0);
    CHECK(std::abs(cr.mu - 0.544484) < 2e-6);
    REQUIRE(cr.mu0);
    CHECK(std::abs(*cr.mu0 - 0.908529) < 2e-6);
  }
  {
    const auto cr = char_roots(0.435 * kPi);
    REQUIRE(cr.mu0);
    CHECK(std::abs(*cr.mu0 - 0.993452) < 2e-6);
  }
  // near-degenerate angle: both roots pinch at 1/2
  {
    const auto cr = char_roots(0.999 * kPi);
    REQUIRE(cr.mu0);
    CHECK(std::abs(cr.mu - 0.5) < 1e-6);
    CHECK(std::abs(*cr.mu0 - 0.5005005) < 1e-6);
  }
  // residuals
  for (double af : {0.2, 0.5, 0.8}) {
    const double alpha = af * kPi;
    const auto cr = char_roots(alpha);
    const double h = std::pow(std::sin(cr.mu * (kPi + alpha)), 2) -
                     cr.mu * cr.mu * std::pow(std::sin(alpha), 2);
    CHECK(std::abs(h) < 1e-13);
  }
}

TEST_CASE("characteristic root varies continuously in alpha") {
  double prev = char_roots(0.2 * kPi).mu;
  for (double af = 0.2 + 1.0 / 90.0; af < 0.9; af += 1.0 / 90.0) {
    const double mu = char_roots(af * kPi).mu;
    CHECK(std::abs(mu - prev) < 0.02);
    prev = mu;
  }
}
