#include <random>

#include <catch_amalgamated.hpp>

#include "wedgecrack/specfun.hpp"

using namespace wedgecrack;

TEST_CASE("ln_gamma reproduces exact values") {
  CHECK(std::abs(ln_gamma(Cplx(1.0, 0.0))) < 1e-14);
  CHECK(std::abs(std::exp(ln_gamma(Cplx(5.0, 0.0))) - 24.0) < 24.0 * 1e-13);
  CHECK(std::abs(ln_gamma(Cplx(0.5, 0.0)) - std::log(kSqrtPi)) < 1e-14);
  CHECK_THROWS_AS(ln_gamma(Cplx(-3.0, 0.0)), pole_eval_error);
}

TEST_CASE("reflection identity Gamma(z)Gamma(1-z) sin(pi z) = pi") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uni(-20.0, 20.0);
  int tested = 0;
  while (tested < 100) {
    const Cplx z(uni(rng), uni(rng));
    if (std::abs(z.imag()) < 0.05 &&
        std::abs(z.real() - std::round(z.real())) < 0.05)
      continue;  // stay off the integer poles
    const Cplx lhs =
        std::exp(ln_gamma(z) + ln_gamma(1.0 - z)) * std::sin(kPi * z) / kPi;
    CHECK(std::abs(lhs - 1.0) < 1e-12);
    ++tested;
  }
}

TEST_CASE("recurrence exp(ln_gamma(z+1) - ln_gamma(z)) = z on a half-plane sample") {
  for (double re : {0.7, 1.3, 4.2, 11.0}) {
    for (double im : {-8.0, -1.0, 0.4, 3.0, 17.0}) {
      const Cplx z(re, im);
      const Cplx ratio = std::exp(ln_gamma(z + 1.0) - ln_gamma(z));
      CHECK(std::abs(ratio - z) < 1e-12 * std::abs(z));
    }
  }
}

TEST_CASE("digamma identities") {
  CHECK(std::abs(digamma(Cplx(1.0, 0.0)) - digamma(Cplx(0.5, 0.0)) - 2.0 * kLog2) < 1e-12);
  CHECK(std::abs(digamma(Cplx(2.0, 0.0)) - digamma(Cplx(1.0, 0.0)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(digamma(Cplx(0.0, 0.0)), pole_eval_error);
}

TEST_CASE("a- derivative tends to log(2)/sqrt(pi) at 0") {
  CHECK(std::abs(a_minus_deriv(Cplx(0.0, 0.0)) - kLog2 / kSqrtPi) < 1e-12);
}

TEST_CASE("cot factor values") {
  CHECK(std::abs(k_minus(Cplx(0.0, 0.0)) - kSqrtPi) < 1e-13);
  CHECK(std::abs(k_plus(Cplx(-1.0, 0.0)) + 2.0 / kSqrtPi) < 1e-13);
  CHECK_THROWS_AS(k_plus(Cplx(2.0, 0.0)), pole_eval_error);
  CHECK_THROWS_AS(k_minus(Cplx(-0.5, 0.0)), pole_eval_error);

  // boundary-value identity K+/K- = cot(pi s) across contour points
  for (double tau : {0.1, 0.2, 0.3, 0.45, 0.6, 0.8, 1.0, 1.3, 1.7, 2.2,
                     2.8, 3.5, 4.5, 6.0, 8.0, 10.0, 12.0, 15.0, 18.0, 20.0}) {
    const Cplx s(0.0, tau);
    const Cplx cot = std::cos(kPi * s) / std::sin(kPi * s);
    CHECK(std::abs(k_plus(s) / k_minus(s) - cot) < 1e-12 * std::abs(cot));
  }
}

TEST_CASE("a factors at distinguished points") {
  CHECK(std::abs(a_minus(Cplx(0.0, 0.0)) - 1.0 / kSqrtPi) < 1e-13);
  CHECK(std::abs(a_plus(Cplx(-1.0, 0.0)) - 1.0 / kSqrtPi) < 1e-13);
}

TEST_CASE("half-power asymptotics of K+- at large |Im s|") {
  // the residual after the half power is the exact 1/(8z) correction, i.e.
  // 1.25e-3 in magnitude at |Im s| = 100; pin that structure
  for (double tau : {100.0, -100.0}) {
    const Cplx sp(-0.25, tau);
    const Cplx vp = k_plus(sp) * std::sqrt(-sp);
    CHECK(std::abs(vp + 1.0) < 1.3e-3);
    CHECK(std::abs(vp + 1.0 + 1.0 / (8.0 * (-sp))) < 2e-6);
    const Cplx sm(0.25, tau);
    const Cplx vm = k_minus(sm) * std::sqrt(sm);
    CHECK(std::abs(vm - 1.0) < 1.3e-3);
    CHECK(std::abs(vm - 1.0 + 1.0 / (8.0 * (sm + 0.5))) < 2e-6);
  }
}

TEST_CASE("Stirling and Lanczos branches agree across the switch") {
  for (double im : {15.0, 19.0, 21.0, 40.0, 60.0}) {
    const Cplx z(1.3, im);
    // recurrence links |z| < 20 (Lanczos) to |z| > 20 (Stirling)
    const Cplx ratio = std::exp(ln_gamma(z + 1.0) - ln_gamma(z));
    CHECK(std::abs(ratio - z) < 1e-12 * std::abs(z));
  }
}
