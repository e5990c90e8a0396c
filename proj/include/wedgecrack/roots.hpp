#pragma once

// Pole/zero tables in the complex plane: the merged pole sequence s_m of the
// side-crack kernel (integers and zeros sigma_m of d(s, alpha)), the
// half-plane zero sequence of s^2 - sin^2(pi s/2), and the real wedge
// characteristic roots mu, mu0. Complex zeros are located by argument-
// principle box counting on dyadically subdivided rectangles (d is entire,
// so winding number = zero count), then polished by Newton with the analytic
// derivative. No zero can be missed without the counts disagreeing.

#include <algorithm>
#include <optional>
#include <vector>

#include "wedgecrack/kernels.hpp"

namespace wedgecrack {

enum class RootKind { integer_pole, sigma_zero };

struct Root {
  Cplx s;          // representative; Im s >= 0 (conjugate implied when Im > 0)
  RootKind kind;
  bool is_real() const { return s.imag() == 0.0; }
};

struct RootTable {
  double alpha = 0.0;
  std::vector<Root> roots;  // ordered by Re s, starting s0 = 0, s1 = 1

  std::size_t size() const { return roots.size(); }
  const Root& operator[](std::size_t i) const { return roots[i]; }
};

namespace detail {

inline Cplx d_deriv(Cplx s, double alpha) {
  const double sa = std::sin(alpha);
  return 2.0 * s * (sa * sa) - alpha * std::sin(2.0 * alpha * s);
}

// Winding number of d(., alpha) around a rectangle, by walking the boundary
// and accumulating the continuous argument. Steps refine until consecutive
// phase jumps stay below pi/2. Returns nullopt when a zero sits (numerically)
// on the boundary.
inline std::optional<int> winding_count(double alpha, double re0, double re1, double im0,
                                        double im1) {
  const std::array<Cplx, 5> corners = {Cplx(re0, im0), Cplx(re1, im0), Cplx(re1, im1),
                                       Cplx(re0, im1), Cplx(re0, im0)};
  double total = 0.0;
  const double base_step = std::min(0.25, kPi / (6.0 * alpha));
  for (int edge = 0; edge < 4; ++edge) {
    const Cplx a = corners[static_cast<std::size_t>(edge)];
    const Cplx b = corners[static_cast<std::size_t>(edge) + 1];
    const double len = std::abs(b - a);
    int n = std::max(2, static_cast<int>(len / base_step) + 1);
    for (int attempt = 0; attempt < 14; ++attempt) {
      double acc = 0.0;
      bool ok = true;
      Cplx prev = d_fun(a, alpha);
      if (std::abs(prev) < 1e-13 * (1.0 + std::norm(a))) return std::nullopt;
      for (int i = 1; i <= n; ++i) {
        const Cplx z = a + (b - a) * (static_cast<double>(i) / n);
        const Cplx cur = d_fun(z, alpha);
        if (std::abs(cur) < 1e-13 * (1.0 + std::norm(z))) return std::nullopt;
        const double dphi = std::arg(cur / prev);
        if (std::abs(dphi) > 0.5 * kPi) {
          ok = false;
          break;
        }
        acc += dphi;
        prev = cur;
      }
      if (ok) {
        total += acc;
        break;
      }
      n *= 2;
      if (attempt == 13)
        throw root_finder_error("winding_count: phase steps did not settle");
    }
  }
  const double turns = total / (2.0 * kPi);
  const int count = static_cast<int>(std::lround(turns));
  if (std::abs(turns - count) > 0.25)
    throw root_finder_error("winding_count: non-integer winding number");
  return count;
}

inline Cplx newton_polish(Cplx guess, double alpha) {
  Cplx s = guess;
  for (int it = 0; it < 80; ++it) {
    const Cplx f = d_fun(s, alpha);
    const Cplx df = d_deriv(s, alpha);
    if (std::abs(df) == 0.0) break;
    const Cplx step = f / df;
    s -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(s))) break;
  }
  return s;
}

struct Box {
  double re0, re1, im0, im1;
  int count;
};

// All zeros of d(., alpha) inside the open rectangle, found by recursive
// bisection of the winding count. Boxes whose boundary grazes a zero are
// jiggled deterministically.
inline void collect_zeros(double alpha, Box box, std::vector<Cplx>& out, int depth = 0) {
  if (box.count == 0) return;
  const double w = box.re1 - box.re0, h = box.im1 - box.im0;
  if (box.count == 1 || (w < 1e-6 && h < 1e-6)) {
    if (box.count > 1)
      throw exceptional_angle_error(
          "collect_zeros: unresolved zero cluster (confluent zeros of d at this angle)");
    Cplx z = newton_polish(Cplx(0.5 * (box.re0 + box.re1), 0.5 * (box.im0 + box.im1)), alpha);
    if (std::abs(d_fun(z, alpha)) > 1e-13 * (1.0 + std::norm(z)) || z.real() < box.re0 - 1e-6 ||
        z.real() > box.re1 + 1e-6 || z.imag() < box.im0 - 1e-6 || z.imag() > box.im1 + 1e-6) {
      // Newton wandered: subdivide further instead
      if (w < 1e-9 && h < 1e-9)
        throw root_finder_error("collect_zeros: Newton failed to converge in a tight box");
    } else {
      out.push_back(z);
      return;
    }
  }
  if (depth > 60) throw root_finder_error("collect_zeros: recursion limit");

  const bool split_re = w >= h;
  for (int jiggle = 0;; ++jiggle) {
    if (jiggle > 8) throw root_finder_error("collect_zeros: could not place a cut");
    // irrational offsets keep repeated cuts from landing on the same zero
    const double frac = 0.5 + 0.61803398874989484820 * jiggle * 0.01;
    Box lo = box, hi = box;
    if (split_re) {
      const double cut = box.re0 + frac * w;
      lo.re1 = cut;
      hi.re0 = cut;
    } else {
      const double cut = box.im0 + frac * h;
      lo.im1 = cut;
      hi.im0 = cut;
    }
    const auto c_lo = winding_count(alpha, lo.re0, lo.re1, lo.im0, lo.im1);
    if (!c_lo) continue;
    const auto c_hi = winding_count(alpha, hi.re0, hi.re1, hi.im0, hi.im1);
    if (!c_hi) continue;
    if (*c_lo + *c_hi != box.count)
      throw root_finder_error("collect_zeros: child counts disagree with parent");
    lo.count = *c_lo;
    hi.count = *c_hi;
    collect_zeros(alpha, lo, out, depth + 1);
    collect_zeros(alpha, hi, out, depth + 1);
    return;
  }
}

// Real zeros of d on (re0, re1) by sign-change bisection (d is real there).
inline std::vector<double> real_zeros_of_d(double alpha, double re0, double re1) {
  std::vector<double> out;
  const int n = std::max(64, static_cast<int>((re1 - re0) / 0.005));
  auto dr = [&](double x) { return d_fun(Cplx(x, 0.0), alpha).real(); };
  double prev = dr(re0);
  for (int i = 1; i <= n; ++i) {
    const double x = re0 + (re1 - re0) * i / n;
    const double cur = dr(x);
    if (prev == 0.0) prev = 1e-300;
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = re0 + (re1 - re0) * (i - 1) / n, hi = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((dr(lo) < 0.0) != (dr(mid) < 0.0))
          hi = mid;
        else
          lo = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return out;
}

// Upper-half (and real, alpha near pi) zeros of d with Re in (1, re_max].
inline std::vector<Cplx> sigma_zeros(double alpha, double re_max) {
  const double sa = std::sin(alpha);
  const double im_max =
      std::max(4.0, std::log(std::max(8.0, 4.0 * re_max * std::max(sa, 1e-3))) / alpha + 4.0);
  const double re_lo = 1.0 + 1e-4;
  std::vector<Cplx> zeros;

  // real zeros first (they exist for wedge angles approaching pi)
  for (double x : real_zeros_of_d(alpha, re_lo, re_max)) zeros.emplace_back(x, 0.0);

  // strictly complex zeros: rectangle lifted off the real axis
  const double im_lo = 1e-4;
  const double strip = std::max(1.0, kPi / alpha);
  double r0 = re_lo;
  while (r0 < re_max) {
    const double r1 = std::min(re_max, r0 + strip);
    for (int jiggle = 0;; ++jiggle) {
      if (jiggle > 8) throw root_finder_error("sigma_zeros: boundary kept grazing a zero");
      const double off = 1e-3 * jiggle;
      const auto cnt = winding_count(alpha, r0, r1 + off, im_lo, im_max + off);
      if (!cnt) continue;
      Box box{r0, r1 + off, im_lo, im_max + off, *cnt};
      std::vector<Cplx> local;
      collect_zeros(alpha, box, local);
      for (Cplx z : local)
        if (z.real() > r0 && z.real() <= r1) zeros.push_back(z);
      break;
    }
    r0 += strip;
  }

  // a complex zero polished onto the axis duplicates a real one; drop it
  std::vector<Cplx> unique;
  for (Cplx z : zeros) {
    bool dup = false;
    for (Cplx u : unique)
      if (std::abs(u - z) < 1e-8) dup = true;
    if (!dup) unique.push_back(z);
  }
  std::sort(unique.begin(), unique.end(),
            [](Cplx a, Cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return unique;
}

}  // namespace detail

// Number of zeros of d(., alpha) inside a rectangle (argument-principle
// count), exposed for the audit tests.
inline int count_zeros_in_box(double alpha, double re0, double re1, double im0, double im1) {
  const auto c = detail::winding_count(alpha, re0, re1, im0, im1);
  if (!c) throw root_finder_error("count_zeros_in_box: zero on the boundary");
  return *c;
}

// Merged, Re-ordered pole sequence of the side-crack kernel: s0 = 0, s1 = 1,
// then n_beyond further entries drawn from the integers m >= 2 and the zeros
// sigma_m of d(s, alpha) with Re > 1 (upper-half representatives; conjugates
// implied). An integer coinciding with a sigma zero to 1e-6 is reported as an
// exceptional angle: the residue calculus degenerates there.
inline RootTable pole_table(double alpha, int n_beyond) {
  if (!(alpha > 0.0 && alpha < kPi)) throw validation_error("pole_table: alpha must be in (0, pi)");
  if (n_beyond < 1) throw validation_error("pole_table: need at least one root beyond s1");

  const double re_max = static_cast<double>(n_beyond) + 2.5;
  const auto sigmas = detail::sigma_zeros(alpha, re_max);

  for (Cplx z : sigmas) {
    const double nearest = std::round(z.real());
    if (std::abs(z - Cplx(nearest, 0.0)) < 1e-6)
      throw exceptional_angle_error("pole_table: sigma zero collides with an integer pole");
    const double denom = std::abs(2.0 * z * std::pow(std::sin(alpha), 2) -
                                  alpha * std::sin(2.0 * alpha * z));
    if (denom < 1e-10)
      throw exceptional_angle_error("pole_table: degenerate residue denominator at sigma zero");
  }

  RootTable table;
  table.alpha = alpha;
  table.roots.push_back({Cplx(0.0, 0.0), RootKind::integer_pole});
  table.roots.push_back({Cplx(1.0, 0.0), RootKind::integer_pole});

  std::vector<Root> merged;
  for (int m = 2; m <= n_beyond + 2; ++m)
    merged.push_back({Cplx(static_cast<double>(m), 0.0), RootKind::integer_pole});
  for (Cplx z : sigmas) merged.push_back({z, RootKind::sigma_zero});
  std::sort(merged.begin(), merged.end(), [](const Root& a, const Root& b) {
    if (a.s.real() != b.s.real()) return a.s.real() < b.s.real();
    return a.s.imag() < b.s.imag();
  });
  if (static_cast<int>(merged.size()) < n_beyond)
    throw root_finder_error("pole_table: merged sequence shorter than requested");
  merged.resize(static_cast<std::size_t>(n_beyond));
  for (auto& r : merged) table.roots.push_back(r);
  return table;
}

// The n complex zeros (Re > 0, Im > 0) of s^2 - sin^2(pi s/2), ordered by
// Re. The real zeros 0 and 1 are excluded: the half-plane system carries
// them through explicit terms. Note s^2 - sin^2(pi s/2) = -d(s, pi/2).
inline RootTable halfplane_zero_table(int n) {
  if (n < 1) throw validation_error("halfplane_zero_table: need n >= 1");
  const double alpha = kPi / 2.0;
  RootTable table;
  table.alpha = alpha;
  double re_max = 2.0 * n + 6.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto sigmas = detail::sigma_zeros(alpha, re_max);
    std::vector<Cplx> complex_only;
    for (Cplx z : sigmas)
      if (z.imag() > 1e-8) complex_only.push_back(z);
    if (static_cast<int>(complex_only.size()) >= n) {
      complex_only.resize(static_cast<std::size_t>(n));
      for (Cplx z : complex_only) table.roots.push_back({z, RootKind::sigma_zero});
      return table;
    }
    re_max *= 1.5;
  }
  throw root_finder_error("halfplane_zero_table: could not collect enough zeros");
}

// Roots of sin^2(mu(pi + alpha)) = mu^2 sin^2(alpha) in (0, 1): the wedge
// characteristic exponents. One root mu below alpha* ~ 0.431 pi, a second
// root mu0 above it. The trivial endpoint root mu = 1 is excluded.
struct CharRoots {
  double mu = 0.0;
  std::optional<double> mu0;
};

inline CharRoots char_roots(double alpha) {
  if (!(alpha > 0.0 && alpha < kPi))
    throw validation_error("char_roots: alpha must be in (0, pi)");
  const double sa = std::sin(alpha);
  auto h = [&](double mu) {
    const double s = std::sin(mu * (kPi + alpha));
    return s * s - mu * mu * sa * sa;
  };
  auto bisect = [&](double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((h(lo) < 0.0) != (h(mid) < 0.0))
        hi = mid;
      else
        lo = mid;
    }
    return 0.5 * (lo + hi);
  };

  std::vector<double> roots;
  auto scan = [&](double lo, double hi, int cells) {
    double prev = h(lo);
    for (int i = 1; i <= cells; ++i) {
      const double x = lo + (hi - lo) * i / cells;
      const double cur = h(x);
      if ((prev < 0.0) != (cur < 0.0)) {
        const double r = bisect(lo + (hi - lo) * (i - 1) / cells, x);
        bool dup = false;
        for (double q : roots)
          if (std::abs(q - r) < 1e-9) dup = true;
        if (!dup && r > 1e-9 && r < 1.0 - 1e-4) roots.push_back(r);
      }
      prev = cur;
    }
  };
  scan(1e-6, 1.0 - 1e-4, 2048);
  if (alpha > 0.9 * kPi) scan(0.45, 0.55, 65536);  // the two roots pinch at 1/2 as alpha -> pi
  std::sort(roots.begin(), roots.end());

  if (roots.empty()) throw root_finder_error("char_roots: no characteristic root found");
  CharRoots out;
  out.mu = roots.front();
  if (roots.size() >= 2) out.mu0 = roots[1];
  return out;
}

}  // namespace wedgecrack
