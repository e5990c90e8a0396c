#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace wedgecrack {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145183;
inline constexpr double kLog2 = 0.693147180559945309417232121458176568;

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps validation_error -> exit 2 and
// numerical_error -> exit 3.
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class validation_error : public error {
public:
  explicit validation_error(const std::string& what) : error(what) {}
};

class numerical_error : public error {
public:
  explicit numerical_error(const std::string& what) : error(what) {}
};

class pole_eval_error : public numerical_error {
public:
  explicit pole_eval_error(const std::string& what) : numerical_error(what) {}
};

class non_convergence_error : public numerical_error {
public:
  explicit non_convergence_error(const std::string& what) : numerical_error(what) {}
};

class wrong_half_plane_error : public numerical_error {
public:
  explicit wrong_half_plane_error(const std::string& what) : numerical_error(what) {}
};

class root_finder_error : public numerical_error {
public:
  explicit root_finder_error(const std::string& what) : numerical_error(what) {}
};

class exceptional_angle_error : public numerical_error {
public:
  explicit exceptional_angle_error(const std::string& what) : numerical_error(what) {}
};

class truncation_error : public numerical_error {
public:
  explicit truncation_error(const std::string& what) : numerical_error(what) {}
};

// ---------------------------------------------------------------------------
// Small fixed-size complex linear algebra. Everything downstream is built
// from 2-vectors and 2x2 matrices; dense N x N work lives in Eigen.
// ---------------------------------------------------------------------------

struct Vec2 {
  Cplx x{0.0}, y{0.0};

  Vec2() = default;
  Vec2(Cplx a, Cplx b) : x(a), y(b) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend Vec2 operator*(Cplx a, const Vec2& v) { return {a * v.x, a * v.y}; }
  friend Vec2 operator*(double a, const Vec2& v) { return {a * v.x, a * v.y}; }

  double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
  Vec2 conj() const { return {std::conj(x), std::conj(y)}; }
  Vec2 real_part() const { return {x.real(), y.real()}; }
};

struct Mat2 {
  // Row-major entries a b / c d.
  Cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

  Mat2() = default;
  Mat2(Cplx a_, Cplx b_, Cplx c_, Cplx d_) : a(a_), b(b_), c(c_), d(d_) {}

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 rotation(double angle) {
    return {std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle)};
  }

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  friend Mat2 operator*(Cplx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  friend Mat2 operator*(double s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

  Cplx det() const { return a * d - b * c; }
  Cplx trace() const { return a + d; }

  Mat2 inverse() const {
    const Cplx dt = det();
    if (std::abs(dt) == 0.0) throw numerical_error("Mat2: singular matrix");
    const Cplx s = 1.0 / dt;
    return {s * d, -s * b, -s * c, s * a};
  }

  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
  Mat2 real_part() const { return {a.real(), b.real(), c.real(), d.real()}; }

  // max |entry|
  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
};

inline double max_abs(const Mat2& m) { return m.max_abs(); }

inline bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
inline bool is_finite(const Vec2& v) { return is_finite(v.x) && is_finite(v.y); }
inline bool is_finite(const Mat2& m) {
  return is_finite(m.a) && is_finite(m.b) && is_finite(m.c) && is_finite(m.d);
}

// ---------------------------------------------------------------------------
// Material description. Stress intensity factors are E-independent; the
// Young modulus enters only through released energy. Plane strain remaps
// (E, nu) -> (E/(1-nu^2), nu/(1-nu^2)).
// ---------------------------------------------------------------------------

enum class StrainState { plane_stress, plane_strain };

struct MaterialSpec {
  double young_modulus = 1.0;
  double poisson = 0.0;
  StrainState strain_state = StrainState::plane_stress;

  void validate() const {
    if (!(young_modulus > 0.0)) throw validation_error("MaterialSpec: E must be > 0");
    if (!(poisson >= 0.0 && poisson < 0.5))
      throw validation_error("MaterialSpec: nu must be in [0, 1/2)");
  }

  double effective_young() const {
    validate();
    if (strain_state == StrainState::plane_strain)
      return young_modulus / (1.0 - poisson * poisson);
    return young_modulus;
  }

  double effective_poisson() const {
    validate();
    if (strain_state == StrainState::plane_strain)
      return poisson / (1.0 - poisson * poisson);
    return poisson;
  }
};

}  // namespace wedgecrack
