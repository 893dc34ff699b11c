#pragma once

#include <array>
#include <variant>
#include <vector>

#include "lightcone/errors.hpp"
#include "lightcone/mat2.hpp"

namespace lightcone {

// Minkowski 4-vector (x0, x1, x2, x3), signature (-,+,+,+).
struct Vec4 {
  double x0{0}, x1{0}, x2{0}, x3{0};

  friend Vec4 operator+(const Vec4& l, const Vec4& r) {
    return {l.x0 + r.x0, l.x1 + r.x1, l.x2 + r.x2, l.x3 + r.x3};
  }
  friend Vec4 operator-(const Vec4& l, const Vec4& r) {
    return {l.x0 - r.x0, l.x1 - r.x1, l.x2 - r.x2, l.x3 - r.x3};
  }
  friend Vec4 operator*(double s, const Vec4& v) {
    return {s * v.x0, s * v.x1, s * v.x2, s * v.x3};
  }
};

// Hermitian 2x2 matrix [[p, q], [conj(q), r]] with p, r real.
struct Herm2 {
  double p{0};
  Complex q{0.0};
  double r{0};

  double trace() const { return p + r; }
  double det() const { return p * r - std::norm(q); }

  Mat2c as_mat() const { return {Complex(p), q, std::conj(q), Complex(r)}; }

  friend Herm2 operator+(const Herm2& l, const Herm2& r2) {
    return {l.p + r2.p, l.q + r2.q, l.r + r2.r};
  }
  friend Herm2 operator-(const Herm2& l, const Herm2& r2) {
    return {l.p - r2.p, l.q - r2.q, l.r - r2.r};
  }
  friend Herm2 operator*(double s, const Herm2& m) {
    return {s * m.p, s * m.q, s * m.r};
  }
  friend double entry_distance(const Herm2& l, const Herm2& r2) {
    return std::max(std::abs(l.p - r2.p),
                    std::max(std::abs(l.q - r2.q), std::abs(l.r - r2.r)));
  }
};

// x = (x0,x1,x2,x3) <-> [[x0+x3, x1+i x2], [x1-i x2, x0-x3]]
Herm2 herm_from_vec(const Vec4& x);
Vec4 vec_from_herm(const Herm2& m);

// Lorentzian inner product computed from determinants,
// <X,Y> = -1/2 (det(X+Y) - det X - det Y).  Total on Hermitian matrices.
double minkowski_inner(const Herm2& x, const Herm2& y);
double minkowski_inner(const Vec4& x, const Vec4& y);

// Complex-bilinear extension, used for z-derivatives of immersions.
Complex minkowski_inner(const std::array<Complex, 4>& x,
                        const std::array<Complex, 4>& y);

// A point of L^4 kept in both forms, synchronized at construction.
class LightconePoint {
 public:
  LightconePoint() = default;
  static LightconePoint from_herm(const Herm2& m);
  static LightconePoint from_vec(const Vec4& x);

  const Herm2& herm() const { return m_; }
  const Vec4& vec() const { return x_; }
  double trace() const { return m_.trace(); }

  // Scale-aware membership test for the future light cone:
  // |<X,X>| <= 1e-9 (1 + trace^2) and trace > 0.
  bool on_future_cone() const;

 private:
  Herm2 m_{};
  Vec4 x_{};
};

// Chart coordinates of the half-space model, t > 0 strictly.
struct HalfSpaceCoords {
  double u{0}, v{0}, t{1};
};

// Stereographic image; interior points have 0 < norm < 1.
struct BallPoint {
  double u{0}, v{0}, w{0};

  double norm() const { return std::sqrt(u * u + v * v + w * w); }
};

// Lightlike ray direction scaled to x0 = 1; unit 3-vector.
struct IdealRay {
  double d1{0}, d2{0}, d3{0};

  friend double distance(const IdealRay& l, const IdealRay& r) {
    const double a = l.d1 - r.d1, b = l.d2 - r.d2, c = l.d3 - r.d3;
    return std::sqrt(a * a + b * b + c * c);
  }
};

// phi_A : X -> A X A* for det A = 1, the reflection phi_- : x3 -> -x3,
// and finite compositions of the two.
struct MatrixAction {
  Mat2c A;
};
struct Reflection {};
using IsometryStep = std::variant<MatrixAction, Reflection>;

class Isometry {
 public:
  Isometry() = default;

  // Throws InvalidDeterminant when |det A - 1| > 1e-9.
  static Isometry matrix(const Mat2c& A);
  static Isometry reflection();

  Isometry& then(const Isometry& next);
  const std::vector<IsometryStep>& steps() const { return steps_; }

 private:
  std::vector<IsometryStep> steps_;
};

HalfSpaceCoords make_half_space(double u, double v, double t);  // rejects t <= 0

// The chart map Phi(u,v,t) = (1/t) [[u^2+v^2, u+iv], [u-iv, 1]].
LightconePoint phi(const HalfSpaceCoords& c);

// Inverse chart; throws RemovedLine when x0 - x3 vanishes (the deleted
// lightlike line), InvalidArgument off the cone.
HalfSpaceCoords phi_inverse(const LightconePoint& x);

// Stereographic projection from (-1,0,0,0) into the punctured ball.
BallPoint stereographic(const LightconePoint& x);

LightconePoint apply_isometry(const Isometry& iso, const LightconePoint& x);

// Projection to the ideal boundary, p -> [p], normalized by x0.
IdealRay ideal_projection(const LightconePoint& x);

// The origin-fixing isometry diag(sqrt(t), 1/sqrt(t)) carrying the standard
// horosphere t = 1 onto the horosphere x0 - x3 = 1/t.
Isometry horosphere_congruence(double t);

}  // namespace lightcone
