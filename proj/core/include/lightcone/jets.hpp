#pragma once

#include "lightcone/errors.hpp"
#include "lightcone/mat2.hpp"

namespace lightcone {

// Value and first three derivatives of a holomorphic function at a fixed
// base point.  Arithmetic is exact truncated-Taylor composition.
struct Jet3 {
  Complex f{0.0}, f1{0.0}, f2{0.0}, f3{0.0};

  static Jet3 constant(Complex c) { return {c, 0.0, 0.0, 0.0}; }
  static Jet3 variable(Complex z0) { return {z0, 1.0, 0.0, 0.0}; }
};

Jet3 operator+(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a);
Jet3 operator*(const Jet3& a, const Jet3& b);
Jet3 operator*(Complex s, const Jet3& a);

// Throws PoleEncountered when the denominator value is numerically zero.
Jet3 operator/(const Jet3& a, const Jet3& b);

// Composition with a scalar function given by its derivatives h0..h3 at a.f
// (third-order Faa di Bruno).
Jet3 compose(const Jet3& a, Complex h0, Complex h1, Complex h2, Complex h3);

Jet3 exp(const Jet3& a);
Jet3 log(const Jet3& a);   // principal branch; BranchPoint at 0
Jet3 sin(const Jet3& a);
Jet3 cos(const Jet3& a);
Jet3 sinh(const Jet3& a);
Jet3 cosh(const Jet3& a);
Jet3 sqrt(const Jet3& a);  // principal branch; BranchPoint at 0
Jet3 pow(const Jet3& a, const Jet3& b);
Jet3 powi(const Jet3& a, long n);

// S(g) = g3/g1 - (3/2)(g2/g1)^2; throws CriticalPoint when |g1| < 1e-12.
Complex schwarzian(const Jet3& g);

enum class MobiusGroup { SL2C, SU2, SU11 };

// Coefficients of z -> (az+b)/(cz+d) with ad - bc = 1.
struct MobiusElement {
  Mat2c m;
  MobiusGroup group{MobiusGroup::SL2C};

  // Throws InvalidDeterminant unless |det - 1| <= 1e-12, and InvalidArgument
  // when a group tag does not match the coefficient pattern.
  static MobiusElement make(const Mat2c& m, MobiusGroup group = MobiusGroup::SL2C);
  static MobiusElement identity() { return MobiusElement{Mat2c::identity(), MobiusGroup::SU2}; }

  friend MobiusElement operator*(const MobiusElement& l, const MobiusElement& r);
};

Complex mobius_apply(const MobiusElement& m, Complex z);
Jet3 mobius_apply(const MobiusElement& m, const Jet3& z);

// |S(A*g) - S(g)| at one sample, both sides evaluated through jets.
double schwarzian_invariance_check(const Jet3& g, const MobiusElement& a);

}  // namespace lightcone
