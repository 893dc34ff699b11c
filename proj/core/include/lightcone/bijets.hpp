#pragma once

#include <cmath>

#include "lightcone/errors.hpp"
#include "lightcone/jets.hpp"

namespace lightcone {

// Bivariate truncated-Taylor jet of order 3: value and all partial
// derivatives of total order <= 3 at a fixed (u, v).  T is double or Complex.
template <typename T>
struct Jet2 {
  T f{}, fu{}, fv{};
  T fuu{}, fuv{}, fvv{};
  T fuuu{}, fuuv{}, fuvv{}, fvvv{};

  static Jet2 constant(T c) {
    Jet2 j;
    j.f = c;
    return j;
  }
  static Jet2 variable_u(double u0) {
    Jet2 j;
    j.f = T(u0);
    j.fu = T(1.0);
    return j;
  }
  static Jet2 variable_v(double v0) {
    Jet2 j;
    j.f = T(v0);
    j.fv = T(1.0);
    return j;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.f + b.f,     a.fu + b.fu,   a.fv + b.fv,   a.fuu + b.fuu,
            a.fuv + b.fuv, a.fvv + b.fvv, a.fuuu + b.fuuu, a.fuuv + b.fuuv,
            a.fuvv + b.fuvv, a.fvvv + b.fvvv};
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.f - b.f,     a.fu - b.fu,   a.fv - b.fv,   a.fuu - b.fuu,
            a.fuv - b.fuv, a.fvv - b.fvv, a.fuuu - b.fuuu, a.fuuv - b.fuuv,
            a.fuvv - b.fuvv, a.fvvv - b.fvvv};
  }
  friend Jet2 operator-(const Jet2& a) {
    return {-a.f,   -a.fu,   -a.fv,   -a.fuu,  -a.fuv,
            -a.fvv, -a.fuuu, -a.fuuv, -a.fuvv, -a.fvvv};
  }
  friend Jet2 operator*(T s, const Jet2& a) {
    return {s * a.f,   s * a.fu,   s * a.fv,   s * a.fuu,  s * a.fuv,
            s * a.fvv, s * a.fuuu, s * a.fuuv, s * a.fuvv, s * a.fvvv};
  }

  // Leibniz through total order 3.
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.f = a.f * b.f;
    r.fu = a.fu * b.f + a.f * b.fu;
    r.fv = a.fv * b.f + a.f * b.fv;
    r.fuu = a.fuu * b.f + T(2.0) * a.fu * b.fu + a.f * b.fuu;
    r.fuv = a.fuv * b.f + a.fu * b.fv + a.fv * b.fu + a.f * b.fuv;
    r.fvv = a.fvv * b.f + T(2.0) * a.fv * b.fv + a.f * b.fvv;
    r.fuuu = a.fuuu * b.f + T(3.0) * a.fuu * b.fu + T(3.0) * a.fu * b.fuu +
             a.f * b.fuuu;
    r.fuuv = a.fuuv * b.f + a.fuu * b.fv + T(2.0) * a.fuv * b.fu +
             T(2.0) * a.fu * b.fuv + a.fv * b.fuu + a.f * b.fuuv;
    r.fuvv = a.fuvv * b.f + a.fvv * b.fu + T(2.0) * a.fuv * b.fv +
             T(2.0) * a.fv * b.fuv + a.fu * b.fvv + a.f * b.fuvv;
    r.fvvv = a.fvvv * b.f + T(3.0) * a.fvv * b.fv + T(3.0) * a.fv * b.fvv +
             a.f * b.fvvv;
    return r;
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (std::abs(b.f) <= 1e-300) {
      raise(Errc::PoleEncountered, "jet division by zero");
    }
    const T w = T(1.0) / b.f;
    return a * compose(b, w, -w * w, T(2.0) * w * w * w,
                       T(-6.0) * w * w * w * w);
  }

  // Composition with a scalar function given by derivatives h0..h3 at f.
  friend Jet2 compose(const Jet2& a, T h0, T h1, T h2, T h3) {
    Jet2 r;
    r.f = h0;
    r.fu = h1 * a.fu;
    r.fv = h1 * a.fv;
    r.fuu = h2 * a.fu * a.fu + h1 * a.fuu;
    r.fuv = h2 * a.fu * a.fv + h1 * a.fuv;
    r.fvv = h2 * a.fv * a.fv + h1 * a.fvv;
    r.fuuu = h3 * a.fu * a.fu * a.fu + T(3.0) * h2 * a.fu * a.fuu + h1 * a.fuuu;
    r.fuuv = h3 * a.fu * a.fu * a.fv +
             h2 * (T(2.0) * a.fu * a.fuv + a.fuu * a.fv) + h1 * a.fuuv;
    r.fuvv = h3 * a.fu * a.fv * a.fv +
             h2 * (T(2.0) * a.fv * a.fuv + a.fu * a.fvv) + h1 * a.fuvv;
    r.fvvv = h3 * a.fv * a.fv * a.fv + T(3.0) * h2 * a.fv * a.fvv + h1 * a.fvvv;
    return r;
  }
};

using Jet2d = Jet2<double>;
using Jet2c = Jet2<Complex>;

inline Jet2c conj(const Jet2c& a) {
  using std::conj;
  return {conj(a.f),   conj(a.fu),   conj(a.fv),   conj(a.fuu),  conj(a.fuv),
          conj(a.fvv), conj(a.fuuu), conj(a.fuuv), conj(a.fuvv), conj(a.fvvv)};
}

// Component jets of a holomorphic jet read as a function of (u, v), z = u+iv.
inline Jet2c bivariate_from_holomorphic(const Jet3& g) {
  const Complex i(0.0, 1.0);
  Jet2c r;
  r.f = g.f;
  r.fu = g.f1;
  r.fv = i * g.f1;
  r.fuu = g.f2;
  r.fuv = i * g.f2;
  r.fvv = -g.f2;
  r.fuuu = g.f3;
  r.fuuv = i * g.f3;
  r.fuvv = -g.f3;
  r.fvvv = -i * g.f3;
  return r;
}

inline Jet2d real_part(const Jet2c& a) {
  return {a.f.real(),   a.fu.real(),   a.fv.real(),   a.fuu.real(),
          a.fuv.real(), a.fvv.real(),  a.fuuu.real(), a.fuuv.real(),
          a.fuvv.real(), a.fvvv.real()};
}

template <typename T>
Jet2<T> jet2_exp(const Jet2<T>& a) {
  const T e = std::exp(a.f);
  return compose(a, e, e, e, e);
}

template <typename T>
Jet2<T> jet2_log(const Jet2<T>& a) {
  if (std::abs(a.f) <= 1e-300) {
    raise(Errc::BranchPoint, "jet log at zero");
  }
  const T w = T(1.0) / a.f;
  return compose(a, std::log(a.f), w, -w * w, T(2.0) * w * w * w);
}

template <typename T>
Jet2<T> jet2_sqrt(const Jet2<T>& a) {
  if (std::abs(a.f) <= 1e-300) {
    raise(Errc::BranchPoint, "jet sqrt at zero");
  }
  const T s = std::sqrt(a.f);
  return compose(a, s, T(0.5) / s, T(-0.25) / (s * a.f),
                 T(0.375) / (s * a.f * a.f));
}

// Wirtinger derivatives of a real bivariate jet:
// f_z = (f_u - i f_v)/2, f_zz = (f_uu - f_vv - 2i f_uv)/4,
// f_zzbar = (f_uu + f_vv)/4.
struct Wirtinger {
  Complex fz;
  Complex fzz;
  double fzzbar;
};

inline Wirtinger wirtinger(const Jet2d& a) {
  return {0.5 * Complex(a.fu, -a.fv),
          0.25 * Complex(a.fuu - a.fvv, -2.0 * a.fuv),
          0.25 * (a.fuu + a.fvv)};
}

// Value with first-order partials, for fields derived from jet coefficients
// (mean curvature, Hopf differential) whose z-derivatives the Codazzi and
// Weingarten residuals need.
template <typename T>
struct Grad1 {
  T v{}, du{}, dv{};

  friend Grad1 operator+(const Grad1& a, const Grad1& b) {
    return {a.v + b.v, a.du + b.du, a.dv + b.dv};
  }
  friend Grad1 operator-(const Grad1& a, const Grad1& b) {
    return {a.v - b.v, a.du - b.du, a.dv - b.dv};
  }
  friend Grad1 operator-(const Grad1& a) { return {-a.v, -a.du, -a.dv}; }
  friend Grad1 operator*(const Grad1& a, const Grad1& b) {
    return {a.v * b.v, a.du * b.v + a.v * b.du, a.dv * b.v + a.v * b.dv};
  }
  friend Grad1 operator*(T s, const Grad1& a) {
    return {s * a.v, s * a.du, s * a.dv};
  }
  friend Grad1 operator/(const Grad1& a, const Grad1& b) {
    const T w = T(1.0) / b.v;
    return {a.v * w, (a.du * b.v - a.v * b.du) * w * w,
            (a.dv * b.v - a.v * b.dv) * w * w};
  }
};

using Grad1d = Grad1<double>;
using Grad1c = Grad1<Complex>;

inline Complex grad_dz(const Grad1d& g) { return 0.5 * Complex(g.du, -g.dv); }
inline Complex grad_dz(const Grad1c& g) {
  return 0.5 * (g.du - Complex(0.0, 1.0) * g.dv);
}
inline Complex grad_dzbar(const Grad1c& g) {
  return 0.5 * (g.du + Complex(0.0, 1.0) * g.dv);
}

}  // namespace lightcone
