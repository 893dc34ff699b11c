#include "lightcone/jets.hpp"

#include <cmath>

namespace lightcone {

namespace {
constexpr double kPoleFloor = 1e-300;
constexpr double kCriticalTol = 1e-12;
}  // namespace

Jet3 operator+(const Jet3& a, const Jet3& b) {
  return {a.f + b.f, a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3};
}

Jet3 operator-(const Jet3& a, const Jet3& b) {
  return {a.f - b.f, a.f1 - b.f1, a.f2 - b.f2, a.f3 - b.f3};
}

Jet3 operator-(const Jet3& a) { return {-a.f, -a.f1, -a.f2, -a.f3}; }

Jet3 operator*(const Jet3& a, const Jet3& b) {
  return {a.f * b.f,
          a.f1 * b.f + a.f * b.f1,
          a.f2 * b.f + 2.0 * a.f1 * b.f1 + a.f * b.f2,
          a.f3 * b.f + 3.0 * a.f2 * b.f1 + 3.0 * a.f1 * b.f2 + a.f * b.f3};
}

Jet3 operator*(Complex s, const Jet3& a) {
  return {s * a.f, s * a.f1, s * a.f2, s * a.f3};
}

Jet3 compose(const Jet3& a, Complex h0, Complex h1, Complex h2, Complex h3) {
  return {h0,
          h1 * a.f1,
          h2 * a.f1 * a.f1 + h1 * a.f2,
          h3 * a.f1 * a.f1 * a.f1 + 3.0 * h2 * a.f1 * a.f2 + h1 * a.f3};
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
  if (std::abs(b.f) <= kPoleFloor) {
    raise(Errc::PoleEncountered, "jet division by zero");
  }
  const Complex w = 1.0 / b.f;
  const Jet3 inv = compose(b, w, -w * w, 2.0 * w * w * w, -6.0 * w * w * w * w);
  return a * inv;
}

Jet3 exp(const Jet3& a) {
  const Complex e = std::exp(a.f);
  return compose(a, e, e, e, e);
}

Jet3 log(const Jet3& a) {
  if (std::abs(a.f) <= kPoleFloor) {
    raise(Errc::BranchPoint, "jet log at zero");
  }
  const Complex w = 1.0 / a.f;
  return compose(a, std::log(a.f), w, -w * w, 2.0 * w * w * w);
}

Jet3 sin(const Jet3& a) {
  const Complex s = std::sin(a.f), c = std::cos(a.f);
  return compose(a, s, c, -s, -c);
}

Jet3 cos(const Jet3& a) {
  const Complex s = std::sin(a.f), c = std::cos(a.f);
  return compose(a, c, -s, -c, s);
}

Jet3 sinh(const Jet3& a) {
  const Complex s = std::sinh(a.f), c = std::cosh(a.f);
  return compose(a, s, c, s, c);
}

Jet3 cosh(const Jet3& a) {
  const Complex s = std::sinh(a.f), c = std::cosh(a.f);
  return compose(a, c, s, c, s);
}

Jet3 sqrt(const Jet3& a) {
  if (std::abs(a.f) <= kPoleFloor) {
    raise(Errc::BranchPoint, "jet sqrt at zero");
  }
  const Complex s = std::sqrt(a.f);
  const Complex h1 = 0.5 / s;
  const Complex h2 = -0.25 / (s * a.f);
  const Complex h3 = 0.375 / (s * a.f * a.f);
  return compose(a, s, h1, h2, h3);
}

Jet3 powi(const Jet3& a, long n) {
  if (n < 0) {
    return Jet3::constant(1.0) / powi(a, -n);
  }
  Jet3 out = Jet3::constant(1.0);
  Jet3 base = a;
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Jet3 pow(const Jet3& a, const Jet3& b) {
  // Integer constant exponents avoid the log branch cut.
  if (b.f1 == Complex(0.0) && b.f2 == Complex(0.0) && b.f3 == Complex(0.0) &&
      b.f.imag() == 0.0 && std::nearbyint(b.f.real()) == b.f.real() &&
      std::abs(b.f.real()) <= 1024.0) {
    return powi(a, static_cast<long>(b.f.real()));
  }
  return exp(b * log(a));
}

Complex schwarzian(const Jet3& g) {
  if (std::abs(g.f1) < kCriticalTol) {
    raise(Errc::CriticalPoint, "schwarzian requires g_z != 0");
  }
  const Complex r = g.f2 / g.f1;
  return g.f3 / g.f1 - 1.5 * r * r;
}

MobiusElement MobiusElement::make(const Mat2c& m, MobiusGroup group) {
  if (std::abs(m.det() - 1.0) > 1e-12) {
    raise(Errc::InvalidDeterminant, "Moebius element requires ad - bc = 1");
  }
  if (group == MobiusGroup::SU2) {
    if (std::abs(m.d - std::conj(m.a)) > 1e-12 ||
        std::abs(m.c + std::conj(m.b)) > 1e-12) {
      raise(Errc::InvalidArgument, "SU(2) tag requires d = conj(a), c = -conj(b)");
    }
  } else if (group == MobiusGroup::SU11) {
    if (std::abs(m.d - std::conj(m.a)) > 1e-12 ||
        std::abs(m.c - std::conj(m.b)) > 1e-12) {
      raise(Errc::InvalidArgument, "SU(1,1) tag requires d = conj(a), c = conj(b)");
    }
  }
  return MobiusElement{m, group};
}

MobiusElement operator*(const MobiusElement& l, const MobiusElement& r) {
  const MobiusGroup group =
      l.group == r.group ? l.group : MobiusGroup::SL2C;
  return MobiusElement{l.m * r.m, group};
}

Complex mobius_apply(const MobiusElement& m, Complex z) {
  const Complex den = m.m.c * z + m.m.d;
  const double scale = std::abs(m.m.c) * std::abs(z) + std::abs(m.m.d);
  if (std::abs(den) <= std::max(kPoleFloor, 1e-12 * scale)) {
    raise(Errc::PoleEncountered, "Moebius pole: cz + d = 0");
  }
  return (m.m.a * z + m.m.b) / den;
}

Jet3 mobius_apply(const MobiusElement& m, const Jet3& z) {
  const Complex den = m.m.c * z.f + m.m.d;
  const double scale = std::abs(m.m.c) * std::abs(z.f) + std::abs(m.m.d);
  if (std::abs(den) <= std::max(kPoleFloor, 1e-12 * scale)) {
    raise(Errc::PoleEncountered, "Moebius pole: cz + d = 0");
  }
  const Jet3 num = Jet3::constant(m.m.a) * z + Jet3::constant(m.m.b);
  const Jet3 dnm = Jet3::constant(m.m.c) * z + Jet3::constant(m.m.d);
  return num / dnm;
}

double schwarzian_invariance_check(const Jet3& g, const MobiusElement& a) {
  const Complex s_g = schwarzian(g);
  const Complex s_ag = schwarzian(mobius_apply(a, g));
  return std::abs(s_ag - s_g);
}

}  // namespace lightcone
