#include "lightcone/immersion.hpp"

#include <array>
#include <cmath>

namespace lightcone {

namespace {

Vec4 slot(const ImmersionJets& j, double Jet2d::* m) {
  return {j.x0.*m, j.x1.*m, j.x2.*m, j.x3.*m};
}

Vec4 gauss_from_conditions(const Vec4& x, const Vec4& xu, const Vec4& xv) {
  const Vec4 w{1, 0, 0, 0};
  const double delta = 1.0 / minkowski_inner(w, x);
  const double g11 = minkowski_inner(xu, xu);
  const double g12 = minkowski_inner(xu, xv);
  const double g22 = minkowski_inner(xv, xv);
  const double b1 = -delta * minkowski_inner(w, xu);
  const double b2 = -delta * minkowski_inner(w, xv);
  const double det = g11 * g22 - g12 * g12;
  const double beta = (b1 * g22 - b2 * g12) / det;
  const double gamma = (g11 * b2 - g12 * b1) / det;
  const Vec4 rest = beta * xu + gamma * xv + delta * w;
  const double alpha = -0.5 * minkowski_inner(rest, rest);
  return alpha * x + rest;
}

}  // namespace

ImmersionCurvature immersion_curvatures(const ImmersionMap& x, double u, double v) {
  const ImmersionJets j = x(u, v);
  const Vec4 p = slot(j, &Jet2d::f);
  const Vec4 xu = slot(j, &Jet2d::fu);
  const Vec4 xv = slot(j, &Jet2d::fv);

  const double e = minkowski_inner(xu, xu);
  const double g = minkowski_inner(xv, xv);
  const double f = minkowski_inner(xu, xv);
  const double scale = std::max(std::abs(e), std::abs(g));
  if (!(e > 0.0) || std::abs(e - g) > 1e-8 * scale || std::abs(f) > 1e-8 * scale) {
    raise(Errc::NotConformal, "immersion is not conformal at the sample");
  }
  const double e2w = 0.5 * (e + g);

  const Vec4 gauss = gauss_from_conditions(p, xu, xv);

  const Vec4 xzzb = 0.25 * (slot(j, &Jet2d::fuu) + slot(j, &Jet2d::fvv));

  const std::array<const Jet2d*, 4> coords{&j.x0, &j.x1, &j.x2, &j.x3};
  std::array<Complex, 4> xzz;
  for (int k = 0; k < 4; ++k) {
    xzz[k] = 0.25 * Complex(coords[k]->fuu - coords[k]->fvv, -2.0 * coords[k]->fuv);
  }
  const std::array<Complex, 4> gc{Complex(gauss.x0), Complex(gauss.x1),
                                  Complex(gauss.x2), Complex(gauss.x3)};

  ImmersionCurvature out;
  out.omega = 0.5 * std::log(e2w);
  out.mean = 2.0 / e2w * minkowski_inner(gauss, xzzb);
  out.hopf = minkowski_inner(gc, xzz);
  out.gauss = out.mean * out.mean - 4.0 * std::norm(out.hopf) / (e2w * e2w);
  out.gauss_map = gauss;
  return out;
}

ImmersionMap immersion_from_graph(const GraphFunction& tau) {
  return [tau](double u, double v) {
    const Jet2d t = tau.jets(u, v);
    Jet2d p;
    p.f = u * u + v * v;
    p.fu = 2 * u;
    p.fv = 2 * v;
    p.fuu = 2;
    p.fvv = 2;
    const Jet2d s = Jet2d::constant(1.0) / t;
    ImmersionJets j;
    j.x0 = 0.5 * ((p + Jet2d::constant(1.0)) * s);
    j.x1 = Jet2d::variable_u(u) * s;
    j.x2 = Jet2d::variable_v(v) * s;
    j.x3 = 0.5 * ((p - Jet2d::constant(1.0)) * s);
    return j;
  };
}

ImmersionMap transform_immersion(const Isometry& iso, ImmersionMap x) {
  return [iso, x = std::move(x)](double u, double v) {
    ImmersionJets j = x(u, v);
    // The congruence X -> A X A* and the reflection are real-linear maps of
    // the Minkowski coordinates, so they act slot-by-slot on the jets.
    constexpr double Jet2d::* slots[] = {
        &Jet2d::f,    &Jet2d::fu,   &Jet2d::fv,   &Jet2d::fuu,  &Jet2d::fuv,
        &Jet2d::fvv,  &Jet2d::fuuu, &Jet2d::fuuv, &Jet2d::fuvv, &Jet2d::fvvv};
    for (double Jet2d::* m : slots) {
      const LightconePoint mapped = apply_isometry(
          iso, LightconePoint::from_vec({j.x0.*m, j.x1.*m, j.x2.*m, j.x3.*m}));
      const Vec4& w = mapped.vec();
      j.x0.*m = w.x0;
      j.x1.*m = w.x1;
      j.x2.*m = w.x2;
      j.x3.*m = w.x3;
    }
    return j;
  };
}

}  // namespace lightcone
