#include "lightcone/graph.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lightcone {

Grid Grid::parse(const std::string& spec) {
  Grid g;
  char extra;
  if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf,%d,%d%c", &g.umin, &g.umax,
                  &g.vmin, &g.vmax, &g.nu, &g.nv, &extra) != 6) {
    raise(Errc::InvalidArgument,
          "grid spec must be umin,umax,vmin,vmax,nu,nv: '" + spec + "'");
  }
  if (g.nu < 2 || g.nv < 2 || !(g.umax > g.umin) || !(g.vmax > g.vmin)) {
    raise(Errc::InvalidArgument, "grid needs umax > umin, vmax > vmin, nu,nv >= 2");
  }
  return g;
}

std::string Grid::to_string() const {
  std::ostringstream out;
  out << umin << ',' << umax << ',' << vmin << ',' << vmax << ',' << nu << ',' << nv;
  return out.str();
}

bool Domain::contains(double u, double v) const {
  switch (shape) {
    case Shape::Plane: return true;
    case Shape::Rect: {
      // 1-ulp slack so that grid endpoints computed as umin + k*du stay in.
      const double eu = 1e-12 * (1.0 + std::abs(umin) + std::abs(umax));
      const double ev = 1e-12 * (1.0 + std::abs(vmin) + std::abs(vmax));
      return u >= umin - eu && u <= umax + eu && v >= vmin - ev && v <= vmax + ev;
    }
    case Shape::Disk: {
      const double du = u - cu, dv = v - cv;
      const double er = 1e-12 * (1.0 + radius * radius);
      return du * du + dv * dv <= radius * radius + er;
    }
  }
  return false;
}

GraphFunction GraphFunction::analytic_expr(ExprPtr tau, Domain domain) {
  GraphFunction g;
  g.jets_ = [tau](double u, double v) { return eval_jet2(tau, u, v); };
  g.value_ = [tau](double u, double v) { return eval_real(tau, u, v); };
  g.domain_ = domain;
  return g;
}

GraphFunction GraphFunction::analytic(JetProvider jets, ValueProvider value,
                                      Domain domain) {
  GraphFunction g;
  g.jets_ = std::move(jets);
  g.value_ = std::move(value);
  g.domain_ = domain;
  return g;
}

namespace {

// One Richardson level: combines the h and h/2 stencils, cancelling the h^2
// truncation term of the central differences.
struct FdStencils {
  const GraphFunction::ValueProvider& f;
  double u, v, h;

  double at(double du, double dv) const { return f(u + du, v + dv); }

  double d1(bool along_u) const {
    const auto cd = [&](double s) {
      return along_u ? (at(s, 0) - at(-s, 0)) / (2 * s)
                     : (at(0, s) - at(0, -s)) / (2 * s);
    };
    return (4.0 * cd(h / 2) - cd(h)) / 3.0;
  }

  double d2(bool along_u) const {
    const double f0 = at(0, 0);
    const auto cd = [&](double s) {
      return along_u ? (at(s, 0) - 2 * f0 + at(-s, 0)) / (s * s)
                     : (at(0, s) - 2 * f0 + at(0, -s)) / (s * s);
    };
    return (4.0 * cd(h / 2) - cd(h)) / 3.0;
  }

  double duv() const {
    const auto cd = [&](double s) {
      return (at(s, s) - at(s, -s) - at(-s, s) + at(-s, -s)) / (4 * s * s);
    };
    return (4.0 * cd(h / 2) - cd(h)) / 3.0;
  }

  // Third-order coefficients come from an outer central difference of the
  // inner second-derivative stencils; a direct 2h^3 stencil at h = 1e-4 sits
  // at the roundoff floor.
  double outer() const { return std::max(h, 5e-3); }

  // f_uu at (u+du, v+dv), or f_vv when along_u is false.
  double second_at(bool along_u, double du, double dv) const {
    if (along_u) {
      return (at(du + h, dv) - 2 * at(du, dv) + at(du - h, dv)) / (h * h);
    }
    return (at(du, dv + h) - 2 * at(du, dv) + at(du, dv - h)) / (h * h);
  }

  double d3(bool along_u) const {
    const double s = outer();
    if (along_u) {
      return (second_at(true, s, 0) - second_at(true, -s, 0)) / (2 * s);
    }
    return (second_at(false, 0, s) - second_at(false, 0, -s)) / (2 * s);
  }

  // d/dv of f_uu (uu_then_v) or d/du of f_vv.
  double d21(bool uu_then_v) const {
    const double s = outer();
    if (uu_then_v) {
      return (second_at(true, 0, s) - second_at(true, 0, -s)) / (2 * s);
    }
    return (second_at(false, s, 0) - second_at(false, -s, 0)) / (2 * s);
  }
};

}  // namespace

GraphFunction GraphFunction::finite_difference(ValueProvider tau, double step,
                                               Domain domain) {
  if (!(step > 0.0)) {
    raise(Errc::InvalidArgument, "finite-difference step must be positive");
  }
  GraphFunction g;
  g.value_ = tau;
  g.jets_ = [tau, step](double u, double v) {
    FdStencils s{tau, u, v, step};
    Jet2d j;
    j.f = tau(u, v);
    j.fu = s.d1(true);
    j.fv = s.d1(false);
    j.fuu = s.d2(true);
    j.fvv = s.d2(false);
    j.fuv = s.duv();
    j.fuuu = s.d3(true);
    j.fvvv = s.d3(false);
    j.fuuv = s.d21(true);
    j.fuvv = s.d21(false);
    return j;
  };
  g.domain_ = domain;
  g.finite_difference_ = true;
  g.fd_step_ = step;
  return g;
}

Jet2d GraphFunction::jets(double u, double v) const {
  if (!domain_.contains(u, v)) {
    raise(Errc::DomainBoundary, "sample outside the declared domain");
  }
  Jet2d j = jets_(u, v);
  if (!(j.f > 0.0)) {
    raise(Errc::NonPositiveTau, "graph function not positive at the sample");
  }
  return j;
}

double GraphFunction::value(double u, double v) const {
  if (!domain_.contains(u, v)) {
    raise(Errc::DomainBoundary, "sample outside the declared domain");
  }
  return value_(u, v);
}

bool GraphFunction::contains(double u, double v) const {
  if (!domain_.contains(u, v)) return false;
  try {
    return value_(u, v) > 0.0;
  } catch (const Error&) {
    return false;
  }
}

FundamentalForms fundamental_forms(const GraphFunction& tau, double u, double v) {
  const Jet2d t = tau.jets(u, v);
  const double inv2 = 1.0 / (t.f * t.f);
  const double s = (t.fu * t.fu + t.fv * t.fv) * 0.5 * inv2;
  const double invt = 1.0 / t.f;
  return {inv2,
          0.0,
          inv2,
          s - invt * t.fuu,
          -invt * t.fuv,
          s - invt * t.fvv};
}

namespace {

CurvatureData curvature_from_jet(const Jet2d& t) {
  const Wirtinger w = wirtinger(t);
  const Complex q = -w.fzz / t.f;
  const double h = 0.5 * (t.fu * t.fu + t.fv * t.fv - t.f * (t.fuu + t.fvv));
  const double k = h * h - 4.0 * t.f * t.f * std::norm(w.fzz);
  return {q, h, k};
}

struct CoordinateJets {
  Jet2d x[4];  // Minkowski coordinates of Phi(u, v, tau(u, v))
};

CoordinateJets coordinate_jets(const Jet2d& t, double u, double v) {
  Jet2d p;  // u^2 + v^2
  p.f = u * u + v * v;
  p.fu = 2 * u;
  p.fv = 2 * v;
  p.fuu = 2;
  p.fvv = 2;
  const Jet2d s = Jet2d::constant(1.0) / t;
  Jet2d uj = Jet2d::variable_u(u), vj = Jet2d::variable_v(v);
  CoordinateJets c;
  c.x[0] = 0.5 * ((p + Jet2d::constant(1.0)) * s);
  c.x[1] = uj * s;
  c.x[2] = vj * s;
  c.x[3] = 0.5 * ((p - Jet2d::constant(1.0)) * s);
  return c;
}

double x_at(const Vec4& x, int k) {
  switch (k) {
    case 0: return x.x0;
    case 1: return x.x1;
    case 2: return x.x2;
    default: return x.x3;
  }
}

Vec4 jet_values(const CoordinateJets& c) {
  return {c.x[0].f, c.x[1].f, c.x[2].f, c.x[3].f};
}

Vec4 jet_du(const CoordinateJets& c) {
  return {c.x[0].fu, c.x[1].fu, c.x[2].fu, c.x[3].fu};
}

Vec4 jet_dv(const CoordinateJets& c) {
  return {c.x[0].fv, c.x[1].fv, c.x[2].fv, c.x[3].fv};
}

Vec4 jet_laplacian_quarter(const CoordinateJets& c) {
  return {0.25 * (c.x[0].fuu + c.x[0].fvv), 0.25 * (c.x[1].fuu + c.x[1].fvv),
          0.25 * (c.x[2].fuu + c.x[2].fvv), 0.25 * (c.x[3].fuu + c.x[3].fvv)};
}

// G solved from <G,Xu> = <G,Xv> = 0, <G,X> = 1, <G,G> = 0.  The homogeneous
// kernel is spanned by X itself, so the quadratic condition fixes the
// X-component uniquely.
Vec4 gauss_map_from_conditions(const Vec4& x, const Vec4& xu, const Vec4& xv) {
  const Vec4 w{1, 0, 0, 0};
  const double delta = 1.0 / minkowski_inner(w, x);  // = -1/x0
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

// Step of the independent verification stencils used by the residual
// operations; the structure equations are checked against Richardson-
// extrapolated differences of the pointwise fields so that the two sides do
// not share a derivative route.
constexpr double kProbeStep = 5e-3;

bool interior_for_residuals(const GraphFunction& tau, const Grid& grid, int i,
                            int j) {
  const double u = grid.u(i), v = grid.v(j);
  if (!tau.contains(u, v)) return false;
  double margin = 1.5 * kProbeStep;
  if (tau.is_finite_difference()) {
    margin += 2.5 * tau.fd_step() + 1.2 * std::max(tau.fd_step(), 5e-3);
  }
  const Domain& d = tau.domain();
  if (d.shape == Domain::Shape::Rect) {
    return u >= d.umin + margin && u <= d.umax - margin && v >= d.vmin + margin &&
           v <= d.vmax - margin;
  }
  return true;
}

// One-level Richardson extrapolation of the central first derivative,
// Laplacian, pure second and mixed second differences.  T supports +, -, and
// scaling by double (double, Complex, Vec4).
template <typename T, typename F>
T rich_d1(const F& f, double s, double delta) {
  const auto central = [&](double h) { return (1.0 / (2 * h)) * (f(s + h) - f(s - h)); };
  return (1.0 / 3.0) * (4.0 * central(delta / 2) - central(delta));
}

template <typename T, typename F>
T rich_d2(const F& f, double s, double delta) {
  const T at = f(s);
  const auto stencil = [&](double h) {
    return (1.0 / (h * h)) * (f(s + h) - 2.0 * at + f(s - h));
  };
  return (1.0 / 3.0) * (4.0 * stencil(delta / 2) - stencil(delta));
}

template <typename T, typename F>
T rich_mixed(const F& f, double delta) {
  const auto stencil = [&](double h) {
    return (1.0 / (4 * h * h)) *
           (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h));
  };
  return (1.0 / 3.0) * (4.0 * stencil(delta / 2) - stencil(delta));
}

Vec4 surface_point(const GraphFunction& tau, double u, double v) {
  return phi({u, v, tau.value(u, v)}).vec();
}

}  // namespace

CurvatureData curvature_data(const GraphFunction& tau, double u, double v) {
  const CurvatureData c = curvature_from_jet(tau.jets(u, v));
  if (c.mean * c.mean - c.gauss < -1e-9) {
    raise(Errc::InvalidArgument, "H^2 - K must be nonnegative");
  }
  return c;
}

Herm2 lightlike_gauss_map(const GraphFunction& tau, double u, double v) {
  const Jet2d t = tau.jets(u, v);
  const CoordinateJets c = coordinate_jets(t, u, v);
  const double h = 0.5 * (t.fu * t.fu + t.fv * t.fv - t.f * (t.fuu + t.fvv));
  // e^{-2 omega} = tau^2
  const Vec4 g = h * jet_values(c) - (2.0 * t.f * t.f) * jet_laplacian_quarter(c);
  return herm_from_vec(g);
}

SurfaceSample surface_sample(const GraphFunction& tau, double u, double v) {
  const Jet2d t = tau.jets(u, v);
  SurfaceSample s;
  s.point = phi({u, v, t.f});
  s.forms = fundamental_forms(tau, u, v);
  const CurvatureData c = curvature_from_jet(t);
  s.hopf = c.hopf;
  s.mean = c.mean;
  s.gauss = c.gauss;
  s.omega = -std::log(t.f);
  s.gauss_map = lightlike_gauss_map(tau, u, v);
  return s;
}

namespace {

// Mean curvature with its first-order partials, built from the third-order
// jet coefficients; H_z = grad_dz of this field feeds the Codazzi residual.
Grad1d mean_curvature_field(const Jet2d& t) {
  const Grad1d tv{t.f, t.fu, t.fv};
  const Grad1d tu{t.fu, t.fuu, t.fuv};
  const Grad1d tw{t.fv, t.fuv, t.fvv};
  const Grad1d tuu{t.fuu, t.fuuu, t.fuuv};
  const Grad1d tvv{t.fvv, t.fuvv, t.fvvv};
  return 0.5 * (tu * tu + tw * tw - tv * (tuu + tvv));
}

}  // namespace

ResidualPair gauss_codazzi_residual(const GraphFunction& tau, const Grid& grid) {
  ResidualPair worst{0.0, 0.0};
  bool any = false;
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      if (!interior_for_residuals(tau, grid, i, j)) continue;
      const double u = grid.u(i), v = grid.v(j);
      const Jet2d t = tau.jets(u, v);
      any = true;

      // Gauss: 2 omega_{z zbar} = H e^{2 omega}, with the Laplacian of
      // omega = -ln tau taken from pointwise values.
      const auto omega_u = [&](double s) { return -std::log(tau.value(s, v)); };
      const auto omega_v = [&](double s) { return -std::log(tau.value(u, s)); };
      const double lap = rich_d2<double>(omega_u, u, kProbeStep) +
                         rich_d2<double>(omega_v, v, kProbeStep);
      const Grad1d mean = mean_curvature_field(t);
      const double e2w = 1.0 / (t.f * t.f);
      worst.gauss = std::max(worst.gauss, std::abs(0.5 * lap - mean.v * e2w));

      // Codazzi: H_z = 2 Q_zbar e^{-2 omega}; H_z through the third-order
      // jet coefficients, Q_zbar from differences of the sampled Hopf field.
      const Complex hz = grad_dz(Grad1c{mean.v, mean.du, mean.dv});
      const auto hopf_u = [&](double s) { return curvature_from_jet(tau.jets(s, v)).hopf; };
      const auto hopf_v = [&](double s) { return curvature_from_jet(tau.jets(u, s)).hopf; };
      const Complex qu = rich_d1<Complex>(hopf_u, u, kProbeStep);
      const Complex qv = rich_d1<Complex>(hopf_v, v, kProbeStep);
      const Complex qzb = 0.5 * (qu + Complex(0.0, 1.0) * qv);
      worst.codazzi =
          std::max(worst.codazzi, std::abs(hz - 2.0 * qzb * (t.f * t.f)));
    }
  }
  if (!any) {
    raise(Errc::DomainBoundary, "no grid point lies in the domain interior");
  }
  return worst;
}

double gauss_weingarten_residual(const GraphFunction& tau, const Grid& grid) {
  double worst = 0.0;
  bool any = false;
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      if (!interior_for_residuals(tau, grid, i, j)) continue;
      const double u = grid.u(i), v = grid.v(j);
      const Jet2d t = tau.jets(u, v);
      any = true;
      const CoordinateJets c = coordinate_jets(t, u, v);
      const Vec4 x = jet_values(c), xu = jet_du(c), xv = jet_dv(c);
      const CurvatureData cd = curvature_from_jet(t);
      const Complex omega_z = -wirtinger(t).fz / t.f;
      const double e2w = 1.0 / (t.f * t.f);

      // Independent derivatives of the immersion from pointwise values.
      const auto coord_u = [&](double s) { return surface_point(tau, s, v); };
      const auto coord_v = [&](double s) { return surface_point(tau, u, s); };
      const auto coord_uv = [&](double su, double sv) {
        return surface_point(tau, u + su, v + sv);
      };
      const Vec4 nxu = rich_d1<Vec4>(coord_u, u, kProbeStep);
      const Vec4 nxv = rich_d1<Vec4>(coord_v, v, kProbeStep);
      const Vec4 nxuu = rich_d2<Vec4>(coord_u, u, kProbeStep);
      const Vec4 nxvv = rich_d2<Vec4>(coord_v, v, kProbeStep);
      const Vec4 nxuv = rich_mixed<Vec4>(coord_uv, kProbeStep);
      const Vec4 nlap = 0.25 * (nxuu + nxvv);

      std::array<Complex, 4> xz, xzz;
      for (int k = 0; k < 4; ++k) {
        xz[k] = 0.5 * Complex(x_at(nxu, k), -x_at(nxv, k));
        xzz[k] = 0.25 * Complex(x_at(nxuu, k) - x_at(nxvv, k),
                                -2.0 * x_at(nxuv, k));
      }

      // X_zz = Q X + 2 omega_z X_z, with Q and omega_z from the jets.
      for (int k = 0; k < 4; ++k) {
        const Complex r = xzz[k] - cd.hopf * x_at(x, k) - 2.0 * omega_z * xz[k];
        worst = std::max(worst, std::abs(r));
      }

      // X_{z zbar} = (H/2) e^{2 omega} X - (1/2) e^{2 omega} G, with G solved
      // from its defining conditions.
      const Vec4 g_cond = gauss_map_from_conditions(x, xu, xv);
      for (int k = 0; k < 4; ++k) {
        const double r = x_at(nlap, k) - 0.5 * cd.mean * e2w * x_at(x, k) +
                         0.5 * e2w * x_at(g_cond, k);
        worst = std::max(worst, std::abs(r));
      }

      // G_z = -H X_z - 2 Q e^{-2 omega} X_zbar, with G_z differenced from
      // the sampled Gauss-map field.
      const auto gauss_u = [&](double s) {
        return vec_from_herm(lightlike_gauss_map(tau, s, v));
      };
      const auto gauss_v = [&](double s) {
        return vec_from_herm(lightlike_gauss_map(tau, u, s));
      };
      const Vec4 ngu = rich_d1<Vec4>(gauss_u, u, kProbeStep);
      const Vec4 ngv = rich_d1<Vec4>(gauss_v, v, kProbeStep);
      for (int k = 0; k < 4; ++k) {
        const Complex gz = 0.5 * Complex(x_at(ngu, k), -x_at(ngv, k));
        const Complex r = gz + cd.mean * xz[k] +
                          2.0 * cd.hopf * (t.f * t.f) * std::conj(xz[k]);
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  if (!any) {
    raise(Errc::DomainBoundary, "no grid point lies in the domain interior");
  }
  return worst;
}

double umbilicity_deviation(const GraphFunction& tau, const Grid& grid) {
  double worst = 0.0;
  bool any = false;
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      const double u = grid.u(i), v = grid.v(j);
      if (!tau.contains(u, v)) continue;
      any = true;
      const FundamentalForms f = fundamental_forms(tau, u, v);
      const CurvatureData c = curvature_data(tau, u, v);
      const double d11 = f.a11 - c.mean * f.g11;
      const double d12 = f.a12 - c.mean * f.g12;
      const double d22 = f.a22 - c.mean * f.g22;
      worst = std::max(worst, std::sqrt(d11 * d11 + 2 * d12 * d12 + d22 * d22));
    }
  }
  if (!any) {
    raise(Errc::DomainBoundary, "no grid point lies in the domain");
  }
  return worst;
}

}  // namespace lightcone
