#include "lightcone/cmc.hpp"

#include <algorithm>
#include <cmath>

namespace lightcone {

namespace {

constexpr double kCriticalTol = 1e-12;
constexpr double kUnitModulusTol = 1e-8;
constexpr double kPoleChartSwitch = 1e6;

struct RegimeParams {
  CmcRegime regime;
  double scale;  // sqrt(c) with c = -2/H (H<0), 2/H (H>0); 1 for ZMC
};

// tau(u,v) exact through order 2.  Meromorphic data is evaluated through the
// reciprocal chart h = 1/g when |g| > 1e6; the conformal factor is invariant
// under g -> 1/g within each family (up to the inside/outside swap).
Jet2d tau_exact2(const ExprPtr& g, const RegimeParams& rp, double u, double v) {
  Jet3 w = eval_jet(g, Complex(u, v));
  CmcRegime regime = rp.regime;
  if (std::abs(w.f) > kPoleChartSwitch) {
    w = Jet3::constant(1.0) / w;
    if (regime == CmcRegime::PositiveInside) {
      regime = CmcRegime::PositiveOutside;
    } else if (regime == CmcRegime::PositiveOutside) {
      regime = CmcRegime::PositiveInside;
    }
  }
  if (std::abs(w.f1) < kCriticalTol) {
    raise(Errc::CriticalPoint, "g_z vanishes at the sample");
  }

  const Jet2c wz = bivariate_from_holomorphic(Jet3{w.f1, w.f2, w.f3, 0.0});
  const Jet2c speed2 = wz * conj(wz);  // |g_z|^2, real-valued
  const Jet2c speed = jet2_sqrt(speed2);

  Jet2c numerator;
  switch (regime) {
    case CmcRegime::Zmc:
      numerator = Jet2c::constant(1.0);
      break;
    case CmcRegime::NegativeH: {
      const Jet2c gb = bivariate_from_holomorphic(w);
      numerator = Jet2c::constant(1.0) + gb * conj(gb);
      break;
    }
    case CmcRegime::PositiveInside: {
      const Jet2c gb = bivariate_from_holomorphic(w);
      numerator = Jet2c::constant(1.0) - gb * conj(gb);
      break;
    }
    case CmcRegime::PositiveOutside: {
      const Jet2c gb = bivariate_from_holomorphic(w);
      numerator = gb * conj(gb) - Jet2c::constant(1.0);
      break;
    }
  }
  return real_part(numerator / (Complex(rp.scale) * speed));
}

// Exact coefficients of total order <= 2; the third-order slots, which would
// need the fourth derivative of g, come from differencing the exact
// second-order fields (error ~1e-10, well under the 1e-8 analytic budget).
Jet2d tau_jets(const ExprPtr& g, const RegimeParams& rp, double u, double v) {
  Jet2d t = tau_exact2(g, rp, u, v);
  const double delta = 1e-5;
  const Jet2d up = tau_exact2(g, rp, u + delta, v);
  const Jet2d um = tau_exact2(g, rp, u - delta, v);
  const Jet2d vp = tau_exact2(g, rp, u, v + delta);
  const Jet2d vm = tau_exact2(g, rp, u, v - delta);
  t.fuuu = (up.fuu - um.fuu) / (2 * delta);
  t.fuvv = (up.fvv - um.fvv) / (2 * delta);
  t.fuuv = (vp.fuu - vm.fuu) / (2 * delta);
  t.fvvv = (vp.fvv - vm.fvv) / (2 * delta);
  return t;
}

GraphFunction make_graph(ExprPtr g, const RegimeParams& rp, Domain domain) {
  auto jets = [g, rp](double u, double v) { return tau_jets(g, rp, u, v); };
  auto value = [g, rp](double u, double v) {
    return tau_exact2(g, rp, u, v).f;
  };
  return GraphFunction::analytic(std::move(jets), std::move(value), domain);
}

}  // namespace

LightconePoint CmcSurface::at(Complex z) const {
  const double u = z.real(), v = z.imag();
  return phi({u, v, graph_.value(u, v)});
}

bool CmcSurface::pole_adjacent(Complex z) const {
  return std::abs(eval_value(g_, z)) > kPoleChartSwitch;
}

std::function<Jet2d(double, double)> CmcSurface::omega_field() const {
  const GraphFunction g = graph_;
  return [g](double u, double v) { return -jet2_log(g.jets(u, v)); };
}

CmcSurface zmc_from_holomorphic(ExprPtr g, const Grid& domain) {
  const RegimeParams rp{CmcRegime::Zmc, 1.0};
  for (int j = 0; j < domain.nv; ++j) {
    for (int i = 0; i < domain.nu; ++i) {
      const Jet3 w = eval_jet(g, Complex(domain.u(i), domain.v(j)));
      if (std::abs(w.f1) < kCriticalTol) {
        raise(Errc::CriticalPoint, "g_z vanishes on the domain");
      }
    }
  }
  GraphFunction graph = make_graph(g, rp, Domain::rect(domain));
  return CmcSurface(std::move(g), 0.0, CmcRegime::Zmc, std::move(graph));
}

CmcSurface cmc_negative_from_g(ExprPtr g, double h, const Grid& domain) {
  if (!(h < 0.0)) {
    raise(Errc::InvalidH, "negative family requires H < 0");
  }
  const RegimeParams rp{CmcRegime::NegativeH, std::sqrt(-2.0 / h)};
  for (int j = 0; j < domain.nv; ++j) {
    for (int i = 0; i < domain.nu; ++i) {
      tau_exact2(g, rp, domain.u(i), domain.v(j));  // CriticalPoint guard
    }
  }
  GraphFunction graph = make_graph(g, rp, Domain::rect(domain));
  return CmcSurface(std::move(g), h, CmcRegime::NegativeH, std::move(graph));
}

CmcSurface cmc_positive_from_g(ExprPtr g, double h, const Grid& domain) {
  if (!(h > 0.0)) {
    raise(Errc::InvalidH, "positive family requires H > 0");
  }
  bool saw_inside = false, saw_outside = false;
  for (int j = 0; j < domain.nv; ++j) {
    for (int i = 0; i < domain.nu; ++i) {
      const Jet3 w = eval_jet(g, Complex(domain.u(i), domain.v(j)));
      const double mod = std::abs(w.f);
      if (std::abs(mod - 1.0) < kUnitModulusTol) {
        raise(Errc::UnitModulus, "|g| = 1 on the domain");
      }
      (mod < 1.0 ? saw_inside : saw_outside) = true;
      if (saw_inside && saw_outside) {
        // |g| crosses the unit circle between samples.
        raise(Errc::UnitModulus, "|g| crosses 1 on the domain");
      }
      if (mod <= kPoleChartSwitch && std::abs(w.f1) < kCriticalTol) {
        raise(Errc::CriticalPoint, "g_z vanishes on the domain");
      }
    }
  }
  const CmcRegime regime =
      saw_inside ? CmcRegime::PositiveInside : CmcRegime::PositiveOutside;
  GraphFunction graph =
      make_graph(g, {regime, std::sqrt(2.0 / h)}, Domain::rect(domain));
  return CmcSurface(std::move(g), h, regime, std::move(graph));
}

double zmc_curvature_via_schwarzian(const ExprPtr& g, Complex z) {
  const Jet3 w = eval_jet(g, z);
  if (std::abs(w.f1) < kCriticalTol) {
    raise(Errc::CriticalPoint, "g_z vanishes at the sample");
  }
  const Complex s = schwarzian(w);
  return -std::norm(s / (w.f1 * w.f1));
}

double liouville_residual(const std::function<Jet2d(double, double)>& omega,
                          double c, int rhs_sign, const Grid& grid) {
  if (!(c > 0.0)) {
    raise(Errc::InvalidArgument, "Liouville constant c must be positive");
  }
  if (rhs_sign != 1 && rhs_sign != -1) {
    raise(Errc::InvalidArgument, "rhs_sign must be +1 or -1");
  }
  double worst = 0.0;
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      const Jet2d w = omega(grid.u(i), grid.v(j));
      const double zzbar = 0.25 * (w.fuu + w.fvv);
      worst = std::max(
          worst, std::abs(c * std::exp(-2.0 * w.f) * zzbar - rhs_sign));
    }
  }
  return worst;
}

namespace {

Complex phi_of(const GraphFunction& tau, Complex z) {
  // 2 omega_z = -2 tau_z / tau, holomorphic when omega is harmonic.
  const Jet2d t = tau.jets(z.real(), z.imag());
  return -2.0 * wirtinger(t).fz / t.f;
}

}  // namespace

WeierstrassData recover_weierstrass_data(const GraphFunction& tau,
                                         Complex basepoint, const Grid& grid,
                                         double max_step) {
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      const CurvatureData c = curvature_data(tau, grid.u(i), grid.v(j));
      if (std::abs(c.mean) > 1e-8) {
        raise(Errc::NotZmc, "mean curvature is not zero on the grid");
      }
    }
  }

  const auto integrate_phi = [&](Complex from, Complex to, Complex acc) {
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(to - from) / max_step)));
    const Complex step = (to - from) / static_cast<double>(n);
    Complex prev = phi_of(tau, from);
    for (int k = 1; k <= n; ++k) {
      const Complex next = phi_of(tau, from + static_cast<double>(k) * step);
      acc += 0.5 * (prev + next) * step;
      prev = next;
    }
    return acc;
  };

  // Loop integral of 2 omega_z around the grid rectangle; nonzero means the
  // harmonic conjugate is multivalued.
  const Complex c00(grid.umin, grid.vmin), c10(grid.umax, grid.vmin);
  const Complex c11(grid.umax, grid.vmax), c01(grid.umin, grid.vmax);
  Complex loop = integrate_phi(c00, c10, Complex(0.0));
  loop = integrate_phi(c10, c11, loop);
  loop = integrate_phi(c11, c01, loop);
  loop = integrate_phi(c01, c00, loop);
  if (std::abs(loop) > 1e-8) {
    raise(Errc::PathDependence,
          "loop integral of 2 omega_z does not vanish: domain data is not "
          "simply connected");
  }

  WeierstrassData out;
  out.grid = grid;
  out.basepoint = basepoint;
  out.g.resize(static_cast<std::size_t>(grid.points()));
  out.g_z.resize(static_cast<std::size_t>(grid.points()));

  // Joint trapezoid accumulation of F (with F_z = 2 omega_z, Re F = omega)
  // and g = integral of e^F along axis-parallel paths from the basepoint.
  struct State {
    Complex f, g;
  };
  const auto advance = [&](Complex from, Complex to, State s) {
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(to - from) / max_step)));
    const Complex step = (to - from) / static_cast<double>(n);
    Complex phi_prev = phi_of(tau, from);
    Complex ef_prev = std::exp(s.f);
    for (int k = 1; k <= n; ++k) {
      const Complex zk = from + static_cast<double>(k) * step;
      const Complex phi_next = phi_of(tau, zk);
      s.f += 0.5 * (phi_prev + phi_next) * step;
      const Complex ef_next = std::exp(s.f);
      s.g += 0.5 * (ef_prev + ef_next) * step;
      phi_prev = phi_next;
      ef_prev = ef_next;
    }
    return s;
  };

  State base;
  base.f = Complex(-std::log(tau.value(basepoint.real(), basepoint.imag())));
  base.g = Complex(0.0);

  // Horizontal pass along v = Im(basepoint), then one vertical run per column.
  std::vector<State> columns(static_cast<std::size_t>(grid.nu));
  {
    State left = base, right = base;
    // March outward from the basepoint to each column anchor.
    std::vector<int> order(static_cast<std::size_t>(grid.nu));
    for (int i = 0; i < grid.nu; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int l, int r) {
      return std::abs(grid.u(l) - basepoint.real()) <
             std::abs(grid.u(r) - basepoint.real());
    });
    Complex left_at = basepoint, right_at = basepoint;
    for (int idx : order) {
      const Complex anchor(grid.u(idx), basepoint.imag());
      if (grid.u(idx) <= basepoint.real()) {
        left = advance(left_at, anchor, left);
        left_at = anchor;
        columns[static_cast<std::size_t>(idx)] = left;
      } else {
        right = advance(right_at, anchor, right);
        right_at = anchor;
        columns[static_cast<std::size_t>(idx)] = right;
      }
    }
  }

  for (int i = 0; i < grid.nu; ++i) {
    std::vector<int> order(static_cast<std::size_t>(grid.nv));
    for (int j = 0; j < grid.nv; ++j) order[static_cast<std::size_t>(j)] = j;
    std::sort(order.begin(), order.end(), [&](int l, int r) {
      return std::abs(grid.v(l) - basepoint.imag()) <
             std::abs(grid.v(r) - basepoint.imag());
    });
    State down = columns[static_cast<std::size_t>(i)];
    State up = down;
    Complex down_at(grid.u(i), basepoint.imag());
    Complex up_at = down_at;
    for (int j : order) {
      const Complex node(grid.u(i), grid.v(j));
      State s;
      if (grid.v(j) <= basepoint.imag()) {
        down = advance(down_at, node, down);
        down_at = node;
        s = down;
      } else {
        up = advance(up_at, node, up);
        up_at = node;
        s = up;
      }
      const std::size_t at = static_cast<std::size_t>(j * grid.nu + i);
      out.g[at] = s.g;
      out.g_z[at] = std::exp(s.f);
    }
  }
  return out;
}

const std::vector<Complex>& default_normalization_probes() {
  static const std::vector<Complex> probes = {
      {0.10, 0.20}, {-0.40, 0.30}, {0.50, -0.30}, {-0.20, -0.50}, {0.30, 0.60}};
  return probes;
}

SphereNormalization normalize_to_standard_sphere(
    const ExprPtr& g, double h, const std::vector<Complex>& probes) {
  if (!(h < 0.0)) {
    raise(Errc::InvalidH, "sphere normalization requires H < 0");
  }
  if (probes.size() < 3) {
    raise(Errc::InvalidArgument, "need at least three probe points");
  }
  for (const Complex& z : probes) {
    const Jet3 w = eval_jet(g, z);
    if (std::abs(schwarzian(w)) > 1e-9) {
      raise(Errc::NotUmbilic, "S(g) does not vanish: g is not a Moebius map");
    }
  }

  // Moebius map through three point pairs: M sends (z1,z2,z3) to (0,1,inf).
  const auto three_point = [](Complex z1, Complex z2, Complex z3) {
    return Mat2c{z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
  };
  const Complex z1 = probes[0], z2 = probes[1], z3 = probes[2];
  const Complex w1 = eval_value(g, z1), w2 = eval_value(g, z2),
                w3 = eval_value(g, z3);
  const Mat2c mz = three_point(z1, z2, z3);
  const Mat2c mw = three_point(w1, w2, w3);
  const Mat2c mw_adj{mw.d, -mw.b, -mw.c, mw.a};
  Mat2c a = mw_adj * mz;
  const Complex det = a.det();
  if (std::abs(det) < 1e-30) {
    raise(Errc::NotUmbilic, "probe images are degenerate");
  }
  const Complex scale = 1.0 / std::sqrt(det);
  a = {a.a * scale, a.b * scale, a.c * scale, a.d * scale};

  const MobiusElement mob = MobiusElement::make(a);
  for (const Complex& z : probes) {
    const Complex expect = eval_value(g, z);
    if (std::abs(mobius_apply(mob, z) - expect) > 1e-6 * (1.0 + std::abs(expect))) {
      raise(Errc::NotUmbilic, "g deviates from the fitted Moebius map");
    }
  }
  return {mob, Isometry::matrix(a)};
}

GraphFunction counterexample_surface(double h) {
  if (!(h < 0.0)) {
    raise(Errc::InvalidH, "counterexample family requires H < 0");
  }
  // tau = sqrt(-2H) cosh u
  ExprPtr tau = expr_binary(
      BinOp::Mul, expr_literal(Complex(std::sqrt(-2.0 * h))),
      expr_call(FuncKind::Cosh, expr_variable(VarKind::U)));
  return GraphFunction::analytic_expr(tau);
}

GraphFunction sphere_graph(double h) {
  if (!(h < 0.0)) {
    raise(Errc::InvalidH, "sphere family requires H < 0");
  }
  // tau = sqrt(-H/2) (u^2 + v^2 + 1)
  ExprPtr r2 = expr_binary(
      BinOp::Add,
      expr_binary(BinOp::Pow, expr_variable(VarKind::U), expr_literal(2.0)),
      expr_binary(BinOp::Pow, expr_variable(VarKind::V), expr_literal(2.0)));
  ExprPtr tau = expr_binary(
      BinOp::Mul, expr_literal(Complex(std::sqrt(-0.5 * h))),
      expr_binary(BinOp::Add, r2, expr_literal(1.0)));
  return GraphFunction::analytic_expr(tau);
}

GraphFunction horosphere_graph(double t0) {
  if (!(t0 > 0.0)) {
    raise(Errc::InvalidArgument, "horosphere requires t0 > 0");
  }
  return GraphFunction::analytic_expr(expr_literal(Complex(t0)));
}

}  // namespace lightcone
