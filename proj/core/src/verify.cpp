#include "lightcone/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lightcone/classify.hpp"
#include "lightcone/cmc.hpp"
#include "lightcone/immersion.hpp"
#include "lightcone/jets.hpp"
#include "lightcone/models.hpp"

namespace lightcone {

namespace {

using Rng = std::mt19937;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_complex(Rng& rng, double radius) {
  return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

Mat2c random_sl2(Rng& rng, double radius = 1.0) {
  // Row one random, d chosen to fix the determinant.
  Complex a = random_complex(rng, radius), b = random_complex(rng, radius);
  Complex c = random_complex(rng, radius);
  while (std::abs(a) < 0.2) a = random_complex(rng, radius);
  const Complex d = (1.0 + b * c) / a;
  return {a, b, c, d};
}

MobiusElement random_su2(Rng& rng) {
  Complex a = random_complex(rng, 1.0), b = random_complex(rng, 1.0);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  return MobiusElement::make({a, b, -std::conj(b), std::conj(a)}, MobiusGroup::SU2);
}

MobiusElement random_su11(Rng& rng) {
  // |a|^2 - |b|^2 = 1
  const double t = uniform(rng, 0.0, 1.0);
  const double phase_a = uniform(rng, 0.0, 2 * M_PI);
  const double phase_b = uniform(rng, 0.0, 2 * M_PI);
  const Complex a = std::cosh(t) * std::polar(1.0, phase_a);
  const Complex b = std::sinh(t) * std::polar(1.0, phase_b);
  return MobiusElement::make({a, b, std::conj(b), std::conj(a)}, MobiusGroup::SU11);
}

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, double residual, double tolerance) {
    results.push_back({name, residual, tolerance, residual <= tolerance});
  }
};

// ---------------------------------------------------------------- core -----

std::vector<CheckResult> suite_core() {
  Suite s;
  Rng rng(20260810);

  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const HalfSpaceCoords c{uniform(rng, -10, 10), uniform(rng, -10, 10),
                            std::exp(uniform(rng, -3, 3))};
    const LightconePoint x = phi(c);
    const double q = minkowski_inner(x.herm(), x.herm());
    const double tr = x.trace();
    worst = std::max(worst, std::abs(q) / (1.0 + tr * tr));
    if (!(tr > 0)) worst = 1.0;
  }
  s.check("phi lands on the cone", worst, 1e-9);

  worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const HalfSpaceCoords c{uniform(rng, -10, 10), uniform(rng, -10, 10),
                            std::exp(uniform(rng, -3, 3))};
    const HalfSpaceCoords r = phi_inverse(phi(c));
    const double scale = std::abs(c.u) + std::abs(c.v) + c.t;
    worst = std::max(worst, (std::abs(r.u - c.u) + std::abs(r.v - c.v) +
                             std::abs(r.t - c.t)) /
                                scale);
    const LightconePoint x = phi(c);
    worst = std::max(worst, entry_distance(phi(phi_inverse(x)).herm(), x.herm()) /
                                (1.0 + x.trace()));
  }
  s.check("phi round trip", worst, 1e-12);

  worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Isometry iso = Isometry::matrix(random_sl2(rng));
    const LightconePoint x = phi({uniform(rng, -3, 3), uniform(rng, -3, 3),
                                  std::exp(uniform(rng, -2, 2))});
    const LightconePoint y = phi({uniform(rng, -3, 3), uniform(rng, -3, 3),
                                  std::exp(uniform(rng, -2, 2))});
    const double before = minkowski_inner(x.herm(), y.herm());
    const double after = minkowski_inner(apply_isometry(iso, x).herm(),
                                         apply_isometry(iso, y).herm());
    worst = std::max(worst, std::abs(after - before) / (1.0 + std::abs(before)));
  }
  s.check("phi_A preserves the inner product", worst, 1e-10);

  worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const LightconePoint x = phi({uniform(rng, -5, 5), uniform(rng, -5, 5),
                                  std::exp(uniform(rng, -2, 2))});
    const double lambda = std::exp(uniform(rng, -2, 2));
    const LightconePoint y = LightconePoint::from_vec(lambda * x.vec());
    worst = std::max(worst, distance(ideal_projection(x), ideal_projection(y)));
  }
  s.check("ideal ray is scale invariant", worst, 1e-12);

  worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const LightconePoint x = phi({uniform(rng, -10, 10), uniform(rng, -10, 10),
                                  std::exp(uniform(rng, -3, 3))});
    const BallPoint b = stereographic(x);
    const double n = b.norm();
    if (!(n > 0.0 && n < 1.0)) worst = 1.0;
    // The image avoids the segment (0,0,w), 0 < w < 1.
    if (b.w > 0.0 && std::max(std::abs(b.u), std::abs(b.v)) < 1e-15) worst = 1.0;
  }
  s.check("stereographic image stays in the punctured ball", worst, 0.0);

  worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double u = uniform(rng, -5, 5), v = uniform(rng, -5, 5);
    const double t = std::exp(uniform(rng, -2, 2));
    const IdealRay ray = ideal_projection(phi({u, v, t}));
    const double r2 = u * u + v * v;
    const IdealRay closed{2 * u / (r2 + 1), 2 * v / (r2 + 1), (r2 - 1) / (r2 + 1)};
    worst = std::max(worst, distance(ray, closed));
  }
  s.check("ideal ray closed form, independent of t", worst, 1e-12);

  return s.results;
}

// ---------------------------------------------------------------- jets -----

std::vector<CheckResult> suite_jets() {
  Suite s;
  Rng rng(7151);

  const std::vector<const char*> probes = {
      "exp(z)", "sin(z)*cos(z)", "1/(2+z)", "z^3+2*z", "exp(z/2)*(z+3)",
      "cosh(z)+2*z", "log(3+z)", "sqrt(4+z)"};

  double worst = 0.0;
  const double h = 1e-5;
  for (const char* src : probes) {
    const ExprPtr e = parse(src, ExprMode::Complex);
    for (int k = 0; k < 10; ++k) {
      const Complex z = random_complex(rng, 0.8);
      const Jet3 jet = eval_jet(e, z);
      const Complex fd =
          (eval_value(e, z + Complex(h)) - eval_value(e, z - Complex(h))) /
          (2 * h);
      worst = std::max(worst,
                       std::abs(jet.f1 - fd) / (1.0 + std::abs(jet.f1)));
    }
  }
  s.check("jet derivative matches central differences", worst, 1e-8);

  worst = 0.0;
  for (int m = 0; m < 20; ++m) {
    const MobiusElement a = MobiusElement::make(random_sl2(rng));
    for (int k = 0; k < 50; ++k) {
      const Complex z = random_complex(rng, 2.0);
      try {
        const Jet3 gz = mobius_apply(a, Jet3::variable(z));
        worst = std::max(worst, std::abs(schwarzian(gz)));
      } catch (const Error&) {
        // pole of the Moebius map; skip the sample
      }
    }
  }
  s.check("S(g) vanishes on Moebius maps", worst, 1e-9);

  worst = 0.0;
  for (const char* src : probes) {
    const ExprPtr e = parse(src, ExprMode::Complex);
    for (int k = 0; k < 10; ++k) {
      const MobiusElement a = MobiusElement::make(random_sl2(rng));
      const Complex z = random_complex(rng, 0.6);
      try {
        const Jet3 g = eval_jet(e, z);
        worst = std::max(worst, schwarzian_invariance_check(g, a) /
                                    (1.0 + std::abs(schwarzian(g))));
      } catch (const Error&) {
      }
    }
  }
  s.check("S(A*g) = S(g)", worst, 1e-9);

  worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const MobiusElement a = MobiusElement::make(random_sl2(rng));
    const MobiusElement b = MobiusElement::make(random_sl2(rng));
    const Complex z = random_complex(rng, 1.5);
    try {
      const Complex lhs = mobius_apply(a * b, z);
      const Complex rhs = mobius_apply(a, mobius_apply(b, z));
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    } catch (const Error&) {
    }
  }
  s.check("Moebius composition law", worst, 1e-12);

  // f(g(z)) for cubics, exhaustive over coefficients in {-1, 0, 1, 2},
  // against the expanded composition polynomial.
  worst = 0.0;
  const double coeffs[] = {-1.0, 0.0, 1.0, 2.0};
  const auto poly_jet = [](const std::vector<double>& c, const Jet3& x) {
    Jet3 acc = Jet3::constant(0.0);
    for (std::size_t k = c.size(); k-- > 0;) {
      acc = acc * x + Jet3::constant(c[k]);
    }
    return acc;
  };
  Rng crng(99);
  std::vector<double> f(4), g(4);
  for (int fi = 0; fi < 256; ++fi) {
    for (int k = 0; k < 4; ++k) f[static_cast<std::size_t>(k)] = coeffs[(fi >> (2 * k)) & 3];
    for (int gi = 0; gi < 256; ++gi) {
      for (int k = 0; k < 4; ++k) g[static_cast<std::size_t>(k)] = coeffs[(gi >> (2 * k)) & 3];
      // Expand f(g(x)) exactly: polynomial coefficients by convolution.
      std::vector<double> comp{0.0};
      std::vector<double> gpow{1.0};
      for (std::size_t k = 0; k < 4; ++k) {
        if (comp.size() < gpow.size()) comp.resize(gpow.size(), 0.0);
        for (std::size_t i = 0; i < gpow.size(); ++i) comp[i] += f[k] * gpow[i];
        std::vector<double> next(gpow.size() + 3, 0.0);
        for (std::size_t i = 0; i < gpow.size(); ++i) {
          for (std::size_t j = 0; j < 4; ++j) next[i + j] += gpow[i] * g[j];
        }
        gpow = std::move(next);
      }
      const Complex z = random_complex(crng, 1.0);
      const Jet3 inner = poly_jet(g, Jet3::variable(z));
      const Jet3 chained = poly_jet(f, inner);
      const Jet3 direct = poly_jet(comp, Jet3::variable(z));
      const double scale = 1.0 + std::abs(direct.f3);
      worst = std::max({worst, std::abs(chained.f - direct.f) / scale,
                        std::abs(chained.f1 - direct.f1) / scale,
                        std::abs(chained.f2 - direct.f2) / scale,
                        std::abs(chained.f3 - direct.f3) / scale});
    }
  }
  s.check("chain rule exact through order 3", worst, 1e-10);

  return s.results;
}

// --------------------------------------------------------------- graph -----

std::vector<CheckResult> suite_graph() {
  Suite s;
  Rng rng(40917);

  double conf = 0.0, hk = 0.0, agree = 0.0, gauss_cond = 0.0;
  for (const TauEntry& entry : tau_corpus()) {
    const ExprPtr e = parse(entry.source, ExprMode::Real);
    const GraphFunction tau = GraphFunction::analytic_expr(e, Domain::rect(entry.domain));
    const ImmersionMap imm = immersion_from_graph(tau);
    for (int k = 0; k < 12; ++k) {
      const double u = uniform(rng, entry.domain.umin, entry.domain.umax);
      const double v = uniform(rng, entry.domain.vmin, entry.domain.vmax);

      const ImmersionJets j = imm(u, v);
      const Vec4 xu{j.x0.fu, j.x1.fu, j.x2.fu, j.x3.fu};
      const Vec4 xv{j.x0.fv, j.x1.fv, j.x2.fv, j.x3.fv};
      const double e11 = minkowski_inner(xu, xu);
      const double e12 = minkowski_inner(xu, xv);
      const double e22 = minkowski_inner(xv, xv);
      conf = std::max(conf, std::abs(e12) / e11);
      conf = std::max(conf, std::abs(e11 - e22) / e11);

      const CurvatureData c = curvature_data(tau, u, v);
      hk = std::max(hk, -(c.mean * c.mean - c.gauss));

      const ImmersionCurvature ic = immersion_curvatures(imm, u, v);
      agree = std::max({agree, std::abs(ic.mean - c.mean),
                        std::abs(ic.gauss - c.gauss) / (1.0 + std::abs(c.gauss)),
                        std::abs(ic.hopf - c.hopf)});

      const Herm2 g = lightlike_gauss_map(tau, u, v);
      const Herm2 x = phi({u, v, tau.value(u, v)}).herm();
      const Vec4 gv = vec_from_herm(g);
      gauss_cond = std::max({gauss_cond,
                             std::abs(minkowski_inner(gv, gv)),
                             std::abs(minkowski_inner(gv, xu)),
                             std::abs(minkowski_inner(gv, xv)),
                             std::abs(minkowski_inner(g, x) - 1.0)});
      if (!(g.trace() < 0.0)) gauss_cond = 1.0;
    }
  }
  s.check("graph coordinates are conformal", conf, 1e-12);
  s.check("H^2 - K >= 0", hk, 1e-9);
  s.check("graph and immersion curvatures agree", agree, 1e-8);
  s.check("lightlike Gauss map conditions", gauss_cond, 1e-9);

  double res_analytic = 0.0, res_fd = 0.0;
  for (const TauEntry& entry : tau_corpus()) {
    const ExprPtr e = parse(entry.source, ExprMode::Real);
    const Grid grid{entry.domain.umin, entry.domain.umax, entry.domain.vmin,
                    entry.domain.vmax, 9, 9};
    const GraphFunction analytic = GraphFunction::analytic_expr(e, Domain::rect(entry.domain));
    const ResidualPair gc = gauss_codazzi_residual(analytic, grid);
    res_analytic = std::max({res_analytic, gc.gauss, gc.codazzi,
                             gauss_weingarten_residual(analytic, grid)});

    const GraphFunction fd = GraphFunction::finite_difference(
        [e](double u, double v) { return eval_real(e, u, v); }, 1e-4,
        Domain::rect(entry.domain));
    const ResidualPair gcf = gauss_codazzi_residual(fd, grid);
    res_fd = std::max({res_fd, gcf.gauss, gcf.codazzi,
                       gauss_weingarten_residual(fd, grid)});
  }
  s.check("structure equations, analytic jets", res_analytic, 1e-8);
  s.check("structure equations, finite differences", res_fd, 1e-3);

  // O(h^2) convergence of the finite-difference provider, measured on the
  // mean curvature against analytic jets.
  double conv = 0.0;
  for (const char* src : {"cosh(u)*cosh(v)", "exp((u^2-v^2)/4)", "2+sin(u)*cos(v)"}) {
    const ExprPtr e = parse(src, ExprMode::Real);
    const GraphFunction exact = GraphFunction::analytic_expr(e);
    const auto err_at = [&](double h) {
      const GraphFunction fd = GraphFunction::finite_difference(
          [e](double u, double v) { return eval_real(e, u, v); }, h);
      double worst = 0.0;
      for (int k = 0; k < 12; ++k) {
        const double u = 0.1 + 0.05 * k, v = -0.3 + 0.04 * k;
        worst = std::max(worst, std::abs(curvature_data(fd, u, v).mean -
                                         curvature_data(exact, u, v).mean));
      }
      return worst;
    };
    // Steps large enough that truncation, not roundoff, dominates.
    const double e1 = err_at(0.1), e2 = err_at(0.05);
    conv = std::max(conv, e2 / e1);  // expect ~1/4 or better with Richardson
  }
  s.check("finite differences converge at least O(h^2)", conv, 1.0 / 3.5);

  // Isometry invariance of per-sample curvatures.
  double iso_res = 0.0;
  {
    const GraphFunction tau = sphere_graph(-0.8);
    const GraphFunction tau2 = counterexample_surface(-0.5);
    for (int k = 0; k < 20; ++k) {
      const Isometry iso = Isometry::matrix(random_sl2(rng, 0.8));
      for (const GraphFunction* g : {&tau, &tau2}) {
        const ImmersionMap base = immersion_from_graph(*g);
        const ImmersionMap moved = transform_immersion(iso, base);
        const double u = uniform(rng, -1, 1), v = uniform(rng, -1, 1);
        const ImmersionCurvature a = immersion_curvatures(base, u, v);
        const ImmersionCurvature b = immersion_curvatures(moved, u, v);
        iso_res = std::max({iso_res, std::abs(a.mean - b.mean),
                            std::abs(a.gauss - b.gauss) /
                                (1.0 + std::abs(a.gauss))});
      }
    }
  }
  s.check("curvatures are isometry invariant", iso_res, 1e-8);

  return s.results;
}

// ----------------------------------------------------------------- cmc -----

std::vector<CheckResult> suite_cmc() {
  Suite s;
  Rng rng(260810);

  double h_const = 0.0, hopf = 0.0, zmc_k = 0.0, liouville = 0.0;
  for (const CorpusEntry& entry : representation_corpus()) {
    const ExprPtr g = parse(entry.source, ExprMode::Complex);
    const Grid grid{entry.domain.umin, entry.domain.umax, entry.domain.vmin,
                    entry.domain.vmax, 7, 7};

    for (double h : {-2.0, -0.5}) {
      const CmcSurface surf = cmc_negative_from_g(g, h, grid);
      // Deviations from the target avoid cancellation in the variance.
      double dev_sum = 0.0, dev_sq = 0.0;
      int n = 0;
      for (int j = 0; j < grid.nv; ++j) {
        for (int i = 0; i < grid.nu; ++i) {
          const double u = grid.u(i), v = grid.v(j);
          const CurvatureData c = curvature_data(surf.graph(), u, v);
          dev_sum += c.mean - h;
          dev_sq += (c.mean - h) * (c.mean - h);
          ++n;
          const Complex sg = schwarzian(eval_jet(g, {u, v}));
          hopf = std::max(hopf, std::abs(sg - 2.0 * c.hopf));
          h_const = std::max(h_const, std::abs(c.mean - h) / (1.0 + std::abs(h)));
        }
      }
      const double dev_mean = dev_sum / n;
      const double stddev =
          std::sqrt(std::max(0.0, dev_sq / n - dev_mean * dev_mean));
      h_const = std::max(h_const, stddev / (1.0 + std::abs(h)));

      liouville = std::max(
          liouville,
          liouville_residual(surf.omega_field(), -2.0 / h, -1, grid));
    }

    // ZMC: curvature via the Schwarzian identity against the graph pipeline.
    const CmcSurface zmc = zmc_from_holomorphic(g, grid);
    for (int j = 0; j < grid.nv; ++j) {
      for (int i = 0; i < grid.nu; ++i) {
        const double u = grid.u(i), v = grid.v(j);
        const CurvatureData c = curvature_data(zmc.graph(), u, v);
        h_const = std::max(h_const, std::abs(c.mean));
        zmc_k = std::max(zmc_k,
                         std::abs(zmc_curvature_via_schwarzian(g, {u, v}) -
                                  c.gauss) /
                             (1.0 + std::abs(c.gauss)));
        const Complex sg = schwarzian(eval_jet(g, {u, v}));
        hopf = std::max(hopf, std::abs(sg - 2.0 * c.hopf));
      }
    }
  }
  {
    // Positive regimes, inside and outside the unit circle.
    const Grid inside{-0.55, 0.55, -0.55, 0.55, 7, 7};
    const CmcSurface pos = cmc_positive_from_g(
        parse("z/2", ExprMode::Complex), 2.0, inside);
    const Grid outside{0.7, 1.7, -0.4, 0.4, 7, 7};
    const CmcSurface out = cmc_positive_from_g(
        parse("2*z", ExprMode::Complex), 1.0, outside);
    for (const CmcSurface* surf : {&pos, &out}) {
      const Grid& grid = surf == &pos ? inside : outside;
      for (int j = 0; j < grid.nv; ++j) {
        for (int i = 0; i < grid.nu; ++i) {
          const CurvatureData c =
              curvature_data(surf->graph(), grid.u(i), grid.v(j));
          h_const = std::max(h_const, std::abs(c.mean - surf->mean_curvature()) /
                                          (1.0 + surf->mean_curvature()));
          const Complex sg =
              schwarzian(eval_jet(surf->data(), {grid.u(i), grid.v(j)}));
          hopf = std::max(hopf, std::abs(sg - 2.0 * c.hopf));
        }
      }
      liouville = std::max(
          liouville, liouville_residual(surf->omega_field(),
                                        2.0 / surf->mean_curvature(), 1, grid));
    }
  }
  s.check("synthesized H is constant", h_const, 1e-8);
  s.check("S(g) = 2Q", hopf, 1e-8);
  s.check("ZMC curvature identity", zmc_k, 1e-8);
  s.check("Liouville residuals", liouville, 1e-8);

  // Gauge invariance of the conformal factor.
  double gauge = 0.0;
  {
    const ExprPtr g = parse("exp(z)*(z+3)/4", ExprMode::Complex);
    for (int k = 0; k < 10; ++k) {
      const MobiusElement a = random_su2(rng);
      for (int m = 0; m < 10; ++m) {
        const Complex z = random_complex(rng, 0.8);
        const Jet3 gz = eval_jet(g, z);
        const Jet3 az = mobius_apply(a, gz);
        const double e1 = std::abs(gz.f1) / (1.0 + std::norm(gz.f));
        const double e2 = std::abs(az.f1) / (1.0 + std::norm(az.f));
        gauge = std::max(gauge, std::abs(e1 - e2) / e1);
      }
    }
    const ExprPtr gp = parse("z/3", ExprMode::Complex);
    for (int k = 0; k < 10; ++k) {
      const MobiusElement b = random_su11(rng);
      for (int m = 0; m < 10; ++m) {
        const Complex z = random_complex(rng, 0.5);
        const Jet3 gz = eval_jet(gp, z);
        const Jet3 bz = mobius_apply(b, gz);
        if (std::abs(std::abs(bz.f) - 1.0) < 1e-3) continue;
        const double e1 = std::abs(gz.f1) / std::abs(1.0 - std::norm(gz.f));
        const double e2 = std::abs(bz.f1) / std::abs(1.0 - std::norm(bz.f));
        gauge = std::max(gauge, std::abs(e1 - e2) / e1);
      }
    }
  }
  s.check("conformal factor is gauge invariant", gauge, 1e-10);

  // Weierstrass recovery round trip.
  double recovery = 0.0;
  {
    const struct {
      const char* tau;
      const char* g;
    } cases[] = {{"1", "z"}, {"exp(-u)", "exp(z)"}};
    for (const auto& c : cases) {
      const GraphFunction tau =
          GraphFunction::analytic_expr(parse(c.tau, ExprMode::Real));
      const Grid grid{-0.8, 0.8, -0.8, 0.8, 9, 9};
      const WeierstrassData rec =
          recover_weierstrass_data(tau, Complex(0.0), grid);
      const ExprPtr g = parse(c.g, ExprMode::Complex);
      Complex ratio0;
      for (int j = 0; j < grid.nv; ++j) {
        for (int i = 0; i < grid.nu; ++i) {
          const Complex z(grid.u(i), grid.v(j));
          const Complex expect = eval_jet(g, z).f1;
          const Complex ratio =
              rec.g_z[static_cast<std::size_t>(j * grid.nu + i)] / expect;
          if (i == 0 && j == 0) ratio0 = ratio;
          recovery = std::max(recovery, std::abs(std::abs(ratio) - 1.0));
          recovery = std::max(recovery, std::abs(ratio - ratio0));
        }
      }
    }
  }
  s.check("Weierstrass recovery round trip", recovery, 1e-6);

  // Positive-CMC obstruction over expanding disks.
  double obstruction = 0.0;
  for (const CorpusEntry& entry : representation_corpus()) {
    if (!entry.crosses_unit_modulus) continue;
    const ExprPtr g = parse(entry.source, ExprMode::Complex);
    bool unit_modulus = false;
    for (double radius : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      try {
        cmc_positive_from_g(g, 1.0, Grid{-radius, radius, -radius, radius, 33, 33});
      } catch (const Error& err) {
        if (err.code() == Errc::UnitModulus) {
          unit_modulus = true;
        }
        break;
      }
    }
    if (!unit_modulus) obstruction = 1.0;
  }
  s.check("positive CMC obstruction on expanding disks", obstruction, 0.0);

  return s.results;
}

// ------------------------------------------------------------- classify ----

std::vector<CheckResult> suite_classify() {
  Suite s;
  Rng rng(31415);

  int empty_violations = 0, entire_violations = 0;
  double h_res = 0.0, umb = 0.0, sign_res = 0.0, entire_h = 0.0;
  const int scan_n = 101;

  for (int trial = 0; trial < 10000; ++trial) {
    const HyperplaneCoeffs h{uniform(rng, -3, 3), uniform(rng, -3, 3),
                             uniform(rng, -3, 3), uniform(rng, -3, 3)};
    const SectionClass cls = classify(h);

    bool any_positive = false, all_positive = true;
    for (int j = 0; j < scan_n; ++j) {
      for (int i = 0; i < scan_n; ++i) {
        const double u = -50.0 + 100.0 * i / (scan_n - 1);
        const double v = -50.0 + 100.0 * j / (scan_n - 1);
        const double t = h.a * (u * u + v * v) + h.b + h.c * u + h.d * v;
        if (t > 0) {
          any_positive = true;
        } else {
          all_positive = false;
        }
      }
    }
    if (cls.kind == SectionKind::Empty && any_positive) ++empty_violations;
    if (cls.entire && !all_positive) ++entire_violations;

    if (cls.kind == SectionKind::Empty) continue;

    // Closed-form H against the sampled curvature at one contained point.
    const GraphFunction graph = section_graph(h);
    double u0 = 0, v0 = 0;
    if (std::abs(h.a) > 1e-12) {
      u0 = -h.c / (2 * h.a);
      v0 = -h.d / (2 * h.a);
      if (cls.subcase == SectionSubcase::LII || cls.subcase == SectionSubcase::TII) {
        const double m = h.b - (h.c * h.c + h.d * h.d) / (4 * h.a);
        const double rho = m < 0 ? std::sqrt(-m / h.a) : 0.0;
        u0 += rho + 1.0;
      }
    } else if (h.c * h.c + h.d * h.d > 0) {
      const double n = std::sqrt(h.c * h.c + h.d * h.d);
      const double step = (std::abs(h.b) + 1.0) / n;
      u0 = h.c / n * step;
      v0 = h.d / n * step;
    }
    const CurvatureData c = curvature_data(graph, u0, v0);
    h_res = std::max(h_res, std::abs(c.mean - cls.mean_curvature));

    const Grid patch{u0 - 0.1, u0 + 0.1, v0 - 0.1, v0 + 0.1, 3, 3};
    try {
      umb = std::max(umb, umbilicity_deviation(graph, patch));
    } catch (const Error&) {
      // patch may straddle the tau > 0 boundary
    }

    const double hh = cls.mean_curvature;
    const bool coherent =
        (cls.kind == SectionKind::Sphere && hh < 0) ||
        (cls.kind == SectionKind::Horosphere && std::abs(hh) <= 1e-9) ||
        (cls.kind == SectionKind::Hypersphere && hh > 0);
    if (!coherent) sign_res = 1.0;
    if (cls.entire && hh > 1e-12) entire_h = 1.0;
  }

  s.check("empty sections have no positive sample", empty_violations, 0.0);
  s.check("entire sections are positive everywhere", entire_violations, 0.0);
  s.check("H matches (-4ab+c^2+d^2)/2", h_res, 1e-9);
  s.check("sections are totally umbilic", umb, 1e-9);
  s.check("kind/H sign coherence", sign_res, 0.0);
  s.check("entire implies H <= 0", entire_h, 0.0);

  return s.results;
}

}  // namespace

const std::vector<CorpusEntry>& representation_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"identity", "z", {-1, 1, -1, 1, 7, 7}, true},
      {"shift", "z+1", {-1, 1, -1, 1, 7, 7}, true},
      {"affine", "2*z-1", {-1, 1, -1, 1, 7, 7}, true},
      {"half", "z/2", {-0.6, 0.6, -0.6, 0.6, 7, 7}, true},
      {"quadratic", "z^2+3*z", {-1, 1, -1, 1, 7, 7}, true},
      {"cubic", "z^3+2*z", {0.2, 1.2, -0.4, 0.4, 7, 7}, true},
      {"exp", "exp(z)", {-1, 1, -1, 1, 7, 7}, true},
      {"exp-half", "exp(z/2)", {-1, 1, -1, 1, 7, 7}, true},
      {"exp-affine", "2*exp(z)+1", {-1, 1, -1, 1, 7, 7}, true},
      {"exp-shift", "exp(z)+2", {-1, 1, -1, 1, 7, 7}, false},
      {"sine", "sin(z)", {-1, 1, -1, 1, 7, 7}, true},
      {"cosh", "cosh(z)", {1, 2, -0.5, 0.5, 7, 7}, false},
      {"geometric", "1/(1-z)", {-0.5, 0.5, -0.5, 0.5, 7, 7}, true},
      {"cayley-like", "(z+2)/(2-z)", {-1, 1, -1, 1, 7, 7}, true},
      {"reciprocal", "1/z", {0.5, 1.5, -0.5, 0.5, 7, 7}, false},
      {"rational", "(2*z+1)/(z+2)", {-1, 1, -1, 1, 7, 7}, true},
      {"joukowski", "z+1/z", {1.5, 2.5, -0.5, 0.5, 7, 7}, false},
      {"logarithm", "log(z)", {1, 2, -0.5, 0.5, 7, 7}, false},
      {"root", "sqrt(z)", {1, 2, -0.5, 0.5, 7, 7}, false},
      {"exp-product", "exp(z)*z", {0.2, 1, -0.5, 0.5, 7, 7}, true},
  };
  return corpus;
}

const std::vector<TauEntry>& tau_corpus() {
  static const std::vector<TauEntry> corpus = {
      {"horosphere", "1", {-1, 1, -1, 1, 7, 7}},
      {"cosh", "cosh(u)", {-1, 1, -1, 1, 7, 7}},
      {"sphere", "(u^2+v^2+1)/2", {-2, 2, -2, 2, 7, 7}},
      {"exp-decay", "exp(-u)", {-1, 1, -1, 1, 7, 7}},
      {"wave", "2+sin(u)*cos(v)", {-1, 1, -1, 1, 7, 7}},
      {"bump", "1/(1+u^2+v^2)", {-1, 1, -1, 1, 7, 7}},
      {"product", "cosh(u)*cosh(v)", {-0.5, 0.5, -0.5, 0.5, 7, 7}},
      {"saddle", "exp((u^2-v^2)/4)", {-1, 1, -1, 1, 7, 7}},
      {"rational", "(2+u*v)/(2+u^2)", {-1, 1, -1, 1, 7, 7}},
  };
  return corpus;
}

std::vector<CheckResult> verify_suite(const std::string& suite) {
  if (suite == "core") return suite_core();
  if (suite == "jets") return suite_jets();
  if (suite == "graph") return suite_graph();
  if (suite == "cmc") return suite_cmc();
  if (suite == "classify") return suite_classify();
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const char* name : {"core", "jets", "graph", "cmc", "classify"}) {
      std::vector<CheckResult> part = verify_suite(name);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  raise(Errc::InvalidArgument,
        "unknown suite '" + suite + "' (core|jets|graph|cmc|classify|all)");
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace lightcone
