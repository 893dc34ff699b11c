#pragma once

#include <vector>

#include "lightcone/expr.hpp"
#include "lightcone/graph.hpp"
#include "lightcone/immersion.hpp"
#include "lightcone/jets.hpp"

namespace lightcone {

enum class CmcRegime { Zmc, NegativeH, PositiveInside, PositiveOutside };

// A surface of constant mean curvature synthesized from meromorphic data g:
//   H = 0:  e^omega = |g_z|                        (tau = 1/|g_z|)
//   H < 0:  e^omega = sqrt(-2/H) |g_z| / (1+|g|^2)
//   H > 0:  e^omega = sqrt(2/H) |g_z| / |1-|g|^2|, with |g| != 1 throughout
// where the graph function is tau = e^{-omega}.
class CmcSurface {
 public:
  const ExprPtr& data() const { return g_; }
  double mean_curvature() const { return h_; }
  CmcRegime regime() const { return regime_; }

  const GraphFunction& graph() const { return graph_; }
  ImmersionMap immersion() const { return immersion_from_graph(graph_); }
  LightconePoint at(Complex z) const;

  // True where evaluation runs through the reciprocal chart h = 1/g; the
  // conformal factor stays finite there, but the Hopf data of such samples
  // carries the conditioning of g near its pole.
  bool pole_adjacent(Complex z) const;

  // omega = -ln tau with exact jets through order 2.
  std::function<Jet2d(double, double)> omega_field() const;

 private:
  friend CmcSurface zmc_from_holomorphic(ExprPtr g, const Grid& domain);
  friend CmcSurface cmc_negative_from_g(ExprPtr g, double h, const Grid& domain);
  friend CmcSurface cmc_positive_from_g(ExprPtr g, double h, const Grid& domain);
  CmcSurface(ExprPtr g, double h, CmcRegime regime, GraphFunction graph)
      : g_(std::move(g)), h_(h), regime_(regime), graph_(std::move(graph)) {}

  ExprPtr g_;
  double h_;
  CmcRegime regime_;
  GraphFunction graph_;
};

// The grid doubles as the declared domain and the sample set for the
// construction-time checks (g_z != 0; |g| != 1 in the positive regimes).
CmcSurface zmc_from_holomorphic(ExprPtr g, const Grid& domain);
CmcSurface cmc_negative_from_g(ExprPtr g, double h, const Grid& domain);
CmcSurface cmc_positive_from_g(ExprPtr g, double h, const Grid& domain);

// K = -|S(g)/g_z^2|^2, the curvature of the ZMC surface induced by g.
double zmc_curvature_via_schwarzian(const ExprPtr& g, Complex z);

// max over the grid of |c e^{-2 omega} omega_{z zbar} - rhs| with rhs = -1
// for the negative-curvature family and +1 for the positive one.
double liouville_residual(const std::function<Jet2d(double, double)>& omega,
                          double c, int rhs_sign, const Grid& grid);

// Holomorphic data recovered from a ZMC graph: F with F_z = 2 omega_z and
// g = integral of e^F, sampled on the grid.  g_z = e^F is exact at the nodes
// up to the quadrature error of F.
struct WeierstrassData {
  Grid grid;
  Complex basepoint;
  std::vector<Complex> g;    // row-major, j * nu + i
  std::vector<Complex> g_z;
};

// Throws NotZmc when |H| > 1e-8 somewhere on the grid, PathDependence when
// the loop integral of 2 omega_z around the grid boundary exceeds 1e-8.
WeierstrassData recover_weierstrass_data(const GraphFunction& tau,
                                         Complex basepoint, const Grid& grid,
                                         double max_step = 1e-3);

// For Moebius data g (S(g) = 0) and H < 0, the isometry phi_A with A the
// coefficient matrix of g; applying it maps the synthesized surface onto the
// standard sphere parametrized by w = A * z.
struct SphereNormalization {
  MobiusElement mobius;
  Isometry isometry;
};

const std::vector<Complex>& default_normalization_probes();

SphereNormalization normalize_to_standard_sphere(
    const ExprPtr& g, double h,
    const std::vector<Complex>& probes = default_normalization_probes());

// tau = sqrt(-2H) cosh u: entire, CMC H, Gaussian curvature unbounded below.
GraphFunction counterexample_surface(double h);

// tau = sqrt(-H/2) (u^2 + v^2 + 1), the entire sphere graph.
GraphFunction sphere_graph(double h);

// tau = t0, the standard horosphere family.
GraphFunction horosphere_graph(double t0 = 1.0);

}  // namespace lightcone
