#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lightcone/bijets.hpp"
#include "lightcone/expr.hpp"
#include "lightcone/models.hpp"

namespace lightcone {

// Closed rectangle with explicit resolution; the spec string is
// "umin,umax,vmin,vmax,nu,nv" and is shared with the CLI.
struct Grid {
  double umin{-1}, umax{1}, vmin{-1}, vmax{1};
  int nu{2}, nv{2};

  static Grid parse(const std::string& spec);
  std::string to_string() const;

  double u(int i) const { return umin + (umax - umin) * i / (nu - 1); }
  double v(int j) const { return vmin + (vmax - vmin) * j / (nv - 1); }
  double du() const { return (umax - umin) / (nu - 1); }
  double dv() const { return (vmax - vmin) / (nv - 1); }
  int points() const { return nu * nv; }
};

struct Domain {
  enum class Shape { Plane, Rect, Disk };
  Shape shape{Shape::Plane};
  double umin{0}, umax{0}, vmin{0}, vmax{0};  // Rect
  double cu{0}, cv{0}, radius{0};             // Disk

  static Domain plane() { return {}; }
  static Domain rect(double umin, double umax, double vmin, double vmax) {
    Domain d;
    d.shape = Shape::Rect;
    d.umin = umin;
    d.umax = umax;
    d.vmin = vmin;
    d.vmax = vmax;
    return d;
  }
  static Domain rect(const Grid& g) { return rect(g.umin, g.umax, g.vmin, g.vmax); }
  static Domain disk(double cu, double cv, double radius) {
    Domain d;
    d.shape = Shape::Disk;
    d.cu = cu;
    d.cv = cv;
    d.radius = radius;
    return d;
  }

  bool contains(double u, double v) const;
};

// A scalar field tau(u,v) > 0 together with a derivative provider, either
// exact bivariate jets (analytic expressions, synthesized surfaces) or
// finite-difference stencils over a pointwise evaluator.
class GraphFunction {
 public:
  using JetProvider = std::function<Jet2d(double, double)>;
  using ValueProvider = std::function<double(double, double)>;

  static GraphFunction analytic_expr(ExprPtr tau, Domain domain = Domain::plane());
  static GraphFunction analytic(JetProvider jets, ValueProvider value,
                                Domain domain = Domain::plane());
  // Central stencils with one Richardson extrapolation level on first and
  // second derivatives; plain central differences for third order.
  static GraphFunction finite_difference(ValueProvider tau, double step = 1e-4,
                                         Domain domain = Domain::plane());

  // Order-3 bivariate jet of tau; throws DomainBoundary outside the domain
  // and NonPositiveTau when tau <= 0 at the sample.
  Jet2d jets(double u, double v) const;
  double value(double u, double v) const;

  // Inside the declared shape and tau > 0 there.
  bool contains(double u, double v) const;

  const Domain& domain() const { return domain_; }
  bool is_finite_difference() const { return finite_difference_; }
  double fd_step() const { return fd_step_; }

 private:
  GraphFunction() = default;
  JetProvider jets_;
  ValueProvider value_;
  Domain domain_;
  bool finite_difference_{false};
  double fd_step_{0.0};
};

struct FundamentalForms {
  double g11, g12, g22;  // first fundamental form
  double a11, a12, a22;  // second fundamental form
};

struct CurvatureData {
  Complex hopf;   // Q
  double mean;    // H
  double gauss;   // K
};

struct SurfaceSample {
  LightconePoint point;
  FundamentalForms forms;
  Complex hopf;
  double mean;
  double gauss;
  double omega;     // -ln tau
  Herm2 gauss_map;  // G, in the opposite cone
};

// (g_ij) = tau^-2 I,  (A_ij) = (tau_u^2 + tau_v^2)/(2 tau^2) I - Hess(tau)/tau.
FundamentalForms fundamental_forms(const GraphFunction& tau, double u, double v);

// Q = -tau_zz / tau,  H = (tau_u^2 + tau_v^2 - tau (tau_uu + tau_vv)) / 2,
// K = H^2 - 4 tau^2 |tau_zz|^2.
CurvatureData curvature_data(const GraphFunction& tau, double u, double v);

// G = H X - 2 e^{-2 omega} X_{z zbar}; lies in the opposite cone and satisfies
// <G,G> = <G,X_u> = <G,X_v> = 0, <G,X> = 1.
Herm2 lightlike_gauss_map(const GraphFunction& tau, double u, double v);

SurfaceSample surface_sample(const GraphFunction& tau, double u, double v);

struct ResidualPair {
  double gauss;    // |2 omega_{z zbar} - H e^{2 omega}|
  double codazzi;  // |H_z - 2 Q_zbar e^{-2 omega}|
};

// Pointwise residual maxima of the structure equations over the grid points
// that lie in the domain.  Finite-difference providers exclude a margin of
// 2.5 h next to a rectangular domain boundary.
ResidualPair gauss_codazzi_residual(const GraphFunction& tau, const Grid& grid);
double gauss_weingarten_residual(const GraphFunction& tau, const Grid& grid);

// max over the grid of the Frobenius norm of A - H g.
double umbilicity_deviation(const GraphFunction& tau, const Grid& grid);

}  // namespace lightcone
