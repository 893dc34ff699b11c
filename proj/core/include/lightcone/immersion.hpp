#pragma once

#include <functional>

#include "lightcone/graph.hpp"

namespace lightcone {

// Bivariate jets of the four Minkowski coordinates of a conformal spacelike
// immersion.  Curvature extraction uses derivatives up to total order 2.
struct ImmersionJets {
  Jet2d x0, x1, x2, x3;
};

using ImmersionMap = std::function<ImmersionJets(double, double)>;

struct ImmersionCurvature {
  double omega;
  Complex hopf;  // Q
  double mean;   // H
  double gauss;  // K
  Vec4 gauss_map;
};

// Throws NotConformal when <Xu,Xu> != <Xv,Xv> or <Xu,Xv> != 0 beyond a 1e-8
// relative threshold.  The lightlike Gauss map is solved from its four
// defining conditions, independently of the graph formulas.
ImmersionCurvature immersion_curvatures(const ImmersionMap& x, double u, double v);

ImmersionMap immersion_from_graph(const GraphFunction& tau);
ImmersionMap transform_immersion(const Isometry& iso, ImmersionMap x);

}  // namespace lightcone
