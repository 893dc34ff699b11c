#pragma once

#include "lightcone/graph.hpp"
#include "lightcone/models.hpp"

namespace lightcone {

// Coefficients of the normalized hyperplane a(x0+x3) + b(x0-x3) + c x1 + d x2 = 1.
struct HyperplaneCoeffs {
  double a{0}, b{0}, c{0}, d{0};
};

enum class SectionKind { Sphere, Horosphere, Hypersphere, Empty };
enum class SectionSubcase { SI, LI, LII, TI, TII, TIII, None };

struct SectionClass {
  SectionKind kind{SectionKind::Empty};
  SectionSubcase subcase{SectionSubcase::None};
  bool entire{false};
  double mean_curvature{0};  // H = (-4ab + c^2 + d^2)/2; NaN for Empty
};

enum class CausalType { Spacelike, Lightlike, Timelike };

struct CausalClass {
  CausalType type;
  double norm;  // <n, n> = -4ab + c^2 + d^2
};

double normal_norm(const HyperplaneCoeffs& h);
CausalClass normal_causal_type(const HyperplaneCoeffs& h);

// Exhaustive case split on the sign of a and of b - (c^2+d^2)/(4a); the
// equality stratum is decided with tolerance 1e-12 scaled by max(1, |b|).
SectionClass classify(const HyperplaneCoeffs& h);

// tau(u,v) = a(u^2+v^2) + b + cu + dv restricted to {tau > 0}.
// Throws EmptySection when classify(h).kind == Empty.
GraphFunction section_graph(const HyperplaneCoeffs& h);

// Phi of the section point at parameter radius R along direction theta from
// the paraboloid vertex; converges to [[1/a, 0], [0, 0]] as R grows.
// Requires a > 0.
LightconePoint vertex_limit_check(const HyperplaneCoeffs& h, double radius,
                                  double theta = 0.0);

const char* to_string(SectionKind kind);
const char* to_string(SectionSubcase subcase);

}  // namespace lightcone
