#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <variant>

#include "lightcone/classify.hpp"
#include "lightcone/cmc.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

enum class MeshModel { HalfSpace, Ball };

enum class BuiltinSurface { Horosphere, Sphere, Counterexample, StandardHypersphere };

struct SourceTau {
  ExprPtr tau;
};
struct SourceG {
  ExprPtr g;
  double h;  // target mean curvature; 0 selects the ZMC representation
};
struct SourcePlane {
  HyperplaneCoeffs coeffs;
};
struct SourceBuiltin {
  BuiltinSurface kind;
  double h;  // used by Sphere and Counterexample
};
using MeshSource = std::variant<SourceTau, SourceG, SourcePlane, SourceBuiltin>;

struct MeshSpec {
  MeshModel model{MeshModel::HalfSpace};
  Grid grid;
  MeshSource source;
};

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> triangles;  // 0-based corner indices
};

// Graph function realizing the source; the grid is used as the probe domain
// for surfaces synthesized from holomorphic data.
GraphFunction graph_from_source(const MeshSource& source, const Grid& grid);

// Whether the underlying hyperplane section contains the point of the removed
// lightlike line (the ray (0,0,1) of the ideal boundary); known for plane and
// builtin sources only.
std::optional<bool> source_attains_puncture(const MeshSource& source);

// Samples the grid, drops points outside the graph domain, and triangulates
// every fully valid quad along its shorter diagonal in output coordinates.
// Ball-model vertices must satisfy norm < 1 - 1e-9.
Mesh build_mesh(const MeshSpec& spec);

// Wavefront-style text: "v x y z" lines, then 1-based "f i j k" lines.
void write_obj(const Mesh& mesh, std::ostream& out);

}  // namespace lightcone
