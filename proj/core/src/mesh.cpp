#include "lightcone/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace lightcone {

GraphFunction graph_from_source(const MeshSource& source, const Grid& grid) {
  if (const auto* t = std::get_if<SourceTau>(&source)) {
    return GraphFunction::analytic_expr(t->tau);
  }
  if (const auto* g = std::get_if<SourceG>(&source)) {
    if (g->h < 0.0) return cmc_negative_from_g(g->g, g->h, grid).graph();
    if (g->h > 0.0) return cmc_positive_from_g(g->g, g->h, grid).graph();
    return zmc_from_holomorphic(g->g, grid).graph();
  }
  if (const auto* p = std::get_if<SourcePlane>(&source)) {
    return section_graph(p->coeffs);
  }
  const auto& b = std::get<SourceBuiltin>(source);
  switch (b.kind) {
    case BuiltinSurface::Horosphere: return horosphere_graph();
    case BuiltinSurface::Sphere: return sphere_graph(b.h);
    case BuiltinSurface::Counterexample: return counterexample_surface(b.h);
    case BuiltinSurface::StandardHypersphere:
      return section_graph({0.0, 0.0, 1.0, 0.0});
  }
  raise(Errc::InvalidArgument, "unknown builtin surface");
}

std::optional<bool> source_attains_puncture(const MeshSource& source) {
  // A section with a > 0 contains [[1/a, 0], [0, 0]], whose ray is (0,0,1).
  if (const auto* p = std::get_if<SourcePlane>(&source)) {
    return p->coeffs.a > 0.0;
  }
  if (const auto* b = std::get_if<SourceBuiltin>(&source)) {
    switch (b->kind) {
      case BuiltinSurface::Horosphere: return false;          // a = 0
      case BuiltinSurface::Sphere: return true;               // a = sqrt(-H/2)
      case BuiltinSurface::Counterexample: return std::nullopt;
      case BuiltinSurface::StandardHypersphere: return false; // a = 0
    }
  }
  return std::nullopt;
}

Mesh build_mesh(const MeshSpec& spec) {
  const GraphFunction gf = graph_from_source(spec.source, spec.grid);
  const Grid& grid = spec.grid;

  Mesh mesh;
  std::vector<int> index(static_cast<std::size_t>(grid.points()), -1);
  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      const double u = grid.u(i), v = grid.v(j);
      if (!gf.contains(u, v)) continue;
      double t;
      try {
        t = gf.value(u, v);
      } catch (const Error& err) {
        raise(err.code(), std::string(err.what()) + " at (u,v) = (" +
                              std::to_string(u) + ", " + std::to_string(v) + ")");
      }
      std::array<double, 3> vertex;
      if (spec.model == MeshModel::HalfSpace) {
        vertex = {u, v, t};
      } else {
        const BallPoint b = stereographic(phi({u, v, t}));
        if (!(b.norm() < 1.0 - 1e-9)) {
          raise(Errc::InvalidArgument, "ball-model vertex leaves the unit ball");
        }
        vertex = {b.u, b.v, b.w};
      }
      index[static_cast<std::size_t>(j * grid.nu + i)] =
          static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(vertex);
    }
  }

  if (mesh.vertices.empty()) {
    raise(Errc::DomainBoundary, "no grid point lies on the surface");
  }

  const auto dist2 = [&](int l, int r) {
    const auto& p = mesh.vertices[static_cast<std::size_t>(l)];
    const auto& q = mesh.vertices[static_cast<std::size_t>(r)];
    const double dx = p[0] - q[0], dy = p[1] - q[1], dz = p[2] - q[2];
    return dx * dx + dy * dy + dz * dz;
  };

  for (int j = 0; j + 1 < grid.nv; ++j) {
    for (int i = 0; i + 1 < grid.nu; ++i) {
      const int v00 = index[static_cast<std::size_t>(j * grid.nu + i)];
      const int v10 = index[static_cast<std::size_t>(j * grid.nu + i + 1)];
      const int v01 = index[static_cast<std::size_t>((j + 1) * grid.nu + i)];
      const int v11 = index[static_cast<std::size_t>((j + 1) * grid.nu + i + 1)];
      if (v00 < 0 || v10 < 0 || v01 < 0 || v11 < 0) continue;
      // Split along the shorter diagonal; ties take the v00-v11 diagonal.
      if (dist2(v00, v11) <= dist2(v10, v01)) {
        mesh.triangles.push_back({v00, v10, v11});
        mesh.triangles.push_back({v00, v11, v01});
      } else {
        mesh.triangles.push_back({v00, v10, v01});
        mesh.triangles.push_back({v10, v11, v01});
      }
    }
  }
  return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  char line[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << line;
  }
  for (const auto& f : mesh.triangles) {
    std::snprintf(line, sizeof line, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
    out << line;
  }
}

}  // namespace lightcone
