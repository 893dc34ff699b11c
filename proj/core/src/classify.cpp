#include "lightcone/classify.hpp"

#include <cmath>
#include <limits>

namespace lightcone {

double normal_norm(const HyperplaneCoeffs& h) {
  return -4.0 * h.a * h.b + h.c * h.c + h.d * h.d;
}

CausalClass normal_causal_type(const HyperplaneCoeffs& h) {
  const double n = normal_norm(h);
  const double tol = 1e-12 * std::max(1.0, 4.0 * std::abs(h.a * h.b) +
                                               h.c * h.c + h.d * h.d);
  if (n < -tol) return {CausalType::Spacelike, n};
  if (n > tol) return {CausalType::Timelike, n};
  return {CausalType::Lightlike, n};
}

SectionClass classify(const HyperplaneCoeffs& h) {
  SectionClass out;
  out.mean_curvature = 0.5 * normal_norm(h);

  const double a_tol = 1e-12 * std::max(1.0, std::abs(h.a));
  const double r2 = h.c * h.c + h.d * h.d;

  if (std::abs(h.a) <= a_tol) {
    if (r2 > 1e-24) {
      out.kind = SectionKind::Hypersphere;  // (T-i) a = 0, c^2 + d^2 > 0
      out.subcase = SectionSubcase::TI;
    } else if (h.b > 0.0) {
      out.kind = SectionKind::Horosphere;  // (L-i) a = 0, b > 0, c = d = 0
      out.subcase = SectionSubcase::LI;
      out.entire = true;
    } else {
      out.kind = SectionKind::Empty;  // t = b <= 0 everywhere
    }
  } else {
    // m = b - (c^2+d^2)/(4a), the extremal value of tau at the vertex.
    const double m = h.b - r2 / (4.0 * h.a);
    const double m_tol = 1e-12 * std::max(1.0, std::abs(h.b));
    if (h.a > 0.0) {
      if (std::abs(m) <= m_tol) {
        out.kind = SectionKind::Horosphere;  // (L-ii) a > 0, b = (c^2+d^2)/(4a)
        out.subcase = SectionSubcase::LII;
      } else if (m > 0.0) {
        out.kind = SectionKind::Sphere;  // (S-i) a > 0, b > (c^2+d^2)/(4a)
        out.subcase = SectionSubcase::SI;
        out.entire = true;
      } else {
        out.kind = SectionKind::Hypersphere;  // (T-ii)
        out.subcase = SectionSubcase::TII;
      }
    } else {
      if (m > m_tol) {
        out.kind = SectionKind::Hypersphere;  // (T-iii) a < 0, b > (c^2+d^2)/(4a)
        out.subcase = SectionSubcase::TIII;
      } else {
        out.kind = SectionKind::Empty;  // downward paraboloid with max <= 0
      }
    }
  }

  if (out.kind == SectionKind::Empty) {
    out.mean_curvature = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

GraphFunction section_graph(const HyperplaneCoeffs& h) {
  if (classify(h).kind == SectionKind::Empty) {
    raise(Errc::EmptySection, "hyperplane section meets no point of the chart");
  }
  const double a = h.a, b = h.b, c = h.c, d = h.d;
  auto jets = [a, b, c, d](double u, double v) {
    Jet2d t;
    t.f = a * (u * u + v * v) + b + c * u + d * v;
    t.fu = 2 * a * u + c;
    t.fv = 2 * a * v + d;
    t.fuu = 2 * a;
    t.fvv = 2 * a;
    return t;
  };
  auto value = [a, b, c, d](double u, double v) {
    return a * (u * u + v * v) + b + c * u + d * v;
  };
  return GraphFunction::analytic(jets, value, Domain::plane());
}

LightconePoint vertex_limit_check(const HyperplaneCoeffs& h, double radius,
                                  double theta) {
  if (!(h.a > 0.0)) {
    raise(Errc::InvalidArgument, "vertex limit requires a > 0");
  }
  const double u = -h.c / (2.0 * h.a) + radius * std::cos(theta);
  const double v = -h.d / (2.0 * h.a) + radius * std::sin(theta);
  const double t = h.a * (u * u + v * v) + h.b + h.c * u + h.d * v;
  return phi({u, v, t});
}

const char* to_string(SectionKind kind) {
  switch (kind) {
    case SectionKind::Sphere: return "sphere";
    case SectionKind::Horosphere: return "horosphere";
    case SectionKind::Hypersphere: return "hypersphere";
    case SectionKind::Empty: return "empty";
  }
  return "?";
}

const char* to_string(SectionSubcase subcase) {
  switch (subcase) {
    case SectionSubcase::SI: return "S-i";
    case SectionSubcase::LI: return "L-i";
    case SectionSubcase::LII: return "L-ii";
    case SectionSubcase::TI: return "T-i";
    case SectionSubcase::TII: return "T-ii";
    case SectionSubcase::TIII: return "T-iii";
    case SectionSubcase::None: return "none";
  }
  return "?";
}

}  // namespace lightcone
