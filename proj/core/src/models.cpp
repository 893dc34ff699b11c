#include "lightcone/models.hpp"

#include <cmath>

namespace lightcone {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::RemovedLine: return "RemovedLine";
    case Errc::PoleEncountered: return "PoleEncountered";
    case Errc::BranchPoint: return "BranchPoint";
    case Errc::CriticalPoint: return "CriticalPoint";
    case Errc::DomainBoundary: return "DomainBoundary";
    case Errc::NonPositiveTau: return "NonPositiveTau";
    case Errc::NotConformal: return "NotConformal";
    case Errc::NotZmc: return "NotZmc";
    case Errc::PathDependence: return "PathDependence";
    case Errc::InvalidH: return "InvalidH";
    case Errc::UnitModulus: return "UnitModulus";
    case Errc::NotUmbilic: return "NotUmbilic";
    case Errc::EmptySection: return "EmptySection";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownIdentifier: return "UnknownIdentifier";
    case Errc::InvalidDeterminant: return "InvalidDeterminant";
    case Errc::NotRealValued: return "NotRealValued";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Herm2 herm_from_vec(const Vec4& x) {
  return {x.x0 + x.x3, Complex(x.x1, x.x2), x.x0 - x.x3};
}

Vec4 vec_from_herm(const Herm2& m) {
  return {0.5 * (m.p + m.r), m.q.real(), m.q.imag(), 0.5 * (m.p - m.r)};
}

double minkowski_inner(const Herm2& x, const Herm2& y) {
  const Herm2 s = x + y;
  return -0.5 * (s.det() - x.det() - y.det());
}

double minkowski_inner(const Vec4& x, const Vec4& y) {
  return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
}

Complex minkowski_inner(const std::array<Complex, 4>& x,
                        const std::array<Complex, 4>& y) {
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

LightconePoint LightconePoint::from_herm(const Herm2& m) {
  LightconePoint p;
  p.m_ = m;
  p.x_ = vec_from_herm(m);
  return p;
}

LightconePoint LightconePoint::from_vec(const Vec4& x) {
  LightconePoint p;
  p.x_ = x;
  p.m_ = herm_from_vec(x);
  return p;
}

bool LightconePoint::on_future_cone() const {
  const double tr = m_.trace();
  const double q = minkowski_inner(m_, m_);
  return tr > 0.0 && std::abs(q) <= 1e-9 * (1.0 + tr * tr);
}

Isometry Isometry::matrix(const Mat2c& A) {
  if (std::abs(A.det() - 1.0) > 1e-12) {
    raise(Errc::InvalidDeterminant, "matrix action requires det A = 1");
  }
  Isometry iso;
  iso.steps_.push_back(MatrixAction{A});
  return iso;
}

Isometry Isometry::reflection() {
  Isometry iso;
  iso.steps_.push_back(Reflection{});
  return iso;
}

Isometry& Isometry::then(const Isometry& next) {
  steps_.insert(steps_.end(), next.steps_.begin(), next.steps_.end());
  return *this;
}

HalfSpaceCoords make_half_space(double u, double v, double t) {
  if (!(t > 0.0)) {
    raise(Errc::InvalidArgument, "half-space coordinates require t > 0");
  }
  return {u, v, t};
}

LightconePoint phi(const HalfSpaceCoords& c) {
  if (!(c.t > 0.0)) {
    raise(Errc::InvalidArgument, "phi requires t > 0");
  }
  const double inv_t = 1.0 / c.t;
  return LightconePoint::from_herm(
      {(c.u * c.u + c.v * c.v) * inv_t, Complex(c.u, c.v) * inv_t, inv_t});
}

HalfSpaceCoords phi_inverse(const LightconePoint& x) {
  if (!x.on_future_cone()) {
    raise(Errc::InvalidArgument, "phi_inverse requires a point of the cone");
  }
  const Herm2& m = x.herm();
  // x0 - x3 = m.r
  if (m.r <= 1e-12 * (1.0 + m.trace())) {
    raise(Errc::RemovedLine,
          "point lies on the removed lightlike line x0 - x3 = x1 = x2 = 0");
  }
  const double t = 1.0 / m.r;
  return {m.q.real() * t, m.q.imag() * t, t};
}

BallPoint stereographic(const LightconePoint& x) {
  if (!x.on_future_cone()) {
    raise(Errc::InvalidArgument, "stereographic requires a point of the cone");
  }
  const Vec4& v = x.vec();
  const double denom = 1.0 + v.x0;
  return {v.x1 / denom, v.x2 / denom, v.x3 / denom};
}

namespace {

Herm2 congruence(const Mat2c& A, const Herm2& x) {
  const Mat2c m = A * x.as_mat() * A.conj_transpose();
  // Symmetrize away roundoff; the exact result is Hermitian.
  return {m.a.real(), 0.5 * (m.b + std::conj(m.c)), m.d.real()};
}

}  // namespace

LightconePoint apply_isometry(const Isometry& iso, const LightconePoint& x) {
  LightconePoint out = x;
  for (const IsometryStep& step : iso.steps()) {
    if (const auto* act = std::get_if<MatrixAction>(&step)) {
      if (std::abs(act->A.det() - 1.0) > 1e-9) {
        raise(Errc::InvalidDeterminant, "matrix action requires det A = 1");
      }
      out = LightconePoint::from_herm(congruence(act->A, out.herm()));
    } else {
      // phi_- acts on the 4-vector form; it is not of the form A X A*.
      Vec4 v = out.vec();
      v.x3 = -v.x3;
      out = LightconePoint::from_vec(v);
    }
  }
  return out;
}

IdealRay ideal_projection(const LightconePoint& x) {
  if (!x.on_future_cone()) {
    raise(Errc::InvalidArgument, "ideal_projection requires a point of the cone");
  }
  const Vec4& v = x.vec();
  return {v.x1 / v.x0, v.x2 / v.x0, v.x3 / v.x0};
}

Isometry horosphere_congruence(double t) {
  if (!(t > 0.0)) {
    raise(Errc::InvalidArgument, "horosphere_congruence requires t > 0");
  }
  const double s = std::sqrt(t);
  return Isometry::matrix({Complex(s), Complex(0.0), Complex(0.0), Complex(1.0 / s)});
}

}  // namespace lightcone
