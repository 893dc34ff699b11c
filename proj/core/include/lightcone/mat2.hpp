#pragma once

#include <cmath>
#include <complex>

namespace lightcone {

using Complex = std::complex<double>;

// 2x2 complex matrix [[a, b], [c, d]], the coefficient carrier for matrix
// isometries and Moebius transformations.
struct Mat2c {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mat2c identity() { return {}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }

  Mat2c conj_transpose() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }

  friend Mat2c operator*(const Mat2c& l, const Mat2c& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }

  friend Mat2c operator-(const Mat2c& m) { return {-m.a, -m.b, -m.c, -m.d}; }

  // Entrywise max-abs distance.
  friend double entry_distance(const Mat2c& l, const Mat2c& r) {
    return std::max(std::max(std::abs(l.a - r.a), std::abs(l.b - r.b)),
                    std::max(std::abs(l.c - r.c), std::abs(l.d - r.d)));
  }
};

}  // namespace lightcone
