#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lightcone/jets.hpp"

using namespace lightcone;

namespace {

const Complex kI(0.0, 1.0);

bool jet_close(const Jet3& a, const Jet3& b, double tol = 1e-12) {
  return std::abs(a.f - b.f) <= tol && std::abs(a.f1 - b.f1) <= tol &&
         std::abs(a.f2 - b.f2) <= tol && std::abs(a.f3 - b.f3) <= tol;
}

Mat2c random_sl2(std::mt19937& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  Complex a(c(rng) + 1.5, c(rng)), b(c(rng), c(rng)), cc(c(rng), c(rng));
  return {a, b, cc, (1.0 + b * cc) / a};
}

}  // namespace

TEST_CASE("elementary jets") {
  const Jet3 z0 = Jet3::variable(0.0);
  CHECK(jet_close(exp(z0), {1.0, 1.0, 1.0, 1.0}));

  // z^2 at z = 1: (1, 2, 2, 0)
  const Jet3 z1 = Jet3::variable(1.0);
  CHECK(jet_close(z1 * z1, {1.0, 2.0, 2.0, 0.0}));
  CHECK(jet_close(powi(z1, 2), {1.0, 2.0, 2.0, 0.0}));

  // 1/(1-z) at 0: geometric series, k-th derivative k!
  const Jet3 geo = Jet3::constant(1.0) / (Jet3::constant(1.0) - z0);
  CHECK(jet_close(geo, {1.0, 1.0, 2.0, 6.0}));
}

TEST_CASE("division by a vanishing jet is a pole") {
  CHECK_THROWS_AS(Jet3::constant(1.0) / Jet3::constant(0.0), Error);
  try {
    Jet3::constant(1.0) / Jet3::variable(0.0);
    FAIL("expected PoleEncountered");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PoleEncountered);
  }
  CHECK_THROWS_AS(log(Jet3::constant(0.0)), Error);
}

TEST_CASE("jets against central finite differences") {
  // Richardson-confirmed O(h^2): the h and h/2 errors of the first
  // derivative drop by at least ~4.
  const auto f = [](Complex z) { return std::exp(z) * std::sin(z) + 1.0 / (z + 2.0); };
  const auto fjet = [](const Jet3& z) {
    return exp(z) * sin(z) + Jet3::constant(1.0) / (z + Jet3::constant(2.0));
  };
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> c(-0.8, 0.8);
  for (int k = 0; k < 25; ++k) {
    const Complex z(c(rng), c(rng));
    const Jet3 jet = fjet(Jet3::variable(z));
    const auto fd = [&](double h) {
      return std::abs((f(z + Complex(h)) - f(z - Complex(h))) / (2 * h) - jet.f1);
    };
    const double e1 = fd(1e-4), e2 = fd(5e-5);
    CHECK(e1 <= 1e-7);
    if (e1 > 1e-11) {
      CHECK(e2 <= e1 / 3.5 + 1e-12);
    }
  }
}

TEST_CASE("schwarzian derivative") {
  // Moebius maps are the kernel.
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  for (int m = 0; m < 20; ++m) {
    const MobiusElement a = MobiusElement::make(random_sl2(rng));
    for (int k = 0; k < 50; ++k) {
      const Complex z(c(rng), c(rng));
      try {
        CHECK(std::abs(schwarzian(mobius_apply(a, Jet3::variable(z)))) <= 1e-9);
      } catch (const Error& err) {
        CHECK(err.code() == Errc::PoleEncountered);
      }
    }
  }

  // S(e^z) = -1/2 at every z.
  for (double u : {-1.0, 0.0, 2.0}) {
    const Complex s = schwarzian(exp(Jet3::variable(Complex(u, 0.3))));
    CHECK(s.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(s.imag() == doctest::Approx(0.0).epsilon(1e-12));
  }

  // S(z^2) at z = 1 is -3/2.
  const Jet3 sq = powi(Jet3::variable(1.0), 2);
  CHECK(schwarzian(sq).real() == doctest::Approx(-1.5));

  // Critical point of z^2 at 0.
  try {
    schwarzian(powi(Jet3::variable(0.0), 2));
    FAIL("expected CriticalPoint");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::CriticalPoint);
  }
}

TEST_CASE("moebius application and group action") {
  const MobiusElement id = MobiusElement::identity();
  CHECK(mobius_apply(id, Complex(3.0, 4.0)) == Complex(3.0, 4.0));

  const MobiusElement inv = MobiusElement::make(
      {Complex(0.0), Complex(1.0), Complex(-1.0), Complex(0.0)});
  CHECK(mobius_apply(inv, Complex(2.0)).real() == doctest::Approx(-0.5));

  try {
    mobius_apply(inv, Complex(0.0));
    FAIL("expected PoleEncountered");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PoleEncountered);
  }

  std::mt19937 rng(23);
  for (int k = 0; k < 100; ++k) {
    const MobiusElement a = MobiusElement::make(random_sl2(rng));
    const MobiusElement b = MobiusElement::make(random_sl2(rng));
    std::uniform_real_distribution<double> c(-1.5, 1.5);
    const Complex z(c(rng), c(rng));
    try {
      const Complex lhs = mobius_apply(a * b, z);
      const Complex rhs = mobius_apply(a, mobius_apply(b, z));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    } catch (const Error& err) {
      CHECK(err.code() == Errc::PoleEncountered);
    }
  }
}

TEST_CASE("group tags validate coefficient patterns") {
  CHECK_THROWS_AS(
      MobiusElement::make({Complex(1.0), Complex(0.5), Complex(0.5), Complex(1.25)},
                          MobiusGroup::SU2),
      Error);
  // SU(1,1): d = conj(a), c = conj(b), |a|^2 - |b|^2 = 1.
  const double t = 0.4;
  CHECK_NOTHROW(MobiusElement::make({Complex(std::cosh(t)), Complex(std::sinh(t)),
                                     Complex(std::sinh(t)), Complex(std::cosh(t))},
                                    MobiusGroup::SU11));
}

TEST_CASE("schwarzian invariance under moebius postcomposition") {
  // g -> g + 5 and random SL(2,C) elements.
  const MobiusElement shift = MobiusElement::make(
      {Complex(1.0), Complex(5.0), Complex(0.0), Complex(1.0)});
  const Jet3 g = exp(Jet3::variable(Complex(0.3, -0.2)));
  CHECK(schwarzian_invariance_check(g, MobiusElement::identity()) == doctest::Approx(0.0));
  CHECK(schwarzian_invariance_check(g, shift) <= 1e-12);

  std::mt19937 rng(29);
  std::uniform_real_distribution<double> c(-0.7, 0.7);
  for (int k = 0; k < 40; ++k) {
    const Complex z(c(rng) + 1.0, c(rng));
    const Jet3 cubic = powi(Jet3::variable(z), 3) + Jet3::variable(z);
    const MobiusElement a = MobiusElement::make(random_sl2(rng));
    try {
      CHECK(schwarzian_invariance_check(cubic, a) <=
            1e-9 * (1.0 + std::abs(schwarzian(cubic))));
    } catch (const Error& err) {
      CHECK(err.code() == Errc::PoleEncountered);
    }
  }
}
