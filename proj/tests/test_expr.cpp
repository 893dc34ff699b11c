#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "lightcone/expr.hpp"

using namespace lightcone;

TEST_CASE("parse shapes") {
  const ExprPtr call = parse("exp(z)", ExprMode::Complex);
  REQUIRE(std::holds_alternative<Expr::Call>(call->node));
  CHECK(std::get<Expr::Call>(call->node).fn == FuncKind::Exp);
  CHECK(std::holds_alternative<Expr::Variable>(
      std::get<Expr::Call>(call->node).arg->node));

  const ExprPtr frac = parse("1/(1-z^2)", ExprMode::Complex);
  REQUIRE(std::holds_alternative<Expr::Binary>(frac->node));
  const auto& div = std::get<Expr::Binary>(frac->node);
  CHECK(div.op == BinOp::Div);
  const auto& sub = std::get<Expr::Binary>(div.rhs->node);
  CHECK(sub.op == BinOp::Sub);
  CHECK(std::get<Expr::Binary>(sub.rhs->node).op == BinOp::Pow);
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse("z*", ExprMode::Complex);
    FAIL("expected SyntaxError");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::SyntaxError);
    CHECK(err.offset() == 2);
  }

  try {
    parse("w+1", ExprMode::Complex);
    FAIL("expected UnknownIdentifier");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::UnknownIdentifier);
    CHECK(err.offset() == 0);
  }

  // z is outside the real-graph grammar.
  CHECK_THROWS_AS(parse("z+u", ExprMode::Real), Error);
  CHECK_THROWS_AS(parse("", ExprMode::Complex), Error);
  CHECK_THROWS_AS(parse("exp z", ExprMode::Complex), Error);
  CHECK_THROWS_AS(parse("(1+z", ExprMode::Complex), Error);
}

TEST_CASE("precedence and associativity") {
  // ^ binds tighter than unary minus, which binds tighter than * /.
  CHECK(eval_value(parse("-z^2", ExprMode::Complex), Complex(2.0)).real() ==
        doctest::Approx(-4.0));
  CHECK(eval_value(parse("2^3^2", ExprMode::Complex), Complex(0.0)).real() ==
        doctest::Approx(512.0));
  CHECK(eval_value(parse("2*z^2", ExprMode::Complex), Complex(3.0)).real() ==
        doctest::Approx(18.0));
  CHECK(eval_value(parse("1-2-3", ExprMode::Complex), Complex(0.0)).real() ==
        doctest::Approx(-4.0));
  CHECK(eval_value(parse("z^-2", ExprMode::Complex), Complex(2.0)).real() ==
        doctest::Approx(0.25));
  CHECK(eval_value(parse("2*i*z", ExprMode::Complex), Complex(0.0, 1.0)).real() ==
        doctest::Approx(-2.0));
}

TEST_CASE("eval_jet examples") {
  const Jet3 var = eval_jet(parse("z", ExprMode::Complex), Complex(5.0, 1.0));
  CHECK(var.f == Complex(5.0, 1.0));
  CHECK(var.f1 == Complex(1.0));
  CHECK(var.f2 == Complex(0.0));

  const Jet3 e = eval_jet(parse("exp(z)", ExprMode::Complex), Complex(0.0));
  for (const Complex c : {e.f, e.f1, e.f2, e.f3}) {
    CHECK(std::abs(c - 1.0) < 1e-15);
  }

  const Jet3 geo = eval_jet(parse("1/(1-z)", ExprMode::Complex), Complex(0.0));
  CHECK(std::abs(geo.f - 1.0) < 1e-15);
  CHECK(std::abs(geo.f1 - 1.0) < 1e-15);
  CHECK(std::abs(geo.f2 - 2.0) < 1e-15);
  CHECK(std::abs(geo.f3 - 6.0) < 1e-15);

  // Pole reporting includes the source offset of the division.
  try {
    eval_jet(parse("1/(1-z)", ExprMode::Complex), Complex(1.0));
    FAIL("expected PoleEncountered");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PoleEncountered);
    CHECK(err.has_offset());
  }
}

TEST_CASE("print/parse round trip is structural identity") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> num(0.0, 9.5);

  // Random ASTs over the constructs the grammar can produce.
  const std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    if (depth <= 0 || pick(rng) < 3) {
      switch (pick(rng) % 3) {
        case 0: return expr_literal(Complex(num(rng)));
        case 1: return expr_literal(Complex(0.0, 1.0));
        default: return expr_variable(VarKind::Z);
      }
    }
    switch (pick(rng)) {
      case 0: return expr_negate(gen(depth - 1));
      case 1: return expr_call(FuncKind::Exp, gen(depth - 1));
      case 2: return expr_call(FuncKind::Sin, gen(depth - 1));
      case 3:
        return expr_binary(BinOp::Pow, gen(depth - 1), gen(depth - 1));
      case 4: return expr_binary(BinOp::Div, gen(depth - 1), gen(depth - 1));
      case 5: return expr_binary(BinOp::Sub, gen(depth - 1), gen(depth - 1));
      case 6: return expr_binary(BinOp::Mul, gen(depth - 1), gen(depth - 1));
      default: return expr_binary(BinOp::Add, gen(depth - 1), gen(depth - 1));
    }
  };

  for (int k = 0; k < 500; ++k) {
    const ExprPtr e = gen(4);
    const std::string text = print(e);
    const ExprPtr back = parse(text, ExprMode::Complex);
    CHECK(structurally_equal(e, back));
    CHECK(print(back) == text);
  }
}

TEST_CASE("jet derivatives of random expressions match finite differences") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> num(0.5, 3.0);
  std::uniform_real_distribution<double> coord(-0.7, 0.7);

  const std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    if (depth <= 0 || pick(rng) < 3) {
      return pick(rng) < 5 ? expr_literal(Complex(num(rng)))
                           : expr_variable(VarKind::Z);
    }
    switch (pick(rng)) {
      case 0: return expr_call(FuncKind::Exp, gen(depth - 1));
      case 1: return expr_call(FuncKind::Sin, gen(depth - 1));
      case 2: return expr_call(FuncKind::Cosh, gen(depth - 1));
      case 3: return expr_negate(gen(depth - 1));
      case 4: return expr_binary(BinOp::Div, gen(depth - 1), gen(depth - 1));
      case 5: return expr_binary(BinOp::Sub, gen(depth - 1), gen(depth - 1));
      case 6:
        return expr_binary(BinOp::Pow, gen(depth - 1), expr_literal(Complex(2.0)));
      default: return expr_binary(BinOp::Mul, gen(depth - 1), gen(depth - 1));
    }
  };

  const double h = 1e-5;
  int compared = 0;
  for (int k = 0; k < 400; ++k) {
    const ExprPtr e = gen(3);
    const Complex z(coord(rng), coord(rng));
    try {
      const Jet3 jet = eval_jet(e, z);
      const Complex fp = eval_value(e, z + Complex(h));
      const Complex fm = eval_value(e, z - Complex(h));
      // Keep only tame samples: wild magnitudes make the finite-difference
      // reference itself unreliable.
      bool tame = true;
      for (const Complex& c : {jet.f, jet.f1, jet.f2, jet.f3, fp, fm}) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) ||
            std::abs(c) > 1e3) {
          tame = false;
        }
      }
      if (!tame) continue;
      const Complex fd = (fp - fm) / (2 * h);
      CHECK(std::abs(jet.f1 - fd) <=
            1e-5 * (1.0 + std::abs(jet.f1) + std::abs(jet.f3)));
      ++compared;
    } catch (const Error&) {
      // poles and branch points of the random expression; skip the sample
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("fuzzed sources never crash, only structured errors") {
  std::mt19937 rng(37);
  const std::string alphabet = "zuv0123456789.+-*/^()iexplogsncha _";
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<std::size_t> at(0, alphabet.size() - 1);
  for (int k = 0; k < 3000; ++k) {
    std::string src;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) src.push_back(alphabet[at(rng)]);
    try {
      const ExprPtr e = parse(src, ExprMode::Complex);
      eval_value(e, Complex(0.3, 0.4));
    } catch (const Error&) {
      // structured failure is the contract
    }
  }
}

TEST_CASE("real-graph jets match the complex evaluation") {
  const ExprPtr tau = parse("cosh(u)*cosh(v)+u*v^2", ExprMode::Real);
  const Jet2d j = eval_jet2(tau, 0.4, -0.7);

  const auto f = [&](double u, double v) { return eval_real(tau, u, v); };
  const double h = 1e-5;
  CHECK(j.f == doctest::Approx(f(0.4, -0.7)).epsilon(1e-14));
  CHECK(j.fu == doctest::Approx((f(0.4 + h, -0.7) - f(0.4 - h, -0.7)) / (2 * h))
                    .epsilon(1e-8));
  CHECK(j.fv == doctest::Approx((f(0.4, -0.7 + h) - f(0.4, -0.7 - h)) / (2 * h))
                    .epsilon(1e-8));
  CHECK(j.fuv ==
        doctest::Approx((f(0.4 + h, -0.7 + h) - f(0.4 + h, -0.7 - h) -
                         f(0.4 - h, -0.7 + h) + f(0.4 - h, -0.7 - h)) /
                        (4 * h * h))
            .epsilon(1e-5));

  // cosh(u)cosh(v): f_uuv at (a,b) = sinh(a) sinh(b) ... check one exact value
  const Jet2d c = eval_jet2(parse("cosh(u)*cosh(v)", ExprMode::Real), 0.3, 0.5);
  CHECK(c.fuuv == doctest::Approx(std::cosh(0.3) * std::sinh(0.5)).epsilon(1e-12));
  CHECK(c.fuuu == doctest::Approx(std::sinh(0.3) * std::cosh(0.5)).epsilon(1e-12));

  // A complex-valued expression is rejected in real mode.
  CHECK_THROWS_AS(eval_jet2(parse("sqrt(u)", ExprMode::Real), -1.0, 0.0), Error);
  CHECK_THROWS_AS(eval_real(parse("i*u", ExprMode::Real), 1.0, 0.0), Error);
}

TEST_CASE("integer powers avoid the log branch cut") {
  // u^2 must evaluate for negative u (no log involved).
  CHECK(eval_real(parse("u^2", ExprMode::Real), -3.0, 0.0) == doctest::Approx(9.0));
  CHECK(eval_real(parse("u^3", ExprMode::Real), -2.0, 0.0) == doctest::Approx(-8.0));
  const Jet2d j = eval_jet2(parse("u^2+v^2", ExprMode::Real), -1.5, 2.0);
  CHECK(j.fuu == doctest::Approx(2.0));
  CHECK(j.fvv == doctest::Approx(2.0));
  CHECK(j.fuv == doctest::Approx(0.0));
}
