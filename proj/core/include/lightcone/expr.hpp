#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "lightcone/bijets.hpp"
#include "lightcone/jets.hpp"

namespace lightcone {

// Small complex-expression language for holomorphic data g(z) and graph
// functions tau(u,v).  Grammar (EBNF):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?                // right-associative
//   atom    := number | 'i' | variable | func '(' expr ')' | '(' expr ')'
//   func    := 'exp' | 'log' | 'sin' | 'cos' | 'sinh' | 'cosh' | 'sqrt'
//
// Variables: z in complex mode; u and v in real-graph mode.  'i' is the
// imaginary unit; identifiers are case-sensitive.

enum class ExprMode { Complex, Real };

enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class FuncKind { Exp, Log, Sin, Cos, Sinh, Cosh, Sqrt };
enum class VarKind { Z, U, V };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Literal {
    Complex value;
  };
  struct Variable {
    VarKind kind;
  };
  struct Negate {
    ExprPtr operand;
  };
  struct Binary {
    BinOp op;
    ExprPtr lhs, rhs;
  };
  struct Call {
    FuncKind fn;
    ExprPtr arg;
  };

  std::variant<Literal, Variable, Negate, Binary, Call> node;
  std::size_t offset{0};  // byte offset of the construct in the source
};

// Throws SyntaxError (with byte offset and expected-token set in the message)
// or UnknownIdentifier.
ExprPtr parse(std::string_view src, ExprMode mode);

std::string print(const ExprPtr& e);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// Plain evaluation (complex mode: x = z; real mode: pass eval_real).
Complex eval_value(const ExprPtr& e, Complex z);
double eval_real(const ExprPtr& e, double u, double v);  // NotRealValued guard

// Holomorphic jet of the denoted function at z0.
Jet3 eval_jet(const ExprPtr& e, Complex z0);

// Real-graph mode: bivariate jet at (u, v); throws NotRealValued if the
// expression leaves the real line.
Jet2d eval_jet2(const ExprPtr& e, double u, double v);

// Convenience constructors for programmatic ASTs.
ExprPtr expr_literal(Complex value);
ExprPtr expr_variable(VarKind kind);
ExprPtr expr_negate(ExprPtr operand);
ExprPtr expr_binary(BinOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr expr_call(FuncKind fn, ExprPtr arg);

}  // namespace lightcone
