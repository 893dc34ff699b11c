#include "lightcone/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace lightcone {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::size_t offset;
  double number{0.0};
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': tok_.kind = Token::Plus; ++pos_; return;
      case '-': tok_.kind = Token::Minus; ++pos_; return;
      case '*': tok_.kind = Token::Star; ++pos_; return;
      case '/': tok_.kind = Token::Slash; ++pos_; return;
      case '^': tok_.kind = Token::Caret; ++pos_; return;
      case '(': tok_.kind = Token::LParen; ++pos_; return;
      case ')': tok_.kind = Token::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = src_.data() + pos_;
      const char* end = src_.data() + src_.size();
      double value = 0.0;
      auto res = std::from_chars(begin, end, value);
      if (res.ec != std::errc{} || res.ptr == begin) {
        raise(Errc::SyntaxError, "malformed number at offset " + std::to_string(pos_),
              pos_);
      }
      tok_.kind = Token::Number;
      tok_.number = value;
      tok_.text = src_.substr(pos_, static_cast<std::size_t>(res.ptr - begin));
      pos_ += static_cast<std::size_t>(res.ptr - begin);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 0;
      while (pos_ + len < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_ + len])) ||
              src_[pos_ + len] == '_')) {
        ++len;
      }
      tok_.kind = Token::Ident;
      tok_.text = src_.substr(pos_, len);
      pos_ += len;
      return;
    }
    raise(Errc::SyntaxError,
          "unexpected character '" + std::string(1, c) + "' at offset " +
              std::to_string(pos_),
          pos_);
  }

  std::string_view src_;
  std::size_t pos_{0};
  Token tok_{};
};

ExprPtr make(Expr&& e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
 public:
  Parser(std::string_view src, ExprMode mode) : lex_(src), mode_(mode) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (lex_.peek().kind != Token::End) {
      fail("operator or end of input");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    raise(Errc::SyntaxError,
          "syntax error at offset " + std::to_string(lex_.peek().offset) +
              ": expected " + expected,
          lex_.peek().offset);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      const Token op = lex_.take();
      ExprPtr rhs = parse_term();
      lhs = make({Expr::Binary{op.kind == Token::Plus ? BinOp::Add : BinOp::Sub,
                               lhs, rhs},
                  op.offset});
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
      const Token op = lex_.take();
      ExprPtr rhs = parse_unary();
      lhs = make({Expr::Binary{op.kind == Token::Star ? BinOp::Mul : BinOp::Div,
                               lhs, rhs},
                  op.offset});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (lex_.peek().kind == Token::Minus) {
      const Token op = lex_.take();
      return make({Expr::Negate{parse_unary()}, op.offset});
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (lex_.peek().kind == Token::Caret) {
      const Token op = lex_.take();
      ExprPtr exponent = parse_unary();  // right-associative, '-' allowed
      return make({Expr::Binary{BinOp::Pow, base, exponent}, op.offset});
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Token::Number:
        lex_.take();
        return make({Expr::Literal{Complex(t.number)}, t.offset});
      case Token::LParen: {
        lex_.take();
        ExprPtr inner = parse_expr();
        if (lex_.peek().kind != Token::RParen) {
          fail("')'");
        }
        lex_.take();
        return inner;
      }
      case Token::Ident:
        return parse_ident();
      default:
        fail("number, identifier, '(' or unary '-'");
    }
  }

  ExprPtr parse_ident() {
    static const std::map<std::string_view, FuncKind> kFuncs = {
        {"exp", FuncKind::Exp},   {"log", FuncKind::Log},
        {"sin", FuncKind::Sin},   {"cos", FuncKind::Cos},
        {"sinh", FuncKind::Sinh}, {"cosh", FuncKind::Cosh},
        {"sqrt", FuncKind::Sqrt}};
    const Token t = lex_.take();
    if (t.text == "i") {
      return make({Expr::Literal{Complex(0.0, 1.0)}, t.offset});
    }
    if (auto it = kFuncs.find(t.text); it != kFuncs.end()) {
      if (lex_.peek().kind != Token::LParen) {
        fail("'(' after function name");
      }
      lex_.take();
      ExprPtr arg = parse_expr();
      if (lex_.peek().kind != Token::RParen) {
        fail("')'");
      }
      lex_.take();
      return make({Expr::Call{it->second, arg}, t.offset});
    }
    if (mode_ == ExprMode::Complex && t.text == "z") {
      return make({Expr::Variable{VarKind::Z}, t.offset});
    }
    if (mode_ == ExprMode::Real && t.text == "u") {
      return make({Expr::Variable{VarKind::U}, t.offset});
    }
    if (mode_ == ExprMode::Real && t.text == "v") {
      return make({Expr::Variable{VarKind::V}, t.offset});
    }
    raise(Errc::UnknownIdentifier,
          "unknown identifier '" + std::string(t.text) + "' at offset " +
              std::to_string(t.offset),
          t.offset);
  }

  Lexer lex_;
  ExprMode mode_;
};

int precedence_of(const Expr& e) {
  // 1 add/sub, 2 mul/div, 3 unary minus, 4 pow, 5 atom
  if (std::holds_alternative<Expr::Binary>(e.node)) {
    switch (std::get<Expr::Binary>(e.node).op) {
      case BinOp::Add:
      case BinOp::Sub: return 1;
      case BinOp::Mul:
      case BinOp::Div: return 2;
      case BinOp::Pow: return 4;
    }
  }
  if (std::holds_alternative<Expr::Negate>(e.node)) return 3;
  return 5;
}

void print_rec(const ExprPtr& e, std::ostringstream& out, int min_prec) {
  const int prec = precedence_of(*e);
  const bool parens = prec < min_prec;
  if (parens) out << '(';
  if (const auto* lit = std::get_if<Expr::Literal>(&e->node)) {
    if (lit->value == Complex(0.0, 1.0)) {
      out << 'i';
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", lit->value.real());
      out << buf;
    }
  } else if (const auto* var = std::get_if<Expr::Variable>(&e->node)) {
    out << (var->kind == VarKind::Z ? 'z' : var->kind == VarKind::U ? 'u' : 'v');
  } else if (const auto* neg = std::get_if<Expr::Negate>(&e->node)) {
    out << '-';
    print_rec(neg->operand, out, 3);
  } else if (const auto* bin = std::get_if<Expr::Binary>(&e->node)) {
    switch (bin->op) {
      case BinOp::Add:
        print_rec(bin->lhs, out, 1);
        out << '+';
        print_rec(bin->rhs, out, 2);
        break;
      case BinOp::Sub:
        print_rec(bin->lhs, out, 1);
        out << '-';
        print_rec(bin->rhs, out, 2);
        break;
      case BinOp::Mul:
        print_rec(bin->lhs, out, 2);
        out << '*';
        print_rec(bin->rhs, out, 3);
        break;
      case BinOp::Div:
        print_rec(bin->lhs, out, 2);
        out << '/';
        print_rec(bin->rhs, out, 3);
        break;
      case BinOp::Pow:
        print_rec(bin->lhs, out, 5);  // (a^b)^c needs parens on the left
        out << '^';
        print_rec(bin->rhs, out, 3);
        break;
    }
  } else if (const auto* call = std::get_if<Expr::Call>(&e->node)) {
    static const char* kNames[] = {"exp", "log", "sin", "cos", "sinh", "cosh", "sqrt"};
    out << kNames[static_cast<int>(call->fn)] << '(';
    print_rec(call->arg, out, 1);
    out << ')';
  }
  if (parens) out << ')';
}

// Generic evaluator; Scalar is Complex, Jet3 or Jet2c.
template <typename Scalar, typename Env>
Scalar eval_rec(const ExprPtr& e, const Env& env) {
  if (const auto* lit = std::get_if<Expr::Literal>(&e->node)) {
    return env.constant(lit->value);
  }
  if (const auto* var = std::get_if<Expr::Variable>(&e->node)) {
    return env.variable(var->kind, e->offset);
  }
  if (const auto* neg = std::get_if<Expr::Negate>(&e->node)) {
    return -eval_rec<Scalar>(neg->operand, env);
  }
  if (const auto* bin = std::get_if<Expr::Binary>(&e->node)) {
    try {
      switch (bin->op) {
        case BinOp::Add:
          return eval_rec<Scalar>(bin->lhs, env) + eval_rec<Scalar>(bin->rhs, env);
        case BinOp::Sub:
          return eval_rec<Scalar>(bin->lhs, env) - eval_rec<Scalar>(bin->rhs, env);
        case BinOp::Mul:
          return eval_rec<Scalar>(bin->lhs, env) * eval_rec<Scalar>(bin->rhs, env);
        case BinOp::Div:
          return eval_rec<Scalar>(bin->lhs, env) / eval_rec<Scalar>(bin->rhs, env);
        case BinOp::Pow: {
          // Integer constant exponents bypass the log branch cut.
          if (const auto* rl = std::get_if<Expr::Literal>(&bin->rhs->node)) {
            const Complex w = rl->value;
            if (w.imag() == 0.0 && std::nearbyint(w.real()) == w.real() &&
                std::abs(w.real()) <= 1024.0) {
              return env.powi(eval_rec<Scalar>(bin->lhs, env),
                              static_cast<long>(w.real()));
            }
          }
          return env.pow(eval_rec<Scalar>(bin->lhs, env),
                         eval_rec<Scalar>(bin->rhs, env));
        }
      }
    } catch (Error& err) {
      if (!err.has_offset()) {
        throw Error(err.code(), std::string(err.what()) + " (at offset " +
                                    std::to_string(e->offset) + ")",
                    e->offset);
      }
      throw;
    }
  }
  if (const auto* call = std::get_if<Expr::Call>(&e->node)) {
    Scalar arg = eval_rec<Scalar>(call->arg, env);
    try {
      return env.apply(call->fn, arg);
    } catch (Error& err) {
      if (!err.has_offset()) {
        throw Error(err.code(), std::string(err.what()) + " (at offset " +
                                    std::to_string(e->offset) + ")",
                    e->offset);
      }
      throw;
    }
  }
  raise(Errc::InvalidArgument, "malformed expression tree");
}

struct ValueEnv {
  Complex z;
  double u{0}, v{0};

  Complex constant(Complex c) const { return c; }
  Complex variable(VarKind kind, std::size_t) const {
    switch (kind) {
      case VarKind::Z: return z;
      case VarKind::U: return Complex(u);
      case VarKind::V: return Complex(v);
    }
    return {};
  }
  Complex powi(Complex base, long n) const {
    if (n < 0) {
      const Complex p = powi(base, -n);
      if (std::abs(p) <= 1e-300) {
        raise(Errc::PoleEncountered, "division by zero in power");
      }
      return 1.0 / p;
    }
    Complex out(1.0), b = base;
    while (n > 0) {
      if (n & 1) out *= b;
      b *= b;
      n >>= 1;
    }
    return out;
  }
  Complex pow(Complex base, Complex exponent) const {
    if (std::abs(base) <= 1e-300) {
      raise(Errc::BranchPoint, "pow at zero base");
    }
    return std::exp(exponent * std::log(base));
  }
  Complex apply(FuncKind fn, Complex x) const {
    switch (fn) {
      case FuncKind::Exp: return std::exp(x);
      case FuncKind::Log:
        if (std::abs(x) <= 1e-300) raise(Errc::BranchPoint, "log at zero");
        return std::log(x);
      case FuncKind::Sin: return std::sin(x);
      case FuncKind::Cos: return std::cos(x);
      case FuncKind::Sinh: return std::sinh(x);
      case FuncKind::Cosh: return std::cosh(x);
      case FuncKind::Sqrt:
        if (std::abs(x) <= 1e-300) raise(Errc::BranchPoint, "sqrt at zero");
        return std::sqrt(x);
    }
    return {};
  }
};

struct Jet3Env {
  Complex z0;

  Jet3 constant(Complex c) const { return Jet3::constant(c); }
  Jet3 variable(VarKind kind, std::size_t offset) const {
    if (kind != VarKind::Z) {
      raise(Errc::UnknownIdentifier, "real variable in complex mode", offset);
    }
    return Jet3::variable(z0);
  }
  Jet3 powi(const Jet3& base, long n) const { return lightcone::powi(base, n); }
  Jet3 pow(const Jet3& base, const Jet3& exponent) const {
    return lightcone::pow(base, exponent);
  }
  Jet3 apply(FuncKind fn, const Jet3& x) const {
    switch (fn) {
      case FuncKind::Exp: return lightcone::exp(x);
      case FuncKind::Log: return lightcone::log(x);
      case FuncKind::Sin: return lightcone::sin(x);
      case FuncKind::Cos: return lightcone::cos(x);
      case FuncKind::Sinh: return lightcone::sinh(x);
      case FuncKind::Cosh: return lightcone::cosh(x);
      case FuncKind::Sqrt: return lightcone::sqrt(x);
    }
    return {};
  }
};

struct Jet2Env {
  double u0, v0;

  Jet2c constant(Complex c) const { return Jet2c::constant(c); }
  Jet2c variable(VarKind kind, std::size_t offset) const {
    switch (kind) {
      case VarKind::U: return Jet2c::variable_u(u0);
      case VarKind::V: return Jet2c::variable_v(v0);
      case VarKind::Z:
        raise(Errc::UnknownIdentifier, "variable z in real-graph mode", offset);
    }
    return {};
  }
  Jet2c powi(const Jet2c& base, long n) const {
    if (n < 0) {
      return Jet2c::constant(1.0) / powi(base, -n);
    }
    Jet2c out = Jet2c::constant(1.0), b = base;
    while (n > 0) {
      if (n & 1) out = out * b;
      b = b * b;
      n >>= 1;
    }
    return out;
  }
  Jet2c pow(const Jet2c& base, const Jet2c& exponent) const {
    return jet2_exp(exponent * jet2_log(base));
  }
  Jet2c apply(FuncKind fn, const Jet2c& x) const {
    switch (fn) {
      case FuncKind::Exp: return jet2_exp(x);
      case FuncKind::Log: return jet2_log(x);
      case FuncKind::Sin: {
        const Complex s = std::sin(x.f), c = std::cos(x.f);
        return compose(x, s, c, -s, -c);
      }
      case FuncKind::Cos: {
        const Complex s = std::sin(x.f), c = std::cos(x.f);
        return compose(x, c, -s, -c, s);
      }
      case FuncKind::Sinh: {
        const Complex s = std::sinh(x.f), c = std::cosh(x.f);
        return compose(x, s, c, s, c);
      }
      case FuncKind::Cosh: {
        const Complex s = std::sinh(x.f), c = std::cosh(x.f);
        return compose(x, c, s, c, s);
      }
      case FuncKind::Sqrt: return jet2_sqrt(x);
    }
    return {};
  }
};

}  // namespace

ExprPtr parse(std::string_view src, ExprMode mode) {
  if (src.empty()) {
    raise(Errc::SyntaxError, "empty expression", 0);
  }
  return Parser(src, mode).run();
}

std::string print(const ExprPtr& e) {
  std::ostringstream out;
  print_rec(e, out, 1);
  return out.str();
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* la = std::get_if<Expr::Literal>(&a->node)) {
    return la->value == std::get<Expr::Literal>(b->node).value;
  }
  if (const auto* va = std::get_if<Expr::Variable>(&a->node)) {
    return va->kind == std::get<Expr::Variable>(b->node).kind;
  }
  if (const auto* na = std::get_if<Expr::Negate>(&a->node)) {
    return structurally_equal(na->operand, std::get<Expr::Negate>(b->node).operand);
  }
  if (const auto* ba = std::get_if<Expr::Binary>(&a->node)) {
    const auto& bb = std::get<Expr::Binary>(b->node);
    return ba->op == bb.op && structurally_equal(ba->lhs, bb.lhs) &&
           structurally_equal(ba->rhs, bb.rhs);
  }
  const auto& ca = std::get<Expr::Call>(a->node);
  const auto& cb = std::get<Expr::Call>(b->node);
  return ca.fn == cb.fn && structurally_equal(ca.arg, cb.arg);
}

Complex eval_value(const ExprPtr& e, Complex z) {
  return eval_rec<Complex>(e, ValueEnv{z});
}

double eval_real(const ExprPtr& e, double u, double v) {
  ValueEnv env;
  env.u = u;
  env.v = v;
  const Complex w = eval_rec<Complex>(e, env);
  if (std::abs(w.imag()) > 1e-9 * (1.0 + std::abs(w.real()))) {
    raise(Errc::NotRealValued, "expression is not real-valued at the sample");
  }
  return w.real();
}

Jet3 eval_jet(const ExprPtr& e, Complex z0) {
  return eval_rec<Jet3>(e, Jet3Env{z0});
}

Jet2d eval_jet2(const ExprPtr& e, double u, double v) {
  const Jet2c w = eval_rec<Jet2c>(e, Jet2Env{u, v});
  const double scale = 1.0 + std::abs(w.f);
  if (std::abs(w.f.imag()) > 1e-9 * scale) {
    raise(Errc::NotRealValued, "expression is not real-valued at the sample");
  }
  return real_part(w);
}

ExprPtr expr_literal(Complex value) {
  return std::make_shared<const Expr>(Expr{Expr::Literal{value}, 0});
}
ExprPtr expr_variable(VarKind kind) {
  return std::make_shared<const Expr>(Expr{Expr::Variable{kind}, 0});
}
ExprPtr expr_negate(ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Expr::Negate{std::move(operand)}, 0});
}
ExprPtr expr_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(
      Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}, 0});
}
ExprPtr expr_call(FuncKind fn, ExprPtr arg) {
  return std::make_shared<const Expr>(Expr{Expr::Call{fn, std::move(arg)}, 0});
}

}  // namespace lightcone
