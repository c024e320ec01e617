#include "sheffer/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "sheffer/error.hpp"

namespace sheffer {

namespace {

using Kind = Expr::Kind;

ExprPtr make(Kind kind, std::size_t pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->position = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw PositionedError(ErrorCode::kSyntaxError, pos_, why); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr expression() {
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make(Kind::kAdd, at, {lhs, term()});
      } else if (accept('-')) {
        lhs = make(Kind::kSub, at, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = make(Kind::kMul, at, {lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Kind::kDiv, at, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return make(Kind::kNegate, at, {unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip_space();
    const std::size_t digits = pos_;
    const Rational n = integer();
    if (n > std::numeric_limits<int>::max()) {
      pos_ = digits;
      fail("exponent too large");
    }
    if (paren) expect(')');
    auto e = std::make_shared<Expr>();
    e->kind = Kind::kPow;
    e->position = at;
    e->exponent = (negative ? -1 : 1) * static_cast<long>(n.get_num().get_si());
    e->args = {base};
    return e;
  }

  Rational integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Rational(mpz_class(std::string(text_.substr(start, pos_ - start))));
  }

  ExprPtr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Kind::kNumber;
      e->position = at;
      e->number = integer();
      return e;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expression();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(at, pos_ - at));
      if (name == "x") return make(Kind::kVariable, at);
      const auto& fns = known_functions();
      if (std::find(fns.begin(), fns.end(), name) == fns.end()) {
        pos_ = at;
        fail("unknown name '" + name + "'");
      }
      expect('(');
      ExprPtr arg = expression();
      expect(')');
      auto e = std::make_shared<Expr>();
      e->kind = Kind::kCall;
      e->position = at;
      e->function = name;
      e->args = {arg};
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Kind::kAdd:
    case Kind::kSub:
      return 1;
    case Kind::kMul:
    case Kind::kDiv:
      return 2;
    case Kind::kNegate:
      return 3;
    case Kind::kPow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool paren) { return paren ? "(" + to_string(e) + ")" : to_string(e); }

TruncatedSeries eval_node(const Expr& e, std::size_t order) {
  auto domain = [&](const Error& err) -> PositionedError {
    return PositionedError(ErrorCode::kDomainError, e.position, err.what());
  };
  switch (e.kind) {
    case Kind::kNumber:
      return TruncatedSeries::constant(e.number, order);
    case Kind::kVariable:
      return TruncatedSeries::variable(order);
    case Kind::kNegate:
      return -eval_node(*e.args[0], order);
    case Kind::kAdd:
      return eval_node(*e.args[0], order) + eval_node(*e.args[1], order);
    case Kind::kSub:
      return eval_node(*e.args[0], order) - eval_node(*e.args[1], order);
    case Kind::kMul:
      return eval_node(*e.args[0], order) * eval_node(*e.args[1], order);
    default:
      break;
  }
  if (e.kind == Kind::kDiv) {
    const TruncatedSeries num = eval_node(*e.args[0], order);
    const TruncatedSeries den = eval_node(*e.args[1], order);
    try {
      return num * reciprocal(den);
    } catch (const Error& err) {
      throw domain(err);
    }
  }
  if (e.kind == Kind::kPow) {
    const TruncatedSeries base = eval_node(*e.args[0], order);
    try {
      return power(base, static_cast<int>(e.exponent));
    } catch (const Error& err) {
      throw domain(err);
    }
  }
  const TruncatedSeries a = eval_node(*e.args[0], order);
  try {
    if (e.function == "exp") return exp_series(a);
    if (e.function == "log") return log_series(a);
    if (e.function == "sqrt") return sqrt_series(a);
    if (e.function == "sin") return sin_series(a);
    if (e.function == "cos") return cos_series(a);
    if (e.function == "tan") return tan_series(a);
    if (e.function == "arctan") return arctan_series(a);
    if (e.function == "inv") return comp_inverse(a);
  } catch (const Error& err) {
    throw domain(err);
  }
  throw PositionedError(ErrorCode::kDomainError, e.position, "unknown function '" + e.function + "'");
}

}  // namespace

const std::vector<std::string>& known_functions() {
  static const std::vector<std::string> names = {"exp", "log", "sqrt", "sin", "cos", "tan", "arctan", "inv"};
  return names;
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Kind::kNumber:
      return e.number.get_str();
    case Kind::kVariable:
      return "x";
    case Kind::kNegate:
      return "-" + wrap(*e.args[0], precedence(*e.args[0]) < p);
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul:
    case Kind::kDiv: {
      const char* op = e.kind == Kind::kAdd ? " + " : e.kind == Kind::kSub ? " - " : e.kind == Kind::kMul ? "*" : "/";
      return wrap(*e.args[0], precedence(*e.args[0]) < p) + op + wrap(*e.args[1], precedence(*e.args[1]) <= p);
    }
    case Kind::kPow:
      return wrap(*e.args[0], precedence(*e.args[0]) < 5) + "^" + std::to_string(e.exponent);
    case Kind::kCall:
      return e.function + "(" + to_string(*e.args[0]) + ")";
  }
  return {};
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.kind == Kind::kNumber && a.number != b.number) return false;
  if (a.kind == Kind::kPow && a.exponent != b.exponent) return false;
  if (a.kind == Kind::kCall && a.function != b.function) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

TruncatedSeries evaluate(const Expr& e, std::size_t order) { return eval_node(e, order); }

TruncatedSeries parse_series(std::string_view text, std::size_t order) { return evaluate(*parse_expr(text), order); }

}  // namespace sheffer
