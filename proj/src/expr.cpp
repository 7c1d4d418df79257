#include "fdebvp/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace fdebvp {

namespace {

// Evaluation and printing recurse over the tree; the parser caps nesting so
// neither can overflow the stack on adversarial input.
constexpr int kMaxDepth = 128;

[[noreturn]] void domain_error(const char* what) { throw EvalError(what); }

double checked(double r, const char* what) {
  if (!std::isfinite(r)) throw EvalError(std::string("overflow in ") + what);
  return r;
}

}  // namespace

class Expr::Parser {
public:
  Parser(std::string_view text, VarSet allowed, std::vector<Node>& nodes)
      : text_(text), allowed_(allowed), nodes_(nodes) {}

  int run() {
    int root = parse_sum(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  int add_node(Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void check_depth(int depth, std::size_t at) {
    if (depth > kMaxDepth) fail("expression nested too deeply", at);
  }

  int parse_sum(int depth) {
    check_depth(depth, pos_);
    int left = parse_product(depth + 1);
    for (;;) {
      if (eat('+')) {
        int right = parse_product(depth + 1);
        left = add_node({.kind = Kind::binary, .op = Op::add, .a = left, .b = right});
      } else if (eat('-')) {
        int right = parse_product(depth + 1);
        left = add_node({.kind = Kind::binary, .op = Op::sub, .a = left, .b = right});
      } else {
        return left;
      }
    }
  }

  int parse_product(int depth) {
    check_depth(depth, pos_);
    int left = parse_unary(depth + 1);
    for (;;) {
      if (eat('*')) {
        int right = parse_unary(depth + 1);
        left = add_node({.kind = Kind::binary, .op = Op::mul, .a = left, .b = right});
      } else if (eat('/')) {
        int right = parse_unary(depth + 1);
        left = add_node({.kind = Kind::binary, .op = Op::div, .a = left, .b = right});
      } else {
        return left;
      }
    }
  }

  int parse_unary(int depth) {
    check_depth(depth, pos_);
    if (eat('-')) {
      int child = parse_unary(depth + 1);
      return add_node({.kind = Kind::negate, .a = child});
    }
    return parse_power(depth + 1);
  }

  int parse_power(int depth) {
    check_depth(depth, pos_);
    int base = parse_atom(depth + 1);
    if (eat('^')) {
      // Right-associative; the exponent may carry a unary minus (2^-3).
      int exponent = parse_unary(depth + 1);
      return add_node({.kind = Kind::binary, .op = Op::pow, .a = base, .b = exponent});
    }
    return base;
  }

  int parse_atom(int depth) {
    check_depth(depth, pos_);
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident(depth);
    if (c == '(') {
      ++pos_;
      int inner = parse_sum(depth + 1);
      if (!eat(')')) fail("expected ')'", pos_);
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.'))
      fail("malformed number", start);
    // Exponent part only if digits actually follow; otherwise the 'e' is a
    // separate identifier (and the lack of implicit multiplication will
    // produce a clear error).
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;
      }
    }
    double value = 0.0;
    std::string token(text_.substr(start, pos_ - start));
    if (std::sscanf(token.c_str(), "%lf", &value) != 1) fail("malformed number", start);
    return add_node({.kind = Kind::constant, .value = value});
  }

  int parse_ident(int depth) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));

    if (name == "pi") return add_node({.kind = Kind::constant, .value = std::numbers::pi});
    if (name == "e") return add_node({.kind = Kind::constant, .value = std::numbers::e});

    if (name == "t" || name == "u" || name == "v") {
      bool ok = (name == "t" && allowed_.t) || (name == "u" && allowed_.u) ||
                (name == "v" && allowed_.v);
      if (!ok) fail("variable '" + name + "' is not allowed in this expression", start);
      return add_node({.kind = Kind::variable, .var = name[0]});
    }

    Fn fn;
    if (name == "sin") fn = Fn::sin;
    else if (name == "cos") fn = Fn::cos;
    else if (name == "exp") fn = Fn::exp;
    else if (name == "log") fn = Fn::log;
    else if (name == "sqrt") fn = Fn::sqrt;
    else if (name == "abs") fn = Fn::abs;
    else fail("unknown identifier '" + name + "'", start);

    if (!eat('(')) fail("function '" + name + "' requires parentheses", pos_);
    int arg = parse_sum(depth + 1);
    if (!eat(')')) fail("expected ')'", pos_);
    return add_node({.kind = Kind::call, .fn = fn, .a = arg});
  }

  std::string_view text_;
  VarSet allowed_;
  std::vector<Node>& nodes_;
  std::size_t pos_ = 0;
};

Expr::Expr() {
  nodes_.push_back({.kind = Kind::constant, .value = 0.0});
  root_ = 0;
  text_ = "0";
}

Expr Expr::parse(std::string_view text, VarSet allowed) {
  Expr e;
  e.nodes_.clear();
  Parser parser(text, allowed, e.nodes_);
  e.root_ = parser.run();
  e.text_.assign(text);
  return e;
}

double Expr::eval_node(int idx, double t, double u, double v) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  switch (n.kind) {
    case Kind::constant:
      return n.value;
    case Kind::variable:
      return n.var == 't' ? t : (n.var == 'u' ? u : v);
    case Kind::negate:
      return -eval_node(n.a, t, u, v);
    case Kind::binary: {
      double x = eval_node(n.a, t, u, v);
      double y = eval_node(n.b, t, u, v);
      switch (n.op) {
        case Op::add: return checked(x + y, "addition");
        case Op::sub: return checked(x - y, "subtraction");
        case Op::mul: return checked(x * y, "multiplication");
        case Op::div:
          if (y == 0.0) domain_error("division by zero");
          return checked(x / y, "division");
        case Op::pow: {
          if (x == 0.0 && y < 0.0) domain_error("zero raised to a negative power");
          if (x < 0.0 && y != std::floor(y))
            domain_error("negative base raised to a non-integer power");
          return checked(std::pow(x, y), "power");
        }
      }
      break;
    }
    case Kind::call: {
      double x = eval_node(n.a, t, u, v);
      switch (n.fn) {
        case Fn::sin: return std::sin(x);
        case Fn::cos: return std::cos(x);
        case Fn::exp: return checked(std::exp(x), "exp");
        case Fn::log:
          if (x <= 0.0) domain_error("log of a non-positive value");
          return std::log(x);
        case Fn::sqrt:
          if (x < 0.0) domain_error("sqrt of a negative value");
          return std::sqrt(x);
        case Fn::abs: return std::fabs(x);
      }
      break;
    }
  }
  domain_error("corrupt expression node");
}

double Expr::operator()(double t, double u, double v) const {
  return eval_node(root_, t, u, v);
}

bool Expr::uses(char var) const noexcept {
  for (const Node& n : nodes_)
    if (n.kind == Kind::variable && n.var == var) return true;
  return false;
}

namespace {
// Precedence levels for printing: sum 1, product 2, negate 3, power 4, atom 5.
const char* fn_name(int fn) {
  static const char* names[] = {"sin", "cos", "exp", "log", "sqrt", "abs"};
  return names[fn];
}
}  // namespace

void Expr::print_node(int idx, int min_prec, std::string& out) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  auto wrap = [&](int prec, auto&& body) {
    bool paren = prec < min_prec;
    if (paren) out += '(';
    body();
    if (paren) out += ')';
  };
  switch (n.kind) {
    case Kind::constant: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      // A leading minus from %.17g would reparse as negate(constant); that is
      // semantically identical but wrap anyway so precedence stays explicit.
      if (buf[0] == '-') {
        wrap(3, [&] { out += buf; });
      } else {
        out += buf;
      }
      break;
    }
    case Kind::variable:
      out += n.var;
      break;
    case Kind::negate:
      wrap(3, [&] {
        out += '-';
        print_node(n.a, 3, out);
      });
      break;
    case Kind::binary: {
      int prec = (n.op == Op::add || n.op == Op::sub) ? 1
                 : (n.op == Op::mul || n.op == Op::div) ? 2
                                                        : 4;
      const char* sym = n.op == Op::add ? "+"
                        : n.op == Op::sub ? "-"
                        : n.op == Op::mul ? "*"
                        : n.op == Op::div ? "/"
                                          : "^";
      wrap(prec, [&] {
        if (n.op == Op::pow) {
          // base must be an atom; exponent admits unary minus.
          print_node(n.a, 5, out);
          out += sym;
          print_node(n.b, 3, out);
        } else {
          print_node(n.a, prec, out);
          out += sym;
          print_node(n.b, prec + 1, out);
        }
      });
      break;
    }
    case Kind::call:
      out += fn_name(static_cast<int>(n.fn));
      out += '(';
      print_node(n.a, 0, out);
      out += ')';
      break;
  }
}

std::string Expr::canonical() const {
  std::string out;
  print_node(root_, 0, out);
  return out;
}

}  // namespace fdebvp
