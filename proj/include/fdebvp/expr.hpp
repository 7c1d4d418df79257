#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fdebvp/errors.hpp"

namespace fdebvp {

/** Which of the variables t, u, v an expression is allowed to reference.
    Right-hand sides f get all three; delay maps and exact solutions get t
    only; boundary values and interval lengths get none (constants only). */
struct VarSet {
  bool t = false;
  bool u = false;
  bool v = false;

  static constexpr VarSet none() { return {false, false, false}; }
  static constexpr VarSet time_only() { return {true, false, false}; }
  static constexpr VarSet all() { return {true, true, true}; }
};

/**
 * Immutable arithmetic expression over (t, u, v).
 *
 * Grammar (recursive descent):
 *   sum     := product { ('+'|'-') product }
 *   product := unary { ('*'|'/') unary }
 *   unary   := '-' unary | power
 *   power   := atom [ '^' unary ]          // right-associative
 *   atom    := number | constant | variable | func '(' sum ')' | '(' sum ')'
 *
 * '^' binds tighter than unary minus: -t^2 is -(t^2), and 2^3^2 = 2^(3^2).
 * Functions: sin, cos, exp, log, sqrt, abs. Constants pi and e are folded to
 * their numeric values at parse time. No implicit multiplication.
 *
 * Evaluation never propagates NaN or infinity: any operation whose result
 * leaves the finite reals raises EvalError.
 */
class Expr {
public:
  /** Constant zero. */
  Expr();

  /** Parse `text`, permitting only the variables in `allowed`.
      Throws ParseError with the offending byte position. */
  static Expr parse(std::string_view text, VarSet allowed);

  /** Evaluate. Unused variables may be left at their defaults. */
  double operator()(double t = 0.0, double u = 0.0, double v = 0.0) const;

  /** Canonical reparseable rendering with minimal parentheses.
      parse(canonical()).canonical() == canonical(). */
  std::string canonical() const;

  /** The original source text handed to parse() (or "0" for Expr{}). */
  const std::string& text() const noexcept { return text_; }

  /** True if the parsed tree references the given variable ('t','u','v'). */
  bool uses(char var) const noexcept;

private:
  enum class Kind : std::uint8_t { constant, variable, negate, binary, call };
  enum class Op : std::uint8_t { add, sub, mul, div, pow };
  enum class Fn : std::uint8_t { sin, cos, exp, log, sqrt, abs };

  struct Node {
    Kind kind{Kind::constant};
    double value = 0.0;  // Kind::constant
    char var = 't';      // Kind::variable
    Op op = Op::add;     // Kind::binary
    Fn fn = Fn::sin;     // Kind::call
    int a = -1;          // left child / sole child
    int b = -1;          // right child
  };

  class Parser;

  double eval_node(int idx, double t, double u, double v) const;
  void print_node(int idx, int min_prec, std::string& out) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::string text_;
};

}  // namespace fdebvp
