#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fplab {

// Arithmetic expression AST over named variables with +, -, *, /, min, max.
// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := number | var | '(' expr ')' | ('min'|'max') '(' expr ',' expr ')'
// Numbers are decimal literals; rationals like 1/16 parse as a division of
// two constants and are folded to the same value.
struct Expr {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Min, Max };
    Kind kind = Kind::Number;
    double number = 0.0;
    int var = -1;
    std::shared_ptr<const Expr> a, b;
};

using ExprPtr = std::shared_ptr<const Expr>;

class ExprError : public std::runtime_error {
public:
    ExprError(const std::string& msg, int line, int col)
        : std::runtime_error(msg), line(line), col(col) {}
    int line;
    int col;
};

ExprPtr parse_expr(std::string_view text, std::span<const std::string> vars);

double eval(const Expr& e, std::span<const double> args);

// Closed interval, possibly unbounded above.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Interval evaluation used to guard divisions at construction time: throws
// ExprError if some divisor's interval comes within `guard` of zero.
Interval eval_interval(const Expr& e, std::span<const Interval> args,
                       double guard = 1e-12);

std::string to_string(const Expr& e, std::span<const std::string> vars);

} // namespace fplab
