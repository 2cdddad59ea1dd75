#include "fplab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace fplab {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };
    Kind kind = Kind::End;
    double number = 0.0;
    std::string ident;
    int col = 0; // 1-based
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, int col) const {
        throw ExprError(msg, 1, col);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': tok_.kind = Token::Kind::Plus; ++pos_; return;
            case '-': tok_.kind = Token::Kind::Minus; ++pos_; return;
            case '*': tok_.kind = Token::Kind::Star; ++pos_; return;
            case '/': tok_.kind = Token::Kind::Slash; ++pos_; return;
            case '(': tok_.kind = Token::Kind::LParen; ++pos_; return;
            case ')': tok_.kind = Token::Kind::RParen; ++pos_; return;
            case ',': tok_.kind = Token::Kind::Comma; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            double value = 0.0;
            auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
            if (res.ec != std::errc{} || res.ptr != text_.data() + pos_)
                fail("malformed number", static_cast<int>(start) + 1);
            tok_.kind = Token::Kind::Number;
            tok_.number = value;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Kind::Ident;
            tok_.ident = std::string(text_.substr(start, pos_ - start));
            return;
        }
        fail(std::string("unexpected character '") + c + "'", tok_.col);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;
};

ExprPtr make_num(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Number;
    e->number = v;
    return e;
}

ExprPtr make_bin(Expr::Kind k, ExprPtr a, ExprPtr b) {
    // Fold constant arithmetic so rational literals like 1/16 become numbers.
    if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number) {
        double x = a->number, y = b->number;
        switch (k) {
            case Expr::Kind::Add: return make_num(x + y);
            case Expr::Kind::Sub: return make_num(x - y);
            case Expr::Kind::Mul: return make_num(x * y);
            case Expr::Kind::Div:
                if (y != 0.0) return make_num(x / y);
                break;
            case Expr::Kind::Min: return make_num(std::min(x, y));
            case Expr::Kind::Max: return make_num(std::max(x, y));
            default: break;
        }
    }
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> vars)
        : lex_(text), vars_(vars) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            lex_.fail("trailing input after expression", lex_.peek().col);
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.next();
                e = make_bin(Expr::Kind::Add, e, term());
            } else if (k == Token::Kind::Minus) {
                lex_.next();
                e = make_bin(Expr::Kind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.next();
                e = make_bin(Expr::Kind::Mul, e, factor());
            } else if (k == Token::Kind::Slash) {
                lex_.next();
                e = make_bin(Expr::Kind::Div, e, factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::Kind::Number:
                return make_num(t.number);
            case Token::Kind::LParen: {
                ExprPtr e = expr();
                expect(Token::Kind::RParen, "expected ')'");
                return e;
            }
            case Token::Kind::Ident: {
                if (t.ident == "min" || t.ident == "max") {
                    expect(Token::Kind::LParen, "expected '(' after min/max");
                    ExprPtr a = expr();
                    expect(Token::Kind::Comma, "expected ',' in min/max");
                    ExprPtr b = expr();
                    expect(Token::Kind::RParen, "expected ')' in min/max");
                    return make_bin(t.ident == "min" ? Expr::Kind::Min : Expr::Kind::Max,
                                    std::move(a), std::move(b));
                }
                for (std::size_t i = 0; i < vars_.size(); ++i) {
                    if (vars_[i] == t.ident) {
                        auto e = std::make_shared<Expr>();
                        e->kind = Expr::Kind::Var;
                        e->var = static_cast<int>(i);
                        return e;
                    }
                }
                lex_.fail("unknown identifier '" + t.ident + "'", t.col);
            }
            default:
                lex_.fail("expected number, variable or '('", t.col);
        }
    }

    void expect(Token::Kind k, const char* msg) {
        Token t = lex_.next();
        if (t.kind != k) lex_.fail(msg, t.col);
    }

    Lexer lex_;
    std::span<const std::string> vars_;
};

// Product with the convention 0 * inf = 0, which is the right limit for
// interval bounds of the form [0, inf) * [c, d].
double mulp(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
}

} // namespace

ExprPtr parse_expr(std::string_view text, std::span<const std::string> vars) {
    return Parser(text, vars).parse();
}

double eval(const Expr& e, std::span<const double> args) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.number;
        case Expr::Kind::Var: return args[static_cast<std::size_t>(e.var)];
        case Expr::Kind::Add: return eval(*e.a, args) + eval(*e.b, args);
        case Expr::Kind::Sub: return eval(*e.a, args) - eval(*e.b, args);
        case Expr::Kind::Mul: return eval(*e.a, args) * eval(*e.b, args);
        case Expr::Kind::Div: return eval(*e.a, args) / eval(*e.b, args);
        case Expr::Kind::Min: return std::min(eval(*e.a, args), eval(*e.b, args));
        case Expr::Kind::Max: return std::max(eval(*e.a, args), eval(*e.b, args));
    }
    return 0.0;
}

Interval eval_interval(const Expr& e, std::span<const Interval> args, double guard) {
    switch (e.kind) {
        case Expr::Kind::Number: return {e.number, e.number};
        case Expr::Kind::Var: return args[static_cast<std::size_t>(e.var)];
        case Expr::Kind::Add: {
            Interval x = eval_interval(*e.a, args, guard), y = eval_interval(*e.b, args, guard);
            return {x.lo + y.lo, x.hi + y.hi};
        }
        case Expr::Kind::Sub: {
            Interval x = eval_interval(*e.a, args, guard), y = eval_interval(*e.b, args, guard);
            return {x.lo - y.hi, x.hi - y.lo};
        }
        case Expr::Kind::Mul: {
            Interval x = eval_interval(*e.a, args, guard), y = eval_interval(*e.b, args, guard);
            double c[4] = {mulp(x.lo, y.lo), mulp(x.lo, y.hi), mulp(x.hi, y.lo), mulp(x.hi, y.hi)};
            return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
        }
        case Expr::Kind::Div: {
            Interval x = eval_interval(*e.a, args, guard);
            Interval y = eval_interval(*e.b, args, guard);
            if (y.lo <= guard && y.hi >= -guard)
                throw ExprError("divisor may vanish on the piece's interval", 1, 1);
            double c[4] = {x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi};
            return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
        }
        case Expr::Kind::Min: {
            Interval x = eval_interval(*e.a, args, guard), y = eval_interval(*e.b, args, guard);
            return {std::min(x.lo, y.lo), std::min(x.hi, y.hi)};
        }
        case Expr::Kind::Max: {
            Interval x = eval_interval(*e.a, args, guard), y = eval_interval(*e.b, args, guard);
            return {std::max(x.lo, y.lo), std::max(x.hi, y.hi)};
        }
    }
    return {0.0, 0.0};
}

namespace {

void print(const Expr& e, std::span<const std::string> vars, std::ostringstream& out, int parent_prec) {
    auto binary = [&](const char* op, int prec) {
        if (parent_prec > prec) out << '(';
        print(*e.a, vars, out, prec);
        out << op;
        print(*e.b, vars, out, prec + 1);
        if (parent_prec > prec) out << ')';
    };
    switch (e.kind) {
        case Expr::Kind::Number: {
            std::ostringstream num;
            num.precision(17);
            num << e.number;
            out << num.str();
            return;
        }
        case Expr::Kind::Var: out << vars[static_cast<std::size_t>(e.var)]; return;
        case Expr::Kind::Add: binary("+", 1); return;
        case Expr::Kind::Sub: binary("-", 1); return;
        case Expr::Kind::Mul: binary("*", 2); return;
        case Expr::Kind::Div: binary("/", 2); return;
        case Expr::Kind::Min:
        case Expr::Kind::Max:
            out << (e.kind == Expr::Kind::Min ? "min(" : "max(");
            print(*e.a, vars, out, 0);
            out << ",";
            print(*e.b, vars, out, 0);
            out << ")";
            return;
    }
}

} // namespace

std::string to_string(const Expr& e, std::span<const std::string> vars) {
    std::ostringstream out;
    print(e, vars, out, 0);
    return out.str();
}

} // namespace fplab
