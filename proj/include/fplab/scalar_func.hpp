#pragma once

#include "fplab/expr.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fplab {

// One piece of a piecewise definition. Coverage is
//   [lo, hi)  when lo_closed and lo < hi,
//   (lo, hi)  when !lo_closed,
//   {lo}      when lo == hi (singleton).
// A singleton piece is followed by a piece open on the left at the same
// abscissa, so the pieces still partition the axis exactly.
struct Piece {
    double lo = 0.0;
    double hi = 0.0; // +inf for the last piece of a ScalarFunc
    bool lo_closed = true;
    ExprPtr expr;
    std::string text;

    bool singleton() const { return lo == hi; }
    bool contains(double t) const {
        if (singleton()) return t == lo;
        return (lo_closed ? t >= lo : t > lo) && t < hi;
    }
};

struct PieceSpec {
    double from = 0.0;
    std::optional<double> to; // nullopt = unbounded above
    std::string expr;
};

// Piecewise function on the nonnegative reals. Pieces partition [0, inf)
// exactly; division is guarded at construction by interval evaluation of
// each piece's expression over its interval.
class ScalarFunc {
public:
    ScalarFunc(std::string name, std::vector<PieceSpec> pieces);

    // Single piece on [0, inf).
    static ScalarFunc single(std::string name, const std::string& expr);

    double operator()(double t) const; // throws std::domain_error for t < 0

    const std::string& name() const { return name_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // Interior piece boundaries (excludes 0).
    std::vector<double> boundaries() const;

    std::vector<PieceSpec> specs() const;

private:
    std::string name_;
    std::vector<Piece> pieces_;
};

// The comparison-function sequence of an asymptotic contraction: explicit
// functions for the first indices, then either a constant tail or the
// iterate family built from a nondecreasing base (n-fold composition).
class PhiSequence {
public:
    enum class TailKind { Constant, Iterate };

    PhiSequence(std::vector<ScalarFunc> explicit_prefix, TailKind kind,
                ScalarFunc tail, ScalarFunc limit);

    // Value of the n-th member (n >= 1) at t.
    double at(int n, double t) const;

    double limit_at(double t) const { return limit_(t); }
    const ScalarFunc& limit() const { return limit_; }
    const std::vector<ScalarFunc>& explicit_prefix() const { return prefix_; }
    TailKind tail_kind() const { return kind_; }
    const ScalarFunc& tail() const { return tail_; }

private:
    std::vector<ScalarFunc> prefix_;
    TailKind kind_;
    ScalarFunc tail_;
    ScalarFunc limit_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace fplab
