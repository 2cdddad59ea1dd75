#include "fplab/scalar_func.hpp"

#include <cmath>
#include <stdexcept>

namespace fplab {

namespace {

const std::vector<std::string> kVarT = {"t"};

} // namespace

ScalarFunc::ScalarFunc(std::string name, std::vector<PieceSpec> specs)
    : name_(std::move(name)) {
    if (specs.empty())
        throw std::invalid_argument("ScalarFunc '" + name_ + "': no pieces");
    if (specs.front().from != 0.0)
        throw std::invalid_argument("ScalarFunc '" + name_ + "': first piece must start at 0");

    bool prev_singleton = false;
    double cursor = 0.0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const PieceSpec& s = specs[i];
        Piece p;
        p.lo = s.from;
        p.hi = s.to.value_or(kInf);
        p.lo_closed = !prev_singleton;
        p.text = s.expr;
        if (p.lo != cursor)
            throw std::invalid_argument("ScalarFunc '" + name_ + "': gap or overlap at " +
                                        std::to_string(p.lo));
        if (p.hi < p.lo)
            throw std::invalid_argument("ScalarFunc '" + name_ + "': piece with hi < lo");
        if (p.singleton() && prev_singleton)
            throw std::invalid_argument("ScalarFunc '" + name_ + "': consecutive singleton pieces");
        if (i + 1 == specs.size()) {
            if (p.hi != kInf)
                throw std::invalid_argument("ScalarFunc '" + name_ +
                                            "': last piece must be unbounded");
        } else if (p.hi == kInf) {
            throw std::invalid_argument("ScalarFunc '" + name_ +
                                        "': unbounded piece before the last");
        }
        p.expr = parse_expr(s.expr, kVarT);
        Interval box{p.lo, p.hi};
        eval_interval(*p.expr, std::span<const Interval>(&box, 1)); // division guard
        prev_singleton = p.singleton();
        cursor = p.hi;
        pieces_.push_back(std::move(p));
    }
}

ScalarFunc ScalarFunc::single(std::string name, const std::string& expr) {
    return ScalarFunc(std::move(name), {PieceSpec{0.0, std::nullopt, expr}});
}

double ScalarFunc::operator()(double t) const {
    if (t < 0.0 || std::isnan(t))
        throw std::domain_error("ScalarFunc '" + name_ + "' evaluated at t=" + std::to_string(t));
    for (const Piece& p : pieces_) {
        if (p.contains(t)) {
            double arg[1] = {t};
            return eval(*p.expr, arg);
        }
    }
    throw std::logic_error("ScalarFunc '" + name_ + "': no piece contains t=" + std::to_string(t));
}

std::vector<double> ScalarFunc::boundaries() const {
    std::vector<double> bs;
    for (const Piece& p : pieces_) {
        if (p.lo > 0.0 && (bs.empty() || bs.back() != p.lo)) bs.push_back(p.lo);
    }
    return bs;
}

std::vector<PieceSpec> ScalarFunc::specs() const {
    std::vector<PieceSpec> out;
    for (const Piece& p : pieces_) {
        PieceSpec s;
        s.from = p.lo;
        if (p.hi != kInf) s.to = p.hi;
        s.expr = p.text;
        out.push_back(std::move(s));
    }
    return out;
}

PhiSequence::PhiSequence(std::vector<ScalarFunc> explicit_prefix, TailKind kind,
                         ScalarFunc tail, ScalarFunc limit)
    : prefix_(std::move(explicit_prefix)), kind_(kind), tail_(std::move(tail)),
      limit_(std::move(limit)) {
    if (kind_ == TailKind::Iterate) {
        // Iterate families require a nondecreasing base; checked on a grid.
        const int n = 512;
        const double hi = 4.0;
        double prev = tail_(0.0);
        for (int i = 1; i <= n; ++i) {
            double t = hi * static_cast<double>(i) / n;
            double v = tail_(t);
            if (v < prev - 1e-12)
                throw std::invalid_argument("PhiSequence: iterate-family base '" + tail_.name() +
                                            "' is not nondecreasing near t=" + std::to_string(t));
            prev = v;
        }
    }
}

double PhiSequence::at(int n, double t) const {
    if (n < 1) throw std::invalid_argument("PhiSequence::at: n must be >= 1");
    if (n <= static_cast<int>(prefix_.size()))
        return prefix_[static_cast<std::size_t>(n - 1)](t);
    if (kind_ == TailKind::Constant) return tail_(t);
    double v = t;
    for (int i = 0; i < n; ++i) v = tail_(v);
    return v;
}

} // namespace fplab
