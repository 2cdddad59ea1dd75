#include "fplab/selfmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fplab {

namespace {

const std::vector<std::string> kVarX = {"x"};

} // namespace

SelfMap::SelfMap(std::string name, std::vector<PieceSpec> specs, double lo, double hi)
    : name_(std::move(name)), lo_(lo), hi_(hi) {
    if (specs.empty()) throw std::invalid_argument("SelfMap '" + name_ + "': no pieces");
    if (!(lo < hi)) throw std::invalid_argument("SelfMap '" + name_ + "': requires lo < hi");
    if (specs.front().from != lo)
        throw std::invalid_argument("SelfMap '" + name_ + "': first piece must start at lo");

    bool prev_singleton = false;
    double cursor = lo;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const PieceSpec& s = specs[i];
        Piece p;
        p.lo = s.from;
        p.hi = s.to.value_or(hi);
        p.lo_closed = !prev_singleton;
        p.text = s.expr;
        if (p.lo != cursor)
            throw std::invalid_argument("SelfMap '" + name_ + "': gap or overlap at " +
                                        std::to_string(p.lo));
        if (p.hi < p.lo || p.hi > hi)
            throw std::invalid_argument("SelfMap '" + name_ + "': piece outside the domain");
        if (p.singleton() && prev_singleton)
            throw std::invalid_argument("SelfMap '" + name_ + "': consecutive singleton pieces");
        if (i + 1 == specs.size() && p.hi != hi)
            throw std::invalid_argument("SelfMap '" + name_ + "': pieces do not reach hi");
        p.expr = parse_expr(s.expr, kVarX);
        Interval box{p.lo, p.hi};
        eval_interval(*p.expr, std::span<const Interval>(&box, 1)); // division guard
        prev_singleton = p.singleton();
        cursor = p.hi;
        pieces_.push_back(std::move(p));
    }
}

SelfMap SelfMap::single(std::string name, const std::string& expr, double lo, double hi) {
    return SelfMap(std::move(name), {PieceSpec{lo, std::nullopt, expr}}, lo, hi);
}

double SelfMap::operator()(double x) const {
    if (x < lo_ - 1e-12 || x > hi_ + 1e-12 || std::isnan(x))
        throw std::domain_error("SelfMap '" + name_ + "' evaluated outside the domain at x=" +
                                std::to_string(x));
    x = std::clamp(x, lo_, hi_);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        // The last piece is closed on the right.
        bool in = p.contains(x) || (i + 1 == pieces_.size() && x == p.hi && !p.singleton());
        if (in) {
            double arg[1] = {x};
            return eval(*p.expr, arg);
        }
    }
    throw std::logic_error("SelfMap '" + name_ + "': no piece contains x=" + std::to_string(x));
}

std::vector<double> SelfMap::boundary_points() const {
    std::vector<double> bs;
    for (const Piece& p : pieces_) {
        if (bs.empty() || bs.back() != p.lo) bs.push_back(p.lo);
    }
    if (bs.empty() || bs.back() != hi_) bs.push_back(hi_);
    return bs;
}

std::vector<PieceSpec> SelfMap::specs() const {
    std::vector<PieceSpec> out;
    for (const Piece& p : pieces_) {
        PieceSpec s;
        s.from = p.lo;
        s.to = p.hi;
        s.expr = p.text;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<double> sample_with_boundaries(const Domain& dom, const SelfMap& map) {
    std::vector<double> pts = dom.points();
    for (double b : map.boundary_points())
        if (dom.contains(b)) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace fplab
