#include "fplab/distance.hpp"

#include "fplab/expr.hpp"

#include <cmath>
#include <sstream>

namespace fplab {

DistanceStructure DistanceStructure::euclidean() {
    DistanceStructure p;
    p.name = "euclidean";
    p.eval = [](double x, double y) { return std::fabs(x - y); };
    p.base_metric = p.eval;
    p.declared_symmetric = true;
    p.declared_reflexive = true;
    return p;
}

DistanceStructure DistanceStructure::range_projection() {
    DistanceStructure p;
    p.name = "range-projection";
    p.eval = [](double, double y) { return y; };
    p.base_metric = [](double x, double y) { return std::fabs(x - y); };
    p.declared_symmetric = false;
    p.declared_reflexive = false;
    return p;
}

DistanceStructure DistanceStructure::max_pair() {
    DistanceStructure p;
    p.name = "max-pair";
    p.eval = [](double x, double y) { return std::max(x, y); };
    p.base_metric = [](double x, double y) { return std::fabs(x - y); };
    p.declared_symmetric = true;
    p.declared_reflexive = false;
    return p;
}

DistanceStructure DistanceStructure::from_expr(std::string name, const std::string& expr_xy,
                                               const Domain& dom) {
    static const std::vector<std::string> vars = {"x", "y"};
    ExprPtr e = parse_expr(expr_xy, vars);
    Interval box[2] = {{dom.lo, dom.hi}, {dom.lo, dom.hi}};
    eval_interval(*e, box); // division guard over the domain box

    DistanceStructure p;
    p.name = std::move(name);
    p.eval = [e](double x, double y) {
        double args[2] = {x, y};
        return fplab::eval(*e, args);
    };
    p.base_metric = [](double x, double y) { return std::fabs(x - y); };
    return p;
}

Report validate_distance(const DistanceStructure& p, const Domain& dom, double tol) {
    Report r;
    r.check = "distance_invariants";
    r.tolerance = tol;

    const std::vector<double> pts = dom.points();
    const std::size_t n = pts.size();

    double max_asym = 0.0, max_self = 0.0;
    double asym_x = 0.0, asym_y = 0.0, self_x = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double x = pts[i], y = pts[j];
            double v = p.eval(x, y);
            ++r.samples_checked;
            if (!(v >= 0.0) || !std::isfinite(v))
                r.witnesses.push_back({{x, y}, v, 0.0});
            double w = p.eval(y, x);
            double asym = std::fabs(v - w);
            if (asym > max_asym) {
                max_asym = asym;
                asym_x = x;
                asym_y = y;
            }
            if (p.declared_symmetric && asym > tol)
                r.witnesses.push_back({{x, y}, v, w});
            // Base metric axioms on the same pair.
            double d = p.base_metric(x, y);
            if (!(d >= 0.0) || std::fabs(d - p.base_metric(y, x)) > tol)
                r.witnesses.push_back({{x, y}, d, p.base_metric(y, x)});
            if (x == y && d > tol) r.witnesses.push_back({{x, y}, d, 0.0});
        }
        double self = p.eval(pts[i], pts[i]);
        if (self > max_self) {
            max_self = self;
            self_x = pts[i];
        }
        if (p.declared_reflexive && self > tol)
            r.witnesses.push_back({{pts[i], pts[i]}, self, 0.0});
    }

    // Base-metric triangle inequality over sampled triples.
    std::vector<double> dmat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dmat[i * n + j] = p.base_metric(pts[i], pts[j]);
    for (std::size_t i = 0; i < n && r.witnesses.size() < 64; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                double lhs = dmat[i * n + j];
                double rhs = dmat[i * n + k] + dmat[k * n + j];
                if (lhs > rhs + tol) r.witnesses.push_back({{pts[i], pts[j], pts[k]}, lhs, rhs});
            }

    std::ostringstream detail;
    if (!p.declared_symmetric)
        detail << "not declared symmetric; max |p(x,y)-p(y,x)| = " << max_asym << " at ("
               << asym_x << "," << asym_y << ")";
    if (!p.declared_reflexive) {
        if (detail.tellp() > 0) detail << "; ";
        detail << "not declared reflexive; max p(x,x) = " << max_self << " at x=" << self_x;
    }
    r.detail = detail.str();
    r.series = {max_asym, max_self};

    keep_worst(r.witnesses, 10);
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

} // namespace fplab
