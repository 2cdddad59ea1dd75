#include "fplab/axioms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fplab {

namespace {

std::vector<double> pairwise(const DistanceStructure& p, const std::vector<double>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = p.eval(pts[i], pts[j]);
    return m;
}

} // namespace

AxiomReport check_triangle(const DistanceStructure& p, const Domain& dom, double tol) {
    const std::vector<double> pts = dom.points();
    const std::size_t n = pts.size();
    if (n < 3) throw std::invalid_argument("check_triangle: needs at least 3 sample points");

    AxiomReport r;
    r.check = "triangle";
    r.tolerance = tol;

    const std::vector<double> pm = pairwise(p, pts);
    std::vector<Witness> ws;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                double lhs = pm[i * n + j];
                double rhs = pm[i * n + k] + pm[k * n + j];
                ++r.samples_checked;
                if (lhs > rhs + tol) ws.push_back({{pts[i], pts[j], pts[k]}, lhs, rhs});
            }
    keep_worst(ws, 10);
    r.witnesses = std::move(ws);
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

AxiomReport check_uniformity_compat(const DistanceStructure& p, const Domain& dom,
                                    const std::vector<double>& eps_grid, double tol) {
    if (eps_grid.empty())
        throw std::invalid_argument("check_uniformity_compat: empty eps grid");
    for (double e : eps_grid)
        if (!(e > 0.0)) throw std::invalid_argument("check_uniformity_compat: eps must be > 0");

    const std::vector<double> pts = dom.points();
    const std::size_t n = pts.size();
    const std::vector<double> pm = pairwise(p, pts);

    AxiomReport r;
    r.check = "uniformity_compat";
    r.tolerance = tol;

    bool inconclusive = false;
    for (double eps : eps_grid) {
        bool found = false;
        bool premise_ever = false;
        Witness last_violation;
        for (int j = 0; j <= 20 && !found; ++j) {
            double delta = eps * std::ldexp(1.0, -j);
            bool premise_here = false;
            bool violated = false;
            for (std::size_t zi = 0; zi < n && !violated; ++zi)
                for (std::size_t xi = 0; xi < n && !violated; ++xi) {
                    if (pm[zi * n + xi] > delta + tol) continue;
                    for (std::size_t yi = 0; yi < n; ++yi) {
                        if (pm[zi * n + yi] > delta + tol) continue;
                        premise_here = true;
                        double d = p.base_metric(pts[xi], pts[yi]);
                        if (d >= eps) {
                            violated = true;
                            last_violation = {{pts[zi], pts[xi], pts[yi]}, d, eps};
                            break;
                        }
                    }
                }
            r.samples_checked += static_cast<long long>(n) * static_cast<long long>(n);
            premise_ever = premise_ever || premise_here;
            if (premise_here && !violated) {
                found = true;
                r.eps_delta.emplace_back(eps, delta);
            }
        }
        if (!found) {
            if (!premise_ever) {
                inconclusive = true;
            } else {
                r.witnesses.push_back(last_violation);
            }
        }
    }
    sort_witnesses(r.witnesses);
    if (!r.witnesses.empty())
        r.verdict = Verdict::Fail;
    else if (inconclusive)
        r.verdict = Verdict::Inconclusive;
    else
        r.verdict = Verdict::Pass;
    return r;
}

BoundednessResult check_p_bounded(const DistanceStructure& p, const Domain& dom) {
    const std::vector<double> pts = dom.points();
    BoundednessResult out;
    out.report.check = "p_bounded";
    for (double x : pts)
        for (double y : pts) {
            out.estimate = std::max(out.estimate, p.eval(x, y));
            ++out.report.samples_checked;
        }
    out.report.series = {out.estimate};
    out.report.detail = "delta_p estimate over the sample; boundedness as a global claim "
                        "is not decidable from finitely many points";
    out.report.verdict = Verdict::Inconclusive;
    return out;
}

AxiomReport check_p_continuity(const SelfMap& T, const DistanceStructure& p,
                               const Domain& dom, double tol) {
    const std::vector<double> pts = sample_with_boundaries(dom, T);
    const std::size_t n = pts.size();

    AxiomReport r;
    r.check = "p_continuity";
    r.tolerance = tol;

    std::vector<double> tvals(n);
    for (std::size_t i = 0; i < n; ++i) tvals[i] = T(pts[i]);

    // m[i] = min over y != x of p(y, x): how close a sampled sequence can
    // p-approach target x.
    std::vector<double> approach(n);
    double tau0 = 0.0;
    for (std::size_t xi = 0; xi < n; ++xi) {
        double m = kInf;
        for (std::size_t yi = 0; yi < n; ++yi) {
            double v = p.eval(pts[yi], pts[xi]);
            tau0 = std::max(tau0, v);
            if (yi != xi) m = std::min(m, v);
        }
        approach[xi] = m;
    }
    if (tau0 == 0.0) tau0 = 1.0;

    double best = kInf;
    for (double m : approach) best = std::min(best, m);
    if (best > tau0 / 8.0) {
        r.verdict = Verdict::Inconclusive;
        r.detail = "no sampled point admits a nontrivial p-convergent test sequence";
        return r;
    }

    // Valid targets: those whose best approach matches the sample's
    // resolution. For each one, the tail is the deepest nonempty level of the
    // threshold ladder tau0 * 2^-j.
    const double resolution = std::max(best, tol);
    for (std::size_t xi = 0; xi < n; ++xi) {
        if (approach[xi] > resolution * (1.0 + 1e-9) + tol) continue;
        int jstar = 0;
        for (int j = 0; j <= 40; ++j) {
            double tau = tau0 * std::ldexp(1.0, -j);
            if (approach[xi] <= tau + tol)
                jstar = j;
            else
                break;
        }
        double tau_star = tau0 * std::ldexp(1.0, -jstar);
        // Heuristic modulus bound: a p-continuous map should shrink the tail's
        // image distances in proportion to the tail threshold.
        double bound = std::max(tol, 4.0 * tau_star);
        for (std::size_t yi = 0; yi < n; ++yi) {
            if (yi == xi) continue;
            if (p.eval(pts[yi], pts[xi]) > tau_star + tol) continue;
            double img = p.eval(tvals[yi], tvals[xi]);
            ++r.samples_checked;
            if (img > bound) r.witnesses.push_back({{pts[xi], pts[yi]}, img, bound});
        }
    }

    keep_worst(r.witnesses, 10);
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

} // namespace fplab
