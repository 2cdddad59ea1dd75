#include "fplab/solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fplab {

const char* to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::Converged: return "CONVERGED";
        case TraceVerdict::MaxIter: return "MAX_ITER";
        case TraceVerdict::DivergedFromDomain: return "DIVERGED_FROM_DOMAIN";
    }
    return "?";
}

PicardTrace picard(const SelfMap& T, const DistanceStructure& p, double x0,
                   double tol, int max_iter, int window) {
    if (window < 1 || max_iter < window)
        throw std::invalid_argument("picard: requires max_iter >= window >= 1");
    if (x0 < T.lo() - 1e-12 || x0 > T.hi() + 1e-12)
        throw std::invalid_argument("picard: x0 outside the domain");

    PicardTrace tr;
    tr.start = x0;
    tr.iterates.push_back(x0);

    int streak = 0;
    for (int n = 0; n < max_iter; ++n) {
        double x = tr.iterates.back();
        double next = T(x);
        if (next < T.lo() - 1e-12 || next > T.hi() + 1e-12) {
            tr.iterates.push_back(next);
            tr.fwd_dist.push_back(p.eval(x, next));
            tr.bwd_dist.push_back(p.eval(next, x));
            tr.stopped_at = static_cast<int>(tr.iterates.size()) - 1;
            tr.verdict = TraceVerdict::DivergedFromDomain;
            return tr;
        }
        double fwd = p.eval(x, next);
        double bwd = p.eval(next, x);
        tr.iterates.push_back(next);
        tr.fwd_dist.push_back(fwd);
        tr.bwd_dist.push_back(bwd);
        streak = (fwd <= tol && bwd <= tol) ? streak + 1 : 0;
        if (streak >= window) {
            tr.stopped_at = static_cast<int>(tr.iterates.size()) - 1;
            tr.verdict = TraceVerdict::Converged;
            return tr;
        }
    }
    tr.stopped_at = static_cast<int>(tr.iterates.size()) - 1;
    tr.verdict = TraceVerdict::MaxIter;
    return tr;
}

HypothesisReport pair_decay_check(const SelfMap& T, const DistanceStructure& p,
                                  const Domain& dom, int n_max, double tol) {
    HypothesisReport r;
    r.check = "pair_decay";
    r.tolerance = tol;
    r.n_max = n_max;

    const std::vector<double> pts = sample_with_boundaries(dom, T);
    std::vector<std::vector<double>> orbits(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        orbits[i].push_back(pts[i]);
        for (int n = 1; n <= n_max; ++n) orbits[i].push_back(T(orbits[i].back()));
    }

    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double v = p.eval(orbits[i].back(), orbits[j].back());
            ++r.samples_checked;
            if (v > tol)
                r.witnesses.push_back({{pts[i], pts[j], static_cast<double>(n_max)}, v, tol});
        }

    keep_worst(r.witnesses, 10);
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

HypothesisReport boyd_wong_monotonicity_check(const SelfMap& T, const DistanceStructure& p,
                                              const ScalarFunc& psi, const Domain& dom,
                                              int n_max, double tol) {
    HypothesisReport r;
    r.check = "bw_monotonicity";
    r.tolerance = tol;
    r.n_max = n_max;

    const std::vector<double> pts = sample_with_boundaries(dom, T);
    std::vector<std::vector<double>> orbits(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        orbits[i].push_back(pts[i]);
        for (int n = 1; n <= n_max; ++n) orbits[i].push_back(T(orbits[i].back()));
    }

    // Also re-check the chained inequality p(T^{n+1}x,T^{n+1}y) <=
    // psi(p(T^n x, T^n y)) that the monotonicity rests on.
    long long psi_violations = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double prev = p.eval(pts[i], pts[j]);
            for (int n = 1; n <= n_max; ++n) {
                double cur = p.eval(orbits[i][static_cast<std::size_t>(n)],
                                    orbits[j][static_cast<std::size_t>(n)]);
                ++r.samples_checked;
                if (cur > prev + tol)
                    r.witnesses.push_back({{pts[i], pts[j], static_cast<double>(n)}, cur, prev});
                if (cur > psi(prev) + tol) ++psi_violations;
                prev = cur;
            }
        }
    if (psi_violations > 0) {
        std::ostringstream msg;
        msg << psi_violations << " orbit steps violate the chained one-step inequality";
        r.detail = msg.str();
    }

    keep_worst(r.witnesses, 10);
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

FixedPointCheck verify_fixed_point(const SelfMap& T, const DistanceStructure& p,
                                   double u, double tol) {
    FixedPointCheck c;
    double tu = T(u);
    c.p_forward = p.eval(u, tu);
    c.p_backward = p.eval(tu, u);
    c.metric_residual = p.base_metric(u, tu);
    c.fixed = c.metric_residual <= tol;
    return c;
}

ConvergenceReport equiconvergence(const SelfMap& T, const DistanceStructure& p,
                                  const Domain& dom, const std::vector<double>& starts,
                                  double tol, int max_iter, int window, double ident_tol) {
    if (starts.empty()) throw std::invalid_argument("equiconvergence: no starts");
    for (double s : starts)
        if (!dom.contains(s)) throw std::invalid_argument("equiconvergence: start outside domain");

    ConvergenceReport rep;
    for (double s : starts) rep.traces.push_back(picard(T, p, s, tol, max_iter, window));

    for (const PicardTrace& tr : rep.traces) {
        if (tr.verdict == TraceVerdict::Converged) {
            rep.candidate = tr.candidate();
            break;
        }
    }
    if (!rep.candidate) {
        rep.equiconvergent = false;
        return rep;
    }

    const double u = *rep.candidate;
    std::vector<double> anchors;
    anchors.push_back(u);
    for (const PicardTrace& tr : rep.traces) anchors.push_back(tr.candidate());

    rep.equiconvergent = true;
    for (const PicardTrace& tr : rep.traces) {
        if (tr.verdict != TraceVerdict::Converged) {
            rep.equiconvergent = false;
            break;
        }
        double v = tr.candidate();
        // Identification criterion: some z with p(z,u) and p(z,v) both
        // negligible, plus a base-metric agreement.
        bool identified = false;
        for (double z : anchors) {
            if (p.eval(z, u) <= tol && p.eval(z, v) <= tol) {
                identified = true;
                break;
            }
        }
        if (!identified || p.base_metric(u, v) > ident_tol) {
            rep.equiconvergent = false;
            break;
        }
    }
    if (rep.equiconvergent) rep.fixed_point = verify_fixed_point(T, p, u, ident_tol);
    return rep;
}

HypothesisReport uniqueness_probe(const SelfMap& T, const DistanceStructure& p,
                                  const Domain& dom, double tol, double ident_tol) {
    HypothesisReport r;
    r.check = "uniqueness";
    r.tolerance = tol;

    const std::vector<double> pts = sample_with_boundaries(dom, T);
    std::vector<double> fixed;
    for (double x : pts) {
        ++r.samples_checked;
        if (p.base_metric(x, T(x)) <= tol) {
            if (fixed.empty() || std::fabs(x - fixed.back()) > ident_tol) fixed.push_back(x);
        }
    }

    if (fixed.size() > 1) {
        for (std::size_t i = 0; i + 1 < fixed.size() && r.witnesses.size() < 10; ++i)
            r.witnesses.push_back({{fixed[i], fixed[i + 1]}, std::fabs(fixed[i] - fixed[i + 1]),
                                   ident_tol});
        r.verdict = Verdict::Fail;
    } else {
        r.verdict = Verdict::Pass;
        if (!fixed.empty()) r.series = {fixed.front()};
    }
    return r;
}

} // namespace fplab
