#include "fplab/contraction.hpp"

#include "fplab/compfun.hpp"

#include <cmath>
#include <sstream>

namespace fplab {

namespace {

// Orbits T^0 x .. T^n_max x for every sample point; returns false and records
// the escape if some iterate leaves the domain.
bool build_orbits(const SelfMap& T, const Domain& dom, const std::vector<double>& pts,
                  int n_max, std::vector<std::vector<double>>& orbits, HypothesisReport& r) {
    orbits.assign(pts.size(), {});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<double>& orbit = orbits[i];
        orbit.reserve(static_cast<std::size_t>(n_max) + 1);
        orbit.push_back(pts[i]);
        for (int n = 1; n <= n_max; ++n) {
            double next = T(orbit.back());
            if (!dom.contains(next)) {
                std::ostringstream msg;
                msg << "self-map range violation: orbit of x=" << pts[i] << " leaves the domain at T^"
                    << n << " = " << next;
                r.detail = msg.str();
                r.verdict = Verdict::Fail;
                r.witnesses.push_back({{pts[i], static_cast<double>(n)}, next, dom.hi});
                return false;
            }
            orbit.push_back(next);
        }
    }
    return true;
}

} // namespace

HypothesisReport check_asymptotic(const SelfMap& T, const DistanceStructure& p,
                                  const PhiSequence& seq, const Domain& dom,
                                  int n_max, double tol) {
    if (n_max < 1) throw std::invalid_argument("check_asymptotic: n_max must be >= 1");

    HypothesisReport r;
    r.check = "asymptotic";
    r.tolerance = tol;
    r.n_max = n_max;

    const std::vector<double> pts = sample_with_boundaries(dom, T);
    std::vector<std::vector<double>> orbits;
    if (!build_orbits(T, dom, pts, n_max, orbits, r)) return r;

    int first_n = 0;
    Witness first_w;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double pxy = p.eval(pts[i], pts[j]);
            for (int n = 1; n <= n_max; ++n) {
                double lhs = p.eval(orbits[i][static_cast<std::size_t>(n)],
                                    orbits[j][static_cast<std::size_t>(n)]);
                double rhs = seq.at(n, pxy);
                ++r.samples_checked;
                if (lhs > rhs + tol) {
                    Witness w{{pts[i], pts[j], static_cast<double>(n)}, lhs, rhs};
                    if (first_n == 0 || n < first_n ||
                        (n == first_n && w.violation() > first_w.violation())) {
                        first_n = n;
                        first_w = w;
                    }
                    r.witnesses.push_back(std::move(w));
                }
            }
        }

    keep_worst(r.witnesses, 10);
    if (first_n > 0) {
        std::ostringstream msg;
        msg << "first violation at n = " << first_n;
        r.detail = msg.str();
        // The worst witness at the earliest failing depth always survives the
        // cap, even when deeper violations dominate by magnitude.
        bool kept = false;
        for (const Witness& w : r.witnesses)
            if (w.inputs == first_w.inputs) kept = true;
        if (!kept) {
            r.witnesses.back() = first_w;
            sort_witnesses(r.witnesses);
        }
    }
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

HypothesisReport check_boyd_wong(const SelfMap& T, const DistanceStructure& p,
                                 const ScalarFunc& psi, const Domain& dom, double tol) {
    HypothesisReport r;
    r.check = "boyd_wong";
    r.tolerance = tol;
    r.n_max = 1;

    const std::vector<double> pts = sample_with_boundaries(dom, T);
    std::vector<std::vector<double>> orbits;
    if (!build_orbits(T, dom, pts, 1, orbits, r)) return r;

    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double lhs = p.eval(orbits[i][1], orbits[j][1]);
            double rhs = psi(p.eval(pts[i], pts[j]));
            ++r.samples_checked;
            if (lhs > rhs + tol)
                r.witnesses.push_back({{pts[i], pts[j], 1.0}, lhs, rhs});
        }

    keep_worst(r.witnesses, 10);
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

HypothesisReport check_corollary_2_5(const SelfMap& T, const DistanceStructure& p,
                                     const ScalarFunc& phi, const Domain& dom,
                                     int n_max, double tol) {
    HypothesisReport r;
    r.check = "corollary_2_5";
    r.tolerance = tol;
    r.n_max = n_max;

    std::vector<std::string> failed_parts;

    const std::vector<double> pts = sample_with_boundaries(dom, T);

    // delta_p estimate; the iterates of phi must vanish there in particular.
    double delta_p = 0.0;
    for (double x : pts)
        for (double y : pts) delta_p = std::max(delta_p, p.eval(x, y));

    std::vector<double> grid = default_class_grid(phi, std::max(delta_p, 1.0));

    HypothesisReport mono = check_nondecreasing(phi, grid, tol);
    if (mono.verdict != Verdict::Pass) {
        failed_parts.push_back("phi_nondecreasing");
        for (const Witness& w : mono.witnesses) r.witnesses.push_back(w);
    }
    HypothesisReport cont = check_continuity(phi, tol);
    if (cont.verdict != Verdict::Pass) {
        failed_parts.push_back("phi_continuity");
        for (const Witness& w : cont.witnesses) r.witnesses.push_back(w);
    }

    // phi^n(t) -> 0: iterate to n_max on the grid; delta_p is in the grid by
    // construction of default_class_grid only if <= hi, so add it explicitly.
    std::vector<double> decay_grid = grid;
    decay_grid.push_back(delta_p);
    bool decay_ok = true;
    for (double t : decay_grid) {
        double v = t;
        for (int n = 0; n < n_max; ++n) v = phi(v);
        ++r.samples_checked;
        if (v > tol) {
            decay_ok = false;
            r.witnesses.push_back({{t, static_cast<double>(n_max)}, v, tol});
        }
    }
    if (!decay_ok) failed_parts.push_back("phi_iterates_vanish");

    // One-step inequality p(Tx,Ty) <= phi(p(x,y)).
    std::vector<std::vector<double>> orbits;
    if (!build_orbits(T, dom, pts, 1, orbits, r)) return r;
    bool one_step_ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double lhs = p.eval(orbits[i][1], orbits[j][1]);
            double rhs = phi(p.eval(pts[i], pts[j]));
            ++r.samples_checked;
            if (lhs > rhs + tol) {
                one_step_ok = false;
                r.witnesses.push_back({{pts[i], pts[j], 1.0}, lhs, rhs});
            }
        }
    if (!one_step_ok) failed_parts.push_back("one_step_inequality");

    keep_worst(r.witnesses, 10);
    if (!failed_parts.empty()) {
        std::ostringstream msg;
        msg << "failed: ";
        for (std::size_t i = 0; i < failed_parts.size(); ++i)
            msg << (i ? ", " : "") << failed_parts[i];
        r.detail = msg.str();
    }
    r.series = {delta_p};
    r.verdict = failed_parts.empty() && r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    return r;
}

const char* to_string(Guarantee g) {
    switch (g) {
        case Guarantee::Theorem31: return "THEOREM_3_1";
        case Guarantee::Theorem24: return "THEOREM_2_4";
        case Guarantee::Remark35: return "REMARK_3_5";
        case Guarantee::None: return "NONE";
    }
    return "?";
}

TheoremVerdict select_theorem(const SelectorInput& in) {
    if (!in.boyd_wong && !in.asymptotic && in.phi_k_membership.empty())
        throw std::invalid_argument("select_theorem: no hypothesis report present");

    TheoremVerdict v;
    auto note = [&](const char* name, bool ok) {
        (ok ? v.passed : v.failed).push_back(name);
        return ok;
    };

    bool bw = in.boyd_wong && note("boyd_wong_inequality", in.boyd_wong->verdict == Verdict::Pass);
    bool psi = in.psi_membership &&
               note("psi_membership", in.psi_membership->verdict == Verdict::Pass);
    if (bw && psi) {
        v.guarantee = Guarantee::Theorem31;
        return v;
    }

    bool asym = in.asymptotic && note("asymptotic_inequality", in.asymptotic->verdict == Verdict::Pass);
    bool uc = in.uniform_convergence &&
              note("uniform_convergence", in.uniform_convergence->verdict == Verdict::Pass);
    bool tail = in.tail_continuity &&
                note("tail_continuity", in.tail_continuity->verdict == Verdict::Pass);
    bool pcont = in.p_continuity && note("p_continuity", in.p_continuity->verdict == Verdict::Pass);
    if (asym && uc && tail && pcont) {
        v.guarantee = Guarantee::Theorem24;
        return v;
    }

    for (const auto& [k, verdict] : in.phi_k_membership) {
        if (verdict == Verdict::Pass) {
            v.passed.push_back("phi_" + std::to_string(k) + "_in_phi_class");
            v.guarantee = Guarantee::Remark35;
            return v;
        }
    }

    v.guarantee = Guarantee::None;
    return v;
}

} // namespace fplab
