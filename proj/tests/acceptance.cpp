// Acceptance suite: ten end-to-end criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include "fplab/compfun.hpp"
#include "fplab/contraction.hpp"
#include "fplab/scenario.hpp"
#include "fplab/solver.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace fplab;

namespace {

int g_failures = 0;
std::ostringstream g_why;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        g_why << "    - " << what << "\n";
    }
}

void criterion(int index, const std::string& title, const std::function<void()>& body) {
    int before = g_failures;
    g_why.str("");
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }
    bool ok = g_failures == before;
    std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << " - " << title
              << "\n";
    if (!ok) std::cout << g_why.str();
}

SelfMap map_22() { return SelfMap("T", {{0.0, 1.0, "0"}, {1.0, 1.0, "1/8"}}, 0.0, 1.0); }
SelfMap map_34() { return SelfMap("T", {{0.0, 1.0, "0"}, {1.0, 1.0, "1/4"}}, 0.0, 1.0); }

PhiSequence seq_22() {
    ScalarFunc phi1("phi_1", {{0.0, 1.0, "1/16"}, {1.0, std::nullopt, "1/8"}});
    ScalarFunc half = ScalarFunc::single("half", "t/2");
    return PhiSequence({phi1}, PhiSequence::TailKind::Constant, half, half);
}

} // namespace

int main() {
    const Domain grid101 = Domain::grid(0.0, 1.0, 101);

    criterion(1, "asymptotic separation: PASS under p(x,y)=y, exact-witness FAIL under the metric",
              [&] {
        auto good = check_asymptotic(map_22(), DistanceStructure::range_projection(), seq_22(),
                                     grid101, 5, 0.0);
        expect(good.verdict == Verdict::Pass, "range-projection run should PASS at tol=0");

        auto bad = check_asymptotic(map_22(), DistanceStructure::euclidean(), seq_22(), grid101,
                                    5, 0.0);
        expect(bad.verdict == Verdict::Fail, "Euclidean run should FAIL");
        bool witness = false;
        for (const Witness& w : bad.witnesses)
            if (w.lhs == 0.125 && w.rhs == 0.0625) witness = true;
        expect(witness, "expected a witness with lhs=0.125 and rhs=0.0625 exactly");
    });

    criterion(2, "one-step separation: PASS under max{x,y} with psi=t/4, exact-witness FAIL "
                 "under the metric", [&] {
        ScalarFunc psi = ScalarFunc::single("psi", "t/4");
        auto good = check_boyd_wong(map_34(), DistanceStructure::max_pair(), psi, grid101, 0.0);
        expect(good.verdict == Verdict::Pass, "max-pair run should PASS at tol=0");

        auto bad101 = check_boyd_wong(map_34(), DistanceStructure::euclidean(), psi, grid101, 0.0);
        expect(bad101.verdict == Verdict::Fail, "Euclidean run should FAIL");
        auto bad = check_boyd_wong(map_34(), DistanceStructure::euclidean(), psi,
                                   Domain::grid(0.0, 1.0, 5), 0.0);
        bool witness = false;
        for (const Witness& w : bad.witnesses)
            if (w.lhs == 0.25 && w.rhs == 0.0625) witness = true;
        expect(witness, "expected a witness with lhs=0.25 and rhs=0.0625 exactly");
    });

    criterion(3, "solver on the one-step example: 11 starts converge to 0 with zero residuals",
              [&] {
        const int window = 3;
        std::vector<double> starts;
        for (int i = 0; i <= 10; ++i) starts.push_back(i / 10.0);
        auto rep = equiconvergence(map_34(), DistanceStructure::max_pair(), grid101, starts,
                                   1e-9, 50, window);
        expect(rep.equiconvergent, "all starts should be identified with a common limit");
        expect(rep.candidate && *rep.candidate == 0.0, "the common limit should be exactly 0");
        for (const PicardTrace& tr : rep.traces) {
            expect(tr.verdict == TraceVerdict::Converged, "every trace should converge");
            expect(tr.stopped_at <= 2 + window, "convergence within 2 + window iterations");
        }
        expect(rep.fixed_point && rep.fixed_point->p_forward == 0.0 &&
                   rep.fixed_point->p_backward == 0.0 && rep.fixed_point->metric_residual == 0.0,
               "all fixed-point residuals should be exactly 0");
    });

    criterion(4, "class separation: step in Psi only, a>0 offset in neither, containment holds",
              [&] {
        double tol = 1e-9;
        ScalarFunc step("step", {{0.0, 1.0, "0"}, {1.0, std::nullopt, "1/2"}});
        expect(check_psi_class(step, default_class_grid(step, 1.0), tol).verdict == Verdict::Pass,
               "the step function should pass the Psi check");
        expect(check_phi_class(step, default_class_grid(step, 1.0), tol).verdict == Verdict::Fail,
               "the step function should fail the Phi check");

        ScalarFunc nv("nv", {{0.0, 0.0, "0.3"}, {0.0, 1.0, "t/2"}, {1.0, std::nullopt, "1/(2*t)"}});
        auto psi_nv = check_psi_class(nv, default_class_grid(nv, 1.0), tol);
        expect(psi_nv.verdict == Verdict::Fail, "psi(0)=0.3 should fail the Psi check");
        expect(!psi_nv.witnesses.empty() && psi_nv.witnesses.front().inputs[0] == 0.0 &&
                   psi_nv.witnesses.front().lhs == 0.3,
               "the failure should be witnessed at t=0 with value 0.3");

        ScalarFunc quarter = ScalarFunc::single("quarter", "t/4");
        expect(check_psi_class(quarter, default_class_grid(quarter, 1.0), tol).verdict ==
                   Verdict::Pass,
               "t/4 should pass the Psi check");

        std::vector<ScalarFunc> stock = {quarter, step, nv, ScalarFunc::single("half", "t/2"),
                                         ScalarFunc::single("one", "1"),
                                         ScalarFunc("ex22_phi1", {{0.0, 1.0, "1/16"},
                                                                  {1.0, std::nullopt, "1/8"}})};
        for (const ScalarFunc& f : stock) {
            auto g = default_class_grid(f, 4.0);
            if (check_phi_class(f, g, tol).verdict == Verdict::Pass)
                expect(check_psi_class(f, g, tol).verdict == Verdict::Pass,
                       "every Phi passer must also pass Psi: " + f.name());
        }
    });

    criterion(5, "nondecreasing-comparison oracle: hypotheses pass and iteration hits 2 "
                 "within 1e-9", [&] {
        Domain d = Domain::grid(0.0, 4.0, 101);
        SelfMap T = SelfMap::single("T", "x/2+1", 0.0, 4.0);
        ScalarFunc half = ScalarFunc::single("half", "t/2");
        auto r = check_corollary_2_5(T, DistanceStructure::euclidean(), half, d, 60, 1e-9);
        expect(r.verdict == Verdict::Pass, "the composite hypothesis should PASS");
        for (double x0 : {0.0, 1.0, 4.0}) {
            PicardTrace tr = picard(T, DistanceStructure::euclidean(), x0, 1e-9, 100, 3);
            bool hit = false;
            for (std::size_t n = 0; n < tr.iterates.size() && n <= 60; ++n)
                if (std::fabs(tr.iterates[n] - 2.0) <= 1e-9) hit = true;
            expect(hit, "orbit should reach |x_n - 2| <= 1e-9 within 60 iterations");
        }
    });

    criterion(6, "fixed-point-free scenario: MAX_ITER everywhere, computed FAIL at n=2, "
                 "note recorded", [&] {
        Scenario s = parse_scenario(corpus_text("example_2_3"));
        auto rep = run_scenario(s);
        expect(rep["solver"]["candidate"].is_null(), "no convergence candidate should exist");
        for (const auto& tr : rep["solver"]["traces"])
            expect(tr["verdict"] == "MAX_ITER", "every trace should end MAX_ITER");

        SelfMap T("T", {{0.0, 0.0, "1"}, {0.0, 1.0, "0"}}, 0.0, 1.0);
        DistanceStructure p = DistanceStructure::range_projection();
        bool ok = false;
        for (const auto& c : rep["checks"])
            if (c["check"] == "asymptotic") {
                expect(c["verdict"] == "FAIL", "the asymptotic check should FAIL");
                expect(c["detail"] == "first violation at n = 2",
                       "the first violating depth should be 2");
                for (const auto& w : c["witnesses"]) {
                    if (w["inputs"][2] != 2.0) continue;
                    // Independent re-verification by direct orbit evaluation.
                    double x = w["inputs"][0], y = w["inputs"][1];
                    double tx = T(T(x)), ty = T(T(y));
                    if (p.eval(tx, ty) == w["lhs"].get<double>() &&
                        w["lhs"].get<double>() > w["rhs"].get<double>())
                        ok = true;
                }
            }
        expect(ok, "an n=2 witness should re-verify by orbit evaluation");
        expect(rep["scenario"]["notes"].get<std::string>().find("claims") != std::string::npos,
               "the report should carry the discrepancy note");
    });

    criterion(7, "uniform convergence: sup-gaps of the halving iterates equal 2^-n", [&] {
        PhiSequence seq({}, PhiSequence::TailKind::Iterate, ScalarFunc::single("half", "t/2"),
                        ScalarFunc::single("zero", "0"));
        auto r = check_uniform_convergence(seq, 1.0, 40, 1e-9);
        expect(static_cast<int>(r.series.size()) == 40, "40 terms expected");
        for (int n = 1; n <= 40; ++n)
            expect(std::fabs(r.series[static_cast<std::size_t>(n - 1)] -
                             std::ldexp(1.0, -n)) <= 1e-15,
                   "s_n should equal 2^-n within 1e-15 at n=" + std::to_string(n));
    });

    criterion(8, "monotone distance sequences for every one-step corpus passer", [&] {
        int covered = 0;
        for (const std::string& name : corpus_list()) {
            Scenario s = parse_scenario(corpus_text(name));
            if (s.hyp_kind != HypKind::BoydWong || !s.map) continue;
            DistanceStructure p = s.distance();
            auto bw = check_boyd_wong(*s.map, p, *s.hyp_func, s.domain, s.tol);
            auto psi = check_psi_class(*s.hyp_func, default_class_grid(*s.hyp_func, 1.0), s.tol);
            if (bw.verdict != Verdict::Pass || psi.verdict != Verdict::Pass) continue;
            ++covered;
            auto mono = boyd_wong_monotonicity_check(*s.map, p, *s.hyp_func, s.domain, 16, s.tol);
            expect(mono.verdict == Verdict::Pass,
                   "distance sequence should be nonincreasing for " + name);
        }
        expect(covered >= 1, "at least one corpus scenario should exercise the property");
    });

    criterion(9, "axiom honesty: exact triangle checks and asymmetry reporting", [&] {
        expect(check_triangle(DistanceStructure::range_projection(), grid101, 0.0).verdict ==
                   Verdict::Pass,
               "p(x,y)=y should satisfy the triangle inequality at tol=0");
        expect(check_triangle(DistanceStructure::max_pair(), grid101, 0.0).verdict ==
                   Verdict::Pass,
               "max{x,y} should satisfy the triangle inequality at tol=0");

        auto v = validate_distance(DistanceStructure::range_projection(), grid101, 1e-9);
        expect(v.detail.find("not declared symmetric") != std::string::npos,
               "p(x,y)=y should be flagged as not symmetric");
        expect(v.series.size() == 2 && v.series[1] == 1.0,
               "the self-distance report should show p(1,1)=1");
        expect(v.detail.find("max p(x,x) = 1 at x=1") != std::string::npos,
               "the detail should name the witness x=1");

        DistanceStructure sq = DistanceStructure::from_expr("squared", "(x-y)*(x-y)", grid101);
        auto tri = check_triangle(sq, Domain::grid(0.0, 1.0, 3), 0.0);
        expect(tri.verdict == Verdict::Fail, "|x-y|^2 should fail the triangle inequality");
        expect(!tri.witnesses.empty() &&
                   tri.witnesses.front().inputs == std::vector<double>{0.0, 1.0, 0.5},
               "the worst witness should be the triple (0, 1, 0.5)");
    });

    criterion(10, "determinism: byte-identical corpus reports and parser round-trips", [&] {
        for (const std::string& name : corpus_list()) {
            Scenario s = parse_scenario(corpus_text(name));
            std::string a = report_to_string(run_scenario(s));
            std::string b = report_to_string(run_scenario(s));
            expect(a == b, "consecutive runs should agree byte for byte: " + name);

            Scenario s2 = parse_scenario(serialize_scenario(s).dump());
            expect(serialize_scenario(s) == serialize_scenario(s2),
                   "serializer round-trip should be the identity: " + name);
        }
    });

    if (g_failures > 0) {
        std::cout << "acceptance: " << g_failures << " failure(s)\n";
        return 1;
    }
    std::cout << "acceptance: all criteria satisfied\n";
    return 0;
}
