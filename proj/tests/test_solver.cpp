#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fplab/solver.hpp"

#include <cmath>
#include <vector>

using namespace fplab;

namespace {

SelfMap map_22() { return SelfMap("T", {{0.0, 1.0, "0"}, {1.0, 1.0, "1/8"}}, 0.0, 1.0); }
SelfMap map_34() { return SelfMap("T", {{0.0, 1.0, "0"}, {1.0, 1.0, "1/4"}}, 0.0, 1.0); }
SelfMap map_23() { return SelfMap("T", {{0.0, 0.0, "1"}, {0.0, 1.0, "0"}}, 0.0, 1.0); }

} // namespace

TEST_CASE("picard matches the affine closed form x_n = 2 - (2 - x0) 2^-n") {
    SelfMap T = SelfMap::single("T", "x/2+1", 0.0, 4.0);
    DistanceStructure p = DistanceStructure::euclidean();
    for (double x0 : {0.0, 1.0, 4.0}) {
        PicardTrace tr = picard(T, p, x0, 1e-9, 100, 3);
        CHECK(tr.verdict == TraceVerdict::Converged);
        CHECK(tr.stopped_at <= 60);
        for (std::size_t n = 0; n < tr.iterates.size(); ++n) {
            double oracle = 2.0 - (2.0 - x0) * std::ldexp(1.0, -static_cast<int>(n));
            CHECK(std::fabs(tr.iterates[n] - oracle) <= 1e-12);
        }
        CHECK(std::fabs(tr.candidate() - 2.0) <= 1e-9);
    }
}

TEST_CASE("two-sided stopping records honest asymmetric distances") {
    // Orbit of 1 under the first separation map with p(x,y) = y:
    // 1 -> 1/8 -> 0 -> 0 ...; forward and backward distances differ.
    SelfMap T = map_22();
    DistanceStructure p = DistanceStructure::range_projection();
    PicardTrace tr = picard(T, p, 1.0, 1e-9, 50, 3);
    CHECK(tr.verdict == TraceVerdict::Converged);
    CHECK(tr.iterates[1] == 0.125);
    CHECK(tr.iterates[2] == 0.0);
    CHECK(tr.fwd_dist[0] == 0.125); // p(1, 1/8) = 1/8
    CHECK(tr.bwd_dist[0] == 1.0);   // p(1/8, 1) = 1
    CHECK(tr.fwd_dist[1] == 0.0);   // p(1/8, 0) = 0
    CHECK(tr.bwd_dist[1] == 0.125); // p(0, 1/8) = 1/8
    CHECK(tr.candidate() == 0.0);
}

TEST_CASE("the window requires consecutive small steps on both sides") {
    // The period-2 orbit never stops: distances alternate 0 and 1.
    DistanceStructure p = DistanceStructure::range_projection();
    PicardTrace tr = picard(map_23(), p, 0.5, 1e-9, 64, 3);
    CHECK(tr.verdict == TraceVerdict::MaxIter);
    CHECK(static_cast<int>(tr.iterates.size()) == 65);
}

TEST_CASE("solver argument validation") {
    SelfMap T = SelfMap::single("T", "x/2", 0.0, 1.0);
    DistanceStructure p = DistanceStructure::euclidean();
    CHECK_THROWS_AS(picard(T, p, 0.5, 1e-9, 2, 3), std::invalid_argument);  // max_iter < window
    CHECK_THROWS_AS(picard(T, p, 0.5, 1e-9, 10, 0), std::invalid_argument); // window < 1
    CHECK_THROWS_AS(picard(T, p, 2.0, 1e-9, 10, 3), std::invalid_argument); // start outside
}

TEST_CASE("equiconvergence identifies a common fixed point") {
    Domain d = Domain::grid(0.0, 4.0, 101);
    SelfMap T = SelfMap::single("T", "x/2+1", 0.0, 4.0);
    auto rep = equiconvergence(T, DistanceStructure::euclidean(), d, {0.0, 1.0, 4.0}, 1e-9,
                               100, 3);
    CHECK(rep.equiconvergent);
    REQUIRE(rep.candidate.has_value());
    CHECK(std::fabs(*rep.candidate - 2.0) <= 1e-9);
    REQUIRE(rep.fixed_point.has_value());
    CHECK(rep.fixed_point->fixed);
    CHECK(rep.fixed_point->metric_residual <= 1e-7);
}

TEST_CASE("equiconvergence under an asymmetric distance") {
    Domain d = Domain::grid(0.0, 1.0, 101);
    auto rep = equiconvergence(map_22(), DistanceStructure::range_projection(), d,
                               {0.0, 0.5, 1.0}, 1e-9, 50, 3);
    CHECK(rep.equiconvergent);
    REQUIRE(rep.candidate.has_value());
    CHECK(*rep.candidate == 0.0);
    REQUIRE(rep.fixed_point.has_value());
    CHECK(rep.fixed_point->p_forward == 0.0);
    CHECK(rep.fixed_point->metric_residual == 0.0);
}

TEST_CASE("no candidate when every start hits the iteration cap") {
    Domain d = Domain::grid(0.0, 1.0, 101);
    auto rep = equiconvergence(map_23(), DistanceStructure::range_projection(), d, {0.0, 0.5},
                               1e-9, 64, 3);
    CHECK(!rep.candidate.has_value());
    CHECK(!rep.equiconvergent);
    CHECK(!rep.fixed_point.has_value());
    for (const PicardTrace& tr : rep.traces) CHECK(tr.verdict == TraceVerdict::MaxIter);
}

TEST_CASE("distinct limits break equiconvergence") {
    Domain d = Domain::grid(0.0, 1.0, 101);
    SelfMap T = SelfMap::single("T", "x*x", 0.0, 1.0);
    auto rep = equiconvergence(T, DistanceStructure::euclidean(), d, {0.0, 0.5, 1.0}, 1e-9,
                               200, 3);
    REQUIRE(rep.candidate.has_value());
    CHECK(*rep.candidate == 0.0);
    CHECK(!rep.equiconvergent); // the trace from 1 sits at the other fixed point
}

TEST_CASE("pair decay separates contractive from neutral maps") {
    Domain d = Domain::grid(0.0, 1.0, 101);
    DistanceStructure p = DistanceStructure::euclidean();
    SelfMap halving = SelfMap::single("T", "x/2", 0.0, 1.0);
    CHECK(pair_decay_check(halving, p, d, 60, 1e-9).verdict == Verdict::Pass);

    SelfMap id = SelfMap::single("id", "x", 0.0, 1.0);
    auto r = pair_decay_check(id, p, d, 60, 1e-9);
    CHECK(r.verdict == Verdict::Fail);
    // Witnesses re-verify: distances are preserved verbatim by the identity.
    for (const Witness& w : r.witnesses)
        CHECK(w.lhs == std::fabs(w.inputs[0] - w.inputs[1]));
}

TEST_CASE("monotone distance sequence under the one-step inequality") {
    Domain d = Domain::grid(0.0, 1.0, 101);
    ScalarFunc psi = ScalarFunc::single("psi", "t/4");
    auto r = boyd_wong_monotonicity_check(map_34(), DistanceStructure::max_pair(), psi, d, 16,
                                          1e-9);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.detail.empty()); // no chained-inequality violations either

    // The identity keeps distances constant: nonincreasing holds, but the
    // chained psi-inequality is violated and reported in the detail.
    SelfMap id = SelfMap::single("id", "x", 0.0, 1.0);
    auto rid = boyd_wong_monotonicity_check(id, DistanceStructure::euclidean(), psi, d, 4,
                                            1e-9);
    CHECK(rid.verdict == Verdict::Pass);
    CHECK(!rid.detail.empty());
}

TEST_CASE("uniqueness probe counts distinct sampled fixed points") {
    Domain d = Domain::grid(0.0, 1.0, 101);
    DistanceStructure p = DistanceStructure::euclidean();

    auto one = uniqueness_probe(SelfMap::single("T", "x/2", 0.0, 1.0), p, d, 1e-9);
    CHECK(one.verdict == Verdict::Pass);
    REQUIRE(one.series.size() == 1);
    CHECK(one.series[0] == 0.0);

    auto two = uniqueness_probe(SelfMap::single("T", "x*x", 0.0, 1.0), p, d, 1e-9);
    CHECK(two.verdict == Verdict::Fail);

    auto none = uniqueness_probe(map_23(), p, d, 1e-9);
    CHECK(none.verdict == Verdict::Pass);
    CHECK(none.series.empty()); // zero fixed points is still "at most one"
}

TEST_CASE("fixed point verification reports p-residuals alongside the decision") {
    // p(x,x) = x for the max distance: the fixed point 0 has zero residuals,
    // while a non-fixed u shows p-residuals even where the metric one is small.
    auto c = verify_fixed_point(map_34(), DistanceStructure::max_pair(), 0.0, 1e-7);
    CHECK(c.fixed);
    CHECK(c.p_forward == 0.0);
    CHECK(c.p_backward == 0.0);
    CHECK(c.metric_residual == 0.0);

    auto n = verify_fixed_point(map_34(), DistanceStructure::max_pair(), 1.0, 1e-7);
    CHECK(!n.fixed);
    CHECK(n.p_forward == 1.0);       // p(1, T1) = max(1, 1/4)
    CHECK(n.metric_residual == 0.75);
}
