#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fplab/compfun.hpp"
#include "fplab/scalar_func.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace fplab;

namespace {

ScalarFunc half() { return ScalarFunc::single("half", "t/2"); }
ScalarFunc quarter() { return ScalarFunc::single("quarter", "t/4"); }

// 0 on [0,1), 1/2 on [1,inf): right upper semicontinuous, not continuous.
ScalarFunc step() {
    return ScalarFunc("step", {{0.0, 1.0, "0"}, {1.0, std::nullopt, "1/2"}});
}

// 0.3 at t=0, then t/2 and 1/(2t): every axis value is < t for t > 0, but
// the value at 0 does not vanish.
ScalarFunc not_vanishing() {
    return ScalarFunc("nv", {{0.0, 0.0, "0.3"}, {0.0, 1.0, "t/2"}, {1.0, std::nullopt, "1/(2*t)"}});
}

} // namespace

TEST_CASE("piecewise definitions partition the axis") {
    // Gap between pieces.
    CHECK_THROWS_AS(ScalarFunc("f", {{0.0, 1.0, "0"}, {2.0, std::nullopt, "1"}}),
                    std::invalid_argument);
    // First piece must start at 0.
    CHECK_THROWS_AS(ScalarFunc("f", {{1.0, std::nullopt, "0"}}), std::invalid_argument);
    // Last piece must be unbounded.
    CHECK_THROWS_AS(ScalarFunc("f", {{0.0, 1.0, "0"}}), std::invalid_argument);
    // Division guarded over the piece's interval at construction.
    CHECK_THROWS_AS(ScalarFunc::single("f", "1/(t-t)"), ExprError);
    CHECK_THROWS_AS(ScalarFunc("f", {{0.0, std::nullopt, "1/t"}}), ExprError);
    // ... but fine when the piece keeps the divisor away from zero.
    CHECK(ScalarFunc("f", {{0.0, 1.0, "0"}, {1.0, std::nullopt, "1/(2*t)"}})(2.0) == 0.25);
}

TEST_CASE("singleton pieces evaluate pointwise") {
    ScalarFunc f = not_vanishing();
    CHECK(f(0.0) == 0.3);
    CHECK(f(0.5) == 0.25);
    CHECK(f(1.0) == 0.5);
    CHECK(f(2.0) == 0.25);
    CHECK_THROWS_AS(f(-1.0), std::domain_error);
}

TEST_CASE("phi and psi membership separate") {
    double tol = 1e-9;

    ScalarFunc s = step();
    auto phi = check_phi_class(s, default_class_grid(s, 1.0), tol);
    auto psi = check_psi_class(s, default_class_grid(s, 1.0), tol);
    CHECK(phi.verdict == Verdict::Fail);
    CHECK(psi.verdict == Verdict::Pass);
    // The continuity witness sits at the jump abscissa with the jump height.
    REQUIRE(!phi.witnesses.empty());
    CHECK(phi.witnesses.front().inputs == std::vector<double>{1.0});
    CHECK(phi.witnesses.front().lhs == 0.5);

    ScalarFunc nv = not_vanishing();
    auto psi_nv = check_psi_class(nv, default_class_grid(nv, 1.0), tol);
    CHECK(psi_nv.verdict == Verdict::Fail);
    REQUIRE(psi_nv.witnesses.size() == 1);
    CHECK(psi_nv.witnesses.front().inputs == std::vector<double>{0.0});
    CHECK(psi_nv.witnesses.front().lhs == 0.3);

    for (ScalarFunc f : {half(), quarter()}) {
        CHECK(check_phi_class(f, default_class_grid(f, 4.0), tol).verdict == Verdict::Pass);
        CHECK(check_psi_class(f, default_class_grid(f, 4.0), tol).verdict == Verdict::Pass);
    }
}

TEST_CASE("every phi passer also passes psi") {
    // Containment property over the suite's stock of comparison functions.
    std::vector<ScalarFunc> stock = {half(), quarter(), step(), not_vanishing(),
                                     ScalarFunc::single("one", "1"),
                                     ScalarFunc::single("sq", "t*t/4"),
                                     ScalarFunc("ex22_phi1", {{0.0, 1.0, "1/16"},
                                                              {1.0, std::nullopt, "1/8"}})};
    for (const ScalarFunc& f : stock) {
        auto grid = default_class_grid(f, 4.0);
        if (check_phi_class(f, grid, 1e-9).verdict == Verdict::Pass)
            CHECK(check_psi_class(f, grid, 1e-9).verdict == Verdict::Pass);
    }
}

TEST_CASE("strictness f(t) < t is enforced") {
    ScalarFunc id = ScalarFunc::single("id", "t");
    auto r = check_phi_class(id, default_class_grid(id, 1.0), 1e-9);
    CHECK(r.verdict == Verdict::Fail);
    auto rp = check_psi_class(id, default_class_grid(id, 1.0), 1e-9);
    CHECK(rp.verdict == Verdict::Fail);
}

TEST_CASE("iterate family sup-gaps halve exactly") {
    // phi_n = n-fold composition of t/2; against limit 0 on [0,1] the
    // sup-gap is attained at t=1 and equals 2^-n exactly.
    PhiSequence seq({}, PhiSequence::TailKind::Iterate, half(),
                    ScalarFunc::single("zero", "0"));
    auto r = check_uniform_convergence(seq, 1.0, 40, 1e-9);
    REQUIRE(static_cast<int>(r.series.size()) == 40);
    for (int n = 1; n <= 40; ++n)
        CHECK(std::fabs(r.series[static_cast<std::size_t>(n - 1)] - std::ldexp(1.0, -n)) <= 1e-15);
    CHECK(r.verdict == Verdict::Pass); // 2^-40 is below 1e-9
    auto r16 = check_uniform_convergence(seq, 1.0, 16, 1e-9);
    CHECK(r16.verdict == Verdict::Fail); // 2^-16 is not
}

TEST_CASE("phi sequence indexing: prefix, then tail") {
    ScalarFunc phi1("phi1", {{0.0, 1.0, "1/16"}, {1.0, std::nullopt, "1/8"}});
    PhiSequence seq({phi1}, PhiSequence::TailKind::Constant, half(), half());
    CHECK(seq.at(1, 1.0) == 0.125);
    CHECK(seq.at(1, 0.5) == 0.0625);
    CHECK(seq.at(2, 1.0) == 0.5);  // constant tail: phi_n = t/2 for n >= 2
    CHECK(seq.at(7, 0.25) == 0.125);
    CHECK(seq.limit_at(3.0) == 1.5);
}

TEST_CASE("iterate tail requires a nondecreasing base") {
    // A decreasing base would make the n-fold composition meaningless as a
    // comparison sequence.
    ScalarFunc dec("dec", {{0.0, 1.0, "1-t/2"}, {1.0, std::nullopt, "1/2"}});
    CHECK_THROWS_AS(PhiSequence({}, PhiSequence::TailKind::Iterate, dec, half()),
                    std::invalid_argument);
}

TEST_CASE("continuity and monotonicity checks") {
    CHECK(check_continuity(half(), 1e-9).verdict == Verdict::Pass);
    CHECK(check_continuity(step(), 1e-9).verdict == Verdict::Fail);

    ScalarFunc f = half();
    CHECK(check_nondecreasing(f, default_class_grid(f, 2.0), 1e-9).verdict == Verdict::Pass);
    ScalarFunc g("g", {{0.0, 1.0, "t/2"}, {1.0, std::nullopt, "1/4"}});
    CHECK(check_nondecreasing(g, default_class_grid(g, 2.0), 1e-9).verdict == Verdict::Fail);
}

TEST_CASE("uniform convergence flags a non-converging sequence") {
    // Constant tail t/2 against limit 0 never settles below tol.
    PhiSequence seq({}, PhiSequence::TailKind::Constant, half(),
                    ScalarFunc::single("zero", "0"));
    auto r = check_uniform_convergence(seq, 1.0, 16, 1e-9);
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses.front().lhs == 0.5);
}
