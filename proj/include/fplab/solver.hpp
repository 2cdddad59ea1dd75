#pragma once

#include "fplab/contraction.hpp"
#include "fplab/distance.hpp"
#include "fplab/domain.hpp"
#include "fplab/selfmap.hpp"
#include "fplab/verdict.hpp"

#include <optional>
#include <vector>

namespace fplab {

enum class TraceVerdict { Converged, MaxIter, DivergedFromDomain };

const char* to_string(TraceVerdict v);

// One Picard orbit with forward/backward consecutive p-distances. p is
// asymmetric in general, so convergence requires both directions small over
// a stability window.
struct PicardTrace {
    double start = 0.0;
    std::vector<double> iterates; // x0, Tx0, T^2 x0, ...
    std::vector<double> fwd_dist; // p(x_n, x_{n+1})
    std::vector<double> bwd_dist; // p(x_{n+1}, x_n)
    int stopped_at = 0;
    TraceVerdict verdict = TraceVerdict::MaxIter;

    double candidate() const { return iterates.back(); }
};

PicardTrace picard(const SelfMap& T, const DistanceStructure& p, double x0,
                   double tol, int max_iter, int window);

// Orbit-pair decay: p(T^n x, T^n y) <= tol at n = n_max for all sampled pairs.
HypothesisReport pair_decay_check(const SelfMap& T, const DistanceStructure& p,
                                  const Domain& dom, int n_max, double tol);

// The distance sequence n -> p(T^n x, T^n y) must be nonincreasing (within
// tol) for all sampled pairs; the consequence of the one-step Boyd-Wong
// inequality composed with psi(t) <= t.
HypothesisReport boyd_wong_monotonicity_check(const SelfMap& T, const DistanceStructure& p,
                                              const ScalarFunc& psi, const Domain& dom,
                                              int n_max, double tol);

struct FixedPointCheck {
    double p_forward = 0.0;     // p(u, Tu)
    double p_backward = 0.0;    // p(Tu, u)
    double metric_residual = 0.0;
    bool fixed = false;
};

// p(u,u) need not vanish, so the fixed-point decision uses the base metric;
// the p-residuals are reported alongside.
FixedPointCheck verify_fixed_point(const SelfMap& T, const DistanceStructure& p,
                                   double u, double tol);

struct ConvergenceReport {
    std::vector<PicardTrace> traces;
    std::optional<double> candidate;
    bool equiconvergent = false;
    std::optional<FixedPointCheck> fixed_point;
};

// Runs picard from every start; all traces must converge and their candidates
// must be identified pairwise: some z among the candidates and last iterates
// has p(z,u) <= tol and p(z,v) <= tol, and the base metric gap is below the
// identification tolerance.
ConvergenceReport equiconvergence(const SelfMap& T, const DistanceStructure& p,
                                  const Domain& dom, const std::vector<double>& starts,
                                  double tol, int max_iter, int window,
                                  double ident_tol = 1e-7);

// All sampled points x with base_metric(x, Tx) <= tol; PASS iff at most one
// up to the identification tolerance.
HypothesisReport uniqueness_probe(const SelfMap& T, const DistanceStructure& p,
                                  const Domain& dom, double tol, double ident_tol = 1e-7);

} // namespace fplab
