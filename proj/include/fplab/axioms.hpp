#pragma once

#include "fplab/distance.hpp"
#include "fplab/domain.hpp"
#include "fplab/selfmap.hpp"
#include "fplab/verdict.hpp"

#include <vector>

namespace fplab {

// Triangle inequality p(x,y) <= p(x,z) + p(z,y) over all sampled triples.
// FAIL lists up to 10 worst violations. Witness inputs are (x, y, z).
AxiomReport check_triangle(const DistanceStructure& p, const Domain& dom, double tol);

// Entourage-compatibility axiom: for each epsilon a delta = eps*2^-j
// (j = 0..20) is searched such that p(z,x) <= delta and p(z,y) <= delta force
// base_metric(x,y) < eps on all sampled triples. PASS records the
// (eps, delta) table; INCONCLUSIVE when no sampled triple ever satisfies the
// premise for some eps.
AxiomReport check_uniformity_compat(const DistanceStructure& p, const Domain& dom,
                                    const std::vector<double>& eps_grid, double tol);

struct BoundednessResult {
    double estimate = 0.0; // delta_p(X) over the sample
    AxiomReport report;
};

// Max of p over sampled pairs. The estimate is exact for the sample but only
// evidence as a global claim, so the verdict stays INCONCLUSIVE.
BoundednessResult check_p_bounded(const DistanceStructure& p, const Domain& dom);

// Numerical surrogate for p-continuity of T: for each sampled target x that
// admits points with small p(.,x), the worst image distance p(Ty,Tx) over the
// deepest nonempty threshold level must fall below max(tol, 4*threshold).
AxiomReport check_p_continuity(const SelfMap& T, const DistanceStructure& p,
                               const Domain& dom, double tol);

} // namespace fplab
