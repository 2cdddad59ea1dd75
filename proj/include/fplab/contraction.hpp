#pragma once

#include "fplab/distance.hpp"
#include "fplab/domain.hpp"
#include "fplab/scalar_func.hpp"
#include "fplab/selfmap.hpp"
#include "fplab/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fplab {

// p(T^n x, T^n y) <= phi_n(p(x,y)) + tol over all sampled pairs (including
// the map's piece boundaries) and n = 1..n_max. Witness inputs are (x, y, n).
// An orbit leaving the domain is reported as a distinct self-map range
// failure, not as an inequality violation.
HypothesisReport check_asymptotic(const SelfMap& T, const DistanceStructure& p,
                                  const PhiSequence& seq, const Domain& dom,
                                  int n_max, double tol);

// One-step Boyd-Wong inequality p(Tx,Ty) <= psi(p(x,y)) + tol.
HypothesisReport check_boyd_wong(const SelfMap& T, const DistanceStructure& p,
                                 const ScalarFunc& psi, const Domain& dom, double tol);

// Composite hypothesis of the nondecreasing-comparison-function corollary:
// phi nondecreasing, phi continuous, phi^n_max driven below tol on the grid
// (in particular at the delta_p estimate), and the one-step inequality
// p(Tx,Ty) <= phi(p(x,y)) + tol.
HypothesisReport check_corollary_2_5(const SelfMap& T, const DistanceStructure& p,
                                     const ScalarFunc& phi, const Domain& dom,
                                     int n_max, double tol);

enum class Guarantee { Theorem31, Theorem24, Remark35, None };

const char* to_string(Guarantee g);

struct TheoremVerdict {
    Guarantee guarantee = Guarantee::None;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
};

struct SelectorInput {
    std::optional<HypothesisReport> boyd_wong;
    std::optional<HypothesisReport> psi_membership;
    std::optional<HypothesisReport> asymptotic;
    std::optional<HypothesisReport> uniform_convergence;
    std::optional<HypothesisReport> tail_continuity;
    std::optional<HypothesisReport> p_continuity;
    // (index, verdict) of per-index Phi membership of explicit sequence
    // members; informational except for the T^k fallback route.
    std::vector<std::pair<int, Verdict>> phi_k_membership;
};

// Which fixed-point guarantee applies, in priority order: the one-step
// Boyd-Wong route, the asymptotic route, the T^k fallback when a single
// explicit member lands in Phi, or none. Advisory metadata only; the solver
// always runs regardless.
TheoremVerdict select_theorem(const SelectorInput& input);

} // namespace fplab
