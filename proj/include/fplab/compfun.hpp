#pragma once

#include "fplab/scalar_func.hpp"
#include "fplab/verdict.hpp"

#include <vector>

namespace fplab {

// 201 points on [0, max(2, range_hi)] plus all piece boundaries of f and
// dyadic one-sided probes b +/- 2^-j around each boundary.
std::vector<double> default_class_grid(const ScalarFunc& f, double range_hi);

// Membership in Phi: f continuous (no jump at any piece boundary, estimated
// by dyadic probing with linear extrapolation), f(t) < t for grid t > 0, and
// f(0) <= tol (forced by the other two for genuinely continuous f).
HypothesisReport check_phi_class(const ScalarFunc& f, const std::vector<double>& grid, double tol);

// Membership in Psi: f(0) <= tol, f(t) < t for grid t > 0, and upper
// semicontinuity from the right at every grid point and piece boundary
// (limsup estimated as the max over the tail half of the probe ladder).
HypothesisReport check_psi_class(const ScalarFunc& f, const std::vector<double>& grid, double tol);

// Sup-gap s_n = max over a grid of [0, range_hi] of |phi_n(t) - phi(t)| for
// n = 1..n_max; PASS when the tail of {s_n} sits below tol. The s_n series is
// reported.
HypothesisReport check_uniform_convergence(const PhiSequence& seq, double range_hi,
                                           int n_max, double tol);

// Jump detection only (the continuity half of the Phi check); used for the
// "phi_n continuous for large n" hypothesis on a sequence's tail.
HypothesisReport check_continuity(const ScalarFunc& f, double tol);

// Nondecreasing on the grid, within tol.
HypothesisReport check_nondecreasing(const ScalarFunc& f, const std::vector<double>& grid,
                                     double tol);

} // namespace fplab
