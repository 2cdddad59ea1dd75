#pragma once

#include "fplab/domain.hpp"
#include "fplab/verdict.hpp"

#include <functional>
#include <string>

namespace fplab {

// A candidate E-distance p(x,y) >= 0 together with the base metric that
// induces the uniformity. p need not be symmetric and p(x,x) may be nonzero;
// the declared_* flags record what the definition claims, never what the
// checkers assume.
struct DistanceStructure {
    std::string name;
    std::function<double(double, double)> eval;
    std::function<double(double, double)> base_metric;
    bool declared_symmetric = false;
    bool declared_reflexive = false;

    static DistanceStructure euclidean();        // p(x,y) = |x-y|
    static DistanceStructure range_projection(); // p(x,y) = y
    static DistanceStructure max_pair();         // p(x,y) = max{x,y}
    static DistanceStructure from_expr(std::string name, const std::string& expr_xy,
                                       const Domain& dom);
};

// Sample-level invariants: nonnegativity and totality of p, metric axioms of
// the base metric, the declared symmetry/reflexivity flags. Informational
// witnesses report the worst asymmetry and the largest p(x,x) when the
// corresponding flag is not declared.
Report validate_distance(const DistanceStructure& p, const Domain& dom, double tol);

} // namespace fplab
