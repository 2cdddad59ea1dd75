#pragma once

#include "fplab/domain.hpp"
#include "fplab/scalar_func.hpp"

#include <string>
#include <vector>

namespace fplab {

// Piecewise self-map T of a closed interval [lo, hi]. Pieces partition the
// interval; the final piece is closed on the right so that hi is covered.
class SelfMap {
public:
    SelfMap(std::string name, std::vector<PieceSpec> pieces, double lo, double hi);

    static SelfMap single(std::string name, const std::string& expr, double lo, double hi);

    double operator()(double x) const;

    const std::string& name() const { return name_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    // Piece endpoints inside the domain; the decisive inputs of every
    // discontinuous example live here.
    std::vector<double> boundary_points() const;

    std::vector<PieceSpec> specs() const;

private:
    std::string name_;
    std::vector<Piece> pieces_;
    double lo_, hi_;
};

// Sample points plus the map's piece boundaries, sorted and deduplicated.
std::vector<double> sample_with_boundaries(const Domain& dom, const SelfMap& map);

} // namespace fplab
