#pragma once

#include "logtoric/cone.hpp"
#include "logtoric/integers.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logtoric {

// A fan subdivision of a cone: finitely many maximal cones of the same
// dimension as the base whose union is the base and whose pairwise
// intersections are common faces.  Only maximal cones are stored; lower
// dimensional cones of the fan are faces derived on demand.  The maximal
// cones are kept sorted, so == is subdivision equality.
class Subdivision {
  public:
    // The one-cone subdivision {base}.
    static Subdivision trivial(const Cone& base);

    // Validates the fan axioms: containment, dimension, pairwise common
    // faces, the interior-wall matching condition, and covering of sampled
    // rational points of the base.
    static Subdivision from_cones(const Cone& base, std::vector<Cone> maximal);

    const Cone& base() const { return base_; }
    const std::vector<Cone>& maximal_cones() const { return maximal_; }
    std::size_t size() const { return maximal_.size(); }
    bool is_trivial() const { return maximal_.size() == 1; }

    // Indices of the maximal cones containing x.
    std::vector<std::size_t> cones_containing(const IntVec& x) const;
    // Whether c occurs as a face of some maximal cone.
    bool is_cone_of(const Cone& c) const;
    // Whether every maximal cone of *this lies inside a maximal cone of
    // `coarser` (and the bases agree).
    bool is_refinement_of(const Subdivision& coarser) const;

    friend bool operator==(const Subdivision& a, const Subdivision& b) {
        return a.base_ == b.base_ && a.maximal_ == b.maximal_;
    }
    friend bool operator!=(const Subdivision& a, const Subdivision& b) { return !(a == b); }

    std::string str() const;

  private:
    Subdivision(Cone base, std::vector<Cone> maximal);

    Cone base_;
    std::vector<Cone> maximal_;
};

// Splits sigma into sigma ∩ {alpha ≥ 0} and sigma ∩ {alpha ≤ 0}, omitting
// lower-dimensional pieces; the trivial subdivision when alpha has constant
// sign on sigma.
Subdivision hyperplane_subdivision(const Cone& sigma, const IntVec& alpha);

// Star subdivision at a ray through the relative interior of sigma: one
// maximal cone cone(rho, F) per facet F of sigma.  Errors with "star center
// must be interior" when rho lies on the boundary.
Subdivision star_subdivision(const Cone& sigma, const IntVec& rho);

// Cuts every maximal cone of the subdivision along the hyperplane alpha = 0
// and recollects the full-dimensional pieces.  Cones on which alpha has
// constant sign pass through unchanged.
Subdivision refine_by_hyperplane(const Subdivision& delta, const IntVec& alpha);

}  // namespace logtoric
