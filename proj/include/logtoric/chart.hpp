#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "logtoric/cone.hpp"
#include "logtoric/integers.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/subdivision.hpp"

namespace logtoric {

// The monoid data of one chart of a subdivision: a cone tau of the fan
// together with the monoid of lattice points of its dual cone.  All charts of
// one subdivision share the ambient exponent lattice Z^d, so the chart
// monoids are literally sub-monoids of a common lattice and restriction maps
// between charts are inclusions of exponent sets.
struct ChartMonoid {
    Cone tau;                             // the fan cone selecting the chart
    AffineMonoid monoid;                  // lattice points of dual(tau)
    IntMat unit_lattice;                  // basis of the invertible exponents
    std::vector<IntVec> sharp_generators; // Hilbert basis of the sharp quotient, lifted
};

// Builds the chart for a cone of the subdivision.  Errors with "cone is not a
// cone of the subdivision" when tau is not a face of any maximal cone.
ChartMonoid chart_monoid(const Subdivision& delta, const Cone& tau);

// Builds the chart of a bare cone (no subdivision membership check), e.g. for
// the overlap of two charts, whose cone is the intersection of their cones.
ChartMonoid chart_monoid_of_cone(const Cone& tau);

// Whether the monomial x^m lies in the ideal of the chart ring generated by
// the monomials x^g for g in gens, i.e. whether m - g lies in the chart
// monoid for some g.  Errors with "element outside the monoid group" when m
// or a generator is not in the chart's exponent group.
bool monomial_ideal_member(const ChartMonoid& chart, const std::vector<IntVec>& gens,
                           const IntVec& m);

// The fiber of a chart over the closed point cut out by a monomial ideal:
// the chart ring modulo the ideal generated by origin_gens.  Units of the
// chart monoid survive as units; each sharp Hilbert basis element either
// dies (lies in the ideal), survives as a nilpotent of a computed exact
// order, or survives with no power in the ideal.
struct FiberRing {
    std::size_t unit_rank = 0;
    // (exponent, least k with k*exponent in the ideal); order 1 means the
    // element itself lies in the ideal and is zero in the fiber.
    std::vector<std::pair<IntVec, Int>> nilpotent_generators;
    // Sharp generators no power of which falls in the ideal.
    std::vector<IntVec> non_nilpotent_generators;

    std::string str() const;
};

// Errors with "an origin generator is a unit on this chart" when some
// generator of the ideal is invertible on the chart (the fiber is empty).
FiberRing fiber_ring(const ChartMonoid& chart, const std::vector<IntVec>& origin_gens);

}  // namespace logtoric
