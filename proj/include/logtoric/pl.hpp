#pragma once

#include "logtoric/integers.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/subdivision.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logtoric {

// An integral piecewise-linear function on a subdivision: one linear form per
// maximal cone, agreeing on shared faces.  Parts are stored as ambient dual
// vectors, canonicalized modulo forms vanishing on the span of the base, so
// == is equality of functions.
class PLFunction {
  public:
    // Validating constructor: errors with "linear parts disagree on a shared
    // face" unless all pairs of parts agree on the pairwise intersections.
    static PLFunction make(const Subdivision& s, std::vector<IntVec> parts);
    // Skips the agreement check (for building negative examples).
    static PLFunction unchecked(const Subdivision& s, std::vector<IntVec> parts);

    const Subdivision& subdivision() const { return subdivision_; }
    const std::vector<IntVec>& parts() const { return parts_; }
    const IntVec& part(std::size_t i) const { return parts_[i]; }

    // Value at a lattice point of the base cone.
    Int evaluate(const IntVec& x) const;
    // Whether the function is globally linear.
    bool is_linear() const;
    // Whether all parts agree on all pairwise intersections.
    bool is_valid() const;

    PLFunction operator+(const PLFunction& o) const;
    PLFunction operator-(const PLFunction& o) const;
    PLFunction operator-() const;
    friend PLFunction operator*(const Int& k, const PLFunction& f);

    friend bool operator==(const PLFunction& a, const PLFunction& b) {
        return a.subdivision_ == b.subdivision_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const PLFunction& a, const PLFunction& b) { return !(a == b); }

    std::string str() const;

  private:
    PLFunction(Subdivision s, std::vector<IntVec> parts);

    Subdivision subdivision_;
    std::vector<IntVec> parts_;
};

// The free abelian group of integral PL functions on a subdivision, with a
// canonical basis and exact coordinate maps.
class PLSections {
  public:
    explicit PLSections(const Subdivision& s);

    const Subdivision& subdivision() const { return subdivision_; }
    const std::vector<PLFunction>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    // Coordinates of f in the basis; errors if f lives on a different
    // subdivision (every valid integral PL function is in the lattice).
    IntVec coords_of(const PLFunction& f) const;
    PLFunction from_coords(const IntVec& u) const;
    // The globally linear function given by an ambient dual vector.
    PLFunction linear_function(const IntVec& alpha) const;
    // Coordinates of the sublattice of globally linear functions (one column
    // per basis direction of the dual of the base's span).
    IntMat linear_sublattice() const;

  private:
    Subdivision subdivision_;
    IntMat span_basis_;     // d x s basis of the base's span lattice
    IntMat kernel_;         // (m*s) x t basis of the solution lattice
    std::vector<PLFunction> basis_;
};

// Basis of the lattice of integral PL functions on the subdivision.
PLSections pl_sections(const Subdivision& s);

struct NonnegPL {
    PLSections sections;
    // Monoid of PL functions nonnegative on every maximal cone, in the
    // coordinates of sections.basis().
    AffineMonoid monoid;
    // The globally linear members: the dual cone of the base intersected
    // with the dual lattice, in ambient dual coordinates.
    AffineMonoid linear_slice;
};

// The nonnegative-PL monoid of a subdivision together with its linear slice.
NonnegPL nonneg_pl_monoid(const Subdivision& s);

// Invariant factors of (PL functions)/(linear functions): zeros mark free
// summands, ones trivial summands; torsion would be reported as an error.
std::vector<Int> pic_of_subdivision(const Subdivision& s);

// Whether the characters induced by f on two nested cones of the subdivision
// agree: the part of f at tau1 restricts to the part at tau2 on tau2's span.
bool character_compatibility(const PLFunction& f, const Cone& tau1, const Cone& tau2);

// Transport f to a refinement of its subdivision.
PLFunction refine_pl_function(const PLFunction& f, const Subdivision& finer);

}  // namespace logtoric
