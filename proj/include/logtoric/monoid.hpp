#pragma once

#include "logtoric/cone.hpp"
#include "logtoric/integers.hpp"
#include "logtoric/lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logtoric {

// A fine saturated affine monoid: the lattice points of a rational polyhedral
// cone inside a finitely generated subgroup of Z^d.  Stored as
//   group_basis   HNF basis of the group of differences          (d × r)
//   internal cone full-dimensional cone in the basis coordinates (in Z^r)
// so the monoid is { L·c : c in internal_cone ∩ Z^r }.  Both fields are
// canonical, so == is monoid equality.  The Hilbert basis is computed at
// construction; instances are immutable and safe to share across threads.
class AffineMonoid {
  public:
    AffineMonoid() : group_basis_(0, 0), icone_(Cone::zero(0)) {}

    // The saturation cone(gens) ∩ group(gens) of the monoid generated by
    // `gens`; equals that monoid exactly when it was saturated.
    static AffineMonoid saturate(const std::vector<IntVec>& gens, std::size_t ambient_dim);

    // Lattice points of `c` lying in the column lattice of `lattice_gens`.
    static AffineMonoid cone_in_lattice(const Cone& c, const IntMat& lattice_gens);

    // Lattice points of `c` in the full ambient lattice Z^d.
    static AffineMonoid cone_points(const Cone& c);

    // N^n with its standard basis.
    static AffineMonoid free_monoid(std::size_t n);

    std::size_t ambient_dim() const { return group_basis_.rows(); }
    std::size_t rank() const { return group_basis_.cols(); }
    const IntMat& group_basis() const { return group_basis_; }
    const Cone& internal_cone() const { return icone_; }
    Cone ambient_cone() const;

    bool in_group(const IntVec& x) const;
    // Coordinates of x in the group basis; error if x is outside the group.
    IntVec group_coords(const IntVec& x) const;
    IntVec from_group_coords(const IntVec& coords) const;
    bool contains(const IntVec& x) const;

    bool is_sharp() const { return icone_.is_pointed(); }
    std::size_t unit_rank() const { return icone_.lineality_dim(); }
    // HNF basis of the unit group, in ambient coordinates (d × unit_rank).
    IntMat unit_basis() const;

    // Minimal generating set, ambient coordinates, sorted.  For non-sharp
    // monoids: plus/minus a basis of the units followed by canonical lifts of
    // the sharp quotient's Hilbert basis.
    const std::vector<IntVec>& hilbert_basis() const { return hilbert_basis_; }
    // The non-unit Hilbert basis elements only.
    std::vector<IntVec> sharp_hilbert_basis() const;

    // One primitive functional per facet of the cone, as values on the group
    // basis columns (i.e. vectors in the dual of Z^r).
    const std::vector<IntVec>& facet_functionals() const { return icone_.facet_normals(); }
    // Pairing of the i-th facet functional with an ambient group element.
    Int facet_pairing(std::size_t facet_index, const IntVec& x) const;

    friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
        return a.group_basis_ == b.group_basis_ && a.icone_ == b.icone_;
    }
    friend bool operator!=(const AffineMonoid& a, const AffineMonoid& b) { return !(a == b); }

    std::string str() const;

  private:
    AffineMonoid(IntMat group_basis, Cone icone);

    IntMat group_basis_;
    Cone icone_;
    std::vector<IntVec> hilbert_basis_;
};

// One primitive dual vector per facet, nonnegative on the monoid (in group
// coordinates).  Errors with "monoid must be sharp" on non-sharp input.
std::vector<IntVec> facet_normals(const AffineMonoid& m);

// A face of the monoid's cone, named by the facet functionals vanishing on it.
struct FaceHandle {
    std::vector<std::size_t> vanishing;  // indices into facet_functionals()
    std::size_t face_rank;
};

FaceHandle face_from_normal_indices(const AffineMonoid& m, std::vector<std::size_t> indices);
// Handles for all facets, in facet_functionals() order.
std::vector<FaceHandle> facet_handles(const AffineMonoid& m);

struct Localization {
    // M + (−F), same ambient lattice and group as M.
    AffineMonoid localized;
    // The localization divided by its units, in the quotient lattice Z^q.
    AffineMonoid sharp_quotient;
    // q × rank(M): sends group coordinates to quotient coordinates; the
    // quotient group M^gp/F^gp is torsion-free, hence identified with Z^q.
    IntMat coord_projection;
};

Localization localize_at_face(const AffineMonoid& m, const FaceHandle& f);

// Hilbert basis of a pointed cone that is full-dimensional in its ambient
// space: parallelepiped candidates over a triangulation, then minimalized.
std::vector<IntVec> pointed_cone_hilbert_basis(const Cone& c);

}  // namespace logtoric
