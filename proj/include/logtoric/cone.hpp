#pragma once

#include "logtoric/integers.hpp"
#include "logtoric/lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logtoric {

// Rational polyhedral cone inside a fixed lattice Z^d, stored in a canonical
// double description:
//   span_basis        HNF basis of span(cone) ∩ Z^d               (d × s)
//   lineality_basis   HNF basis of (largest linear subspace) ∩ Z^d (d × l)
//   rays              primitive generators of the extreme rays modulo
//                     lineality, lifted canonically and sorted
//   facet_normals     primitive supporting functionals cutting the facets,
//                     one per facet, canonical lifts, sorted
// Every field is a deterministic function of the cone as a set, so two Cone
// values compare equal exactly when they describe the same cone.
class Cone {
  public:
    Cone() : ambient_dim_(0) {}

    // The cone generated by `gens` in Z^ambient_dim (zero vectors ignored;
    // empty list gives the zero cone).
    static Cone from_generators(const std::vector<IntVec>& gens, std::size_t ambient_dim);

    // {x : <n, x> >= 0 for n in normals, <e, x> = 0 for e in equalities}.
    static Cone from_inequalities(const std::vector<IntVec>& normals,
                                  const std::vector<IntVec>& equalities,
                                  std::size_t ambient_dim);

    static Cone zero(std::size_t ambient_dim);
    static Cone full_space(std::size_t ambient_dim);
    // The nonnegative orthant of Z^ambient_dim.
    static Cone orthant(std::size_t ambient_dim);

    // Polar dual {y : <y, x> >= 0 for all x in the cone}.
    Cone dual() const;

    Cone intersect(const Cone& other) const;

    bool contains(const IntVec& x) const;
    // Relative-interior membership (positive on every facet functional).
    bool relint_contains(const IntVec& x) const;
    bool contains_cone(const Cone& other) const;

    // Face cut out by the listed facet normals (indices into facet_normals()).
    Cone face_cut_by(const std::vector<std::size_t>& normal_indices) const;
    // All codimension-one faces.
    std::vector<Cone> facets() const;
    // Is this cone a face of sigma (the improper face sigma itself included)?
    bool is_face_of(const Cone& sigma) const;

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return span_basis_.cols(); }
    std::size_t lineality_dim() const { return lineality_basis_.cols(); }
    bool is_pointed() const { return lineality_dim() == 0; }

    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& facet_normals() const { return facet_normals_; }
    const IntMat& span_lattice_basis() const { return span_basis_; }
    const IntMat& lineality_lattice_basis() const { return lineality_basis_; }
    // HNF basis of {y : <y, x> = 0 for all x in span}.
    IntMat span_perp_basis() const;

    // rays plus +/- the lineality basis columns: generate the cone.
    std::vector<IntVec> generators() const;
    // A lattice point in the relative interior (zero for linear subspaces).
    IntVec relint_point() const;

    friend bool operator==(const Cone& a, const Cone& b);
    friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }
    // Arbitrary but deterministic total order, for canonical sorting.
    friend bool operator<(const Cone& a, const Cone& b);

    std::string str() const;

  private:
    std::size_t ambient_dim_;
    IntMat span_basis_;
    IntMat lineality_basis_;
    std::vector<IntVec> rays_;
    std::vector<IntVec> facet_normals_;
};

// Extreme rays of the dual cone {y : <y, v> >= 0 for all v in vecs} of a
// FULL-DIMENSIONAL cone spanned by vecs in Z^dim: primitive, deduplicated,
// sorted. (Equivalently: the facet normals of cone(vecs).)
std::vector<IntVec> extreme_rays_of_dual(const std::vector<IntVec>& vecs, std::size_t dim);

}  // namespace logtoric
