#pragma once

#include <optional>
#include <vector>

#include "logtoric/integers.hpp"

namespace logtoric {

// A = U * S * V with U, V unimodular and S diagonal, d1 | d2 | ..., di >= 0.
// Uinv and Vinv are the accumulated inverses, kept exact during reduction.
struct SnfResult {
    IntMat U, S, V, Uinv, Vinv;
    std::vector<Int> diagonal() const;
    std::size_t rank() const;  // number of nonzero diagonal entries
};

SnfResult smith_normal_form(const IntMat& a);

// v / gcd(entries). Error on the zero vector ("no primitive direction").
IntVec primitive_vector(const IntVec& v);

// Canonical column-style Hermite basis of the column lattice of a.
// Zero columns are dropped; pivots are positive, entries left of a pivot are
// reduced into [0, pivot). Unique per lattice, used for canonical bases.
IntMat hnf_column_basis(const IntMat& a);

// HNF basis of the saturation span(a) ∩ Z^rows, computed via SNF.
IntMat saturation_basis(const IntMat& a);

// HNF basis of {x : a x = 0} ∩ Z^cols (always a saturated sublattice).
IntMat kernel_lattice(const IntMat& a);

// One integer solution of a x = v, if any.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& v);

// Membership of v in the column lattice of a.
bool in_column_lattice(const IntMat& a, const IntVec& v);

// Invariant factors of (column lattice of l_gens) / (column lattice of
// s_gens), padded with zeros for the free part; length = rank(l_gens).
// Error if some column of s_gens is outside the lattice of l_gens.
std::vector<Int> lattice_quotient(const IntMat& l_gens, const IntMat& s_gens);

// Exact determinant by fraction-free (Bareiss) elimination. Square input.
Int determinant(const IntMat& a);

// Canonical coset representative of x modulo the column lattice of `basis`:
// Hermite reduction (pivot-row entries into [0, pivot)) followed, for up to
// three basis columns, by an exhaustive small-box search for the L1-smallest
// representative (ties broken lexicographically). Deterministic function of
// the coset, used wherever a lift "modulo lineality/units" must be canonical.
IntVec reduce_mod_lattice(const IntVec& x, const IntMat& basis);

}  // namespace logtoric
