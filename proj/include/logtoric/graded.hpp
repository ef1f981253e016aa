#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logtoric/chart.hpp"
#include "logtoric/integers.hpp"
#include "logtoric/laurent.hpp"
#include "logtoric/linalg_q.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/subdivision.hpp"

namespace logtoric {

// All monoid exponents of the given weighted degree with l1-norm at most
// window, sorted.  The window bound makes the enumeration finite even when
// the monoid has units.
std::vector<IntVec> window_monomials(const AffineMonoid& monoid, const IntVec& weights,
                                     const Int& degree, const Int& window);

// The degree-d piece of a monoid ring modulo a homogeneous ideal, restricted
// to exponents of l1-norm at most window.  The ideal slice in degree d is
// spanned by the products x^m * g over windowed monomials m of complementary
// degree; reduce() maps a polynomial to exact coordinates whose kernel is
// exactly that span.  Ideals generated by monomials and by two-term
// differences are handled by a union-find on exponents; general ideals fall
// back to rational row reduction.  Both give exact answers.
class QuotientPiece {
  public:
    // force_row_reduction bypasses the union-find fast path so the two
    // implementations can be checked against each other.
    QuotientPiece(AffineMonoid ring_monoid, const std::vector<LaurentPolynomial>& ideal_gens,
                  IntVec weights, Int degree, Int window, bool force_row_reduction = false);

    const AffineMonoid& ring_monoid() const { return monoid_; }
    const Int& degree() const { return degree_; }
    const Int& window() const { return window_; }

    // The windowed degree-d monomials of the ring (the ambient basis).
    const std::vector<IntVec>& monomials() const { return window_monomials_; }

    // Monomials representing a basis of the image of the windowed degree-d
    // piece in the quotient.
    const std::vector<IntVec>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    // Length of the coordinate vectors produced by reduce(); reduce is an
    // injective linear map out of the quotient into this space.
    std::size_t embedding_dim() const { return embedding_dim_; }

    // Exact quotient coordinates of p.  Errors when a term fails the degree,
    // monoid membership, or window checks.
    std::vector<Rat> reduce(const LaurentPolynomial& p) const;

    // Whether p lies in the windowed ideal slice.
    bool is_ideal_member(const LaurentPolynomial& p) const;

  private:
    AffineMonoid monoid_;
    IntVec weights_;
    Int degree_;
    Int window_;
    std::vector<IntVec> window_monomials_;
    std::vector<IntVec> basis_;
    std::size_t embedding_dim_ = 0;
    std::map<IntVec, std::vector<Rat>> coord_of_;
};

// Whether p and q represent the same element of the quotient piece.
bool equal_in_quotient(const QuotientPiece& piece, const LaurentPolynomial& p,
                       const LaurentPolynomial& q);

// Least k in [1, max_power] with p^k in the ideal (each power tested in the
// quotient piece of its own degree), or nullopt when no such power exists in
// the range.
std::optional<unsigned> nilpotency_order_in(const AffineMonoid& ring_monoid,
                                            const std::vector<LaurentPolynomial>& ideal_gens,
                                            const IntVec& weights,
                                            const LaurentPolynomial& p, unsigned max_power,
                                            const Int& window);

// A graded quotient of an affine monoid ring together with the cover coming
// from a subdivision of the dual cone: the base ring, the chart monoids of
// the maximal cones, and the pairwise overlap monoids.  Restriction maps are
// inclusions of exponent sets, so the same ideal generators present the
// structure ring on every chart.
struct BlowupConfig {
    std::vector<std::string> var_names;         // one name per lattice coordinate
    IntVec weights;                             // grading weights
    AffineMonoid base_monoid;                   // functions on the affine base
    std::vector<LaurentPolynomial> ideal_gens;  // homogeneous, supported in base_monoid
    Subdivision fan;                            // subdivision of the dual cone of the base
    std::vector<ChartMonoid> charts;            // one per maximal cone of the fan
    // (i, j, overlap chart) for every pair i < j of maximal cones.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, ChartMonoid>> overlaps;
};

// Assembles the cover data for a fan subdividing the dual cone of the base
// monoid.  Validates name/weight ranks and that the ideal generators are
// homogeneous with exponents in the base monoid.
BlowupConfig build_blowup_config(std::vector<std::string> var_names, IntVec weights,
                                 std::vector<LaurentPolynomial> ideal_gens,
                                 const Subdivision& fan);

// The degree-d global sections comparison for a blowup cover: the degree
// piece of the base quotient, the space of section tuples agreeing on
// overlaps, and the restriction map between them, all within the window.
class SectionComputation {
  public:
    SectionComputation(const BlowupConfig& config, const Int& degree, const Int& window);

    const Int& degree() const { return degree_; }
    std::size_t chart_count() const { return chart_pieces_.size(); }

    const QuotientPiece& base_piece() const { return *base_piece_; }
    const QuotientPiece& chart_piece(std::size_t i) const { return chart_pieces_.at(i); }

    // Dimension of the windowed degree piece of the base quotient ring.
    std::size_t base_dim() const { return base_piece_->dim(); }
    // Dimension of the space of glueable section tuples.
    std::size_t gamma_dim() const { return gamma_dim_; }
    // Rank of the restriction map from the base piece to section tuples.
    std::size_t image_rank() const { return image_rank_; }
    std::size_t cokernel_dim() const { return gamma_dim_ - image_rank_; }

    // Base-ring elements (nonzero in the base quotient piece) restricting to
    // zero on every chart, with primitive integer coefficients.
    const std::vector<LaurentPolynomial>& kernel_basis() const { return kernel_basis_; }

    // Whether the per-chart sections agree on every pairwise overlap.
    bool glue_test(const std::vector<LaurentPolynomial>& sections) const;

    // Whether some base-ring element restricts to the given sections on
    // every chart simultaneously.
    bool preimage_exists(const std::vector<LaurentPolynomial>& sections) const;

  private:
    Int degree_;
    std::vector<LaurentPolynomial> gens_;
    std::optional<QuotientPiece> base_piece_;
    std::vector<QuotientPiece> chart_pieces_;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, QuotientPiece>> overlap_pieces_;
    RatMat phi_;  // stacked chart coordinates of the base piece basis monomials
    std::size_t gamma_dim_ = 0;
    std::size_t image_rank_ = 0;
    std::vector<LaurentPolynomial> kernel_basis_;

    std::vector<Rat> stack_sections(const std::vector<LaurentPolynomial>& sections) const;
};

}  // namespace logtoric
