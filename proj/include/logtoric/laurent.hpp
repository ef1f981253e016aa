#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logtoric/integers.hpp"

namespace logtoric {

// A Laurent polynomial with exact rational coefficients, stored as a sparse
// map from integer exponent vectors to nonzero coefficients.  The exponent
// lattice has a fixed rank; all arithmetic checks rank compatibility.
class LaurentPolynomial {
  public:
    // The zero polynomial on a lattice of the given rank.
    explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

    // A single term coeff * x^expo (the zero polynomial when coeff is 0).
    static LaurentPolynomial monomial(const IntVec& expo, const Rat& coeff = Rat(1));

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<IntVec, Rat>& terms() const { return terms_; }

    // Coefficient of x^expo (0 when the term is absent).
    Rat coefficient(const IntVec& expo) const;

    // Adds coeff * x^expo in place, erasing the term if it cancels.
    void add_term(const IntVec& expo, const Rat& coeff);

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const Rat& scalar) const;
    friend LaurentPolynomial operator*(const Rat& scalar, const LaurentPolynomial& p) {
        return p * scalar;
    }

    bool operator==(const LaurentPolynomial& other) const {
        return rank_ == other.rank_ && terms_ == other.terms_;
    }
    bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

    // Multiplication by the monomial x^expo.
    LaurentPolynomial shifted(const IntVec& expo) const;

    // Non-negative integer power.
    LaurentPolynomial pow(unsigned exponent) const;

    // The common value of <weights, expo> over all terms, or nullopt when the
    // polynomial is zero or the terms have mixed weighted degrees.
    std::optional<Int> homogeneous_degree(const IntVec& weights) const;

    // True when every term has weighted degree d.  The zero polynomial is
    // homogeneous of every degree.
    bool is_homogeneous_of(const IntVec& weights, const Int& degree) const;

    // Deterministic rendering, e.g. "x^(1,-2) + 3*x^(0,1) - 1/2".
    std::string str() const;

  private:
    std::size_t rank_;
    std::map<IntVec, Rat> terms_;
};

// Applies a monomial substitution: variable i of a rank-v exponent lattice is
// sent to the monomial with exponent images[i] in a rank-d lattice.  A term
// c * x^e becomes c * x^(sum_i e_i * images[i]); like terms are combined.
LaurentPolynomial substitute_monomial_map(const LaurentPolynomial& p,
                                          const std::vector<IntVec>& images);

}  // namespace logtoric
