#pragma once

#include "logtoric/integers.hpp"

#include <optional>
#include <vector>

namespace logtoric {

// Exact rational linear algebra over mpq. Matrices are dense, row-major,
// small (desk scale); all routines are deterministic.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RatMat from_int(const IntMat& m);
    static RatMat from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows_hint);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// Rank of the matrix by fraction-free-ish Gauss elimination (exact mpq).
std::size_t rat_rank(const RatMat& a);

// One solution x of A x = b, if any.
std::optional<std::vector<Rat>> rat_solve(const RatMat& a, const std::vector<Rat>& b);
std::optional<std::vector<Rat>> rat_solve(const IntMat& a, const IntVec& b);

// Basis of the right nullspace {x : A x = 0}, one vector per free column,
// in column order (deterministic).
std::vector<std::vector<Rat>> rat_nullspace(const RatMat& a);

// Is v in the column span of A (over Q)?
bool in_rational_span(const IntMat& a, const IntVec& v);

// Clear denominators and divide by content: the unique primitive integer
// vector positively proportional to v. Errors on the zero vector.
IntVec primitive_from_rational(const std::vector<Rat>& v);

}  // namespace logtoric
