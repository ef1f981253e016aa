#include "logtoric/linalg_q.hpp"

#include <utility>

namespace logtoric {

RatMat RatMat::from_int(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMat RatMat::from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows_hint) {
    std::size_t rows = rows_hint;
    for (const auto& c : cols) rows = std::max(rows, c.size());
    RatMat r(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) r.at(i, j) = cols[j][i];
    return r;
}

namespace {

struct Echelon {
    RatMat m;                        // reduced row echelon form
    std::vector<std::size_t> pivot_cols;  // pivot column per pivot row
};

// Reduced row echelon form with deterministic pivoting (first nonzero in
// column order).
Echelon rref(RatMat m) {
    Echelon e{std::move(m), {}};
    RatMat& a = e.m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Rat inv = a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) /= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

std::size_t rat_rank(const RatMat& a) { return rref(a).pivot_cols.size(); }

std::optional<std::vector<Rat>> rat_solve(const RatMat& a, const std::vector<Rat>& b) {
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = i < b.size() ? b[i] : Rat(0);
    }
    Echelon e = rref(std::move(aug));
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        if (e.pivot_cols[r] == a.cols()) return std::nullopt;  // pivot in the b column
        x[e.pivot_cols[r]] = e.m.at(r, a.cols());
    }
    return x;
}

std::optional<std::vector<Rat>> rat_solve(const IntMat& a, const IntVec& b) {
    std::vector<Rat> rb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rb[i] = Rat(b[i]);
    return rat_solve(RatMat::from_int(a), rb);
}

std::vector<std::vector<Rat>> rat_nullspace(const RatMat& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(a.cols(), Rat(0));
        v[free_col] = Rat(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_rational_span(const IntMat& a, const IntVec& v) {
    std::vector<Rat> b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = Rat(v[i]);
    return rat_solve(RatMat::from_int(a), b).has_value();
}

IntVec primitive_from_rational(const std::vector<Rat>& v) {
    Int den(1);
    for (const auto& q : v) den = lcm_int(den, Int(q.get_den()));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(den);
        scaled.canonicalize();
        w[i] = Int(scaled.get_num());
    }
    Int c = content(w);
    if (c == 0) throw MathError("no primitive direction: zero vector");
    for (std::size_t i = 0; i < w.size(); ++i) w[i] /= c;
    return w;
}

}  // namespace logtoric
