#include "logtoric/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace logtoric {

std::vector<Int> SnfResult::diagonal() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::vector<Int> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(S.at(i, i));
    return d;
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace {

// Quotient with minimal-magnitude remainder, so pivots shrink fast.
Int round_quot(const Int& a, const Int& b) {
    Int q, r;
    // Floor remainder has the sign of b, so overshoot is fixed by q + 1.
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (b > 0 ? r * 2 > b : r * 2 < b) q += 1;
    return q;
}

struct SnfWork {
    IntMat S, U, V, Uinv, Vinv;

    // S := E S with E = (row i -= q * row j); U := U E^{-1}, Uinv := E Uinv.
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) -= q * S.at(j, c);
        for (std::size_t c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) -= q * Uinv.at(j, c);
        for (std::size_t r = 0; r < U.rows(); ++r) U.at(r, j) += q * U.at(r, i);
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < S.cols(); ++c) swap(S.at(i, c), S.at(j, c));
        for (std::size_t c = 0; c < Uinv.cols(); ++c) swap(Uinv.at(i, c), Uinv.at(j, c));
        for (std::size_t r = 0; r < U.rows(); ++r) swap(U.at(r, i), U.at(r, j));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) = -S.at(i, c);
        for (std::size_t c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) = -Uinv.at(i, c);
        for (std::size_t r = 0; r < U.rows(); ++r) U.at(r, i) = -U.at(r, i);
    }
    // S := S F with F = (col i -= q * col j); V := F^{-1} V, Vinv := Vinv F.
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < S.rows(); ++r) S.at(r, i) -= q * S.at(r, j);
        for (std::size_t r = 0; r < Vinv.rows(); ++r) Vinv.at(r, i) -= q * Vinv.at(r, j);
        for (std::size_t c = 0; c < V.cols(); ++c) V.at(j, c) += q * V.at(i, c);
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < S.rows(); ++r) swap(S.at(r, i), S.at(r, j));
        for (std::size_t r = 0; r < Vinv.rows(); ++r) swap(Vinv.at(r, i), Vinv.at(r, j));
        for (std::size_t c = 0; c < V.cols(); ++c) swap(V.at(i, c), V.at(j, c));
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    SnfWork w{a, IntMat::identity(m), IntMat::identity(n), IntMat::identity(m),
              IntMat::identity(n)};

    std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero pivot in the trailing submatrix.
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = w.S.at(i, j);
                    if (x == 0) continue;
                    if (!found || abs(x) < abs(w.S.at(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) goto done;  // trailing block is zero
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                w.row_sub(i, t, round_quot(w.S.at(i, t), w.S.at(t, t)));
                if (w.S.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                w.col_sub(j, t, round_quot(w.S.at(t, j), w.S.at(t, t)));
                if (w.S.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block for the chain.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.S.at(i, j) % w.S.at(t, t) != 0) {
                        w.row_sub(t, i, Int(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.S.at(t, t) < 0) w.row_negate(t);
    }
done:;
    return SnfResult{w.U, w.S, w.V, w.Uinv, w.Vinv};
}

IntVec primitive_vector(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw MathError("no primitive direction: zero vector");
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntMat hnf_column_basis(const IntMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    IntMat h = a;
    std::size_t col = 0;
    for (std::size_t row = 0; row < m && col < n; ++row) {
        // Gcd sweep: clear row entries right of `col` using column ops.
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = col; j < n; ++j)
                if (h.at(row, j) != 0 && (best == n || abs(h.at(row, j)) < abs(h.at(row, best))))
                    best = j;
            if (best == n) break;  // row is zero from col on
            if (best != col)
                for (std::size_t r = 0; r < m; ++r) swap(h.at(r, col), h.at(r, best));
            bool clean = true;
            for (std::size_t j = col + 1; j < n; ++j) {
                Int q = round_quot(h.at(row, j), h.at(row, col));
                if (q != 0)
                    for (std::size_t r = 0; r < m; ++r) h.at(r, j) -= q * h.at(r, col);
                if (h.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0)
            for (std::size_t r = 0; r < m; ++r) h.at(r, col) = -h.at(r, col);
        // Reduce earlier columns at this pivot row into [0, pivot).
        for (std::size_t j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(), h.at(row, col).get_mpz_t());
            if (q != 0)
                for (std::size_t r = 0; r < m; ++r) h.at(r, j) -= q * h.at(r, col);
        }
        ++col;
    }
    // First `col` columns form the basis; the rest are zero.
    IntMat b(m, col);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < col; ++j) b.at(i, j) = h.at(i, j);
    return b;
}

IntMat saturation_basis(const IntMat& a) {
    SnfResult s = smith_normal_form(a);
    std::size_t r = s.rank();
    IntMat b(a.rows(), r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) b.at(i, j) = s.U.at(i, j);
    return hnf_column_basis(b);
}

IntMat kernel_lattice(const IntMat& a) {
    if (a.rows() == 0) return IntMat::identity(a.cols());
    SnfResult s = smith_normal_form(a);
    std::size_t r = s.rank();
    IntMat k(a.cols(), a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k.at(i, j - r) = s.Vinv.at(i, j);
    return hnf_column_basis(k);
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& v) {
    if (v.size() != a.rows()) throw MathError("rhs rank mismatch");
    SnfResult s = smith_normal_form(a);
    IntVec y = s.Uinv * v;
    IntVec x(a.cols());
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int d = i < n ? s.S.at(i, i) : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            x[i] = y[i] / d;
        }
    }
    return s.Vinv * x;
}

bool in_column_lattice(const IntMat& a, const IntVec& v) {
    return solve_integer(a, v).has_value();
}

std::vector<Int> lattice_quotient(const IntMat& l_gens, const IntMat& s_gens) {
    // Basis of L, then coordinates of each S generator in that basis.
    SnfResult sl = smith_normal_form(l_gens);
    std::size_t r = sl.rank();
    IntMat coords(r, s_gens.cols());
    for (std::size_t j = 0; j < s_gens.cols(); ++j) {
        IntVec y = sl.Uinv * s_gens.column(j);
        for (std::size_t i = 0; i < l_gens.rows(); ++i) {
            Int d = i < std::min(l_gens.rows(), l_gens.cols()) ? sl.S.at(i, i) : Int(0);
            if (d == 0) {
                if (y[i] != 0)
                    throw MathError("sublattice generator outside the ambient lattice");
            } else {
                if (y[i] % d != 0)
                    throw MathError("sublattice generator outside the ambient lattice");
                if (i < r) coords.at(i, j) = y[i] / d;
            }
        }
    }
    SnfResult sq = smith_normal_form(coords);
    std::vector<Int> factors(r, Int(0));
    std::vector<Int> diag = sq.diagonal();
    for (std::size_t i = 0; i < diag.size() && i < r; ++i) factors[i] = diag[i];
    return factors;
}

IntVec reduce_mod_lattice(const IntVec& x, const IntMat& basis) {
    if (x.size() != basis.rows()) throw MathError("vector rank mismatch in coset reduction");
    IntMat b = hnf_column_basis(basis);
    IntVec r = x;
    // Hermite step: in an HNF basis the pivot rows increase with the column
    // index and each column is zero above its pivot, so reducing columns left
    // to right never disturbs an already-reduced pivot entry.
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::size_t p = 0;
        while (p < b.rows() && b.at(p, j) == 0) ++p;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), b.at(p, j).get_mpz_t());
        if (q != 0)
            for (std::size_t i = 0; i < b.rows(); ++i) r[i] -= q * b.at(i, j);
    }
    if (b.cols() == 0 || b.cols() > 3) return r;
    // Small exhaustive box around the Hermite representative; the offsets
    // searched depend only on that canonical representative, so the winner is
    // still a deterministic function of the coset.
    const long radius = 3;
    std::vector<long> c(b.cols(), -radius);
    IntVec best = r;
    for (;;) {
        IntVec y = r;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (c[j] != 0)
                for (std::size_t i = 0; i < b.rows(); ++i) y[i] += c[j] * b.at(i, j);
        Int ly = y.l1_norm(), lb = best.l1_norm();
        if (ly < lb || (ly == lb && y < best)) best = y;
        std::size_t k = 0;
        while (k < c.size() && c[k] == radius) c[k++] = -radius;
        if (k == c.size()) break;
        ++c[k];
    }
    return best;
}

Int determinant(const IntMat& a) {
    if (a.rows() != a.cols()) throw MathError("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace logtoric
