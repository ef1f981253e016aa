#include "logtoric/saturation.hpp"

#include "logtoric/lattice.hpp"

#include <algorithm>
#include <optional>

namespace logtoric {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

bool is_saturated_element(const AffineMonoid& m, const IntVec& alpha,
                          PairingConvention convention) {
    IntVec a = m.group_coords(alpha);
    for (const IntVec& v : m.facet_functionals()) {
        Int p = dot(v, a);
        if (p == 1 || p == -1) continue;
        if (p == 0 && convention == PairingConvention::permissive) continue;
        return false;
    }
    return true;
}

bool adjoined_contains(const AffineMonoid& m, const IntVec& alpha, const IntVec& x) {
    if (!m.in_group(x)) return false;
    IntVec a = m.group_coords(alpha);
    IntVec xc = m.group_coords(x);
    // x - k·alpha lies in M exactly when every facet functional is still
    // nonnegative; each functional bounds the feasible k from one side.
    Int lo(0);
    std::optional<Int> hi;
    for (const IntVec& v : m.facet_functionals()) {
        Int pa = dot(v, a);
        Int px = dot(v, xc);
        if (pa == 0) {
            if (px < 0) return false;
        } else if (pa > 0) {
            Int bound = floor_div(px, pa);
            if (!hi || bound < *hi) hi = bound;
        } else {
            Int bound = ceil_div(px, pa);
            if (bound > lo) lo = bound;
        }
    }
    return !hi || lo <= *hi;
}

AdjoinResult adjoin_element(const AffineMonoid& m, const IntVec& alpha) {
    if (m.contains(alpha)) return AdjoinResult{m.hilbert_basis(), m, true};
    m.group_coords(alpha);  // validate membership in the group
    std::vector<IntVec> gens = m.hilbert_basis();
    gens.push_back(alpha);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    AffineMonoid sat = AffineMonoid::saturate(gens, m.ambient_dim());
    bool saturated = true;
    for (const IntVec& h : sat.hilbert_basis())
        if (!adjoined_contains(m, alpha, h)) {
            saturated = false;
            break;
        }
    return AdjoinResult{std::move(gens), std::move(sat), saturated};
}

KummerExtension kummer_extension(const AffineMonoid& m, const IntVec& alpha, const Int& n) {
    if (n < 1) throw MathError("root order must be positive");
    m.group_coords(alpha);  // validate membership in the group
    const IntMat& l = m.group_basis();
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < l.cols(); ++j) cols.push_back(n * l.column(j));
    IntMat scaled_base = IntMat::from_columns(cols, m.ambient_dim());
    cols.push_back(alpha);
    IntMat ext = hnf_column_basis(IntMat::from_columns(cols, m.ambient_dim()));
    Int index(1);
    for (const Int& f : lattice_quotient(ext, scaled_base)) {
        if (f == 0) throw MathError("internal error: Kummer extension has infinite index");
        index *= f;
    }
    AffineMonoid extended = AffineMonoid::cone_in_lattice(m.ambient_cone(), ext);
    return KummerExtension{m, std::move(ext), n, std::move(index), std::move(extended)};
}

RootResult minimal_saturating_root(const AffineMonoid& m, const IntVec& alpha) {
    if (!m.is_sharp()) throw MathError("monoid must be sharp");
    IntVec a = m.group_coords(alpha);
    Int n(1);
    for (const IntVec& v : m.facet_functionals()) {
        Int p = dot(v, a);
        if (p == 0)
            throw MathError(
                "element lies in a facet hyperplane; no Kummer extension can saturate it");
        n = lcm_int(n, p < 0 ? Int(-p) : p);
    }
    KummerExtension ext = kummer_extension(m, alpha, n);
    // In the scaled representation, alpha itself stands for alpha/n.
    if (!is_saturated_element(ext.extended_monoid, alpha, PairingConvention::strict))
        throw MathError("internal error: root extension failed to saturate the element");
    return RootResult{std::move(n), std::move(ext)};
}

FiberDescription fiber_trichotomy(const AffineMonoid& m, const IntVec& alpha) {
    if (!m.is_sharp()) throw MathError("monoid must be sharp");
    m.group_coords(alpha);  // validate membership in the group
    if (m.contains(alpha))
        return FiberDescription{FiberKind::same_point, m.hilbert_basis(), m, true, alpha};
    if (m.contains(-alpha))
        return FiberDescription{FiberKind::empty, m.hilbert_basis(), m, true, alpha};
    AdjoinResult ar = adjoin_element(m, alpha);
    return FiberDescription{FiberKind::line_total_space, std::move(ar.generators),
                            std::move(ar.saturation), ar.is_saturated, alpha};
}

std::string to_string(FiberKind k) {
    switch (k) {
        case FiberKind::same_point:
            return "same_point";
        case FiberKind::empty:
            return "empty";
        default:
            return "line_total_space";
    }
}

}  // namespace logtoric
