#include "logtoric/monoid.hpp"

#include "logtoric/linalg_q.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace logtoric {

namespace {

// Triangulation of a pointed cone into simplicial subcones (lists of dim()
// many independent rays): join the first ray with a triangulation of every
// facet not containing it.  The pieces cover the cone, which is all the
// Hilbert-basis candidate collection needs.
std::vector<std::vector<IntVec>> triangulate_pointed(const Cone& c) {
    const std::vector<IntVec>& rays = c.rays();
    if (rays.size() == c.dim()) return {rays};
    const IntVec& v = rays.front();
    std::vector<std::vector<IntVec>> out;
    for (const Cone& f : c.facets()) {
        if (f.contains(v)) continue;
        for (std::vector<IntVec> t : triangulate_pointed(f)) {
            t.push_back(v);
            out.push_back(std::move(t));
        }
    }
    return out;
}

Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

// All nonzero lattice points of the half-open parallelepiped
// { sum t_i w_i : 0 <= t_i < 1 }: one representative per coset of the
// sublattice spanned by the w_i, enumerated through its invariant factors.
void parallelepiped_points(const std::vector<IntVec>& w, std::set<IntVec>& out) {
    const std::size_t k = w.size();
    IntMat wm = IntMat::from_columns(w);
    SnfResult s = smith_normal_form(wm);
    std::vector<Int> diag = s.diagonal();
    RatMat winv(k, k);
    {
        RatMat wr = RatMat::from_int(wm);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rat> e(k, Rat(0));
            e[j] = Rat(1);
            auto col = rat_solve(wr, e);
            if (!col) throw MathError("internal error: simplicial rays are dependent");
            for (std::size_t i = 0; i < k; ++i) winv.at(i, j) = (*col)[i];
        }
    }
    std::vector<Int> c(k, Int(0));
    for (;;) {
        IntVec x0(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) x0[i] += s.U.at(i, j) * c[j];
        // Shift the coset representative into the half-open parallelepiped.
        IntVec x = x0;
        for (std::size_t i = 0; i < k; ++i) {
            Rat t(0);
            for (std::size_t j = 0; j < k; ++j) t += winv.at(i, j) * Rat(x0[j]);
            Int fl = rat_floor(t);
            if (fl != 0)
                for (std::size_t row = 0; row < k; ++row) x[row] -= fl * wm.at(row, i);
        }
        if (!x.is_zero()) out.insert(x);
        std::size_t pos = 0;
        while (pos < k && c[pos] + 1 == diag[pos]) c[pos++] = 0;
        if (pos == k) break;
        c[pos] += 1;
    }
}

std::vector<Rat> rational_coords(const IntMat& basis, const IntVec& v) {
    auto sol = rat_solve(basis, v);
    if (!sol) throw MathError("internal error: vector outside the rational span of the basis");
    return *sol;
}

// Quotient data for splitting a saturated sublattice (given by an HNF basis
// inside Z^r) off Z^r: projection (q × r, surjective, kernel = the lattice)
// and lift (r × q, a section of the projection).
struct SplitData {
    IntMat projection;
    IntMat lift;
};

SplitData split_off_saturated(const IntMat& sub, std::size_t r) {
    SnfResult s = smith_normal_form(sub);
    for (const Int& d : s.diagonal())
        if (d != 1) throw MathError("internal error: sublattice not saturated");
    const std::size_t u = sub.cols();
    const std::size_t q = r - u;
    SplitData out{IntMat(q, r), IntMat(r, q)};
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < r; ++j) out.projection.at(i, j) = s.Uinv.at(u + i, j);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < q; ++j) out.lift.at(i, j) = s.U.at(i, u + j);
    return out;
}

}  // namespace

std::vector<IntVec> pointed_cone_hilbert_basis(const Cone& c) {
    const std::size_t k = c.ambient_dim();
    if (!c.is_pointed()) throw MathError("internal error: Hilbert basis of a non-pointed cone");
    if (c.dim() != k) throw MathError("internal error: cone not full-dimensional");
    if (k == 0) return {};

    std::set<IntVec> candidates;
    for (const IntVec& r : c.rays()) candidates.insert(r);
    for (const std::vector<IntVec>& simplex : triangulate_pointed(c))
        parallelepiped_points(simplex, candidates);

    // Positive grading: the sum of all facet normals is strictly positive on
    // the cone minus the origin, and an element is irreducible exactly when
    // no candidate of smaller degree can be subtracted within the cone.
    IntVec grade(k);
    for (const IntVec& n : c.facet_normals()) grade = grade + n;
    std::vector<IntVec> cand(candidates.begin(), candidates.end());
    std::stable_sort(cand.begin(), cand.end(), [&](const IntVec& a, const IntVec& b) {
        Int da = dot(grade, a), db = dot(grade, b);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<IntVec> hb;
    for (const IntVec& x : cand) {
        Int dx = dot(grade, x);
        bool reducible = false;
        for (const IntVec& y : cand) {
            if (dot(grade, y) >= dx) break;
            IntVec z = x - y;
            bool inside = true;
            for (const IntVec& n : c.facet_normals())
                if (dot(n, z) < 0) {
                    inside = false;
                    break;
                }
            if (inside) {
                reducible = true;
                break;
            }
        }
        if (!reducible) hb.push_back(x);
    }
    std::sort(hb.begin(), hb.end());
    return hb;
}

namespace {

// Hilbert basis of cone ∩ Z^r for a full-dimensional cone: units split off
// through the quotient by the lineality lattice.
std::vector<IntVec> full_dim_hilbert_basis(const Cone& icone) {
    const std::size_t r = icone.ambient_dim();
    if (r == 0) return {};
    std::vector<IntVec> hb;
    if (icone.is_pointed()) {
        hb = pointed_cone_hilbert_basis(icone);
    } else {
        const IntMat& lin = icone.lineality_lattice_basis();
        SplitData sd = split_off_saturated(lin, r);
        std::vector<IntVec> qgens;
        for (const IntVec& ray : icone.rays()) qgens.push_back(sd.projection * ray);
        Cone qc = Cone::from_generators(qgens, r - lin.cols());
        for (const IntVec& h : pointed_cone_hilbert_basis(qc))
            hb.push_back(reduce_mod_lattice(sd.lift * h, lin));
        for (std::size_t j = 0; j < lin.cols(); ++j) {
            hb.push_back(lin.column(j));
            hb.push_back(-lin.column(j));
        }
        std::sort(hb.begin(), hb.end());
    }
    return hb;
}

}  // namespace

AffineMonoid::AffineMonoid(IntMat group_basis, Cone icone)
    : group_basis_(std::move(group_basis)), icone_(std::move(icone)) {
    for (const IntVec& h : full_dim_hilbert_basis(icone_))
        hilbert_basis_.push_back(group_basis_ * h);
    std::sort(hilbert_basis_.begin(), hilbert_basis_.end());
}

AffineMonoid AffineMonoid::cone_in_lattice(const Cone& c, const IntMat& lattice_gens) {
    if (lattice_gens.rows() != c.ambient_dim())
        throw MathError("lattice and cone ambient dimensions differ");
    const std::size_t d = c.ambient_dim();
    IntMat lam = hnf_column_basis(lattice_gens);
    // Restrict the cone to the lattice's span, then take the exact group of
    // the monoid: lattice ∩ span(restricted cone).
    std::vector<IntVec> span_gens;
    for (std::size_t j = 0; j < lam.cols(); ++j) {
        span_gens.push_back(lam.column(j));
        span_gens.push_back(-lam.column(j));
    }
    Cone restricted = c.intersect(Cone::from_generators(span_gens, d));
    IntMat perp = restricted.span_perp_basis();
    IntMat conditions = perp.transposed() * lam;
    IntMat inside = kernel_lattice(conditions);
    IntMat group = hnf_column_basis(lam * inside);

    std::vector<IntVec> igens;
    for (const IntVec& g : restricted.generators())
        igens.push_back(primitive_from_rational(rational_coords(group, g)));
    Cone icone = Cone::from_generators(igens, group.cols());
    return AffineMonoid(std::move(group), std::move(icone));
}

AffineMonoid AffineMonoid::saturate(const std::vector<IntVec>& gens, std::size_t ambient_dim) {
    if (gens.empty()) throw MathError("saturate requires a nonempty generator list");
    IntMat lam = hnf_column_basis(IntMat::from_columns(gens, ambient_dim));
    return cone_in_lattice(Cone::from_generators(gens, ambient_dim), lam);
}

AffineMonoid AffineMonoid::cone_points(const Cone& c) {
    return cone_in_lattice(c, IntMat::identity(c.ambient_dim()));
}

AffineMonoid AffineMonoid::free_monoid(std::size_t n) {
    return cone_points(Cone::orthant(n));
}

Cone AffineMonoid::ambient_cone() const {
    std::vector<IntVec> gens;
    for (const IntVec& g : icone_.generators()) gens.push_back(group_basis_ * g);
    return Cone::from_generators(gens, ambient_dim());
}

bool AffineMonoid::in_group(const IntVec& x) const { return in_column_lattice(group_basis_, x); }

IntVec AffineMonoid::group_coords(const IntVec& x) const {
    auto c = solve_integer(group_basis_, x);
    if (!c) throw MathError("element outside the monoid group");
    return *c;
}

IntVec AffineMonoid::from_group_coords(const IntVec& coords) const {
    return group_basis_ * coords;
}

bool AffineMonoid::contains(const IntVec& x) const {
    auto c = solve_integer(group_basis_, x);
    return c && icone_.contains(*c);
}

IntMat AffineMonoid::unit_basis() const {
    return hnf_column_basis(group_basis_ * icone_.lineality_lattice_basis());
}

std::vector<IntVec> AffineMonoid::sharp_hilbert_basis() const {
    IntMat units = unit_basis();
    std::vector<IntVec> out;
    for (const IntVec& h : hilbert_basis_)
        if (!in_column_lattice(units, h)) out.push_back(h);
    return out;
}

Int AffineMonoid::facet_pairing(std::size_t facet_index, const IntVec& x) const {
    if (facet_index >= facet_functionals().size())
        throw MathError("facet index out of range");
    return dot(facet_functionals()[facet_index], group_coords(x));
}

std::string AffineMonoid::str() const {
    std::string s = "AffineMonoid(rank=" + std::to_string(rank());
    s += ", hilbert_basis=[";
    for (std::size_t i = 0; i < hilbert_basis_.size(); ++i) {
        if (i) s += ", ";
        s += hilbert_basis_[i].str();
    }
    return s + "])";
}

std::vector<IntVec> facet_normals(const AffineMonoid& m) {
    if (!m.is_sharp()) throw MathError("monoid must be sharp");
    return m.facet_functionals();
}

FaceHandle face_from_normal_indices(const AffineMonoid& m, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (std::size_t i : indices)
        if (i >= m.facet_functionals().size())
            throw MathError("facet normal index out of range");
    Cone face = m.internal_cone().face_cut_by(indices);
    return FaceHandle{std::move(indices), face.dim()};
}

std::vector<FaceHandle> facet_handles(const AffineMonoid& m) {
    std::vector<FaceHandle> out;
    for (std::size_t i = 0; i < m.facet_functionals().size(); ++i)
        out.push_back(face_from_normal_indices(m, {i}));
    return out;
}

Localization localize_at_face(const AffineMonoid& m, const FaceHandle& f) {
    const std::size_t d = m.ambient_dim();
    const std::size_t r = m.rank();
    Cone face = m.internal_cone().face_cut_by(f.vanishing);

    std::vector<IntVec> gens;
    for (const IntVec& g : m.internal_cone().generators()) gens.push_back(m.group_basis() * g);
    for (const IntVec& g : face.generators()) gens.push_back(-(m.group_basis() * g));
    Cone localized_cone = Cone::from_generators(gens, d);
    AffineMonoid localized = AffineMonoid::cone_in_lattice(localized_cone, m.group_basis());
    if (localized.group_basis() != m.group_basis())
        throw MathError("internal error: localization changed the group");

    // Quotient M^gp/F^gp: torsion-free because the unit lattice is saturated.
    const IntMat lin = localized.internal_cone().lineality_lattice_basis();
    for (const Int& factor : lattice_quotient(IntMat::identity(r), lin))
        if (factor != 0 && factor != 1)
            throw MathError("internal error: localization quotient has torsion");
    SplitData sd = split_off_saturated(lin, r);
    std::vector<IntVec> qgens;
    for (const IntVec& ray : localized.internal_cone().rays())
        qgens.push_back(sd.projection * ray);
    const std::size_t q = r - lin.cols();
    Cone qc = Cone::from_generators(qgens, q);
    AffineMonoid sharp_quotient = AffineMonoid::cone_in_lattice(qc, IntMat::identity(q));
    return Localization{std::move(localized), std::move(sharp_quotient), sd.projection};
}

}  // namespace logtoric
