#include "logtoric/cone.hpp"

#include "logtoric/linalg_q.hpp"

#include <algorithm>
#include <set>

namespace logtoric {

std::vector<IntVec> extreme_rays_of_dual(const std::vector<IntVec>& vecs, std::size_t dim) {
    // Every facet of a full-dimensional cone contains dim-1 linearly
    // independent generators, so each facet normal shows up as the
    // one-dimensional kernel of some (dim-1)-subset; a candidate survives
    // when all its pairings with the generators share one sign.
    if (dim == 0) return {};
    const std::size_t k = dim - 1;
    const std::size_t n = vecs.size();
    if (n < k) return {};
    std::set<IntVec> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<IntVec> rows;
        rows.reserve(k);
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) rows.push_back(vecs[i]);
        IntMat ker = kernel_lattice(IntMat::from_rows(rows, dim));
        if (ker.cols() != 1) continue;
        IntVec cand = ker.column(0);
        bool nonneg = true, nonpos = true;
        for (const IntVec& v : vecs) {
            int s = sgn(dot(cand, v));
            if (s > 0) nonpos = false;
            if (s < 0) nonneg = false;
            if (!nonneg && !nonpos) break;
        }
        if (nonneg)
            out.insert(cand);
        else if (nonpos)
            out.insert(-cand);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return std::vector<IntVec>(out.begin(), out.end());
}

Cone Cone::from_generators(const std::vector<IntVec>& gens_in, std::size_t ambient_dim) {
    std::vector<IntVec> gens;
    for (const IntVec& g : gens_in) {
        if (g.size() != ambient_dim) throw MathError("generator rank mismatch");
        if (!g.is_zero()) gens.push_back(g);
    }
    Cone c;
    c.ambient_dim_ = ambient_dim;
    if (gens.empty()) {
        c.span_basis_ = IntMat(ambient_dim, 0);
        c.lineality_basis_ = IntMat(ambient_dim, 0);
        return c;
    }

    // Saturated lattice basis of the span; all further work happens in its
    // coordinates, where the cone is full-dimensional.
    IntMat B = saturation_basis(IntMat::from_columns(gens, ambient_dim));
    const std::size_t s = B.cols();
    std::vector<IntVec> gi;
    gi.reserve(gens.size());
    for (const IntVec& g : gens) {
        auto x = solve_integer(B, g);
        if (!x) throw MathError("internal error: generator outside its saturated span lattice");
        gi.push_back(*x);
    }

    std::vector<IntVec> normals_int = extreme_rays_of_dual(gi, s);
    IntMat lin_int = kernel_lattice(IntMat::from_rows(normals_int, s));
    const std::size_t l = lin_int.cols();
    const std::size_t q = s - l;

    std::vector<IntVec> rays_int;
    if (q > 0) {
        // Split off the lineality: project to the quotient of the span
        // lattice (torsion-free since the lineality lattice is saturated),
        // take extreme rays there, lift back with zero complement.
        SnfResult sl = smith_normal_form(lin_int);
        for (const Int& dg : sl.diagonal())
            if (dg != 1) throw MathError("internal error: lineality lattice not saturated");
        IntMat lift(s, q);  // last q columns of U: a basis of a complement
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < q; ++j) lift.at(i, j) = sl.U.at(i, l + j);
        std::vector<IntVec> nq;  // normals pushed to the quotient: lift^T n
        nq.reserve(normals_int.size());
        for (const IntVec& nv : normals_int) {
            IntVec nn(q);
            for (std::size_t j = 0; j < q; ++j)
                for (std::size_t i = 0; i < s; ++i) nn[j] += lift.at(i, j) * nv[i];
            nq.push_back(nn);
        }
        for (const IntVec& r : extreme_rays_of_dual(nq, q)) rays_int.push_back(lift * r);
    }

    // Back to ambient coordinates.
    c.span_basis_ = B;
    c.lineality_basis_ = hnf_column_basis(B * lin_int);
    for (const IntVec& r : rays_int)
        c.rays_.push_back(reduce_mod_lattice(B * r, c.lineality_basis_));
    std::sort(c.rays_.begin(), c.rays_.end());

    // Ambient facet normals: n_amb^T = (n_int^T Vinv | 0) Uinv for the SNF of
    // B (whose invariant factors are all 1, B being saturated), then reduced
    // modulo the span-perp lattice to a canonical lift.
    SnfResult sb = smith_normal_form(B);
    for (const Int& dg : sb.diagonal())
        if (dg != 1) throw MathError("internal error: span basis not saturated");
    IntMat W = kernel_lattice(B.transposed());
    for (const IntVec& nv : normals_int) {
        IntVec y(s);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < s; ++i) y[j] += nv[i] * sb.Vinv.at(i, j);
        IntVec namb(ambient_dim);
        for (std::size_t col = 0; col < ambient_dim; ++col)
            for (std::size_t i = 0; i < s; ++i) namb[col] += y[i] * sb.Uinv.at(i, col);
        c.facet_normals_.push_back(reduce_mod_lattice(namb, W));
    }
    std::sort(c.facet_normals_.begin(), c.facet_normals_.end());
    return c;
}

Cone Cone::from_inequalities(const std::vector<IntVec>& normals,
                             const std::vector<IntVec>& equalities, std::size_t ambient_dim) {
    std::vector<IntVec> gens = normals;
    for (const IntVec& e : equalities) {
        gens.push_back(e);
        gens.push_back(-e);
    }
    return from_generators(gens, ambient_dim).dual();
}

Cone Cone::zero(std::size_t ambient_dim) { return from_generators({}, ambient_dim); }

Cone Cone::full_space(std::size_t ambient_dim) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        IntVec e(ambient_dim);
        e[i] = 1;
        gens.push_back(e);
        gens.push_back(-e);
    }
    return from_generators(gens, ambient_dim);
}

Cone Cone::orthant(std::size_t ambient_dim) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        IntVec e(ambient_dim);
        e[i] = 1;
        gens.push_back(e);
    }
    return from_generators(gens, ambient_dim);
}

IntMat Cone::span_perp_basis() const { return kernel_lattice(span_basis_.transposed()); }

Cone Cone::dual() const {
    std::vector<IntVec> gens = facet_normals_;
    IntMat w = span_perp_basis();
    for (std::size_t j = 0; j < w.cols(); ++j) {
        gens.push_back(w.column(j));
        gens.push_back(-w.column(j));
    }
    return from_generators(gens, ambient_dim_);
}

Cone Cone::intersect(const Cone& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw MathError("ambient dimension mismatch");
    std::vector<IntVec> normals = facet_normals_;
    normals.insert(normals.end(), other.facet_normals_.begin(), other.facet_normals_.end());
    std::vector<IntVec> eqs;
    for (const IntMat& w : {span_perp_basis(), other.span_perp_basis()})
        for (std::size_t j = 0; j < w.cols(); ++j) eqs.push_back(w.column(j));
    return from_inequalities(normals, eqs, ambient_dim_);
}

bool Cone::contains(const IntVec& x) const {
    if (x.size() != ambient_dim_) throw MathError("point rank mismatch");
    if (!in_rational_span(span_basis_, x)) return false;
    for (const IntVec& n : facet_normals_)
        if (dot(n, x) < 0) return false;
    return true;
}

bool Cone::relint_contains(const IntVec& x) const {
    if (x.size() != ambient_dim_) throw MathError("point rank mismatch");
    if (!in_rational_span(span_basis_, x)) return false;
    for (const IntVec& n : facet_normals_)
        if (dot(n, x) <= 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const IntVec& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

Cone Cone::face_cut_by(const std::vector<std::size_t>& normal_indices) const {
    std::vector<IntVec> eqs;
    for (std::size_t i : normal_indices) {
        if (i >= facet_normals_.size()) throw MathError("facet normal index out of range");
        eqs.push_back(facet_normals_[i]);
    }
    IntMat w = span_perp_basis();
    for (std::size_t j = 0; j < w.cols(); ++j) eqs.push_back(w.column(j));
    return from_inequalities(facet_normals_, eqs, ambient_dim_);
}

std::vector<Cone> Cone::facets() const {
    std::vector<Cone> fs;
    fs.reserve(facet_normals_.size());
    for (std::size_t i = 0; i < facet_normals_.size(); ++i) fs.push_back(face_cut_by({i}));
    return fs;
}

bool Cone::is_face_of(const Cone& sigma) const {
    if (ambient_dim_ != sigma.ambient_dim_) throw MathError("ambient dimension mismatch");
    if (!sigma.contains_cone(*this)) return false;
    std::vector<IntVec> gens = generators();
    std::vector<std::size_t> vanishing;
    for (std::size_t i = 0; i < sigma.facet_normals_.size(); ++i) {
        bool flat = true;
        for (const IntVec& g : gens)
            if (dot(sigma.facet_normals_[i], g) != 0) {
                flat = false;
                break;
            }
        if (flat) vanishing.push_back(i);
    }
    return *this == sigma.face_cut_by(vanishing);
}

std::vector<IntVec> Cone::generators() const {
    std::vector<IntVec> gens = rays_;
    for (std::size_t j = 0; j < lineality_basis_.cols(); ++j) {
        gens.push_back(lineality_basis_.column(j));
        gens.push_back(-lineality_basis_.column(j));
    }
    return gens;
}

IntVec Cone::relint_point() const {
    IntVec p(ambient_dim_);
    for (const IntVec& r : rays_) p = p + r;
    return p;
}

bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.span_basis_ == b.span_basis_ &&
           a.lineality_basis_ == b.lineality_basis_ && a.rays_ == b.rays_ &&
           a.facet_normals_ == b.facet_normals_;
}

bool operator<(const Cone& a, const Cone& b) {
    if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
    if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
    auto la = a.lineality_basis_.columns(), lb = b.lineality_basis_.columns();
    if (la != lb) return la < lb;
    auto sa = a.span_basis_.columns(), sb = b.span_basis_.columns();
    if (sa != sb) return sa < sb;
    return a.facet_normals_ < b.facet_normals_;
}

std::string Cone::str() const {
    std::string s = "Cone(dim=" + std::to_string(dim());
    s += ", rays=[";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (i) s += ", ";
        s += rays_[i].str();
    }
    s += "], lineality=[";
    for (std::size_t j = 0; j < lineality_basis_.cols(); ++j) {
        if (j) s += ", ";
        s += lineality_basis_.column(j).str();
    }
    s += "], normals=[";
    for (std::size_t i = 0; i < facet_normals_.size(); ++i) {
        if (i) s += ", ";
        s += facet_normals_[i].str();
    }
    return s + "])";
}

}  // namespace logtoric
