#include "logtoric/pl.hpp"

#include "logtoric/lattice.hpp"

#include <algorithm>
#include <utility>

namespace logtoric {

namespace {

bool parts_agree_on(const IntVec& p, const IntVec& q, const Cone& where) {
    for (const IntVec& g : where.generators())
        if (dot(p, g) != dot(q, g)) return false;
    return true;
}

}  // namespace

PLFunction::PLFunction(Subdivision s, std::vector<IntVec> parts)
    : subdivision_(std::move(s)), parts_(std::move(parts)) {
    if (parts_.size() != subdivision_.size())
        throw MathError("need exactly one linear part per maximal cone");
    const IntMat& perp = subdivision_.base().span_perp_basis();
    for (IntVec& p : parts_) {
        if (p.size() != subdivision_.base().ambient_dim())
            throw MathError("linear part has the wrong dimension");
        p = reduce_mod_lattice(p, perp);
    }
}

PLFunction PLFunction::unchecked(const Subdivision& s, std::vector<IntVec> parts) {
    return PLFunction(s, std::move(parts));
}

PLFunction PLFunction::make(const Subdivision& s, std::vector<IntVec> parts) {
    PLFunction f(s, std::move(parts));
    if (!f.is_valid()) throw MathError("linear parts disagree on a shared face");
    return f;
}

bool PLFunction::is_valid() const {
    const std::vector<Cone>& cones = subdivision_.maximal_cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (!parts_agree_on(parts_[i], parts_[j], cones[i].intersect(cones[j])))
                return false;
    return true;
}

Int PLFunction::evaluate(const IntVec& x) const {
    std::vector<std::size_t> at = subdivision_.cones_containing(x);
    if (at.empty()) throw MathError("point is not in the subdivided cone");
    return dot(parts_[at.front()], x);
}

bool PLFunction::is_linear() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != parts_[0]) return false;
    return true;
}

PLFunction PLFunction::operator+(const PLFunction& o) const {
    if (subdivision_ != o.subdivision_)
        throw MathError("functions live on different subdivisions");
    std::vector<IntVec> parts;
    for (std::size_t i = 0; i < parts_.size(); ++i) parts.push_back(parts_[i] + o.parts_[i]);
    return PLFunction(subdivision_, std::move(parts));
}

PLFunction PLFunction::operator-(const PLFunction& o) const { return *this + (-o); }

PLFunction PLFunction::operator-() const {
    std::vector<IntVec> parts;
    for (const IntVec& p : parts_) parts.push_back(-p);
    return PLFunction(subdivision_, std::move(parts));
}

PLFunction operator*(const Int& k, const PLFunction& f) {
    std::vector<IntVec> parts;
    for (const IntVec& p : f.parts_) parts.push_back(k * p);
    return PLFunction(f.subdivision_, std::move(parts));
}

std::string PLFunction::str() const {
    std::string out = "PL[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ", ";
        out += parts_[i].str();
    }
    return out + "]";
}

PLSections::PLSections(const Subdivision& s)
    : subdivision_(s), span_basis_(s.base().span_lattice_basis()) {
    const std::vector<Cone>& cones = subdivision_.maximal_cones();
    const std::size_t m = cones.size();
    const std::size_t sdim = span_basis_.cols();
    const std::size_t unknowns = m * sdim;
    // One agreement equation per span direction of each pairwise
    // intersection, in per-cone internal dual coordinates.
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Cone meet = cones[i].intersect(cones[j]);
            IntMat meet_span = meet.span_lattice_basis();
            for (std::size_t col = 0; col < meet_span.cols(); ++col) {
                auto w = solve_integer(span_basis_, meet_span.column(col));
                if (!w) throw MathError("internal error: face outside the base span");
                IntVec row(unknowns);
                for (std::size_t k = 0; k < sdim; ++k) {
                    row[i * sdim + k] = (*w)[k];
                    row[j * sdim + k] = -(*w)[k];
                }
                rows.push_back(std::move(row));
            }
        }
    kernel_ = kernel_lattice(IntMat::from_rows(rows, unknowns));
    for (std::size_t t = 0; t < kernel_.cols(); ++t) {
        std::vector<IntVec> parts;
        for (std::size_t i = 0; i < m; ++i) {
            IntVec internal(sdim);
            for (std::size_t k = 0; k < sdim; ++k) internal[k] = kernel_.at(i * sdim + k, t);
            auto ambient = solve_integer(span_basis_.transposed(), internal);
            if (!ambient)
                throw MathError("internal error: dual form does not lift to the ambient lattice");
            parts.push_back(*ambient);
        }
        basis_.push_back(PLFunction::make(subdivision_, std::move(parts)));
    }
}

IntVec PLSections::coords_of(const PLFunction& f) const {
    if (f.subdivision() != subdivision_)
        throw MathError("function lives on a different subdivision");
    const std::size_t m = subdivision_.size();
    const std::size_t sdim = span_basis_.cols();
    IntVec v(m * sdim);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < sdim; ++k)
            v[i * sdim + k] = dot(f.part(i), span_basis_.column(k));
    auto u = solve_integer(kernel_, v);
    if (!u) throw MathError("function is not an integral combination of the section basis");
    return *u;
}

PLFunction PLSections::from_coords(const IntVec& u) const {
    if (u.size() != basis_.size()) throw MathError("coordinate vector has the wrong length");
    const std::size_t m = subdivision_.size();
    const std::size_t sdim = span_basis_.cols();
    IntVec v = kernel_ * u;
    std::vector<IntVec> parts;
    for (std::size_t i = 0; i < m; ++i) {
        IntVec internal(sdim);
        for (std::size_t k = 0; k < sdim; ++k) internal[k] = v[i * sdim + k];
        auto ambient = solve_integer(span_basis_.transposed(), internal);
        if (!ambient)
            throw MathError("internal error: dual form does not lift to the ambient lattice");
        parts.push_back(*ambient);
    }
    return PLFunction::make(subdivision_, std::move(parts));
}

PLFunction PLSections::linear_function(const IntVec& alpha) const {
    return PLFunction::make(subdivision_,
                            std::vector<IntVec>(subdivision_.size(), alpha));
}

IntMat PLSections::linear_sublattice() const {
    const std::size_t sdim = span_basis_.cols();
    std::vector<IntVec> cols;
    for (std::size_t k = 0; k < sdim; ++k) {
        IntVec v(subdivision_.size() * sdim);
        for (std::size_t i = 0; i < subdivision_.size(); ++i) v[i * sdim + k] = 1;
        auto u = solve_integer(kernel_, v);
        if (!u) throw MathError("internal error: linear form is not piecewise linear");
        cols.push_back(*u);
    }
    return hnf_column_basis(IntMat::from_columns(cols, basis_.size()));
}

PLSections pl_sections(const Subdivision& s) { return PLSections(s); }

NonnegPL nonneg_pl_monoid(const Subdivision& s) {
    PLSections sections(s);
    const std::size_t t = sections.rank();
    std::vector<IntVec> normals;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (const IntVec& g : s.maximal_cones()[i].generators()) {
            IntVec n(t);
            for (std::size_t k = 0; k < t; ++k) n[k] = dot(sections.basis()[k].part(i), g);
            normals.push_back(std::move(n));
        }
    AffineMonoid monoid =
        AffineMonoid::cone_points(Cone::from_inequalities(normals, {}, t));
    AffineMonoid linear_slice = AffineMonoid::cone_points(s.base().dual());
    return NonnegPL{std::move(sections), std::move(monoid), std::move(linear_slice)};
}

std::vector<Int> pic_of_subdivision(const Subdivision& s) {
    PLSections sections(s);
    IntMat linear = sections.linear_sublattice();
    std::vector<Int> factors =
        lattice_quotient(IntMat::identity(sections.rank()), linear);
    for (const Int& f : factors)
        if (f != 0 && f != 1)
            throw MathError("internal error: combinatorial Picard group has torsion");
    return factors;
}

bool character_compatibility(const PLFunction& f, const Cone& tau1, const Cone& tau2) {
    const Subdivision& s = f.subdivision();
    if (!s.is_cone_of(tau1) || !s.is_cone_of(tau2))
        throw MathError("cone is not a cone of the subdivision");
    if (!tau2.is_face_of(tau1)) throw MathError("second cone is not a face of the first");
    auto holding = [&](const Cone& tau) -> std::size_t {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (tau.is_face_of(s.maximal_cones()[i])) return i;
        throw MathError("cone is not a cone of the subdivision");
    };
    return parts_agree_on(f.part(holding(tau1)), f.part(holding(tau2)), tau2);
}

PLFunction refine_pl_function(const PLFunction& f, const Subdivision& finer) {
    if (!finer.is_refinement_of(f.subdivision()))
        throw MathError("subdivision is not a refinement");
    std::vector<IntVec> parts;
    for (const Cone& c : finer.maximal_cones()) {
        bool found = false;
        for (std::size_t j = 0; j < f.subdivision().size(); ++j)
            if (f.subdivision().maximal_cones()[j].contains_cone(c)) {
                parts.push_back(f.part(j));
                found = true;
                break;
            }
        if (!found) throw MathError("subdivision is not a refinement");
    }
    return PLFunction::make(finer, std::move(parts));
}

}  // namespace logtoric
