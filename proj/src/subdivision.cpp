#include "logtoric/subdivision.hpp"

#include <algorithm>
#include <random>

namespace logtoric {

namespace {

bool on_base_boundary(const Cone& base, const IntVec& w) {
    for (const IntVec& n : base.facet_normals())
        if (dot(n, w) == 0) return true;
    return false;
}

}  // namespace

Subdivision::Subdivision(Cone base, std::vector<Cone> maximal)
    : base_(std::move(base)), maximal_(std::move(maximal)) {
    std::sort(maximal_.begin(), maximal_.end());
}

Subdivision Subdivision::trivial(const Cone& base) { return from_cones(base, {base}); }

Subdivision Subdivision::from_cones(const Cone& base, std::vector<Cone> maximal) {
    if (maximal.empty()) throw MathError("subdivision needs at least one maximal cone");
    Subdivision s(base, std::move(maximal));
    const std::vector<Cone>& cones = s.maximal_;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (cones[i].ambient_dim() != base.ambient_dim())
            throw MathError("maximal cone has a different ambient dimension than the base");
        if (!base.contains_cone(cones[i]))
            throw MathError("maximal cone is not contained in the base cone");
        if (cones[i].dim() != base.dim())
            throw MathError("maximal cone has lower dimension than the base");
        if (i > 0 && cones[i] == cones[i - 1]) throw MathError("duplicate maximal cone");
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            Cone meet = cones[i].intersect(cones[j]);
            if (!meet.is_face_of(cones[i]) || !meet.is_face_of(cones[j]))
                throw MathError("maximal cones overlap without a common face");
        }
    // Interior-wall matching: a facet of a maximal cone either lies on the
    // boundary of the base (no other cone meets its relative interior) or is
    // shared with exactly one neighbor.
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (const Cone& facet : cones[i].facets()) {
            IntVec w = facet.relint_point();
            std::size_t others = 0;
            for (std::size_t j = 0; j < cones.size(); ++j)
                if (j != i && cones[j].contains(w)) ++others;
            std::size_t expected = on_base_boundary(s.base_, w) ? 0 : 1;
            if (others != expected)
                throw MathError("subdivision does not cover the base cone");
        }
    // Rational point sampling: conic combinations of base generators must
    // land in some maximal cone.
    std::vector<IntVec> samples;
    samples.push_back(s.base_.relint_point());
    for (std::size_t i = 0; i < cones.size(); ++i) {
        samples.push_back(cones[i].relint_point());
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            samples.push_back(cones[i].relint_point() + cones[j].relint_point());
    }
    const std::vector<IntVec>& gens = s.base_.generators();
    if (!gens.empty()) {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> coeff(0, 3);
        for (int t = 0; t < 24; ++t) {
            IntVec p(s.base_.ambient_dim());
            for (const IntVec& g : gens) p = p + Int(coeff(rng)) * g;
            samples.push_back(p);
        }
    }
    for (const IntVec& p : samples) {
        bool covered = false;
        for (const Cone& c : cones)
            if (c.contains(p)) {
                covered = true;
                break;
            }
        if (!covered) throw MathError("subdivision does not cover the base cone");
    }
    return s;
}

std::vector<std::size_t> Subdivision::cones_containing(const IntVec& x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < maximal_.size(); ++i)
        if (maximal_[i].contains(x)) out.push_back(i);
    return out;
}

bool Subdivision::is_cone_of(const Cone& c) const {
    for (const Cone& m : maximal_)
        if (c.is_face_of(m)) return true;
    return false;
}

bool Subdivision::is_refinement_of(const Subdivision& coarser) const {
    if (base_ != coarser.base_) return false;
    for (const Cone& c : maximal_) {
        bool inside = false;
        for (const Cone& m : coarser.maximal_)
            if (m.contains_cone(c)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

std::string Subdivision::str() const {
    std::string out = "Subdivision(base=" + base_.str() + ", maximal=[";
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
        if (i) out += ", ";
        out += maximal_[i].str();
    }
    return out + "])";
}

Subdivision hyperplane_subdivision(const Cone& sigma, const IntVec& alpha) {
    Cone pos = sigma.intersect(Cone::from_inequalities({alpha}, {}, sigma.ambient_dim()));
    Cone neg = sigma.intersect(Cone::from_inequalities({-alpha}, {}, sigma.ambient_dim()));
    if (pos == neg) return Subdivision::trivial(sigma);  // alpha vanishes on sigma
    std::vector<Cone> pieces;
    if (pos.dim() == sigma.dim()) pieces.push_back(pos);
    if (neg.dim() == sigma.dim()) pieces.push_back(neg);
    if (pieces.size() < 2) return Subdivision::trivial(sigma);
    return Subdivision::from_cones(sigma, std::move(pieces));
}

Subdivision refine_by_hyperplane(const Subdivision& delta, const IntVec& alpha) {
    std::vector<Cone> pieces;
    for (const Cone& sigma : delta.maximal_cones()) {
        Subdivision cut = hyperplane_subdivision(sigma, alpha);
        for (const Cone& piece : cut.maximal_cones()) {
            pieces.push_back(piece);
        }
    }
    return Subdivision::from_cones(delta.base(), std::move(pieces));
}

Subdivision star_subdivision(const Cone& sigma, const IntVec& rho) {
    if (!sigma.relint_contains(rho)) throw MathError("star center must be interior");
    IntVec center = primitive_vector(rho);
    std::vector<Cone> pieces;
    for (const Cone& facet : sigma.facets()) {
        std::vector<IntVec> gens = facet.generators();
        gens.push_back(center);
        pieces.push_back(Cone::from_generators(gens, sigma.ambient_dim()));
    }
    if (pieces.empty()) return Subdivision::trivial(sigma);
    return Subdivision::from_cones(sigma, std::move(pieces));
}

}  // namespace logtoric
