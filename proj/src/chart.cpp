#include "logtoric/chart.hpp"

#include <algorithm>
#include <sstream>


namespace logtoric {

namespace {

ChartMonoid build_chart(const Cone& tau) {
    ChartMonoid chart;
    chart.tau = tau;
    chart.monoid = AffineMonoid::cone_points(tau.dual());
    chart.unit_lattice = chart.monoid.unit_basis();
    chart.sharp_generators = chart.monoid.sharp_hilbert_basis();
    return chart;
}

Int ceil_quot(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

ChartMonoid chart_monoid(const Subdivision& delta, const Cone& tau) {
    if (!delta.is_cone_of(tau)) {
        throw MathError("cone is not a cone of the subdivision");
    }
    return build_chart(tau);
}

ChartMonoid chart_monoid_of_cone(const Cone& tau) { return build_chart(tau); }

bool monomial_ideal_member(const ChartMonoid& chart, const std::vector<IntVec>& gens,
                           const IntVec& m) {
    if (!chart.monoid.in_group(m)) {
        throw MathError("element outside the monoid group");
    }
    for (const IntVec& g : gens) {
        if (!chart.monoid.in_group(g)) {
            throw MathError("element outside the monoid group");
        }
        if (chart.monoid.contains(m - g)) {
            return true;
        }
    }
    return false;
}

FiberRing fiber_ring(const ChartMonoid& chart, const std::vector<IntVec>& origin_gens) {
    for (const IntVec& g : origin_gens) {
        if (!chart.monoid.contains(g)) {
            throw MathError("origin generator is outside the chart monoid");
        }
        IntVec neg = -g;
        if (chart.monoid.contains(neg)) {
            throw MathError("an origin generator is a unit on this chart");
        }
    }

    FiberRing fiber;
    fiber.unit_rank = chart.monoid.unit_rank();

    // Pairing with the rays of tau decides membership in the chart monoid:
    // v lies in dual(tau) exactly when it pairs nonnegatively with every ray
    // (it pairs to zero with the lineality automatically, because the chart
    // group lies in the span of the dual cone).
    const std::vector<IntVec>& rays = chart.tau.rays();

    for (const IntVec& e : chart.sharp_generators) {
        // Least k >= 1 with k*e - g in the chart monoid, over all generators
        // g: feasible for g exactly when every ray annihilating e also gives
        // <g, ray> <= 0, and then k = max over rays with <e, ray> > 0 of
        // ceil(<g, ray> / <e, ray>).
        bool any_feasible = false;
        Int best_order(0);
        for (const IntVec& g : origin_gens) {
            bool feasible = true;
            Int needed(1);
            for (const IntVec& r : rays) {
                Int pe = dot(e, r);
                Int pg = dot(g, r);
                if (pe == 0) {
                    if (pg > 0) {
                        feasible = false;
                        break;
                    }
                } else {
                    Int k = ceil_quot(pg, pe);
                    if (k > needed) {
                        needed = k;
                    }
                }
            }
            if (feasible && (!any_feasible || needed < best_order)) {
                any_feasible = true;
                best_order = needed;
            }
        }
        if (any_feasible) {
            fiber.nilpotent_generators.emplace_back(e, best_order);
        } else {
            fiber.non_nilpotent_generators.push_back(e);
        }
    }
    return fiber;
}

std::string FiberRing::str() const {
    std::ostringstream out;
    out << "FiberRing(unit_rank=" << unit_rank << ", nilpotent=[";
    for (std::size_t i = 0; i < nilpotent_generators.size(); ++i) {
        if (i) {
            out << ", ";
        }
        out << nilpotent_generators[i].first.str() << "^"
            << nilpotent_generators[i].second.get_str();
    }
    out << "], non_nilpotent=[";
    for (std::size_t i = 0; i < non_nilpotent_generators.size(); ++i) {
        if (i) {
            out << ", ";
        }
        out << non_nilpotent_generators[i].str();
    }
    out << "])";
    return out.str();
}

}  // namespace logtoric
