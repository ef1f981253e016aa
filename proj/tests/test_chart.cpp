#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "logtoric/chart.hpp"
#include "logtoric/laurent.hpp"
#include "logtoric/subdivision.hpp"

using namespace logtoric;

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPolynomial x = LaurentPolynomial::monomial(v2(1, 0));
    LaurentPolynomial y = LaurentPolynomial::monomial(v2(0, 1));
    LaurentPolynomial p = (x + y) * (x - y);
    LaurentPolynomial q = x * x - y * y;
    CHECK(p == q);
    CHECK(p.term_count() == 2);
    LaurentPolynomial z = p - p;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    LaurentPolynomial inv = LaurentPolynomial::monomial(v2(-1, 0));
    CHECK((x * inv).term_count() == 1);
    CHECK((x * inv).coefficient(v2(0, 0)) == 1);
}

TEST_CASE("laurent homogeneity and powers") {
    LaurentPolynomial x = LaurentPolynomial::monomial(v2(1, 0));
    LaurentPolynomial y = LaurentPolynomial::monomial(v2(0, 1));
    LaurentPolynomial p = x * x - y * y;
    IntVec w = v2(1, 1);
    REQUIRE(p.homogeneous_degree(w).has_value());
    CHECK(*p.homogeneous_degree(w) == 2);
    LaurentPolynomial mixed = x + p;
    CHECK_FALSE(mixed.homogeneous_degree(w).has_value());
    LaurentPolynomial zero = p - p;
    CHECK(zero.is_homogeneous_of(w, Int(5)));
    CHECK(x.pow(3).coefficient(v2(3, 0)) == 1);
}

TEST_CASE("laurent monomial substitution") {
    LaurentPolynomial x = LaurentPolynomial::monomial(v2(1, 0));
    LaurentPolynomial y = LaurentPolynomial::monomial(v2(0, 1));
    LaurentPolynomial p = x * x - y * y;
    LaurentPolynomial s = substitute_monomial_map(p, {v2(1, 1), v2(0, -1)});
    CHECK(s.coefficient(v2(2, 2)) == 1);
    CHECK(s.coefficient(v2(0, -2)) == -1);
}

TEST_CASE("chart of the 2a = 3b wall") {
    Cone quad = Cone::orthant(2);
    Subdivision delta = hyperplane_subdivision(quad, v2(2, -3));
    REQUIRE(delta.size() == 2);
    Cone tau = Cone::from_generators({v2(3, 2)}, 2);
    REQUIRE(delta.is_cone_of(tau));
    ChartMonoid chart = chart_monoid(delta, tau);
    CHECK(chart.monoid.unit_rank() == 1);
    REQUIRE(chart.unit_lattice.cols() == 1);
    IntVec u = chart.unit_lattice.column(0);
    bool unit_dir = (u == v2(2, -3)) || (u == v2(-2, 3));
    CHECK(unit_dir);
    REQUIRE(chart.sharp_generators.size() == 1);
    CHECK(chart.sharp_generators[0] == v2(1, -1));

    std::vector<IntVec> origin = {v2(1, 0), v2(0, 1)};
    CHECK(monomial_ideal_member(chart, origin, v2(2, -2)));
    CHECK_FALSE(monomial_ideal_member(chart, origin, v2(1, -1)));
    CHECK_FALSE(monomial_ideal_member(chart, origin, v2(0, 0)));

    FiberRing fib = fiber_ring(chart, origin);
    CHECK(fib.unit_rank == 1);
    REQUIRE(fib.nilpotent_generators.size() == 1);
    CHECK(fib.nilpotent_generators[0].first == v2(1, -1));
    CHECK(fib.nilpotent_generators[0].second == 2);
    CHECK(fib.non_nilpotent_generators.empty());

    // A unit origin generator is rejected; so is a cone outside the fan.
    CHECK_THROWS_AS(fiber_ring(chart, {v2(2, -3)}), MathError);
    CHECK_THROWS_AS(chart_monoid(delta, Cone::from_generators({v2(1, 1)}, 2)),
                    MathError);
}

TEST_CASE("trivial chart kills the origin generators at order one") {
    Cone quad = Cone::orthant(2);
    Subdivision delta = Subdivision::trivial(quad);
    ChartMonoid chart = chart_monoid(delta, quad);
    CHECK(chart.monoid.unit_rank() == 0);
    CHECK(chart.sharp_generators.size() == 2);
    FiberRing fib = fiber_ring(chart, {v2(1, 0), v2(0, 1)});
    CHECK(fib.unit_rank == 0);
    REQUIRE(fib.nilpotent_generators.size() == 2);
    for (const auto& gen : fib.nilpotent_generators) CHECK(gen.second == 1);
    CHECK(fib.non_nilpotent_generators.empty());
}

TEST_CASE("octant star chart mixes nilpotent and non-nilpotent generators") {
    Cone oct = Cone::orthant(3);
    Subdivision delta = star_subdivision(oct, v3(1, 1, 1));
    REQUIRE(delta.size() == 3);
    Cone tau_u = Cone::from_generators({v3(1, 1, 1), v3(0, 1, 0), v3(0, 0, 1)}, 3);
    REQUIRE(delta.is_cone_of(tau_u));
    ChartMonoid chart = chart_monoid(delta, tau_u);
    CHECK(chart.monoid.unit_rank() == 0);
    CHECK(chart.sharp_generators.size() == 3);
    std::vector<IntVec> origin = {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)};
    CHECK(monomial_ideal_member(chart, origin, v3(0, 1, 0)));
    FiberRing fib = fiber_ring(chart, origin);
    CHECK(fib.unit_rank == 0);
    REQUIRE(fib.nilpotent_generators.size() == 1);
    CHECK(fib.nilpotent_generators[0].first == v3(1, 0, 0));
    CHECK(fib.nilpotent_generators[0].second == 1);
    CHECK(fib.non_nilpotent_generators.size() == 2);
}

TEST_CASE("product chart carries two independent square-zero generators") {
    Cone big = Cone::orthant(4);
    Subdivision delta = refine_by_hyperplane(Subdivision::trivial(big), v4(2, -3, 0, 0));
    REQUIRE(delta.size() == 2);
    delta = refine_by_hyperplane(delta, v4(0, 0, 2, -3));
    REQUIRE(delta.size() == 4);
    Cone tau = Cone::from_generators({v4(3, 2, 0, 0), v4(0, 0, 3, 2)}, 4);
    REQUIRE(delta.is_cone_of(tau));
    ChartMonoid chart = chart_monoid(delta, tau);
    CHECK(chart.monoid.unit_rank() == 2);
    CHECK(chart.sharp_generators.size() == 2);
    std::vector<IntVec> origin = {v4(1, 0, 0, 0), v4(0, 1, 0, 0), v4(0, 0, 1, 0),
                                  v4(0, 0, 0, 1)};
    FiberRing fib = fiber_ring(chart, origin);
    CHECK(fib.unit_rank == 2);
    REQUIRE(fib.nilpotent_generators.size() == 2);
    bool first_expected = (fib.nilpotent_generators[0].first == v4(0, 0, 1, -1)) ||
                          (fib.nilpotent_generators[0].first == v4(1, -1, 0, 0));
    CHECK(first_expected);
    for (const auto& gen : fib.nilpotent_generators) CHECK(gen.second == 2);
    CHECK(fib.non_nilpotent_generators.empty());
}
