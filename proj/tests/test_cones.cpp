#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "logtoric/cone.hpp"
#include "logtoric/lattice.hpp"

using namespace logtoric;

TEST_CASE("dual of a pointed plane cone") {
    Cone c = Cone::from_generators({v2(1, 0), v2(1, 2)}, 2);
    CHECK(c.dim() == 2);
    CHECK(c.is_pointed());
    Cone d = c.dual();
    REQUIRE(d.rays().size() == 2);
    CHECK(d.rays()[0] == v2(0, 1));
    CHECK(d.rays()[1] == v2(2, -1));
    CHECK(d.dual() == c);
}

TEST_CASE("dual of a single ray is a half-plane") {
    Cone r = Cone::from_generators({v2(3, 2)}, 2);
    CHECK(r.dim() == 1);
    REQUIRE(r.rays().size() == 1);
    CHECK(r.rays()[0] == v2(3, 2));
    Cone d = r.dual();
    CHECK(d.dim() == 2);
    CHECK(d.lineality_dim() == 1);
    CHECK(d.lineality_lattice_basis().column(0) == v2(2, -3));
    REQUIRE(d.rays().size() == 1);
    CHECK(d.rays()[0] == v2(1, -1));
    REQUIRE(d.facet_normals().size() == 1);
    CHECK(d.facet_normals()[0] == v2(3, 2));
    CHECK(d.dual() == r);
}

TEST_CASE("intersection of the quadrant with a half-plane") {
    Cone quad = Cone::orthant(2);
    Cone half = Cone::from_inequalities({v2(-1, 1)}, {}, 2);
    Cone c = quad.intersect(half);
    REQUIRE(c.rays().size() == 2);
    CHECK(c.contains(v2(1, 2)));
    CHECK_FALSE(c.contains(v2(2, 1)));
    CHECK(c.rays()[0] == v2(0, 1));
    CHECK(c.rays()[1] == v2(1, 1));
}

TEST_CASE("faces of the quadrant") {
    Cone quad = Cone::orthant(2);
    std::vector<Cone> fs = quad.facets();
    REQUIRE(fs.size() == 2);
    for (const Cone& f : fs) {
        CHECK(f.dim() == 1);
        CHECK(f.is_face_of(quad));
    }
    CHECK(Cone::zero(2).is_face_of(quad));
    CHECK(quad.is_face_of(quad));
    Cone diag = Cone::from_generators({v2(1, 1)}, 2);
    CHECK_FALSE(diag.is_face_of(quad));
}

TEST_CASE("octant rays, normals, relative interior") {
    Cone oct = Cone::orthant(3);
    CHECK(oct.rays().size() == 3);
    CHECK(oct.facet_normals().size() == 3);
    CHECK(oct.relint_contains(oct.relint_point()));
    CHECK_FALSE(oct.relint_contains(v3(1, 0, 1)));
}

TEST_CASE("non-pointed cone in three dimensions") {
    Cone c = Cone::from_generators({v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0)}, 3);
    CHECK(c.dim() == 2);
    CHECK(c.lineality_dim() == 1);
    CHECK(c.contains(v3(-5, 3, 0)));
    CHECK_FALSE(c.contains(v3(0, -1, 0)));
    CHECK_FALSE(c.contains(v3(0, 0, 1)));
}

TEST_CASE("from_inequalities with equations") {
    // {x + y + z = 0} intersected with {x >= 0, y >= 0} is a 2D pointed cone.
    Cone c = Cone::from_inequalities({v3(1, 0, 0), v3(0, 1, 0)}, {v3(1, 1, 1)}, 3);
    CHECK(c.dim() == 2);
    CHECK(c.is_pointed());
    CHECK(c.contains(v3(1, 1, -2)));
    CHECK(c.contains(v3(2, 0, -2)));
    CHECK_FALSE(c.contains(v3(1, 1, -1)));
    CHECK_FALSE(c.contains(v3(-1, 2, -1)));
}

TEST_CASE("zero cone") {
    Cone z = Cone::zero(2);
    CHECK(z.dim() == 0);
    CHECK(z.rays().empty());
    CHECK(z.contains(v2(0, 0)));
    CHECK_FALSE(z.contains(v2(1, 0)));
}

TEST_CASE("containment matches the facet description on random cones") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> dim_dist(2, 3);
    for (int iter = 0; iter < 80; ++iter) {
        std::size_t dim = static_cast<std::size_t>(dim_dist(rng));
        std::vector<IntVec> gens;
        int n = count(rng);
        for (int g = 0; g < n; ++g) {
            IntVec v(dim);
            for (std::size_t i = 0; i < dim; ++i) v[i] = entry(rng);
            gens.push_back(v);
        }
        Cone c = Cone::from_generators(gens, dim);
        // Double duality is the identity.
        CHECK(c.dual().dual() == c);
        // Generators are contained; containment agrees with the
        // inequality/equation description.
        const std::vector<IntVec>& normals = c.facet_normals();
        IntMat perp = c.span_perp_basis();
        for (int probe = 0; probe < 8; ++probe) {
            IntVec x(dim);
            for (std::size_t i = 0; i < dim; ++i) x[i] = entry(rng);
            bool by_desc = true;
            for (const IntVec& f : normals)
                if (dot(f, x) < 0) by_desc = false;
            for (std::size_t j = 0; j < perp.cols(); ++j)
                if (dot(perp.column(j), x) != 0) by_desc = false;
            CHECK(c.contains(x) == by_desc);
        }
        for (const IntVec& g : gens) CHECK(c.contains(g));
        // Rays are contained, primitive, and not interior to the cone's
        // lineality space.
        for (const IntVec& r : c.rays()) {
            CHECK(c.contains(r));
            CHECK(primitive_vector(r) == r);
        }
    }
}

TEST_CASE("intersection is the meet under containment on random pairs") {
    std::mt19937 rng(8080);
    std::uniform_int_distribution<int> entry(-2, 3);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<IntVec> ga, gb;
        for (int g = 0; g < 3; ++g) {
            ga.push_back(v3(entry(rng), entry(rng), entry(rng)));
            gb.push_back(v3(entry(rng), entry(rng), entry(rng)));
        }
        Cone a = Cone::from_generators(ga, 3);
        Cone b = Cone::from_generators(gb, 3);
        Cone m = a.intersect(b);
        for (int probe = 0; probe < 8; ++probe) {
            IntVec x = v3(entry(rng), entry(rng), entry(rng));
            CHECK(m.contains(x) == (a.contains(x) && b.contains(x)));
        }
    }
}
