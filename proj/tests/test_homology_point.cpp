#include <doctest.h>

#include "simplexbd/chain.hpp"
#include "simplexbd/homology_point.hpp"

using namespace sbd;

namespace {

CoefficientTuple M(const char* s) { return CoefficientTuple::parse(s); }

// Z <- Z <- Z with d_n = ×a, d_{n+1} = ×b: ker(×a) / im(×b), computed
// independently of the library's normalization.
std::string kernel_mod_image(long a, long b) {
    if (a != 0) return "0";  // ×a injective
    const long q = b < 0 ? -b : b;
    if (q == 0) return "Z";
    if (q == 1) return "0";
    return "Z/" + std::to_string(q);
}

}  // namespace

TEST_CASE("sigma") {
    CHECK(sigma(M("9,4")) == 13);
    CHECK(sigma(M("1")) == 1);
    CHECK(sigma(M("1,-1")) == 0);
}

TEST_CASE("point_boundary_map") {
    CHECK(point_boundary_map(0, M("9,4")).is_zero());
    CHECK(point_boundary_map(2, M("9,4")).factor == 13);
    CHECK(point_boundary_map(2, M("9,4")).str() == "x13");
    CHECK(point_boundary_map(3, M("9,4")).str() == "0");
    CHECK(point_boundary_map(3, M("5,7")).is_zero());
}

TEST_CASE("ModuleDescription normalization") {
    CHECK(ModuleDescription::cyclic(0) == ModuleDescription::free_rank1());
    CHECK(ModuleDescription::cyclic(1) == ModuleDescription::zero());
    CHECK(ModuleDescription::cyclic(-1) == ModuleDescription::zero());
    CHECK(ModuleDescription::cyclic(-13).str() == "Z/13");
    CHECK(ModuleDescription::free_rank1().str() == "Z");
    CHECK(ModuleDescription::zero().str() == "0");
}

TEST_CASE("point_homology examples") {
    CHECK(point_homology(1, M("9,4")) == ModuleDescription::cyclic(13));
    CHECK(point_homology(2, M("1")) == ModuleDescription::zero());
    CHECK(point_homology(5, M("1,-1")) == ModuleDescription::free_rank1());
    CHECK(homology_row(1, M("9,4")) == "1, 0, Z/13");
    CHECK(homology_row(2, M("9,4")) == "2, x13, 0");
    CHECK(homology_row(0, M("9,4")) == "0, 0, Z");
}

TEST_CASE("point complex invariants for n <= 20") {
    for (const char* m : {"1,-3", "1,-1", "1", "2", "9,4", "5,-3"}) {
        const auto mt = M(m);
        for (std::size_t n = 0; n <= 20; ++n) {
            const Integer a = point_boundary_map(n, mt).factor;
            const Integer b = point_boundary_map(n + 1, mt).factor;
            CHECK(a * b == 0);
            const auto h = point_homology(n, mt);
            CHECK(h.str() == kernel_mod_image(a.get_si(), b.get_si()));
            CHECK(h == homology_from_scalars(point_boundary_map(n, mt), point_boundary_map(n + 1, mt)));
        }
    }
}

TEST_CASE("chain boundary on point terms reproduces the scalar maps") {
    for (const char* m : {"1", "9,4", "1,-1", "2,3"}) {
        const auto mt = M(m);
        for (std::size_t n = 0; n <= 6; ++n) {
            const Chain d = boundary(Chain::single(SingularTerm::point(n)), mt);
            const ScalarMap s = point_boundary_map(n, mt);
            if (s.is_zero()) {
                CHECK(d.is_zero());
            } else {
                REQUIRE(d.terms.size() == 1);
                CHECK(d.terms.begin()->first == SingularTerm::point(n - 1));
                CHECK(d.terms.begin()->second == s.factor);
            }
        }
    }
}
