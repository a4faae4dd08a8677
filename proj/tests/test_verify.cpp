#include <stdexcept>

#include "doctest.h"
#include "stasheff/verify.hpp"

using namespace stasheff;

namespace {

bool same(const FaceMapReport& a, const FaceMapReport& b) {
    if (a.map_name != b.map_name || a.n_max != b.n_max || a.instances != b.instances ||
        a.checks_passed != b.checks_passed || a.tallies.size() != b.tallies.size() ||
        a.failures.size() != b.failures.size())
        return false;
    for (std::size_t i = 0; i < a.tallies.size(); ++i)
        if (a.tallies[i].check != b.tallies[i].check || a.tallies[i].instances != b.tallies[i].instances ||
            a.tallies[i].failed != b.tallies[i].failed)
            return false;
    return true;
}

}  // namespace

TEST_CASE("K relations hold through n = 6") {
    const auto rep = verify_relations(PolytopeKind::K, 6);
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
    CHECK(rep.instances > 0);
    CHECK(rep.checks_passed == rep.instances);
    for (const char* name : {"K.graft-nested", "K.graft-disjoint", "K.boundary-image", "K.degeneracy-image",
                             "K.degeneracy-boundary", "K.facet-coverage"}) {
        const auto* t = rep.tally(name);
        REQUIRE(t != nullptr);
        CHECK(t->instances > 0);
        CHECK(t->failed == 0);
    }
}

TEST_CASE("J relations hold through n = 5") {
    const auto rep = verify_relations(PolytopeKind::J, 5);
    CHECK(rep.ok());
    for (const char* name : {"J.lower-nested", "J.lower-disjoint", "J.lower-image", "J.upper-image", "J.upper-lower",
                             "J.upper-boundary", "J.degeneracy-image", "J.facet-coverage", "pi.image", "pi.unit",
                             "pi.lower", "pi.upper", "D.iterated", "pi.degeneracy"}) {
        const auto* t = rep.tally(name);
        REQUIRE(t != nullptr);
        CHECK(t->instances > 0);
        CHECK(t->failed == 0);
    }
    CHECK(rep.tally("no-such-check") == nullptr);
}

TEST_CASE("instance counts grow with n_max") {
    const auto a = verify_relations(PolytopeKind::K, 4);
    const auto b = verify_relations(PolytopeKind::K, 5);
    CHECK(a.instances < b.instances);
}

TEST_CASE("serial and parallel harness runs agree") {
    for (auto kind : {PolytopeKind::K, PolytopeKind::J}) {
        const auto s = verify_relations(kind, 5, Exec::Serial);
        const auto p = verify_relations(kind, 5, Exec::Parallel);
        CHECK(same(s, p));
    }
}

TEST_CASE("verify_relations argument checks") {
    CHECK_THROWS_AS(verify_relations(PolytopeKind::K, kFullEnumerationCap + 1), std::out_of_range);
    CHECK_THROWS_AS(verify_relations(PolytopeKind::K, 1), std::invalid_argument);
}

TEST_CASE("facet coverage") {
    for (int n = 3; n <= 7; ++n) {
        const auto c = facet_coverage(PolytopeKind::K, n);
        CHECK(c.ok());
        CHECK(c.facets == static_cast<std::size_t>(n * (n - 1) / 2 - 1));
    }
    for (int n = 2; n <= 6; ++n) {
        const auto c = facet_coverage(PolytopeKind::J, n);
        CHECK(c.ok());
        // n(n-1)/2 lower facets and one upper facet per composition of n into
        // at least two parts
        CHECK(c.lower_images == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(c.upper_images == static_cast<std::size_t>((1 << (n - 1)) - 1));
        CHECK(c.facets == c.lower_images + c.upper_images);
    }
    CHECK(facet_coverage(PolytopeKind::J, 3).facets == 6);
    CHECK(facet_coverage(PolytopeKind::K, 5).facets == 9);
    CHECK_THROWS_AS(facet_coverage(PolytopeKind::K, 2), std::invalid_argument);
    CHECK_THROWS_AS(facet_coverage(PolytopeKind::J, 1), std::invalid_argument);
}

TEST_CASE("sphere proxies") {
    for (int n = 3; n <= 8; ++n) {
        const auto rep = sphere_proxies(FacePoset::build(PolytopeKind::K, n));
        CHECK(rep.ok());
        CHECK(rep.euler_expected == (n % 2 == 1 ? 2 : 0));
        CHECK(rep.pseudomanifold_violations == 0);
    }
    for (int n = 2; n <= 6; ++n) {
        const auto rep = sphere_proxies(FacePoset::build(PolytopeKind::J, n));
        CHECK(rep.ok());
        CHECK(rep.euler_expected == (n % 2 == 0 ? 2 : 0));
    }
    const auto p = FacePoset::build(PolytopeKind::J, 5);
    const auto s = sphere_proxies(p, Exec::Serial);
    const auto q = sphere_proxies(p, Exec::Parallel);
    CHECK(s.euler_proper == q.euler_proper);
    CHECK(s.codim2_faces == q.codim2_faces);
    CHECK(s.codim2_faces == p.f_vector()[p.top_dimension() - 2]);
}
