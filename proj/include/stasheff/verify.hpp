#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stasheff/face_poset.hpp"
#include "stasheff/parallel.hpp"
#include "stasheff/trees.hpp"

namespace stasheff {

struct Failure {
    std::string check;
    std::string inputs;
    std::string expected;
    std::string got;
};

struct CheckTally {
    std::string check;
    std::size_t instances = 0;
    std::size_t failed = 0;
};

/// Outcome of an exhaustive identity check. failures is empty exactly when
/// checks_passed == instances.
struct FaceMapReport {
    std::string map_name;
    int n_max = 0;
    std::size_t instances = 0;
    std::size_t checks_passed = 0;
    std::vector<CheckTally> tallies;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty() && checks_passed == instances; }
    const CheckTally* tally(const std::string& check) const;
};

/// Exhaustively checks the structure-map identities on every face with at
/// most n_max leaves.
///
/// K: grafting associativity (nested and disjoint positions), image validity
/// and dimension bookkeeping of the boundary and degeneracy maps, the
/// degeneracy/boundary exchange law, and facet coverage.
///
/// J: the same for both boundary families and the degeneracy (including
/// agreement of the two cascade orders), the lower/upper and upper/boundary
/// exchange laws, facet coverage, and the four compatibilities of the
/// projection with the structure maps, plus agreement of composite_D with its
/// iterated-boundary construction.
FaceMapReport verify_relations(PolytopeKind kind, int n_max, Exec exec = Exec::Parallel);

struct CoverageReport {
    PolytopeKind kind = PolytopeKind::K;
    int n = 0;
    std::size_t facets = 0;      // codimension-one faces from enumeration
    std::size_t images = 0;      // boundary-map images of top cells
    std::size_t lower_images = 0;  // J only
    std::size_t upper_images = 0;  // J only
    std::size_t duplicates = 0;
    std::size_t misses = 0;
    std::size_t extras = 0;

    bool ok() const { return duplicates == 0 && misses == 0 && extras == 0 && images == facets; }
};

/// Checks that the boundary families applied to top cells hit every facet of
/// K_n (n >= 3) or J_n (n >= 2) exactly once.
CoverageReport facet_coverage(PolytopeKind kind, int n);

/// Combinatorial evidence that the boundary is a sphere: the Euler relation
/// over proper faces and the codimension-two pseudomanifold condition.
struct SphereReport {
    PolytopeKind kind = PolytopeKind::K;
    int n = 0;
    int top_dimension = 0;
    long long euler_proper = 0;
    long long euler_expected = 0;
    std::size_t codim2_faces = 0;
    std::size_t pseudomanifold_violations = 0;

    bool ok() const { return euler_proper == euler_expected && pseudomanifold_violations == 0; }
};

SphereReport sphere_proxies(const FacePoset& poset, Exec exec = Exec::Parallel);

}  // namespace stasheff
