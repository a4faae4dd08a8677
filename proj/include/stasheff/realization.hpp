#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stasheff/parallel.hpp"
#include "stasheff/trees.hpp"

namespace stasheff {

using Coordinates = std::vector<std::int64_t>;

/// Integer vertex coordinates for the binary trees with n leaves. Coordinate
/// i (1-based) is l_i * r_i, the leaf counts left and right of the i-th
/// internal vertex in inorder. Throws std::invalid_argument on non-binary
/// input or n < 2.
Coordinates loday_coordinates(const PlanarTree& t);

/// Vertices of K_n keyed by canonical form.
struct VertexEmbedding {
    int n = 0;
    std::map<std::string, Coordinates> points;
};

VertexEmbedding build_embedding(int n, Exec exec = Exec::Parallel);

/// Rank of the affine span of the points, by exact rational elimination.
int affine_dimension(const VertexEmbedding& emb);

struct SupportViolation {
    std::string facet;
    std::string vertex;
    std::int64_t partial_sum = 0;
    std::int64_t bound = 0;
    bool in_facet = false;
};

struct FacetSupportReport {
    int n = 0;
    std::size_t facets_checked = 0;
    std::size_t vertex_checks = 0;
    std::vector<SupportViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// For every facet (the grafting of a corolla_s onto leaf k of a corolla_r),
/// the vertices in that facet satisfy x_k + ... + x_{k+s-2} = s(s-1)/2 and all
/// other vertices exceed it. Membership comes from the face order of K_n.
FacetSupportReport facet_support_check(int n, Exec exec = Exec::Parallel);

inline constexpr int kFacetSupportCap = 8;

}  // namespace stasheff
