#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "stasheff/trees.hpp"

namespace stasheff {

/// Faces one dimension up from `face`: every tree obtained by contracting a
/// single internal edge (or, at the map level, absorbing a domain vertex into
/// its map vertex, or merging a range vertex with all of its unary-level map
/// children). Works for both planar and painted trees.
std::vector<Node> elementary_contractions(const Node& face);

/// Every face containing `face` (itself included), as canonical strings,
/// sorted.
std::vector<std::string> upward_closure(const Node& face);

/// All faces of K_n or J_n graded by dimension, each grade sorted by
/// canonical form.
class FacePoset {
public:
    static FacePoset build(PolytopeKind kind, int n);
    /// Assembles a poset from already-enumerated grades (used by the loaders).
    /// Throws std::invalid_argument if the grades break the poset invariants.
    static FacePoset from_grades(PolytopeKind kind, int n, std::vector<std::vector<std::string>> grades);

    PolytopeKind kind() const { return kind_; }
    int n() const { return n_; }
    int top_dimension() const { return static_cast<int>(grades_.size()) - 1; }

    const std::vector<std::vector<std::string>>& grades() const { return grades_; }
    const std::vector<std::string>& faces(int dim) const { return grades_.at(static_cast<std::size_t>(dim)); }
    std::vector<std::size_t> f_vector() const;
    std::size_t face_count() const;

    bool contains(const std::string& code) const { return index_.count(code) != 0; }
    /// Dimension of a face, or -1 if absent.
    int dimension_of(const std::string& code) const;

    /// Codimension-one faces of the polytope containing `code`, sorted.
    std::vector<std::string> facets_containing(const std::string& code) const;

    friend bool operator==(const FacePoset& a, const FacePoset& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.grades_ == b.grades_;
    }

private:
    PolytopeKind kind_ = PolytopeKind::K;
    int n_ = 0;
    std::vector<std::vector<std::string>> grades_;
    std::unordered_map<std::string, int> index_;
};

/// Top dimension of K_n (n - 2) or J_n (n - 1).
int top_dimension(PolytopeKind kind, int n);

}  // namespace stasheff
