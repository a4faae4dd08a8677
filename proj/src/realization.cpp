#include "stasheff/realization.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "stasheff/facemaps.hpp"

namespace stasheff {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Returns the leaf count of the subtree; appends l*r per internal vertex in
// inorder.
std::int64_t inorder_products(const Node& n, Coordinates& out) {
    if (n.is_leaf()) return 1;
    if (n.arity() != 2) throw std::invalid_argument("loday_coordinates needs a binary tree");
    const std::int64_t left = inorder_products(n.children[0], out);
    out.push_back(0);
    const std::size_t slot = out.size() - 1;
    const std::int64_t right = inorder_products(n.children[1], out);
    out[slot] = left * right;
    return left + right;
}

}  // namespace

Coordinates loday_coordinates(const PlanarTree& t) {
    if (t.leaf_count() < 2) throw std::invalid_argument("loday_coordinates needs n >= 2");
    Coordinates out;
    out.reserve(static_cast<std::size_t>(t.leaf_count() - 1));
    inorder_products(t.root(), out);
    return out;
}

VertexEmbedding build_embedding(int n, Exec exec) {
    auto vertices = enumerate_planar_vertices(n);
    auto coords = map_indexed<Coordinates>(
        vertices.size(), [&](std::size_t i) { return loday_coordinates(vertices[i]); }, exec);
    VertexEmbedding emb;
    emb.n = n;
    for (std::size_t i = 0; i < vertices.size(); ++i) emb.points.emplace(vertices[i].canonical(), std::move(coords[i]));
    return emb;
}

int affine_dimension(const VertexEmbedding& emb) {
    if (emb.points.size() <= 1) return 0;
    const Coordinates& base = emb.points.begin()->second;
    const std::size_t cols = base.size();
    std::vector<std::vector<Rational>> rows;
    for (auto it = std::next(emb.points.begin()); it != emb.points.end(); ++it) {
        std::vector<Rational> row(cols);
        for (std::size_t c = 0; c < cols; ++c) row[c] = Rational(it->second[c] - base[c]);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        std::size_t p = pivot_row;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational factor = rows[r][c] / rows[pivot_row][c];
            for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= factor * rows[pivot_row][cc];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

FacetSupportReport facet_support_check(int n, Exec exec) {
    if (n < 3) throw std::invalid_argument("facet_support_check needs n >= 3");
    if (n > kFacetSupportCap) throw std::out_of_range("facet_support_check is capped at n = 8");
    FacetSupportReport rep;
    rep.n = n;
    auto vertices = enumerate_planar_vertices(n);
    auto coords = map_indexed<Coordinates>(
        vertices.size(), [&](std::size_t i) { return loday_coordinates(vertices[i]); }, exec);

    for (int r = 2; r <= n - 1; ++r) {
        const int s = n + 1 - r;
        for (int k = 1; k <= r; ++k) {
            const auto facet = boundary_K(k, r, s, PlanarTree::corolla(r), PlanarTree::corolla(s));
            const std::int64_t bound = static_cast<std::int64_t>(s) * (s - 1) / 2;
            auto found = map_indexed<std::vector<SupportViolation>>(
                vertices.size(),
                [&](std::size_t v) -> std::vector<SupportViolation> {
                    std::int64_t sum = 0;
                    for (int i = k; i <= k + s - 2; ++i) sum += coords[v][static_cast<std::size_t>(i - 1)];
                    const bool inside = is_face_of(vertices[v], facet);
                    if ((inside && sum == bound) || (!inside && sum > bound)) return {};
                    return {SupportViolation{facet.canonical(), vertices[v].canonical(), sum, bound, inside}};
                },
                exec);
            for (auto& f : found)
                for (auto& v : f) rep.violations.push_back(std::move(v));
            ++rep.facets_checked;
            rep.vertex_checks += vertices.size();
        }
    }
    return rep;
}

}  // namespace stasheff
