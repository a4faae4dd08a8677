#include "stasheff/face_poset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace stasheff {

namespace {

void local_contractions(const Node& v, std::vector<Node>& out) {
    if (v.is_leaf()) return;
    const Color splice_color = v.color == Color::Map ? Color::Domain : v.color;
    for (std::size_t j = 0; j < v.children.size(); ++j) {
        const Node& c = v.children[j];
        if (c.color != splice_color) continue;
        Node merged(v.color, {});
        merged.children.reserve(v.children.size() + c.children.size() - 1);
        for (std::size_t i = 0; i < j; ++i) merged.children.push_back(v.children[i]);
        for (const auto& g : c.children) merged.children.push_back(g);
        for (std::size_t i = j + 1; i < v.children.size(); ++i) merged.children.push_back(v.children[i]);
        out.push_back(std::move(merged));
    }
    if (v.color == Color::Range &&
        std::all_of(v.children.begin(), v.children.end(), [](const Node& c) { return c.color == Color::Map; })) {
        Node merged(Color::Map, {});
        for (const auto& c : v.children)
            for (const auto& g : c.children) merged.children.push_back(g);
        out.push_back(std::move(merged));
    }
}

}  // namespace

std::vector<Node> elementary_contractions(const Node& face) {
    std::vector<Node> out;
    local_contractions(face, out);
    for (std::size_t j = 0; j < face.children.size(); ++j) {
        for (Node& sub : elementary_contractions(face.children[j])) {
            Node copy = face;
            copy.children[j] = std::move(sub);
            out.push_back(std::move(copy));
        }
    }
    return out;
}

std::vector<std::string> upward_closure(const Node& face) {
    std::unordered_set<std::string> seen;
    std::deque<Node> queue;
    seen.insert(serialize(face));
    queue.push_back(face);
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        for (Node& up : elementary_contractions(cur)) {
            if (seen.insert(serialize(up)).second) queue.push_back(std::move(up));
        }
    }
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

int top_dimension(PolytopeKind kind, int n) { return kind == PolytopeKind::K ? n - 2 : n - 1; }

FacePoset FacePoset::build(PolytopeKind kind, int n) {
    std::vector<std::vector<std::string>> grades(static_cast<std::size_t>(stasheff::top_dimension(kind, n)) + 1);
    auto place = [&](int dim, std::string code) { grades[static_cast<std::size_t>(dim)].push_back(std::move(code)); };
    if (kind == PolytopeKind::K) {
        for (const auto& t : enumerate_planar(n)) place(t.dimension(), t.canonical());
    } else {
        for (const auto& t : enumerate_painted(n)) place(t.dimension(), t.canonical());
    }
    FacePoset p;
    p.kind_ = kind;
    p.n_ = n;
    p.grades_ = std::move(grades);
    for (std::size_t d = 0; d < p.grades_.size(); ++d)
        for (const auto& code : p.grades_[d]) p.index_.emplace(code, static_cast<int>(d));
    return p;
}

FacePoset FacePoset::from_grades(PolytopeKind kind, int n, std::vector<std::vector<std::string>> grades) {
    const int top = stasheff::top_dimension(kind, n);
    if (top < 0) throw std::invalid_argument("leaf count too small for this polytope");
    if (static_cast<int>(grades.size()) != top + 1) throw std::invalid_argument("wrong number of grades");
    if (grades.back().size() != 1) throw std::invalid_argument("top grade must hold exactly one face");
    FacePoset p;
    p.kind_ = kind;
    p.n_ = n;
    for (std::size_t d = 0; d < grades.size(); ++d) {
        if (!std::is_sorted(grades[d].begin(), grades[d].end()))
            throw std::invalid_argument("grade " + std::to_string(d) + " is not in canonical order");
        for (const auto& code : grades[d]) {
            Node node = parse_node(code);
            auto bad = kind == PolytopeKind::K ? planar_violation(node) : painted_violation(node);
            if (bad) throw std::invalid_argument("invalid face " + code + ": " + *bad);
            if (count_leaves(node) != n) throw std::invalid_argument("face " + code + " has the wrong leaf count");
            if (node_dimension(node) != static_cast<int>(d))
                throw std::invalid_argument("face " + code + " stored in the wrong grade");
            if (serialize(node) != code) throw std::invalid_argument("face " + code + " is not canonical");
            if (!p.index_.emplace(code, static_cast<int>(d)).second)
                throw std::invalid_argument("duplicate face " + code);
        }
    }
    p.grades_ = std::move(grades);
    return p;
}

std::vector<std::size_t> FacePoset::f_vector() const {
    std::vector<std::size_t> f;
    f.reserve(grades_.size());
    for (const auto& g : grades_) f.push_back(g.size());
    return f;
}

std::size_t FacePoset::face_count() const { return index_.size(); }

int FacePoset::dimension_of(const std::string& code) const {
    auto it = index_.find(code);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> FacePoset::facets_containing(const std::string& code) const {
    std::vector<std::string> out;
    const int facet_dim = top_dimension() - 1;
    for (auto& up : upward_closure(parse_node(code)))
        if (dimension_of(up) == facet_dim) out.push_back(std::move(up));
    return out;
}

}  // namespace stasheff
