#include "stasheff/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stasheff {

char color_tag(Color c) {
    switch (c) {
        case Color::Leaf: return 'x';
        case Color::Plain: return 'm';
        case Color::Domain: return 'd';
        case Color::Map: return 'f';
        case Color::Range: return 'g';
    }
    return '?';
}

bool operator==(const Node& a, const Node& b) {
    if (a.color != b.color || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!(a.children[i] == b.children[i])) return false;
    return true;
}

int count_leaves(const Node& n) {
    if (n.is_leaf()) return 1;
    int total = 0;
    for (const auto& c : n.children) total += count_leaves(c);
    return total;
}

namespace {

void serialize_into(const Node& n, std::string& out) {
    out.push_back(color_tag(n.color));
    if (n.is_leaf()) return;
    out.push_back('(');
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out.push_back(',');
        serialize_into(n.children[i], out);
    }
    out.push_back(')');
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Node parse() {
        Node n = node();
        skip_space();
        if (pos_ != s_.size()) fail("trailing characters");
        return n;
    }

private:
    Node node() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        Color c;
        switch (s_[pos_++]) {
            case 'x': return Node::leaf();
            case 'm': c = Color::Plain; break;
            case 'd': c = Color::Domain; break;
            case 'f': c = Color::Map; break;
            case 'g': c = Color::Range; break;
            default: fail("unknown vertex tag");
        }
        expect('(');
        Node n(c, {});
        if (peek() == ')') {
            ++pos_;
            return n;
        }
        n.children.push_back(node());
        while (peek() == ',') {
            ++pos_;
            n.children.push_back(node());
        }
        expect(')');
        return n;
    }

    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("tree parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::optional<std::string> planar_violation_rec(const Node& n) {
    if (n.is_leaf()) {
        if (!n.children.empty()) return "leaf with children";
        return std::nullopt;
    }
    if (n.color != Color::Plain) return "non-plain vertex in a planar tree";
    if (n.arity() < 2) return "vertex of arity < 2";
    for (const auto& c : n.children)
        if (auto v = planar_violation_rec(c)) return v;
    return std::nullopt;
}

// Zone tracks the position along a root-to-leaf path: 0 = above the map
// level (range vertices allowed), 1 = below it (domain vertices only).
std::optional<std::string> painted_violation_rec(const Node& n, int zone) {
    switch (n.color) {
        case Color::Leaf:
            if (!n.children.empty()) return "leaf with children";
            if (zone == 0) return "leaf path without a map vertex";
            return std::nullopt;
        case Color::Plain:
            return "plain vertex in a painted tree";
        case Color::Range:
            if (zone != 0) return "range vertex below the map level";
            if (n.arity() < 2) return "range vertex of arity < 2";
            break;
        case Color::Map:
            if (zone != 0) return "two map vertices on one path";
            if (n.arity() < 1) return "map vertex of arity 0";
            zone = 1;
            break;
        case Color::Domain:
            if (zone != 1) return "domain vertex above the map level";
            if (n.arity() < 2) return "domain vertex of arity < 2";
            break;
    }
    for (const auto& c : n.children)
        if (auto v = painted_violation_rec(c, zone)) return v;
    return std::nullopt;
}

}  // namespace

std::string serialize(const Node& n) {
    std::string out;
    serialize_into(n, out);
    return out;
}

Node parse_node(std::string_view text) { return Parser(text).parse(); }

std::optional<std::string> planar_violation(const Node& root) { return planar_violation_rec(root); }

std::optional<std::string> painted_violation(const Node& root) { return painted_violation_rec(root, 0); }

int node_dimension(const Node& root) {
    if (root.is_leaf()) return 0;
    int d = root.color == Color::Map ? root.arity() - 1 : root.arity() - 2;
    for (const auto& c : root.children) d += node_dimension(c);
    return d;
}

PlanarTree PlanarTree::from_node(Node root) {
    if (auto v = planar_violation(root)) throw std::invalid_argument("invalid planar tree: " + *v);
    int leaves = count_leaves(root);
    return PlanarTree(std::move(root), leaves);
}

PlanarTree PlanarTree::parse(std::string_view text) { return from_node(parse_node(text)); }

PlanarTree PlanarTree::unit() { return PlanarTree(Node::leaf(), 1); }

PlanarTree PlanarTree::corolla(int n) { return from_node(stasheff::corolla(CorollaKind::K, n)); }

int PlanarTree::dimension() const { return node_dimension(root_); }

PaintedTree PaintedTree::from_node(Node root) {
    if (auto v = painted_violation(root)) throw std::invalid_argument("invalid painted tree: " + *v);
    int leaves = count_leaves(root);
    return PaintedTree(std::move(root), leaves);
}

PaintedTree PaintedTree::parse(std::string_view text) { return from_node(parse_node(text)); }

PaintedTree PaintedTree::map_corolla(int n) { return from_node(corolla(CorollaKind::JMap, n)); }

PaintedTree PaintedTree::range_corolla(int n) { return from_node(corolla(CorollaKind::JRange, n)); }

int PaintedTree::dimension() const { return node_dimension(root_); }

const char* to_string(PolytopeKind kind) { return kind == PolytopeKind::K ? "K" : "J"; }

PolytopeKind parse_kind(std::string_view s) {
    if (s == "K" || s == "k") return PolytopeKind::K;
    if (s == "J" || s == "j") return PolytopeKind::J;
    throw std::invalid_argument("unknown polytope kind: " + std::string(s));
}

Node corolla(CorollaKind kind, int n) {
    switch (kind) {
        case CorollaKind::K:
            if (n < 2) throw std::invalid_argument("K corolla needs n >= 2");
            return Node(Color::Plain, std::vector<Node>(n, Node::leaf()));
        case CorollaKind::JMap:
            if (n < 1) throw std::invalid_argument("map corolla needs n >= 1");
            return Node(Color::Map, std::vector<Node>(n, Node::leaf()));
        case CorollaKind::JRange: {
            if (n < 2) throw std::invalid_argument("range corolla needs n >= 2");
            Node unary(Color::Map, {Node::leaf()});
            return Node(Color::Range, std::vector<Node>(n, unary));
        }
    }
    throw std::invalid_argument("unknown corolla kind");
}

namespace {

using Options = std::function<const std::vector<Node>&(int)>;

// Emits every ordered sequence of subtrees whose leaf counts sum to `total`,
// with between min_parts and max_parts entries.
void for_each_sequence(int total, int min_parts, int max_parts, const Options& options,
                       const std::function<void(const std::vector<Node>&)>& emit) {
    std::vector<Node> current;
    std::function<void(int)> extend = [&](int remaining) {
        int parts = static_cast<int>(current.size());
        if (remaining == 0) {
            if (parts >= min_parts) emit(current);
            return;
        }
        if (parts >= max_parts) return;
        // Leave room for the parts still required after this one.
        int largest = remaining - std::max(0, min_parts - parts - 1);
        for (int size = 1; size <= largest; ++size) {
            for (const Node& sub : options(size)) {
                current.push_back(sub);
                extend(remaining - size);
                current.pop_back();
            }
        }
    };
    extend(total);
}

// Planar trees colored `color`, indexed by leaf count. binary_only restricts
// to arity exactly 2.
std::vector<std::vector<Node>> planar_table(int n, Color color, bool binary_only) {
    std::vector<std::vector<Node>> table(static_cast<std::size_t>(n) + 1);
    if (n >= 1) table[1] = {Node::leaf()};
    Options opts = [&table](int s) -> const std::vector<Node>& { return table[static_cast<std::size_t>(s)]; };
    for (int m = 2; m <= n; ++m) {
        auto& out = table[static_cast<std::size_t>(m)];
        for_each_sequence(m, 2, binary_only ? 2 : m, opts,
                          [&](const std::vector<Node>& kids) { out.emplace_back(color, kids); });
    }
    return table;
}

std::vector<Node> painted_nodes(int n, bool binary_only) {
    auto domain = planar_table(n, Color::Domain, binary_only);
    std::vector<std::vector<Node>> painted(static_cast<std::size_t>(n) + 1);
    Options dom_opts = [&domain](int s) -> const std::vector<Node>& { return domain[static_cast<std::size_t>(s)]; };
    Options pt_opts = [&painted](int s) -> const std::vector<Node>& { return painted[static_cast<std::size_t>(s)]; };
    for (int m = 1; m <= n; ++m) {
        auto& out = painted[static_cast<std::size_t>(m)];
        for_each_sequence(m, 1, binary_only ? 1 : m, dom_opts,
                          [&](const std::vector<Node>& kids) { out.emplace_back(Color::Map, kids); });
        if (m >= 2)
            for_each_sequence(m, 2, binary_only ? 2 : m, pt_opts,
                              [&](const std::vector<Node>& kids) { out.emplace_back(Color::Range, kids); });
    }
    return std::move(painted[static_cast<std::size_t>(n)]);
}

template <class Tree>
std::vector<Tree> finish(std::vector<Node> nodes, std::optional<int> dim) {
    struct Keyed {
        int dim;
        std::string code;
        Node node;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(nodes.size());
    for (auto& n : nodes) {
        int d = node_dimension(n);
        if (dim && d != *dim) continue;
        keyed.push_back({d, serialize(n), std::move(n)});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return std::tie(a.dim, a.code) < std::tie(b.dim, b.code); });
    std::vector<Tree> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(Tree::from_node(std::move(k.node)));
    return out;
}

void check_range(int n, int lo, int hi, const char* what) {
    if (n < lo) throw std::invalid_argument(std::string(what) + ": leaf count " + std::to_string(n) + " below " + std::to_string(lo));
    if (n > hi)
        throw std::out_of_range(std::string(what) + ": leaf count " + std::to_string(n) + " exceeds cap " + std::to_string(hi));
}

}  // namespace

std::vector<PlanarTree> enumerate_planar(int n, std::optional<int> dim) {
    check_range(n, 2, kFullEnumerationCap, "enumerate K");
    auto table = planar_table(n, Color::Plain, false);
    return finish<PlanarTree>(std::move(table[static_cast<std::size_t>(n)]), dim);
}

std::vector<PaintedTree> enumerate_painted(int n, std::optional<int> dim) {
    check_range(n, 1, kFullEnumerationCap, "enumerate J");
    return finish<PaintedTree>(painted_nodes(n, false), dim);
}

std::vector<PlanarTree> enumerate_planar_vertices(int n) {
    check_range(n, 2, kVertexEnumerationCap, "enumerate K vertices");
    auto table = planar_table(n, Color::Plain, true);
    return finish<PlanarTree>(std::move(table[static_cast<std::size_t>(n)]), std::nullopt);
}

std::vector<PaintedTree> enumerate_painted_vertices(int n) {
    check_range(n, 1, kVertexEnumerationCap, "enumerate J vertices");
    return finish<PaintedTree>(painted_nodes(n, true), std::nullopt);
}

namespace {

int collect_clades(const Node& n, int first, std::vector<std::pair<int, int>>& out) {
    if (n.is_leaf()) return 1;
    int width = 0;
    for (const auto& c : n.children) width += collect_clades(c, first + width, out);
    out.emplace_back(first, first + width - 1);
    return width;
}

}  // namespace

std::vector<std::pair<int, int>> clades(const Node& root) {
    std::vector<std::pair<int, int>> out;
    collect_clades(root, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_face_of(const PlanarTree& lower, const PlanarTree& upper) {
    if (lower.leaf_count() != upper.leaf_count()) return false;
    auto lo = clades(lower.root());
    auto up = clades(upper.root());
    return std::includes(lo.begin(), lo.end(), up.begin(), up.end());
}

}  // namespace stasheff
