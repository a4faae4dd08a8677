#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stasheff {

// Vertex colors. `Plain` is used by associahedron faces; the other three
// internal colors by multiplihedron faces (source multiplication, the map,
// target multiplication).
enum class Color : std::uint8_t { Leaf, Plain, Domain, Map, Range };

char color_tag(Color c);

struct Node {
    Color color = Color::Leaf;
    std::vector<Node> children;

    Node() = default;
    Node(Color c, std::vector<Node> kids) : color(c), children(std::move(kids)) {}

    static Node leaf() { return Node{}; }

    bool is_leaf() const { return color == Color::Leaf; }
    int arity() const { return static_cast<int>(children.size()); }
};

bool operator==(const Node& a, const Node& b);

int count_leaves(const Node& n);

/// Preorder serialization: a leaf is `x`, an internal vertex is its color
/// tag followed by the parenthesized, comma separated list of children.
/// Tags: `m` plain, `d` domain, `f` map, `g` range.
std::string serialize(const Node& n);
/// Inverse of serialize(). Throws std::invalid_argument on malformed input.
Node parse_node(std::string_view text);

/// A face of the associahedron K_n: a planar rooted tree whose internal
/// vertices have arity >= 2. The single-leaf tree is allowed and acts as the
/// unit for grafting; it is not a face of any K_n.
class PlanarTree {
public:
    /// Validates and wraps. Throws std::invalid_argument.
    static PlanarTree from_node(Node root);
    static PlanarTree parse(std::string_view text);
    static PlanarTree unit();
    static PlanarTree corolla(int n);

    const Node& root() const { return root_; }
    int leaf_count() const { return leaves_; }
    int dimension() const;
    bool is_binary() const { return dimension() == 0; }
    std::string canonical() const { return serialize(root_); }

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.root_ == b.root_; }

private:
    PlanarTree(Node root, int leaves) : root_(std::move(root)), leaves_(leaves) {}
    Node root_;
    int leaves_ = 1;
};

/// A face of the multiplihedron J_n: a painted tree. Every leaf-to-root path
/// reads (domain)* map (range)*; domain and range vertices have arity >= 2,
/// map vertices arity >= 1.
class PaintedTree {
public:
    static PaintedTree from_node(Node root);
    static PaintedTree parse(std::string_view text);
    /// Map vertex over n leaves, the top cell of J_n (n >= 1).
    static PaintedTree map_corolla(int n);
    /// Range vertex over n unary map vertices (n >= 2).
    static PaintedTree range_corolla(int n);

    const Node& root() const { return root_; }
    int leaf_count() const { return leaves_; }
    int dimension() const;
    std::string canonical() const { return serialize(root_); }

    friend bool operator==(const PaintedTree& a, const PaintedTree& b) { return a.root_ == b.root_; }

private:
    PaintedTree(Node root, int leaves) : root_(std::move(root)), leaves_(leaves) {}
    Node root_;
    int leaves_ = 1;
};

enum class PolytopeKind { K, J };

const char* to_string(PolytopeKind kind);
PolytopeKind parse_kind(std::string_view s);

// Validity predicates on raw nodes; the string overloads explain the first
// violation found.
std::optional<std::string> planar_violation(const Node& root);
std::optional<std::string> painted_violation(const Node& root);

/// Sum over internal vertices of (arity - 2), or (arity - 1) for map vertices.
int node_dimension(const Node& root);

enum class CorollaKind { K, JMap, JRange };

/// Top cell constructors. Throws std::invalid_argument when n is out of range.
Node corolla(CorollaKind kind, int n);

inline constexpr int kFullEnumerationCap = 10;
inline constexpr int kVertexEnumerationCap = 13;

/// All faces of K_n (n >= 2), ordered by (dimension, canonical form).
/// Throws std::out_of_range beyond kFullEnumerationCap.
std::vector<PlanarTree> enumerate_planar(int n, std::optional<int> dim = std::nullopt);
/// All faces of J_n (n >= 1), same ordering.
std::vector<PaintedTree> enumerate_painted(int n, std::optional<int> dim = std::nullopt);

/// Binary trees only; allowed up to kVertexEnumerationCap.
std::vector<PlanarTree> enumerate_planar_vertices(int n);
std::vector<PaintedTree> enumerate_painted_vertices(int n);

/// Leaf intervals [first, last] (1-based) spanned by the internal vertices.
std::vector<std::pair<int, int>> clades(const Node& root);

/// Face order of K_n: `lower` is a face of `upper` iff every clade of
/// `upper` is a clade of `lower`.
bool is_face_of(const PlanarTree& lower, const PlanarTree& upper);

}  // namespace stasheff
