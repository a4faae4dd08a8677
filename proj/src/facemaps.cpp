#include "stasheff/facemaps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stasheff {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

Node recolor(const Node& n, Color c) {
    if (n.is_leaf()) return n;
    Node out(c, {});
    out.children.reserve(n.children.size());
    for (const auto& ch : n.children) out.children.push_back(recolor(ch, c));
    return out;
}

// Replaces the k-th leaf (1-based, left to right) with `sub`; `remaining`
// counts down across the traversal.
bool graft_rec(Node& n, int& remaining, const Node& sub) {
    if (n.is_leaf()) {
        if (--remaining == 0) {
            n = sub;
            return true;
        }
        return false;
    }
    for (auto& c : n.children)
        if (graft_rec(c, remaining, sub)) return true;
    return false;
}

Node graft(Node base, int k, const Node& sub) {
    int remaining = k;
    if (!graft_rec(base, remaining, sub)) bad("graft position " + std::to_string(k) + " out of range");
    return base;
}

bool delete_leaf_rec(Node& n, int& remaining) {
    for (std::size_t j = 0; j < n.children.size(); ++j) {
        Node& c = n.children[j];
        if (c.is_leaf()) {
            if (--remaining == 0) {
                n.children.erase(n.children.begin() + static_cast<std::ptrdiff_t>(j));
                return true;
            }
        } else if (delete_leaf_rec(c, remaining)) {
            return true;
        }
    }
    return false;
}

bool is_defect(const Node& n) {
    if (n.is_leaf()) return false;
    if (n.color == Color::Map) return n.arity() == 0;
    return n.arity() == 1;
}

using Path = std::vector<std::size_t>;

void collect_defects(const Node& n, Path& path, std::vector<Path>& out, bool postorder) {
    if (!postorder && is_defect(n)) out.push_back(path);
    for (std::size_t j = 0; j < n.children.size(); ++j) {
        path.push_back(j);
        collect_defects(n.children[j], path, out, postorder);
        path.pop_back();
    }
    if (postorder && is_defect(n)) out.push_back(path);
}

// One rewrite at the located defect. Unary vertices are replaced by their
// child; empty map vertices are removed from their parent.
void repair(Node& root, const Path& path) {
    if (path.empty()) {
        if (root.arity() == 0) bad("degeneracy removed every input");
        Node child = std::move(root.children.front());
        root = std::move(child);
        return;
    }
    Node* parent = &root;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) parent = &parent->children[path[i]];
    const std::size_t j = path.back();
    Node& target = parent->children[j];
    if (target.arity() == 0) {
        parent->children.erase(parent->children.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
        Node child = std::move(target.children.front());
        target = std::move(child);
    }
}

void cascade(Node& root, CascadeOrder order) {
    for (;;) {
        std::vector<Path> defects;
        Path scratch;
        collect_defects(root, scratch, defects, order == CascadeOrder::InnermostLeftmost);
        if (defects.empty()) return;
        // Postorder puts innermost-leftmost first; preorder's last entry is the
        // rightmost one, and among those on a single path the outermost comes
        // first, so scan back for the shallowest defect at the right edge.
        if (order == CascadeOrder::InnermostLeftmost) {
            repair(root, defects.front());
        } else {
            std::size_t best = defects.size() - 1;
            for (std::size_t i = defects.size() - 1; i-- > 0;) {
                const Path& p = defects[i];
                const Path& q = defects[best];
                if (p.size() < q.size() && std::equal(p.begin(), p.end(), q.begin())) best = i;
            }
            repair(root, defects[best]);
        }
    }
}

Node smooth_all(const Node& n) {
    if (n.is_leaf()) return n;
    if (n.arity() == 1) return smooth_all(n.children.front());
    Node out(n.color, {});
    out.children.reserve(n.children.size());
    for (const auto& c : n.children) out.children.push_back(smooth_all(c));
    return out;
}

}  // namespace

PlanarTree boundary_K(int k, int r, int s, const PlanarTree& t1, const PlanarTree& t2) {
    if (r < 2 || s < 2) bad("boundary_K needs r, s >= 2");
    if (t1.leaf_count() != r || t2.leaf_count() != s) bad("boundary_K leaf-count mismatch");
    if (k < 1 || k > r) bad("boundary_K index out of range");
    return PlanarTree::from_node(graft(t1.root(), k, t2.root()));
}

PlanarTree degeneracy_K(int k, const PlanarTree& t) {
    const int i = t.leaf_count();
    if (i < 3) bad("degeneracy_K needs at least 3 leaves");
    if (k < 1 || k > i) bad("degeneracy_K index out of range");
    Node root = t.root();
    int remaining = k;
    delete_leaf_rec(root, remaining);
    cascade(root, CascadeOrder::InnermostLeftmost);
    return PlanarTree::from_node(std::move(root));
}

PaintedTree boundary_J_lower(int k, int r, int s, const PaintedTree& tj, const PlanarTree& tk) {
    if (r < 1 || s < 2) bad("boundary_J_lower needs r >= 1, s >= 2");
    if (tj.leaf_count() != r || tk.leaf_count() != s) bad("boundary_J_lower leaf-count mismatch");
    if (k < 1 || k > r) bad("boundary_J_lower index out of range");
    return PaintedTree::from_node(graft(tj.root(), k, recolor(tk.root(), Color::Domain)));
}

PaintedTree boundary_J_upper(int t, std::span<const int> rs, const PlanarTree& tk, std::span<const PaintedTree> tjs) {
    if (t < 2) bad("boundary_J_upper needs t >= 2");
    if (tk.leaf_count() != t) bad("boundary_J_upper: tree has the wrong leaf count");
    if (rs.size() != static_cast<std::size_t>(t) || tjs.size() != rs.size())
        bad("boundary_J_upper: expected exactly t blocks");
    Node root = recolor(tk.root(), Color::Range);
    // Graft right to left so earlier leaf positions stay put.
    for (int j = t; j >= 1; --j) {
        const auto& piece = tjs[static_cast<std::size_t>(j - 1)];
        if (rs[static_cast<std::size_t>(j - 1)] < 1 || piece.leaf_count() != rs[static_cast<std::size_t>(j - 1)])
            bad("boundary_J_upper: block " + std::to_string(j) + " leaf-count mismatch");
        root = graft(std::move(root), j, piece.root());
    }
    return PaintedTree::from_node(std::move(root));
}

PaintedTree degeneracy_J(int k, const PaintedTree& t, CascadeOrder order) {
    const int i = t.leaf_count();
    if (i < 2) bad("degeneracy_J needs at least 2 leaves");
    if (k < 1 || k > i) bad("degeneracy_J index out of range");
    Node root = t.root();
    int remaining = k;
    delete_leaf_rec(root, remaining);
    cascade(root, order);
    return PaintedTree::from_node(std::move(root));
}

PlanarTree projection_pi(const PaintedTree& t) {
    if (t.leaf_count() < 2) bad("projection_pi is defined for i >= 2");
    return projection_or_unit(t);
}

PlanarTree projection_or_unit(const PaintedTree& t) {
    return PlanarTree::from_node(smooth_all(recolor(t.root(), Color::Plain)));
}

PlanarTree composite_D(const PlanarTree& tk, std::span<const PlanarTree> rhos) {
    const int t = tk.leaf_count();
    if (t < 2) bad("composite_D needs t >= 2");
    if (rhos.size() != static_cast<std::size_t>(t)) bad("composite_D: expected exactly t entries");
    Node root = tk.root();
    for (int j = t; j >= 1; --j) root = graft(std::move(root), j, rhos[static_cast<std::size_t>(j - 1)].root());
    return PlanarTree::from_node(std::move(root));
}

PlanarTree composite_D_iterated(const PlanarTree& tk, std::span<const PlanarTree> rhos) {
    const int t = tk.leaf_count();
    if (t < 2) bad("composite_D needs t >= 2");
    if (rhos.size() != static_cast<std::size_t>(t)) bad("composite_D: expected exactly t entries");
    PlanarTree acc = tk;
    int offset = 0;  // r_1 + ... + r_{j-1}
    for (int j = 1; j <= t; ++j) {
        const PlanarTree& rho = rhos[static_cast<std::size_t>(j - 1)];
        const int pos = offset + 1;
        if (rho.leaf_count() >= 2) acc = boundary_K(pos, acc.leaf_count(), rho.leaf_count(), acc, rho);
        offset += rho.leaf_count();
    }
    return acc;
}

}  // namespace stasheff
