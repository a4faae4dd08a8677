#pragma once

#include <span>
#include <vector>

#include "stasheff/trees.hpp"

namespace stasheff {

// Structure maps between faces of associahedra and multiplihedra. Every map
// is total on valid inputs and throws std::invalid_argument when an index or
// leaf count is out of range.

/// K_r x K_s -> K_{r+s-1}: graft t2 onto leaf k of t1 (1 <= k <= r, r, s >= 2).
PlanarTree boundary_K(int k, int r, int s, const PlanarTree& t1, const PlanarTree& t2);

/// K_i -> K_{i-1}: delete leaf k and smooth a parent left with one child.
PlanarTree degeneracy_K(int k, const PlanarTree& t);

/// J_r x K_s -> J_{r+s-1}: graft tk, recolored as domain, onto leaf k of tj.
PaintedTree boundary_J_lower(int k, int r, int s, const PaintedTree& tj, const PlanarTree& tk);

/// K_t x J_{r_1} x ... x J_{r_t} -> J_{r_1+...+r_t}: recolor tk as range and
/// graft tjs[j] onto its leaf j + 1.
PaintedTree boundary_J_upper(int t, std::span<const int> rs, const PlanarTree& tk, std::span<const PaintedTree> tjs);

/// Order in which the post-deletion cascade of degeneracy_J repairs defects.
/// Only InnermostLeftmost is used outside confluence checks.
enum class CascadeOrder { InnermostLeftmost, OutermostRightmost };

/// J_i -> J_{i-1}: delete leaf k, then repeatedly smooth unary domain/range
/// vertices and drop map vertices left with no inputs.
PaintedTree degeneracy_J(int k, const PaintedTree& t, CascadeOrder order = CascadeOrder::InnermostLeftmost);

/// J_i -> K_i (i >= 2): forget the painting, smooth the unary vertices.
PlanarTree projection_pi(const PaintedTree& t);

/// projection_pi extended to J_1, whose single face goes to the unit tree.
PlanarTree projection_or_unit(const PaintedTree& t);

/// Grafts rhos[j] onto leaf j + 1 of tk. Single-leaf entries are the unit.
PlanarTree composite_D(const PlanarTree& tk, std::span<const PlanarTree> rhos);

/// The same tree built as the iterated boundary composite
///   d_{r_1+..+r_{t-1}+1}(...) o ... o (d_{r_1+1}(r_1+t-1, r_2) x id) o (d_1(t, r_1) x id),
/// skipping unit entries. Kept as an independent route to composite_D.
PlanarTree composite_D_iterated(const PlanarTree& tk, std::span<const PlanarTree> rhos);

}  // namespace stasheff
