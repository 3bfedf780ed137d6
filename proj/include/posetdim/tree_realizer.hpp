#pragma once

#include "posetdim/classify.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

enum class Extremal { minimal, maximal };

/// The four words produced by the recursive construction at an extremal
/// element a. In both cases (before a after) is the first realizer word.
/// side = minimal: before, after, line1, line2 are linear extensions of
///   U_a^-, U_a^+, U_a, U_a and (before a after), (a line1), (a line2)
///   realize the tree.
/// side = maximal: the sets are D_a^-, D_a^+, D_a, D_a and the words are
///   (before a after), (line1 a), (line2 a).
struct ExtremalWords {
  Word before, after, line1, line2;
};

ExtremalWords hardcore(const Poset& t, ElementId a, Extremal side);

/// Named segments of a rooted tree realizer. u_* are linear extensions of
/// U_r^- / U_r^+ / U_r / U_r, d_* of D_r^- / D_r^+ / D_r / D_r, and
///   (u_minus d1 root u_plus), (d_minus root u1 d_plus), (d2 root u2)
/// realize the tree.
struct TreeSegments {
  ElementId root = 0;
  Word u_minus, u_plus, u1, u2;
  Word d_minus, d_plus, d1, d2;
};

TreeSegments rooted_realizer(const RootedTree& rt);

/// The three words assembled from TreeSegments.
Realizer segments_realizer(const TreeSegments& s);

/// Verbatim concatenations used when splicing a vertex's tree into larger
/// words: i_minus = u_minus d1, i_plus = u1 d_plus, w_plus = root u_plus,
/// w_minus = d_minus root, w_bullet = d2 root u2.
struct VertexSegments {
  Word i_minus, i_plus, w_plus, w_minus, w_bullet;
};

VertexSegments vertex_segments(const TreeSegments& s);

/// Depth-first readings of a tree with a minimum, visiting children in
/// ascending and descending label order. The pair realizes the tree.
std::pair<Word, Word> prefix_words(const Poset& t);

/// Realizer of a tree q whose interval [x,z] is a saturated chain
/// x < y_1 < ... < y_k < z with nothing hanging below-off x or above-off z,
/// spliced from the per-y_j segments and the realizers of the trees at x, z.
Realizer chain_tree_realizer(const Poset& q, ElementId x, ElementId z);

}  // namespace posetdim
