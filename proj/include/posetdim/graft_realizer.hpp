#pragma once

#include "posetdim/classify.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/tree_realizer.hpp"

namespace posetdim {

/// Word builders of one subdivision chain: with y_1..y_k the chain bottom-up
/// and per-element vertex segments,
///   a(X) = i_minus(y_k)...i_minus(y_1) X w_plus(y_1)...w_plus(y_k)
///   b(Z) = w_minus(y_1)...w_minus(y_k) Z i_plus(y_k)...i_plus(y_1)
///   c()  = w_bullet(y_1)...w_bullet(y_k)
/// With k = 0: a(X) = X, b(Z) = Z, c() empty.
struct ChainSegments {
  std::vector<ElementId> ys;
  std::vector<TreeSegments> tree_segments;
  std::vector<VertexSegments> segments;

  Word a(Word x) const;
  Word b(Word z) const;
  Word c() const;
};

/// All materialized builders for one decomposition, over the ids of
/// graft(d).
struct GraftSegments {
  Poset poset;  // graft(d)
  int n = 0;
  std::vector<ElementId> x, z;                         // crown ids
  std::vector<TreeSegments> x_tree, z_tree;            // per crown vertex
  std::vector<VertexSegments> x_segments, z_segments;  // derived
  std::vector<ChainSegments> chains;                   // 2n, index p-1
};

GraftSegments build_segments(const UnicycleDecomposition& d);

/// Realizer for a decomposition whose crown-vertex trees are all trivial
/// (subdivision chains may carry trees); the word patterns are fixed
/// per crown size.
Realizer edge_only_realizer(const UnicycleDecomposition& d);

/// Realizer for a decomposition whose cycle poset is the bare crown (all
/// chains empty; for n = 1 the two chains are single elements with trivial
/// trees); the word pattern is fixed per crown size.
Realizer vertex_only_realizer(const UnicycleDecomposition& d);

/// Realizer of graft(d) for any valid decomposition; three words.
Realizer unicycle_realizer(const UnicycleDecomposition& d);

/// Per-word segment breakdown of unicycle_realizer(d), for debugging.
std::string assembly_trace(const UnicycleDecomposition& d);

/// Realizer of any poset whose components are trees or unicycle posets:
/// trees through the rooted construction (root = smallest label), unicycles
/// through decompose + unicycle_realizer, components spliced in order of
/// their smallest element id. Always three words.
Realizer realize_any(const Poset& p);

}  // namespace posetdim
