#pragma once

#include <map>

#include "posetdim/poset.hpp"

namespace posetdim {

enum class ComponentClass { tree, unicycle, other };
const char* component_class_name(ComponentClass c);

/// Per-component shape of the cover graph: a component with e = v-1 cover
/// edges is a tree, e = v a unicycle, e > v other.
struct PosetClass {
  bool connected = true;
  std::vector<ComponentClass> components;
  std::vector<std::vector<ElementId>> members;  // ascending ids per component
};

PosetClass classify(const Poset& p);

struct RootedTree {
  Poset tree;
  ElementId root = 0;

  const std::string& root_label() const { return tree.label(root); }
  bool trivial() const { return tree.size() == 1; }
};

bool same_rooted_tree(const RootedTree& a, const RootedTree& b);

/// A unicycle poset taken apart: crown minima x_1..x_n and maxima z_1..z_n,
/// the subdivision chain of every numbered cover (bottom-up), and the rooted
/// tree grafted at each cycle element. Parts are glued by label; the tree at
/// a cycle element is rooted there and keyed by that label.
///
/// Cover p of the crown joins x_{floor(p/2)+1} to z_{ceil(p/2)}, indices
/// cyclic. For n = 1 the two chains run from x to z and are both non-empty.
struct UnicycleDecomposition {
  int n = 0;
  std::vector<std::string> x, z;
  std::vector<std::vector<std::string>> chains;  // size 2n
  std::map<std::string, RootedTree> trees;

  // x, z, then chain elements, in a fixed order; every tree key.
  std::vector<std::string> cycle_elements() const;
  const std::string& chain_bottom_label(int p) const;  // x end of chain p (1-based)
  const std::string& chain_top_label(int p) const;     // z end

  friend bool operator==(const UnicycleDecomposition& a,
                         const UnicycleDecomposition& b);
};

/// Throws InvalidDecomposition unless d is structurally sound.
void validate_decomposition(const UnicycleDecomposition& d);

/// Splits a connected unicycle poset into its decomposition, with the
/// canonical labeling: x_1 is the crown minimum with the smallest label and
/// z_1 the smaller-labeled of its two neighbouring maxima on the cycle.
UnicycleDecomposition decompose(const Poset& p);

/// Rebuilds the unicycle poset: within-tree relations plus relations through
/// the roots along the cycle order. graft(decompose(p)) is isomorphic to p.
Poset graft(const UnicycleDecomposition& d);

/// Splits T \ {a} by the first step of the unique path from a, and by
/// comparability with a. Sets are ascending id lists.
struct TreeNeighborhood {
  std::vector<ElementId> u, d;             // path starts up / down
  std::vector<ElementId> u_plus, u_minus;  // u_plus: above a
  std::vector<ElementId> d_minus, d_plus;  // d_minus: below a
  std::vector<ElementId> i_plus, i_minus;  // u + d_plus, d + u_minus
};

TreeNeighborhood tree_neighborhood(const Poset& t, ElementId a);

}  // namespace posetdim
