#include "posetdim/classify.hpp"

#include <algorithm>
#include <set>

namespace posetdim {

const char* component_class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::tree: return "tree";
    case ComponentClass::unicycle: return "unicycle";
    case ComponentClass::other: return "other";
  }
  return "?";
}

PosetClass classify(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  PosetClass out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = int(out.components.size());
    std::vector<ElementId> stack{s}, members;
    comp[s] = id;
    while (!stack.empty()) {
      ElementId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      auto visit = [&](ElementId w) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      };
      for (ElementId w : p.upper_covers(v)) visit(w);
      for (ElementId w : p.lower_covers(v)) visit(w);
    }
    std::sort(members.begin(), members.end());
    size_t edges = 0;
    for (ElementId v : members) edges += p.upper_covers(v).size();
    ComponentClass c = edges + 1 == members.size() ? ComponentClass::tree
                       : edges == members.size()   ? ComponentClass::unicycle
                                                   : ComponentClass::other;
    out.components.push_back(c);
    out.members.push_back(std::move(members));
  }
  out.connected = out.components.size() <= 1;
  return out;
}

bool same_rooted_tree(const RootedTree& a, const RootedTree& b) {
  return a.tree == b.tree && a.root_label() == b.root_label();
}

std::vector<std::string> UnicycleDecomposition::cycle_elements() const {
  std::vector<std::string> out = x;
  out.insert(out.end(), z.begin(), z.end());
  for (const auto& chain : chains) out.insert(out.end(), chain.begin(), chain.end());
  return out;
}

const std::string& UnicycleDecomposition::chain_bottom_label(int p) const {
  return x[size_t((p / 2) % n)];
}

const std::string& UnicycleDecomposition::chain_top_label(int p) const {
  return z[size_t((p + 1) / 2 - 1)];
}

bool operator==(const UnicycleDecomposition& a, const UnicycleDecomposition& b) {
  if (a.n != b.n || a.x != b.x || a.z != b.z || a.chains != b.chains) return false;
  if (a.trees.size() != b.trees.size()) return false;
  for (const auto& [label, tree] : a.trees) {
    auto it = b.trees.find(label);
    if (it == b.trees.end() || !same_rooted_tree(tree, it->second)) return false;
  }
  return true;
}

void validate_decomposition(const UnicycleDecomposition& d) {
  auto fail = [](const std::string& why) {
    raise(errc::invalid_decomposition, why);
  };
  if (d.n < 1) fail("crown size must be at least 1");
  if (int(d.x.size()) != d.n || int(d.z.size()) != d.n)
    fail("need n crown minima and n crown maxima");
  if (int(d.chains.size()) != 2 * d.n) fail("need 2n chains");
  if (d.n == 1 && (d.chains[0].empty() || d.chains[1].empty()))
    fail("both chains must be non-empty when n = 1");

  auto cycle = d.cycle_elements();
  {
    std::set<std::string> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) fail("cycle element labels collide");
  }
  if (d.trees.size() != cycle.size())
    fail("need exactly one rooted tree per cycle element");

  std::set<std::string> all_labels;
  for (const std::string& v : cycle) {
    auto it = d.trees.find(v);
    if (it == d.trees.end()) fail("missing tree at '" + v + "'");
    const RootedTree& rt = it->second;
    if (rt.root < 0 || rt.root >= rt.tree.size() || rt.root_label() != v)
      fail("tree at '" + v + "' is not rooted there");
    PosetClass cls = classify(rt.tree);
    if (!cls.connected || cls.components.size() != 1 ||
        cls.components[0] != ComponentClass::tree)
      fail("tree at '" + v + "' has a non-tree cover graph");
    for (const std::string& l : rt.tree.labels())
      if (!all_labels.insert(l).second)
        fail("element '" + l + "' appears in two parts");
  }
  for (const std::string& v : cycle) all_labels.erase(v);
  for (const std::string& v : cycle)
    if (all_labels.count(v)) fail("cycle element '" + v + "' reused in a tree");
}

Poset graft(const UnicycleDecomposition& d) {
  validate_decomposition(d);
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> relations;
  for (const std::string& v : d.cycle_elements()) {
    const RootedTree& rt = d.trees.at(v);
    for (const std::string& l : rt.tree.labels()) labels.push_back(l);
    for (auto [a, b] : rt.tree.covers())
      relations.emplace_back(rt.tree.label(a), rt.tree.label(b));
  }
  for (int p = 1; p <= 2 * d.n; ++p) {
    std::vector<std::string> rail{d.chain_bottom_label(p)};
    const auto& chain = d.chains[size_t(p - 1)];
    rail.insert(rail.end(), chain.begin(), chain.end());
    rail.push_back(d.chain_top_label(p));
    for (size_t j = 0; j + 1 < rail.size(); ++j)
      relations.emplace_back(rail[j], rail[j + 1]);
  }
  return build_poset(std::move(labels), relations);
}

namespace {

// Vertices left after repeatedly deleting cover-graph leaves: the cycle.
std::vector<bool> cycle_mask(const Poset& p) {
  const int n = p.size();
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v)
    degree[v] = int(p.upper_covers(v).size() + p.lower_covers(v).size());
  std::vector<bool> removed(n, false);
  std::vector<ElementId> queue;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) queue.push_back(v);
  while (!queue.empty()) {
    ElementId v = queue.back();
    queue.pop_back();
    removed[v] = true;
    auto drop = [&](ElementId w) {
      if (!removed[w] && --degree[w] == 1) queue.push_back(w);
    };
    for (ElementId w : p.upper_covers(v)) drop(w);
    for (ElementId w : p.lower_covers(v)) drop(w);
  }
  std::vector<bool> on_cycle(n, false);
  for (int v = 0; v < n; ++v) on_cycle[v] = !removed[v];
  return on_cycle;
}

}  // namespace

UnicycleDecomposition decompose(const Poset& p) {
  PosetClass cls = classify(p);
  if (!cls.connected || cls.components.size() != 1 ||
      cls.components[0] != ComponentClass::unicycle)
    raise(errc::not_unicycle, "cover graph is not a connected unicycle");

  const int n = p.size();
  std::vector<bool> on_cycle = cycle_mask(p);

  // Grafted tree at each cycle vertex: its component once cycle edges go.
  std::vector<int> owner(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!on_cycle[v]) continue;
    owner[v] = v;
    std::vector<ElementId> stack{v};
    while (!stack.empty()) {
      ElementId u = stack.back();
      stack.pop_back();
      auto visit = [&](ElementId w) {
        if (!on_cycle[w] && owner[w] == -1) {
          owner[w] = v;
          stack.push_back(w);
        }
      };
      for (ElementId w : p.upper_covers(u)) visit(w);
      for (ElementId w : p.lower_covers(u)) visit(w);
    }
  }

  auto tree_at = [&](ElementId v) {
    std::vector<ElementId> members;
    for (int u = 0; u < n; ++u)
      if (owner[u] == v) members.push_back(u);
    RootedTree rt;
    rt.tree = restrict_poset(p, members);
    rt.root = int(std::lower_bound(members.begin(), members.end(), v) -
                  members.begin());
    return rt;
  };

  // Circular order and up/down shape of the cycle.
  std::vector<std::array<ElementId, 2>> ring(n, {-1, -1});
  for (int v = 0; v < n; ++v) {
    if (!on_cycle[v]) continue;
    int k = 0;
    for (ElementId w : p.upper_covers(v))
      if (on_cycle[w]) ring[v][size_t(k++)] = w;
    for (ElementId w : p.lower_covers(v))
      if (on_cycle[w]) ring[v][size_t(k++)] = w;
  }
  auto local_min = [&](ElementId v) {
    return p.less(v, ring[v][0]) && p.less(v, ring[v][1]);
  };
  auto local_max = [&](ElementId v) {
    return p.less(ring[v][0], v) && p.less(ring[v][1], v);
  };

  std::vector<ElementId> minima;
  for (int v = 0; v < n; ++v)
    if (on_cycle[v] && local_min(v)) minima.push_back(v);

  UnicycleDecomposition d;
  auto walk_from = [&](ElementId from, ElementId towards) {
    // Cycle vertices strictly between two extremes, starting beside `from`.
    std::vector<ElementId> interior;
    ElementId prev = from, cur = towards;
    while (!local_min(cur) && !local_max(cur)) {
      interior.push_back(cur);
      ElementId next = ring[cur][0] == prev ? ring[cur][1] : ring[cur][0];
      prev = cur;
      cur = next;
    }
    interior.push_back(cur);  // the closing extreme rides along
    return interior;
  };

  if (minima.size() == 1) {
    // One minimum and one maximum: underlying crown is the square.
    ElementId x = minima[0];
    auto side_a = walk_from(x, ring[x][0]);
    auto side_b = walk_from(x, ring[x][1]);
    ElementId zed = side_a.back();
    side_a.pop_back();
    side_b.pop_back();
    if (p.label(ring[x][1]) < p.label(ring[x][0])) std::swap(side_a, side_b);
    d.n = 1;
    d.x = {p.label(x)};
    d.z = {p.label(zed)};
    d.chains.resize(2);
    for (ElementId v : side_a) d.chains[0].push_back(p.label(v));
    for (ElementId v : side_b) d.chains[1].push_back(p.label(v));
  } else {
    d.n = int(minima.size());
    ElementId x1 = *std::min_element(minima.begin(), minima.end(),
                                     [&](ElementId a, ElementId b) {
                                       return p.label(a) < p.label(b);
                                     });
    // Pick the direction whose first maximum has the smaller label.
    std::array<std::vector<ElementId>, 2> first;
    for (int s = 0; s < 2; ++s) first[size_t(s)] = walk_from(x1, ring[x1][size_t(s)]);
    int dir = p.label(first[0].back()) <= p.label(first[1].back()) ? 0 : 1;

    d.chains.resize(size_t(2 * d.n));
    ElementId at = x1;
    ElementId step = ring[x1][size_t(dir)];
    for (int i = 0; i < d.n; ++i) {
      d.x.push_back(p.label(at));
      auto up = walk_from(at, step);  // ascending towards z_{i+1}
      ElementId zi = up.back();
      up.pop_back();
      d.z.push_back(p.label(zi));
      for (ElementId v : up) d.chains[size_t(2 * i)].push_back(p.label(v));
      ElementId prev = up.empty() ? at : up.back();
      ElementId next_step = ring[zi][0] == prev ? ring[zi][1] : ring[zi][0];
      auto downhill = walk_from(zi, next_step);  // descending towards x_{i+2}
      at = downhill.back();
      downhill.pop_back();
      std::reverse(downhill.begin(), downhill.end());
      for (ElementId v : downhill)
        d.chains[size_t(2 * i + 1)].push_back(p.label(v));
      prev = downhill.empty() ? zi : downhill.front();
      step = ring[at][0] == prev ? ring[at][1] : ring[at][0];
    }
  }

  for (int v = 0; v < n; ++v)
    if (on_cycle[v]) d.trees.emplace(p.label(v), tree_at(v));
  validate_decomposition(d);
  return d;
}

TreeNeighborhood tree_neighborhood(const Poset& t, ElementId a) {
  if (a < 0 || a >= t.size())
    raise(errc::unknown_element, "element id outside the poset");
  PosetClass cls = classify(t);
  if (!cls.connected || (t.size() > 0 && cls.components[0] != ComponentClass::tree))
    raise(errc::not_a_tree, "cover graph is not a tree");

  TreeNeighborhood nb;
  std::vector<bool> seen(t.size(), false);
  seen[a] = true;
  auto flood = [&](ElementId start, std::vector<ElementId>& side) {
    if (seen[start]) return;  // cannot happen in a tree
    std::vector<ElementId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      ElementId v = stack.back();
      stack.pop_back();
      side.push_back(v);
      auto visit = [&](ElementId w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      };
      for (ElementId w : t.upper_covers(v)) visit(w);
      for (ElementId w : t.lower_covers(v)) visit(w);
    }
  };
  for (ElementId w : t.upper_covers(a)) flood(w, nb.u);
  for (ElementId w : t.lower_covers(a)) flood(w, nb.d);
  std::sort(nb.u.begin(), nb.u.end());
  std::sort(nb.d.begin(), nb.d.end());
  for (ElementId v : nb.u) (t.less(a, v) ? nb.u_plus : nb.u_minus).push_back(v);
  for (ElementId v : nb.d) (t.less(v, a) ? nb.d_minus : nb.d_plus).push_back(v);
  auto merged = [](const std::vector<ElementId>& lhs,
                   const std::vector<ElementId>& rhs) {
    std::vector<ElementId> out;
    std::merge(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
               std::back_inserter(out));
    return out;
  };
  nb.i_plus = merged(nb.u, nb.d_plus);
  nb.i_minus = merged(nb.d, nb.u_minus);
  return nb;
}

}  // namespace posetdim
