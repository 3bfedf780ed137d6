#include "posetdim/tree_realizer.hpp"

#include <algorithm>

namespace posetdim {

namespace {

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

void require_tree(const Poset& t) {
  PosetClass cls = classify(t);
  if (t.size() == 0 || !cls.connected ||
      cls.components[0] != ComponentClass::tree)
    raise(errc::not_a_tree, "cover graph is not a tree");
}

// Cover tree hung from an anchor: children away from it, each edge marked
// by its direction in the order.
struct RootedShape {
  std::vector<std::vector<ElementId>> children;  // ascending label
  std::vector<bool> up_edge;                     // child covers its parent
};

RootedShape root_shape(const Poset& t, ElementId anchor) {
  RootedShape s;
  s.children.assign(size_t(t.size()), {});
  s.up_edge.assign(size_t(t.size()), false);
  std::vector<bool> seen(size_t(t.size()), false);
  seen[size_t(anchor)] = true;
  std::vector<ElementId> stack{anchor};
  while (!stack.empty()) {
    ElementId v = stack.back();
    stack.pop_back();
    auto visit = [&](ElementId w, bool up) {
      if (seen[size_t(w)]) return;
      seen[size_t(w)] = true;
      s.up_edge[size_t(w)] = up;
      s.children[size_t(v)].push_back(w);
      stack.push_back(w);
    };
    for (ElementId w : t.upper_covers(v)) visit(w, true);
    for (ElementId w : t.lower_covers(v)) visit(w, false);
  }
  for (auto& cs : s.children)
    std::sort(cs.begin(), cs.end(), [&](ElementId a, ElementId b) {
      return t.label(a) < t.label(b);
    });
  return s;
}

struct FourWords {
  Word before, after, line1, line2;
};

// Peaks of a frame: the monotone set reached from v along edges of the
// frame's orientation, read in prefix order. left_right toggles the child
// visiting order.
std::vector<ElementId> frame_peaks(const RootedShape& s, ElementId v, bool flip,
                                   bool left_right) {
  std::vector<ElementId> out, stack;
  auto push_children = [&](ElementId u) {
    const auto& cs = s.children[size_t(u)];
    if (left_right) {
      for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        if (s.up_edge[size_t(*it)] != flip) stack.push_back(*it);
    } else {
      for (ElementId c : cs)
        if (s.up_edge[size_t(c)] != flip) stack.push_back(c);
    }
  };
  push_children(v);
  while (!stack.empty()) {
    ElementId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    push_children(u);
  }
  return out;
}

// The recursive construction at an extremal anchor, with the orientation
// flipped on every descent. Returns words in the frame's own orientation:
// (before anchor after), (anchor line1), (anchor line2) realize the frame
// subtree, with before/after over the incomparable/comparable peaks' sides.
FourWords hardcore_frames(const RootedShape& shape, ElementId anchor, bool flip) {
  struct Frame {
    ElementId v;
    bool flip;
    std::vector<ElementId> lr, rl;
    size_t next = 0;
    std::vector<FourWords> kids;  // per lr index, in child orientation
  };
  auto make_frame = [&shape](ElementId v, bool fl) {
    Frame f;
    f.v = v;
    f.flip = fl;
    f.lr = frame_peaks(shape, v, fl, true);
    f.rl = frame_peaks(shape, v, fl, false);
    f.kids.reserve(f.lr.size());
    return f;
  };

  std::vector<Frame> stack;
  stack.push_back(make_frame(anchor, flip));
  std::vector<int> slot(shape.children.size(), -1);
  FourWords result;

  while (true) {
    Frame& f = stack.back();
    if (f.next < f.lr.size()) {
      ElementId e = f.lr[f.next++];
      stack.push_back(make_frame(e, !f.flip));
      continue;
    }

    // Children done; their min-form words read backwards give the
    // max-form words in this frame's orientation.
    const size_t r = f.lr.size();
    for (size_t i = 0; i < r; ++i) slot[size_t(f.lr[i])] = int(i);
    auto d_minus = [&](size_t i) { return reverse_word(f.kids[i].after); };
    auto d_plus = [&](size_t i) { return reverse_word(f.kids[i].before); };
    auto d1 = [&](size_t i) { return reverse_word(f.kids[i].line1); };
    auto d2 = [&](size_t i) { return reverse_word(f.kids[i].line2); };

    FourWords words;
    for (size_t i = r; i-- > 0;) append(words.before, d1(i));
    words.after = f.lr;
    for (size_t i = 0; i < r; ++i) {
      append(words.line1, d2(i));
      words.line1.push_back(f.lr[i]);
    }
    for (ElementId e : f.rl) {
      size_t i = size_t(slot[size_t(e)]);
      append(words.line2, d_minus(i));
      words.line2.push_back(e);
    }
    for (size_t i = r; i-- > 0;) append(words.line2, d_plus(i));
    for (size_t i = 0; i < r; ++i) slot[size_t(f.lr[i])] = -1;

    stack.pop_back();
    if (stack.empty()) {
      result = std::move(words);
      break;
    }
    stack.back().kids.push_back(std::move(words));
  }
  return result;
}

ExtremalWords to_extremal(FourWords w, Extremal side) {
  if (side == Extremal::minimal)
    return {std::move(w.before), std::move(w.after), std::move(w.line1),
            std::move(w.line2)};
  return {reverse_word(std::move(w.after)), reverse_word(std::move(w.before)),
          reverse_word(std::move(w.line1)), reverse_word(std::move(w.line2))};
}

}  // namespace

ExtremalWords hardcore(const Poset& t, ElementId a, Extremal side) {
  if (a < 0 || a >= t.size())
    raise(errc::unknown_element, "element id outside the poset");
  require_tree(t);
  if (side == Extremal::minimal && !t.lower_covers(a).empty())
    raise(errc::not_extremal, "'" + t.label(a) + "' is not a minimal element");
  if (side == Extremal::maximal && !t.upper_covers(a).empty())
    raise(errc::not_extremal, "'" + t.label(a) + "' is not a maximal element");
  RootedShape shape = root_shape(t, a);
  return to_extremal(hardcore_frames(shape, a, side == Extremal::maximal), side);
}

TreeSegments rooted_realizer(const RootedTree& rt) {
  if (rt.root < 0 || rt.root >= rt.tree.size())
    raise(errc::invalid_tree, "root lies outside the tree");
  PosetClass cls = classify(rt.tree);
  if (rt.tree.size() == 0 || !cls.connected ||
      cls.components[0] != ComponentClass::tree)
    raise(errc::invalid_tree, "cover graph is not a tree");

  RootedShape shape = root_shape(rt.tree, rt.root);
  ExtremalWords up = to_extremal(hardcore_frames(shape, rt.root, false),
                                 Extremal::minimal);
  ExtremalWords down = to_extremal(hardcore_frames(shape, rt.root, true),
                                   Extremal::maximal);
  TreeSegments s;
  s.root = rt.root;
  s.u_minus = std::move(up.before);
  s.u_plus = std::move(up.after);
  s.u1 = std::move(up.line1);
  s.u2 = std::move(up.line2);
  s.d_minus = std::move(down.before);
  s.d_plus = std::move(down.after);
  s.d1 = std::move(down.line1);
  s.d2 = std::move(down.line2);
  return s;
}

Realizer segments_realizer(const TreeSegments& s) {
  Word w1 = s.u_minus;
  append(w1, s.d1);
  w1.push_back(s.root);
  append(w1, s.u_plus);
  Word w2 = s.d_minus;
  w2.push_back(s.root);
  append(w2, s.u1);
  append(w2, s.d_plus);
  Word w3 = s.d2;
  w3.push_back(s.root);
  append(w3, s.u2);
  return {std::move(w1), std::move(w2), std::move(w3)};
}

VertexSegments vertex_segments(const TreeSegments& s) {
  VertexSegments v;
  v.i_minus = s.u_minus;
  append(v.i_minus, s.d1);
  v.i_plus = s.u1;
  append(v.i_plus, s.d_plus);
  v.w_plus.push_back(s.root);
  append(v.w_plus, s.u_plus);
  v.w_minus = s.d_minus;
  v.w_minus.push_back(s.root);
  v.w_bullet = s.d2;
  v.w_bullet.push_back(s.root);
  append(v.w_bullet, s.u2);
  return v;
}

std::pair<Word, Word> prefix_words(const Poset& t) {
  require_tree(t);
  auto minima = t.minimal_elements();
  if (minima.size() != 1)
    raise(errc::no_minimum, "tree does not have a unique minimal element");

  auto read = [&](bool left_right) {
    Word out, stack{minima[0]};
    while (!stack.empty()) {
      ElementId v = stack.back();
      stack.pop_back();
      out.push_back(v);
      std::vector<ElementId> cs = t.upper_covers(v);
      std::sort(cs.begin(), cs.end(), [&](ElementId a, ElementId b) {
        return left_right ? t.label(b) < t.label(a) : t.label(a) < t.label(b);
      });
      for (ElementId c : cs) stack.push_back(c);
    }
    return out;
  };
  return {read(true), read(false)};
}

namespace {

// Component of `seed` once the vertices in `cut` are deleted; ascending.
std::vector<ElementId> component_without(const Poset& t, ElementId seed,
                                         const std::vector<bool>& cut) {
  std::vector<bool> seen(size_t(t.size()), false);
  seen[size_t(seed)] = true;
  std::vector<ElementId> stack{seed}, members;
  while (!stack.empty()) {
    ElementId v = stack.back();
    stack.pop_back();
    members.push_back(v);
    auto visit = [&](ElementId w) {
      if (!seen[size_t(w)] && !cut[size_t(w)]) {
        seen[size_t(w)] = true;
        stack.push_back(w);
      }
    };
    for (ElementId w : t.upper_covers(v)) visit(w);
    for (ElementId w : t.lower_covers(v)) visit(w);
  }
  std::sort(members.begin(), members.end());
  return members;
}

Word lift(const std::vector<ElementId>& members, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (ElementId e : w) out.push_back(members[size_t(e)]);
  return out;
}

}  // namespace

Realizer chain_tree_realizer(const Poset& q, ElementId x, ElementId z) {
  if (x < 0 || x >= q.size() || z < 0 || z >= q.size())
    raise(errc::unknown_element, "element id outside the poset");
  require_tree(q);
  if (!q.less(x, z))
    raise(errc::precondition_violated, "x must lie below z");

  // The unique tree path from x to z must climb through covers.
  std::vector<ElementId> parent(size_t(q.size()), -1);
  std::vector<ElementId> stack{x};
  std::vector<bool> seen(size_t(q.size()), false);
  seen[size_t(x)] = true;
  while (!stack.empty()) {
    ElementId v = stack.back();
    stack.pop_back();
    auto visit = [&](ElementId w) {
      if (!seen[size_t(w)]) {
        seen[size_t(w)] = true;
        parent[size_t(w)] = v;
        stack.push_back(w);
      }
    };
    for (ElementId w : q.upper_covers(v)) visit(w);
    for (ElementId w : q.lower_covers(v)) visit(w);
  }
  std::vector<ElementId> path;
  for (ElementId v = z; v != -1; v = parent[size_t(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& ups = q.upper_covers(path[i]);
    if (std::find(ups.begin(), ups.end(), path[i + 1]) == ups.end())
      raise(errc::precondition_violated, "[x,z] is not a saturated chain");
  }
  if (q.upper_covers(x).size() != 1)
    raise(errc::precondition_violated, "x must be covered only by the chain");
  if (q.lower_covers(z).size() != 1)
    raise(errc::precondition_violated, "z must cover only the chain");
  TreeNeighborhood at_x = tree_neighborhood(q, x);
  TreeNeighborhood at_z = tree_neighborhood(q, z);
  if (!at_x.d_plus.empty())
    raise(errc::precondition_violated, "nothing may hang sideways below x");
  if (!at_z.u_minus.empty())
    raise(errc::precondition_violated, "nothing may hang sideways above z");

  std::vector<bool> on_path(size_t(q.size()), false);
  for (ElementId v : path) on_path[size_t(v)] = true;

  const size_t k = path.size() - 2;
  std::vector<TreeSegments> segs(k);
  std::vector<std::vector<ElementId>> lifts(k);
  for (size_t j = 0; j < k; ++j) {
    ElementId y = path[j + 1];
    std::vector<bool> cut = on_path;
    cut[size_t(y)] = false;
    lifts[j] = component_without(q, y, cut);
    Poset sub = restrict_poset(q, lifts[j]);
    ElementId local = int(std::lower_bound(lifts[j].begin(), lifts[j].end(), y) -
                          lifts[j].begin());
    TreeSegments s = rooted_realizer({std::move(sub), local});
    s.root = y;
    s.u_minus = lift(lifts[j], s.u_minus);
    s.u_plus = lift(lifts[j], s.u_plus);
    s.u1 = lift(lifts[j], s.u1);
    s.u2 = lift(lifts[j], s.u2);
    s.d_minus = lift(lifts[j], s.d_minus);
    s.d_plus = lift(lifts[j], s.d_plus);
    s.d1 = lift(lifts[j], s.d1);
    s.d2 = lift(lifts[j], s.d2);
    segs[j] = std::move(s);
  }

  auto end_words = [&](ElementId v, ElementId chain_neighbour, Extremal side) {
    std::vector<bool> cut(size_t(q.size()), false);
    cut[size_t(chain_neighbour)] = true;
    auto members = component_without(q, v, cut);
    Poset sub = restrict_poset(q, members);
    ElementId local = int(std::lower_bound(members.begin(), members.end(), v) -
                          members.begin());
    ExtremalWords w = hardcore(sub, local, side);
    return std::array<Word, 3>{
        lift(members, side == Extremal::maximal ? w.before : w.after),
        lift(members, w.line1), lift(members, w.line2)};
  };
  auto tx = end_words(x, path[1], Extremal::maximal);
  auto tz = end_words(z, path[path.size() - 2], Extremal::minimal);

  Word w1, w2, w3;
  for (size_t j = k; j-- > 0;) {
    append(w1, segs[j].u_minus);
    append(w1, segs[j].d1);
  }
  append(w1, tx[0]);
  w1.push_back(x);
  for (size_t j = 0; j < k; ++j) {
    w1.push_back(segs[j].root);
    append(w1, segs[j].u_plus);
  }
  w1.push_back(z);
  append(w1, tz[0]);

  append(w2, tx[1]);
  w2.push_back(x);
  for (size_t j = 0; j < k; ++j) {
    append(w2, segs[j].d_minus);
    w2.push_back(segs[j].root);
  }
  w2.push_back(z);
  append(w2, tz[1]);
  for (size_t j = k; j-- > 0;) {
    append(w2, segs[j].u1);
    append(w2, segs[j].d_plus);
  }

  append(w3, tx[2]);
  w3.push_back(x);
  for (size_t j = 0; j < k; ++j) {
    append(w3, segs[j].d2);
    w3.push_back(segs[j].root);
    append(w3, segs[j].u2);
  }
  w3.push_back(z);
  append(w3, tz[2]);

  return {std::move(w1), std::move(w2), std::move(w3)};
}

}  // namespace posetdim
