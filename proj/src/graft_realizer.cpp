#include "posetdim/graft_realizer.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace posetdim {

namespace {

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

// One realizer word under construction, with the segment breakdown kept
// for debugging.
struct Builder {
  Word word;
  std::vector<std::pair<std::string, size_t>> parts;

  void add(std::string tag, const Word& w) {
    parts.emplace_back(std::move(tag), w.size());
    append(word, w);
  }
};

std::string num(const char* base, int i, int n) {
  int j = ((i - 1) % n + n) % n + 1;  // cyclic 1..n
  return base + std::to_string(j);
}

}  // namespace

Word ChainSegments::a(Word x) const {
  Word out;
  for (size_t j = ys.size(); j-- > 0;) append(out, segments[j].i_minus);
  append(out, x);
  for (size_t j = 0; j < ys.size(); ++j) append(out, segments[j].w_plus);
  return out;
}

Word ChainSegments::b(Word z) const {
  Word out;
  for (size_t j = 0; j < ys.size(); ++j) append(out, segments[j].w_minus);
  append(out, z);
  for (size_t j = ys.size(); j-- > 0;) append(out, segments[j].i_plus);
  return out;
}

Word ChainSegments::c() const {
  Word out;
  for (size_t j = 0; j < ys.size(); ++j) append(out, segments[j].w_bullet);
  return out;
}

namespace {

TreeSegments lifted_segments(const Poset& whole, const RootedTree& rt) {
  TreeSegments s = rooted_realizer(rt);
  std::vector<ElementId> map(static_cast<size_t>(rt.tree.size()));
  for (int i = 0; i < rt.tree.size(); ++i)
    map[size_t(i)] = whole.id_of(rt.tree.label(i));
  auto lift = [&](Word& w) {
    for (ElementId& e : w) e = map[size_t(e)];
  };
  lift(s.u_minus);
  lift(s.u_plus);
  lift(s.u1);
  lift(s.u2);
  lift(s.d_minus);
  lift(s.d_plus);
  lift(s.d1);
  lift(s.d2);
  s.root = map[size_t(s.root)];
  return s;
}

}  // namespace

GraftSegments build_segments(const UnicycleDecomposition& d) {
  GraftSegments g;
  g.poset = graft(d);  // validates d
  g.n = d.n;
  for (int i = 0; i < d.n; ++i) {
    g.x.push_back(g.poset.id_of(d.x[size_t(i)]));
    g.z.push_back(g.poset.id_of(d.z[size_t(i)]));
    g.x_tree.push_back(lifted_segments(g.poset, d.trees.at(d.x[size_t(i)])));
    g.z_tree.push_back(lifted_segments(g.poset, d.trees.at(d.z[size_t(i)])));
    g.x_segments.push_back(vertex_segments(g.x_tree.back()));
    g.z_segments.push_back(vertex_segments(g.z_tree.back()));
  }
  for (int p = 1; p <= 2 * d.n; ++p) {
    ChainSegments cs;
    for (const std::string& y : d.chains[size_t(p - 1)]) {
      cs.ys.push_back(g.poset.id_of(y));
      cs.tree_segments.push_back(lifted_segments(g.poset, d.trees.at(y)));
      cs.segments.push_back(vertex_segments(cs.tree_segments.back()));
    }
    g.chains.push_back(std::move(cs));
  }
  return g;
}

namespace {

// Shared accessors for the assembly code. Indices are 1-based and cyclic.
struct Parts {
  const GraftSegments& g;
  int n;

  explicit Parts(const GraftSegments& gs) : g(gs), n(gs.n) {}

  size_t at(int i) const { return size_t(((i - 1) % n + n) % n); }

  const VertexSegments& sx(int i) const { return g.x_segments[at(i)]; }
  const VertexSegments& sz(int i) const { return g.z_segments[at(i)]; }

  Word x(int i) const { return {g.x[at(i)]}; }  // bare crown tokens
  Word z(int i) const { return {g.z[at(i)]}; }

  Word A(int p, Word w) const { return g.chains[size_t(p - 1)].a(std::move(w)); }
  Word B(int p, Word w) const { return g.chains[size_t(p - 1)].b(std::move(w)); }
  Word C(int p) const { return g.chains[size_t(p - 1)].c(); }

  // Tag helpers mirroring the segment notation.
  std::string tx(const char* base, int i) const { return num(base, i, n); }
};

// ---- chain grafting only (all crown-vertex trees trivial) ----

std::array<Builder, 3> edge_only_words(const Parts& q) {
  const int n = q.n;
  std::array<Builder, 3> w;

  if (n == 1) {
    w[0].add("A1(x)", q.A(1, q.x(1)));
    w[0].add("B2(z)", q.B(2, q.z(1)));
    w[1].add("A2(x)", q.A(2, q.x(1)));
    w[1].add("B1(z)", q.B(1, q.z(1)));
    w[2].add("x", q.x(1));
    w[2].add("C1", q.C(1));
    w[2].add("C2", q.C(2));
    w[2].add("z", q.z(1));
    return w;
  }

  if (n == 2) {
    w[0].add("A1(x1)", q.A(1, q.x(1)));
    w[0].add("x2", q.x(2));
    w[0].add("B2(z1)", q.B(2, q.z(1)));
    w[0].add("B3(B4(z2))", q.B(3, q.B(4, q.z(2))));
    w[1].add("A2(A3(x2))", q.A(2, q.A(3, q.x(2))));
    w[1].add("A4(x1)", q.A(4, q.x(1)));
    w[1].add("z2", q.z(2));
    w[1].add("B1(z1)", q.B(1, q.z(1)));
    w[2].add("x1", q.x(1));
    w[2].add("C4", q.C(4));
    w[2].add("x2", q.x(2));
    w[2].add("C1", q.C(1));
    w[2].add("C3", q.C(3));
    w[2].add("z2", q.z(2));
    w[2].add("C2", q.C(2));
    w[2].add("z1", q.z(1));
    return w;
  }

  if (n == 3) {
    w[0].add("A1(x1)", q.A(1, q.x(1)));
    w[0].add("x2", q.x(2));
    w[0].add("B2(z1)", q.B(2, q.z(1)));
    w[0].add("C6", q.C(6));
    w[0].add("C3", q.C(3));
    w[0].add("A4(x3)", q.A(4, q.x(3)));
    w[0].add("z2", q.z(2));
    w[0].add("B5(z3)", q.B(5, q.z(3)));
    w[1].add("A3(x2)", q.A(3, q.x(2)));
    w[1].add("x3", q.x(3));
    w[1].add("B4(z2)", q.B(4, q.z(2)));
    w[1].add("C2", q.C(2));
    w[1].add("C5", q.C(5));
    w[1].add("A6(x1)", q.A(6, q.x(1)));
    w[1].add("z3", q.z(3));
    w[1].add("B1(z1)", q.B(1, q.z(1)));
    w[2].add("x1", q.x(1));
    w[2].add("A5(x3)", q.A(5, q.x(3)));
    w[2].add("B6(z3)", q.B(6, q.z(3)));
    w[2].add("C1", q.C(1));
    w[2].add("C4", q.C(4));
    w[2].add("A2(x2)", q.A(2, q.x(2)));
    w[2].add("B3(z2)", q.B(3, q.z(2)));
    w[2].add("z1", q.z(1));
    return w;
  }

  w[0].add("A1(x1)", q.A(1, q.x(1)));
  w[0].add("x2", q.x(2));
  w[0].add("B2(z1)", q.B(2, q.z(1)));
  w[0].add("C" + std::to_string(2 * n), q.C(2 * n));
  for (int i = 2; i <= n - 1; ++i) {
    w[0].add("C" + std::to_string(2 * i - 1), q.C(2 * i - 1));
    w[0].add("A" + std::to_string(2 * i) + "(" + q.tx("x", i + 1) + ")",
             q.A(2 * i, q.x(i + 1)));
    w[0].add(q.tx("z", i), q.z(i));
  }
  w[0].add("B" + std::to_string(2 * n - 1) + "(zn)", q.B(2 * n - 1, q.z(n)));

  w[1].add("A3(x2)", q.A(3, q.x(2)));
  w[1].add("x3", q.x(3));
  w[1].add("B4(z2)", q.B(4, q.z(2)));
  w[1].add("C2", q.C(2));
  for (int i = 3; i <= n - 1; ++i) {
    w[1].add(q.tx("x", i + 1), q.x(i + 1));
    w[1].add("B" + std::to_string(2 * i - 1) + "(B" + std::to_string(2 * i) + "(" +
                 q.tx("z", i) + "))",
             q.B(2 * i - 1, q.B(2 * i, q.z(i))));
  }
  w[1].add("C" + std::to_string(2 * n - 1), q.C(2 * n - 1));
  w[1].add("A" + std::to_string(2 * n) + "(x1)", q.A(2 * n, q.x(1)));
  w[1].add("zn", q.z(n));
  w[1].add("B1(z1)", q.B(1, q.z(1)));

  w[2].add("x1", q.x(1));
  w[2].add("A" + std::to_string(2 * n - 1) + "(xn)", q.A(2 * n - 1, q.x(n)));
  w[2].add("B" + std::to_string(2 * n) + "(zn)", q.B(2 * n, q.z(n)));
  w[2].add("C1", q.C(1));
  for (int i = n - 1; i >= 3; --i) {
    w[2].add("C" + std::to_string(2 * i), q.C(2 * i));
    w[2].add("A" + std::to_string(2 * i - 1) + "(" + q.tx("x", i) + ")",
             q.A(2 * i - 1, q.x(i)));
    w[2].add(q.tx("z", i), q.z(i));
  }
  w[2].add("C4", q.C(4));
  w[2].add("A2(x2)", q.A(2, q.x(2)));
  w[2].add("B3(z2)", q.B(3, q.z(2)));
  w[2].add("z1", q.z(1));
  return w;
}

// ---- vertex grafting only (cycle poset is the bare crown) ----

std::array<Builder, 3> vertex_only_words(const Parts& q) {
  const int n = q.n;
  std::array<Builder, 3> w;
  auto seg = [&](Builder& b, const char* base, int i, const Word& part) {
    b.add(num(base, i, n), part);
  };

  if (n == 1) {
    // The two chains are single elements with trivial trees.
    Word a = {q.g.chains[0].ys[0]}, bb = {q.g.chains[1].ys[0]};
    w[0].add("X-", q.sx(1).w_minus);
    w[0].add("a", a);
    w[0].add("b", bb);
    w[0].add("Z*", q.sz(1).w_bullet);
    w[0].add("I+x", q.sx(1).i_plus);
    w[1].add("I-z", q.sz(1).i_minus);
    w[1].add("X*", q.sx(1).w_bullet);
    w[1].add("b", bb);
    w[1].add("a", a);
    w[1].add("Z+", q.sz(1).w_plus);
    w[2].add("I-x", q.sx(1).i_minus);
    w[2].add("X+", q.sx(1).w_plus);
    w[2].add("a", a);
    w[2].add("b", bb);
    w[2].add("Z-", q.sz(1).w_minus);
    w[2].add("I+z", q.sz(1).i_plus);
    return w;
  }

  if (n == 2) {
    seg(w[0], "X-", 1, q.sx(1).w_minus);
    seg(w[0], "X-", 2, q.sx(2).w_minus);
    seg(w[0], "Z*", 1, q.sz(1).w_bullet);
    seg(w[0], "Z*", 2, q.sz(2).w_bullet);
    seg(w[0], "I+x", 1, q.sx(1).i_plus);
    seg(w[0], "I+x", 2, q.sx(2).i_plus);
    seg(w[1], "I-z", 2, q.sz(2).i_minus);
    seg(w[1], "I-z", 1, q.sz(1).i_minus);
    seg(w[1], "X*", 2, q.sx(2).w_bullet);
    seg(w[1], "X*", 1, q.sx(1).w_bullet);
    seg(w[1], "Z+", 2, q.sz(2).w_plus);
    seg(w[1], "Z+", 1, q.sz(1).w_plus);
    seg(w[2], "I-x", 1, q.sx(1).i_minus);
    seg(w[2], "X+", 1, q.sx(1).w_plus);
    seg(w[2], "I-x", 2, q.sx(2).i_minus);
    seg(w[2], "X+", 2, q.sx(2).w_plus);
    seg(w[2], "Z-", 2, q.sz(2).w_minus);
    seg(w[2], "I+z", 2, q.sz(2).i_plus);
    seg(w[2], "Z-", 1, q.sz(1).w_minus);
    seg(w[2], "I+z", 1, q.sz(1).i_plus);
    return w;
  }

  // n >= 3; for n == 3 the middle products are simply empty.
  seg(w[0], "I-z", 1, q.sz(1).i_minus);
  seg(w[0], "I-x", 2, q.sx(2).i_minus);
  seg(w[0], "X-", 1, q.sx(1).w_minus);
  seg(w[0], "X+", 2, q.sx(2).w_plus);
  seg(w[0], "Z+", 1, q.sz(1).w_plus);
  seg(w[0], "X-", 3, q.sx(3).w_minus);
  seg(w[0], "Z-", 2, q.sz(2).w_minus);
  seg(w[0], "I+z", 2, q.sz(2).i_plus);
  for (int i = 3; i <= n - 1; ++i) {
    seg(w[0], "X-", i + 1, q.sx(i + 1).w_minus);
    seg(w[0], "Z-", i, q.sz(i).w_minus);
    seg(w[0], "I+z", i, q.sz(i).i_plus);
    seg(w[0], "I+x", i, q.sx(i).i_plus);
  }
  seg(w[0], "Z*", n, q.sz(n).w_bullet);
  seg(w[0], "I+x", n, q.sx(n).i_plus);
  seg(w[0], "I+x", 1, q.sx(1).i_plus);

  seg(w[1], "I-z", 2, q.sz(2).i_minus);
  seg(w[1], "X*", 2, q.sx(2).w_bullet);
  for (int i = 2; i <= n - 2; ++i) {
    seg(w[1], "I-z", i + 1, q.sz(i + 1).i_minus);
    seg(w[1], "I-x", i + 1, q.sx(i + 1).i_minus);
    seg(w[1], "X+", i + 1, q.sx(i + 1).w_plus);
    seg(w[1], "Z+", i, q.sz(i).w_plus);
  }
  seg(w[1], "I-x", n, q.sx(n).i_minus);
  seg(w[1], "X+", n, q.sx(n).w_plus);
  seg(w[1], "Z+", n - 1, q.sz(n - 1).w_plus);
  seg(w[1], "X*", 1, q.sx(1).w_bullet);
  seg(w[1], "Z-", n, q.sz(n).w_minus);
  seg(w[1], "Z*", 1, q.sz(1).w_bullet);
  seg(w[1], "I+z", n, q.sz(n).i_plus);

  seg(w[2], "I-z", n, q.sz(n).i_minus);
  seg(w[2], "I-x", 1, q.sx(1).i_minus);
  seg(w[2], "X+", 1, q.sx(1).w_plus);
  seg(w[2], "X*", n, q.sx(n).w_bullet);
  seg(w[2], "Z+", n, q.sz(n).w_plus);
  for (int i = n - 1; i >= 3; --i) {
    seg(w[2], "X*", i, q.sx(i).w_bullet);
    seg(w[2], "Z*", i, q.sz(i).w_bullet);
  }
  seg(w[2], "X-", 2, q.sx(2).w_minus);
  seg(w[2], "Z*", 2, q.sz(2).w_bullet);
  seg(w[2], "Z-", 1, q.sz(1).w_minus);
  seg(w[2], "I+z", 1, q.sz(1).i_plus);
  seg(w[2], "I+x", 2, q.sx(2).i_plus);
  return w;
}

// ---- full grafting ----

std::array<Builder, 3> unicycle_words(const Parts& q) {
  const int n = q.n;
  std::array<Builder, 3> w;
  auto seg = [&](Builder& b, const char* base, int i, const Word& part) {
    b.add(num(base, i, n), part);
  };
  auto cn = [](int p) { return "C" + std::to_string(p); };

  if (n == 1) {
    w[0].add("A1(X-)", q.A(1, q.sx(1).w_minus));
    w[0].add("B2(Z*)", q.B(2, q.sz(1).w_bullet));
    w[0].add("I+x", q.sx(1).i_plus);
    w[1].add("I-z", q.sz(1).i_minus);
    w[1].add("A2(X*)", q.A(2, q.sx(1).w_bullet));
    w[1].add("B1(Z+)", q.B(1, q.sz(1).w_plus));
    w[2].add("I-x", q.sx(1).i_minus);
    w[2].add("X+", q.sx(1).w_plus);
    w[2].add("C1", q.C(1));
    w[2].add("C2", q.C(2));
    w[2].add("Z-", q.sz(1).w_minus);
    w[2].add("I+z", q.sz(1).i_plus);
    return w;
  }

  if (n == 2) {
    w[0].add("A1(X1-)", q.A(1, q.sx(1).w_minus));
    seg(w[0], "X-", 2, q.sx(2).w_minus);
    w[0].add("B2(Z1*)", q.B(2, q.sz(1).w_bullet));
    w[0].add("B3(B4(Z2*))", q.B(3, q.B(4, q.sz(2).w_bullet)));
    seg(w[0], "I+x", 1, q.sx(1).i_plus);
    seg(w[0], "I+x", 2, q.sx(2).i_plus);
    seg(w[1], "I-z", 2, q.sz(2).i_minus);
    seg(w[1], "I-z", 1, q.sz(1).i_minus);
    w[1].add("A2(A3(X2*))", q.A(2, q.A(3, q.sx(2).w_bullet)));
    w[1].add("A4(X1*)", q.A(4, q.sx(1).w_bullet));
    seg(w[1], "Z+", 2, q.sz(2).w_plus);
    w[1].add("B1(Z1+)", q.B(1, q.sz(1).w_plus));
    seg(w[2], "I-x", 1, q.sx(1).i_minus);
    seg(w[2], "X+", 1, q.sx(1).w_plus);
    w[2].add("C4", q.C(4));
    seg(w[2], "I-x", 2, q.sx(2).i_minus);
    seg(w[2], "X+", 2, q.sx(2).w_plus);
    w[2].add("C1", q.C(1));
    w[2].add("C3", q.C(3));
    seg(w[2], "Z-", 2, q.sz(2).w_minus);
    seg(w[2], "I+z", 2, q.sz(2).i_plus);
    w[2].add("C2", q.C(2));
    seg(w[2], "Z-", 1, q.sz(1).w_minus);
    seg(w[2], "I+z", 1, q.sz(1).i_plus);
    return w;
  }

  if (n == 3) {
    seg(w[0], "I-z", 1, q.sz(1).i_minus);
    seg(w[0], "I-x", 2, q.sx(2).i_minus);
    w[0].add("A1(X1-)", q.A(1, q.sx(1).w_minus));
    seg(w[0], "X+", 2, q.sx(2).w_plus);
    w[0].add("B2(Z1+)", q.B(2, q.sz(1).w_plus));
    w[0].add("C6", q.C(6));
    w[0].add("C3", q.C(3));
    w[0].add("A4(X3-)", q.A(4, q.sx(3).w_minus));
    seg(w[0], "Z-", 2, q.sz(2).w_minus);
    seg(w[0], "I+z", 2, q.sz(2).i_plus);
    w[0].add("B5(Z3*)", q.B(5, q.sz(3).w_bullet));
    seg(w[0], "I+x", 3, q.sx(3).i_plus);
    seg(w[0], "I+x", 1, q.sx(1).i_plus);

    seg(w[1], "I-z", 2, q.sz(2).i_minus);
    w[1].add("A3(X2*)", q.A(3, q.sx(2).w_bullet));
    seg(w[1], "I-x", 3, q.sx(3).i_minus);
    seg(w[1], "X+", 3, q.sx(3).w_plus);
    w[1].add("B4(Z2+)", q.B(4, q.sz(2).w_plus));
    w[1].add("C2", q.C(2));
    w[1].add("C5", q.C(5));
    w[1].add("A6(X1*)", q.A(6, q.sx(1).w_bullet));
    seg(w[1], "Z-", 3, q.sz(3).w_minus);
    w[1].add("B1(Z1*)", q.B(1, q.sz(1).w_bullet));
    seg(w[1], "I+z", 3, q.sz(3).i_plus);

    seg(w[2], "I-z", 3, q.sz(3).i_minus);
    seg(w[2], "I-x", 1, q.sx(1).i_minus);
    seg(w[2], "X+", 1, q.sx(1).w_plus);
    w[2].add("A5(X3*)", q.A(5, q.sx(3).w_bullet));
    w[2].add("B6(Z3+)", q.B(6, q.sz(3).w_plus));
    w[2].add("C1", q.C(1));
    w[2].add("C4", q.C(4));
    w[2].add("A2(X2-)", q.A(2, q.sx(2).w_minus));
    w[2].add("B3(Z2*)", q.B(3, q.sz(2).w_bullet));
    seg(w[2], "Z-", 1, q.sz(1).w_minus);
    seg(w[2], "I+z", 1, q.sz(1).i_plus);
    seg(w[2], "I+x", 2, q.sx(2).i_plus);
    return w;
  }

  seg(w[0], "I-z", 1, q.sz(1).i_minus);
  seg(w[0], "I-x", 2, q.sx(2).i_minus);
  w[0].add("A1(X1-)", q.A(1, q.sx(1).w_minus));
  seg(w[0], "X+", 2, q.sx(2).w_plus);
  w[0].add("B2(Z1+)", q.B(2, q.sz(1).w_plus));
  w[0].add(cn(2 * n), q.C(2 * n));
  w[0].add("C3", q.C(3));
  w[0].add("A4(X3-)", q.A(4, q.sx(3).w_minus));
  seg(w[0], "Z-", 2, q.sz(2).w_minus);
  seg(w[0], "I+z", 2, q.sz(2).i_plus);
  for (int i = 3; i <= n - 1; ++i) {
    w[0].add(cn(2 * i - 1), q.C(2 * i - 1));
    w[0].add("A" + std::to_string(2 * i) + "(" + q.tx("X-", i + 1) + ")",
             q.A(2 * i, q.sx(i + 1).w_minus));
    seg(w[0], "Z-", i, q.sz(i).w_minus);
    seg(w[0], "I+z", i, q.sz(i).i_plus);
    seg(w[0], "I+x", i, q.sx(i).i_plus);
  }
  w[0].add("B" + std::to_string(2 * n - 1) + "(Zn*)",
           q.B(2 * n - 1, q.sz(n).w_bullet));
  seg(w[0], "I+x", n, q.sx(n).i_plus);
  seg(w[0], "I+x", 1, q.sx(1).i_plus);

  seg(w[1], "I-z", 2, q.sz(2).i_minus);
  w[1].add("A3(X2*)", q.A(3, q.sx(2).w_bullet));
  seg(w[1], "I-z", 3, q.sz(3).i_minus);
  seg(w[1], "I-x", 3, q.sx(3).i_minus);
  seg(w[1], "X+", 3, q.sx(3).w_plus);
  w[1].add("B4(Z2+)", q.B(4, q.sz(2).w_plus));
  w[1].add("C2", q.C(2));
  for (int i = 3; i <= n - 2; ++i) {
    seg(w[1], "I-z", i + 1, q.sz(i + 1).i_minus);
    seg(w[1], "I-x", i + 1, q.sx(i + 1).i_minus);
    seg(w[1], "X+", i + 1, q.sx(i + 1).w_plus);
    w[1].add("B" + std::to_string(2 * i - 1) + "(B" + std::to_string(2 * i) + "(" +
                 q.tx("Z+", i) + "))",
             q.B(2 * i - 1, q.B(2 * i, q.sz(i).w_plus)));
  }
  seg(w[1], "I-x", n, q.sx(n).i_minus);
  seg(w[1], "X+", n, q.sx(n).w_plus);
  w[1].add("B" + std::to_string(2 * n - 3) + "(B" + std::to_string(2 * n - 2) +
               "(Zn-1+))",
           q.B(2 * n - 3, q.B(2 * n - 2, q.sz(n - 1).w_plus)));
  w[1].add(cn(2 * n - 1), q.C(2 * n - 1));
  w[1].add("A" + std::to_string(2 * n) + "(X1*)", q.A(2 * n, q.sx(1).w_bullet));
  seg(w[1], "Z-", n, q.sz(n).w_minus);
  w[1].add("B1(Z1*)", q.B(1, q.sz(1).w_bullet));
  seg(w[1], "I+z", n, q.sz(n).i_plus);

  seg(w[2], "I-z", n, q.sz(n).i_minus);
  seg(w[2], "I-x", 1, q.sx(1).i_minus);
  seg(w[2], "X+", 1, q.sx(1).w_plus);
  w[2].add("A" + std::to_string(2 * n - 1) + "(Xn*)",
           q.A(2 * n - 1, q.sx(n).w_bullet));
  w[2].add("B" + std::to_string(2 * n) + "(Zn+)", q.B(2 * n, q.sz(n).w_plus));
  w[2].add("C1", q.C(1));
  for (int i = n - 1; i >= 3; --i) {
    w[2].add(cn(2 * i), q.C(2 * i));
    w[2].add("A" + std::to_string(2 * i - 1) + "(" + q.tx("X*", i) + ")",
             q.A(2 * i - 1, q.sx(i).w_bullet));
    seg(w[2], "Z*", i, q.sz(i).w_bullet);
  }
  w[2].add("C4", q.C(4));
  w[2].add("A2(X2-)", q.A(2, q.sx(2).w_minus));
  w[2].add("B3(Z2*)", q.B(3, q.sz(2).w_bullet));
  seg(w[2], "Z-", 1, q.sz(1).w_minus);
  seg(w[2], "I+z", 1, q.sz(1).i_plus);
  seg(w[2], "I+x", 2, q.sx(2).i_plus);
  return w;
}

Realizer words_of(std::array<Builder, 3> w) {
  return {std::move(w[0].word), std::move(w[1].word), std::move(w[2].word)};
}

void require_trivial_crown_trees(const UnicycleDecomposition& d) {
  for (const std::string& v : d.x)
    if (!d.trees.at(v).trivial())
      raise(errc::precondition_violated, "tree at '" + v + "' must be trivial");
  for (const std::string& v : d.z)
    if (!d.trees.at(v).trivial())
      raise(errc::precondition_violated, "tree at '" + v + "' must be trivial");
}

void require_bare_chains(const UnicycleDecomposition& d) {
  if (d.n == 1) {
    // The square keeps its two single-element chains, trivially treed.
    for (const auto& chain : d.chains) {
      if (chain.size() != 1)
        raise(errc::precondition_violated,
              "chains must be single elements when n = 1");
      if (!d.trees.at(chain[0]).trivial())
        raise(errc::precondition_violated,
              "tree at '" + chain[0] + "' must be trivial");
    }
    return;
  }
  for (const auto& chain : d.chains)
    if (!chain.empty())
      raise(errc::precondition_violated, "all chains must be empty");
}

}  // namespace

Realizer edge_only_realizer(const UnicycleDecomposition& d) {
  require_trivial_crown_trees(d);
  GraftSegments g = build_segments(d);
  Parts parts(g);
  return words_of(edge_only_words(parts));
}

Realizer vertex_only_realizer(const UnicycleDecomposition& d) {
  require_bare_chains(d);
  GraftSegments g = build_segments(d);
  Parts parts(g);
  return words_of(vertex_only_words(parts));
}

Realizer unicycle_realizer(const UnicycleDecomposition& d) {
  GraftSegments g = build_segments(d);
  Parts parts(g);
  return words_of(unicycle_words(parts));
}

std::string assembly_trace(const UnicycleDecomposition& d) {
  GraftSegments g = build_segments(d);
  Parts parts(g);
  auto words = unicycle_words(parts);
  std::ostringstream out;
  for (size_t k = 0; k < 3; ++k) {
    out << "word " << k + 1 << ":";
    size_t at = 0;
    for (const auto& [tag, len] : words[k].parts) {
      out << "  " << tag << "=[";
      for (size_t i = 0; i < len; ++i) {
        if (i) out << ' ';
        out << g.poset.label(words[k].word[at + i]);
      }
      out << ']';
      at += len;
    }
    out << '\n';
  }
  return out.str();
}

Realizer realize_any(const Poset& p) {
  PosetClass cls = classify(p);
  for (ComponentClass c : cls.components)
    if (c == ComponentClass::other)
      raise(errc::unsupported_class,
            "a component has more than one cycle in its cover graph");

  Realizer out(3);
  std::vector<Realizer> parts;
  for (size_t k = 0; k < cls.components.size(); ++k) {
    const auto& members = cls.members[k];
    Poset sub = restrict_poset(p, members);
    Realizer local;
    if (cls.components[k] == ComponentClass::tree) {
      ElementId root = 0;
      for (int v = 1; v < sub.size(); ++v)
        if (sub.label(v) < sub.label(root)) root = v;
      local = segments_realizer(rooted_realizer({sub, root}));
    } else {
      UnicycleDecomposition d = decompose(sub);
      Realizer graft_words = unicycle_realizer(d);
      Poset grafted = graft(d);
      for (const Word& w : graft_words) {
        Word mapped;
        mapped.reserve(w.size());
        for (ElementId e : w) mapped.push_back(sub.id_of(grafted.label(e)));
        local.push_back(std::move(mapped));
      }
    }
    // Lift to the ids of p.
    for (Word& w : local)
      for (ElementId& e : w) e = members[size_t(e)];
    parts.push_back(std::move(local));
  }
  for (const Realizer& r : parts) append(out[0], r[0]);
  for (size_t k = parts.size(); k-- > 0;) append(out[1], parts[k][1]);
  for (const Realizer& r : parts) append(out[2], r[2]);
  return out;
}

}  // namespace posetdim
