#include "posetdim/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace posetdim {

std::optional<ElementId> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Poset::id_of(std::string_view label) const {
  auto hit = find(label);
  if (!hit) raise(errc::unknown_element, "no element '" + std::string(label) + "'");
  return *hit;
}

std::vector<ElementId> Poset::minimal_elements() const {
  std::vector<ElementId> out;
  for (int a = 0; a < n_; ++a)
    if (down_[a].empty()) out.push_back(a);
  return out;
}

std::vector<ElementId> Poset::maximal_elements() const {
  std::vector<ElementId> out;
  for (int a = 0; a < n_; ++a)
    if (up_[a].empty()) out.push_back(a);
  return out;
}

void Poset::init(std::vector<std::string> labels) {
  labels_ = std::move(labels);
  n_ = int(labels_.size());
  stride_ = size_t((n_ + 63) / 64);
  index_.reserve(labels_.size());
  for (int i = 0; i < n_; ++i) {
    if (!index_.emplace(labels_[i], i).second)
      raise(errc::duplicate_element, "element '" + labels_[i] + "' declared twice");
  }
  succ_.assign(size_t(n_) * stride_, 0);
}

void Poset::finish() {
  pred_.assign(size_t(n_) * stride_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (testbit(succ_, a, b)) setbit(pred_, b, a);

  covers_.clear();
  up_.assign(n_, {});
  down_.assign(n_, {});
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!testbit(succ_, a, b)) continue;
      // a covers b from below iff nothing sits strictly between.
      bool cover = true;
      const uint64_t* sa = &succ_[size_t(a) * stride_];
      const uint64_t* pb = &pred_[size_t(b) * stride_];
      for (size_t w = 0; w < stride_; ++w) {
        if (sa[w] & pb[w]) {
          cover = false;
          break;
        }
      }
      if (cover) {
        covers_.emplace_back(a, b);
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
}

Poset build_poset_ids(std::vector<std::string> labels,
                      const std::vector<std::pair<ElementId, ElementId>>& relations) {
  Poset p;
  p.init(std::move(labels));
  const int n = p.n_;

  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      raise(errc::unknown_element, "relation references undeclared element");
    adj[a].push_back(b);
  }
  for (int a = 0; a < n; ++a) {
    std::sort(adj[a].begin(), adj[a].end());
    adj[a].erase(std::unique(adj[a].begin(), adj[a].end()), adj[a].end());
    for (int b : adj[a]) ++indeg[b];
  }

  // Kahn order; a leftover vertex means the declared digraph has a cycle.
  std::vector<int> order;
  order.reserve(n);
  for (int a = 0; a < n; ++a)
    if (indeg[a] == 0) order.push_back(a);
  for (size_t head = 0; head < order.size(); ++head)
    for (int b : adj[order[head]])
      if (--indeg[b] == 0) order.push_back(b);
  if (int(order.size()) != n)
    raise(errc::relation_cycle, "declared relations contain a directed cycle");

  for (int i = n - 1; i >= 0; --i) {
    int a = order[i];
    uint64_t* row = &p.succ_[size_t(a) * p.stride_];
    for (int b : adj[a]) {
      row[b >> 6] |= uint64_t(1) << (b & 63);
      const uint64_t* rb = &p.succ_[size_t(b) * p.stride_];
      for (size_t w = 0; w < p.stride_; ++w) row[w] |= rb[w];
    }
  }

  p.finish();
  return p;
}

Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], int(i)).second)
      raise(errc::duplicate_element, "element '" + labels[i] + "' declared twice");
  }
  std::vector<std::pair<ElementId, ElementId>> rel;
  rel.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) raise(errc::unknown_element, "no element '" + a + "'");
    if (ib == index.end()) raise(errc::unknown_element, "no element '" + b + "'");
    rel.emplace_back(ia->second, ib->second);
  }
  return build_poset_ids(std::move(labels), rel);
}

namespace {

// Positions of each element in the word, or nullopt if not a permutation.
std::optional<std::vector<int>> positions(int n, std::span<const ElementId> word) {
  if (int(word.size()) != n) return std::nullopt;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    ElementId e = word[i];
    if (e < 0 || e >= n || pos[e] != -1) return std::nullopt;
    pos[e] = i;
  }
  return pos;
}

}  // namespace

bool is_linear_extension(const Poset& p, std::span<const ElementId> word) {
  auto pos = positions(p.size(), word);
  if (!pos) return false;
  for (auto [a, b] : p.covers())
    if ((*pos)[a] > (*pos)[b]) return false;
  return true;
}

std::optional<std::pair<ElementId, ElementId>> first_violation(const Poset& p,
                                                               const Realizer& r) {
  const int n = p.size();
  std::vector<std::vector<int>> pos;
  pos.reserve(r.size());
  for (const Word& w : r) {
    auto pw = positions(n, w);
    if (!pw) return std::make_pair(ElementId(0), ElementId(0));  // malformed
    pos.push_back(std::move(*pw));
  }
  if (r.empty()) return n == 0 ? std::nullopt
                               : std::make_optional(std::make_pair(0, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool before_all = true;
      for (const auto& pw : pos)
        if (pw[a] > pw[b]) {
          before_all = false;
          break;
        }
      if (before_all != p.less(a, b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool realizes(const Poset& p, const Realizer& r) {
  return !first_violation(p, r).has_value();
}

Poset dual(const Poset& p) {
  Poset q;
  q.init(p.labels());
  for (int a = 0; a < q.n_; ++a)
    for (int b = 0; b < q.n_; ++b)
      if (p.less(b, a)) q.setbit(q.succ_, a, b);
  q.finish();
  return q;
}

Word reverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Realizer reverse_realizer(Realizer r) {
  for (Word& w : r) std::reverse(w.begin(), w.end());
  return r;
}

namespace {

std::vector<ElementId> checked_subset(const Poset& p, std::span<const ElementId> keep) {
  std::vector<ElementId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (ElementId e : ids)
    if (e < 0 || e >= p.size())
      raise(errc::unknown_element, "restriction references id outside the poset");
  return ids;
}

}  // namespace

Poset restrict_poset(const Poset& p, std::span<const ElementId> keep) {
  auto ids = checked_subset(p, keep);
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (ElementId e : ids) labels.push_back(p.label(e));
  Poset q;
  q.init(std::move(labels));
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < ids.size(); ++j)
      if (p.less(ids[i], ids[j])) q.setbit(q.succ_, int(i), int(j));
  q.finish();
  return q;
}

Word restrict_extension(const Poset& p, std::span<const ElementId> word,
                        std::span<const ElementId> keep) {
  auto ids = checked_subset(p, keep);
  std::vector<int> newid(p.size(), -1);
  for (size_t i = 0; i < ids.size(); ++i) newid[ids[i]] = int(i);
  Word out;
  out.reserve(ids.size());
  for (ElementId e : word)
    if (e >= 0 && e < p.size() && newid[e] != -1) out.push_back(newid[e]);
  return out;
}

std::pair<Poset, Realizer> disjoint_union_realizer(
    const std::vector<std::pair<Poset, Realizer>>& parts) {
  for (const auto& [poset, realizer] : parts) {
    if (realizer.size() != 3)
      raise(errc::precondition_violated, "each part needs exactly 3 extensions");
    if (!realizes(poset, realizer))
      raise(errc::precondition_violated, "part realizer does not verify");
  }

  std::vector<std::string> labels;
  std::vector<std::pair<ElementId, ElementId>> relations;
  std::vector<int> offset(parts.size(), 0);
  for (size_t k = 0; k < parts.size(); ++k) {
    offset[k] = int(labels.size());
    const Poset& part = parts[k].first;
    for (const std::string& l : part.labels()) labels.push_back(l);
    for (auto [a, b] : part.covers())
      relations.emplace_back(offset[k] + a, offset[k] + b);
  }
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      raise(errc::element_collision, "parts share an element label");
  }
  Poset whole = build_poset_ids(std::move(labels), relations);

  Realizer out(3);
  auto append = [&](Word& word, size_t k, const Word& w) {
    for (ElementId e : w) word.push_back(offset[k] + e);
  };
  for (size_t k = 0; k < parts.size(); ++k) append(out[0], k, parts[k].second[0]);
  for (size_t k = parts.size(); k-- > 0;) append(out[1], k, parts[k].second[1]);
  for (size_t k = 0; k < parts.size(); ++k) append(out[2], k, parts[k].second[2]);
  return {std::move(whole), std::move(out)};
}

namespace {

struct IsoSignature {
  int below, above, covers_up, covers_down, height, depth;
  auto operator<=>(const IsoSignature&) const = default;
};

std::vector<IsoSignature> signatures(const Poset& p) {
  const int n = p.size();
  std::vector<IsoSignature> sig(n);
  std::vector<int> height(n, 0), depth(n, 0);
  // Longest chains: process by number of elements below (a valid topo key).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(n, 0), above(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (p.less(b, a)) ++below[a];
      if (p.less(a, b)) ++above[a];
    }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below[a] < below[b]; });
  for (int a : order)
    for (int b : p.lower_covers(a)) height[a] = std::max(height[a], height[b] + 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return above[a] < above[b]; });
  for (int a : order)
    for (int b : p.upper_covers(a)) depth[a] = std::max(depth[a], depth[b] + 1);
  for (int a = 0; a < n; ++a)
    sig[a] = {below[a], above[a], int(p.upper_covers(a).size()),
              int(p.lower_covers(a).size()), height[a], depth[a]};
  return sig;
}

bool extend_mapping(const Poset& p, const Poset& q, const std::vector<int>& order,
                    size_t at, std::vector<int>& image, std::vector<bool>& used,
                    const std::vector<IsoSignature>& sp,
                    const std::vector<IsoSignature>& sq) {
  if (at == order.size()) return true;
  int a = order[at];
  for (int b = 0; b < q.size(); ++b) {
    if (used[b] || sp[a] != sq[b]) continue;
    bool ok = true;
    for (size_t j = 0; j < at && ok; ++j) {
      int u = order[j], v = image[u];
      ok = p.less(a, u) == q.less(b, v) && p.less(u, a) == q.less(v, b);
    }
    if (!ok) continue;
    image[a] = b;
    used[b] = true;
    if (extend_mapping(p, q, order, at + 1, image, used, sp, sq)) return true;
    used[b] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() > 64 || q.size() > 64)
    raise(errc::size_limit_exceeded, "isomorphism search capped at 64 elements");
  if (p.size() != q.size()) return false;
  auto sp = signatures(p), sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // Most-constrained first: rare signatures early.
  std::map<IsoSignature, int> freq;
  for (const auto& s : sp) ++freq[s];
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (freq[sp[a]] != freq[sp[b]]) return freq[sp[a]] < freq[sp[b]];
    return a < b;
  });
  std::vector<int> image(p.size(), -1);
  std::vector<bool> used(q.size(), false);
  return extend_mapping(p, q, order, 0, image, used, sp, sq);
}

std::vector<std::string> word_labels(const Poset& p, const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (ElementId e : w) {
    if (e < 0 || e >= p.size()) raise(errc::unknown_element, "id outside the poset");
    out.push_back(p.label(e));
  }
  return out;
}

Word word_ids(const Poset& p, const std::vector<std::string>& tokens) {
  Word out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(p.id_of(t));
  return out;
}

}  // namespace posetdim
