#include "posetdim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace posetdim {

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::uniform(uint64_t bound) {
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

int SplitMix64::uniform_int(int lo, int hi) {
  return lo + int(uniform(uint64_t(hi - lo) + 1));
}

double SplitMix64::uniform01() { return double(next() >> 11) * 0x1.0p-53; }

bool SplitMix64::bernoulli(double p) { return uniform01() < p; }

int SplitMix64::geometric(double p) {
  int k = 0;
  while (!bernoulli(p)) ++k;
  return k;
}

SplitMix64 SplitMix64::split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

void for_each_linear_extension(const Poset& p,
                               const std::function<bool(const Word&)>& fn) {
  const int n = p.size();
  std::vector<int> blockers(static_cast<size_t>(n), 0);  // unplaced lower covers
  for (int v = 0; v < n; ++v) blockers[size_t(v)] = int(p.lower_covers(v).size());
  std::vector<bool> placed(size_t(n), false);
  Word word;
  word.reserve(size_t(n));
  bool stop = false;

  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    if (int(word.size()) == n) {
      stop = !fn(word);
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if (placed[size_t(v)] || blockers[size_t(v)] != 0) continue;
      placed[size_t(v)] = true;
      word.push_back(v);
      for (ElementId w : p.upper_covers(v)) --blockers[size_t(w)];
      self(self);
      for (ElementId w : p.upper_covers(v)) ++blockers[size_t(w)];
      word.pop_back();
      placed[size_t(v)] = false;
    }
  };
  rec(rec);
}

std::vector<Word> all_linear_extensions(const Poset& p, long long cap) {
  std::vector<Word> out;
  bool over = false;
  for_each_linear_extension(p, [&](const Word& w) {
    if (static_cast<long long>(out.size()) >= cap) {
      over = true;
      return false;
    }
    out.push_back(w);
    return true;
  });
  if (over)
    raise(errc::cap_exceeded, "more than " + std::to_string(cap) +
                                  " linear extensions");
  return out;
}

namespace {

using Bits = std::vector<uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {  // a ⊆ b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool any_bit(const Bits& a) {
  for (uint64_t w : a)
    if (w) return true;
  return false;
}

// Depth-limited exact set cover, branching on the scarcest uncovered pair.
struct CoverSearch {
  const std::vector<Bits>& cover;                 // per word signature
  const std::vector<std::vector<int>>& coverers;  // per pair
  const std::vector<int>& scarcity_order;         // pairs, fewest coverers first

  bool run(const Bits& remaining, int depth_left, std::vector<int>& chosen) {
    int pair = -1;
    for (int q : scarcity_order) {
      if (remaining[size_t(q >> 6)] >> (q & 63) & 1) {
        pair = q;
        break;
      }
    }
    if (pair < 0) return true;
    if (depth_left == 0) return false;
    for (int s : coverers[size_t(pair)]) {
      Bits next = remaining;
      for (size_t i = 0; i < next.size(); ++i) next[i] &= ~cover[size_t(s)][i];
      chosen.push_back(s);
      if (run(next, depth_left - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

DimensionResult brute_dimension(const Poset& p, int k_max, long long cap) {
  const int n = p.size();

  std::vector<std::pair<int, int>> pairs;  // ordered incomparable pairs
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !p.comparable(a, b)) pairs.emplace_back(a, b);

  if (pairs.empty()) {
    // A chain (or empty): one extension suffices.
    Word only;
    for_each_linear_extension(p, [&](const Word& w) {
      only = w;
      return false;
    });
    return {1, false, {only}};
  }

  std::vector<Word> words = all_linear_extensions(p, cap);
  const size_t stride = size_t(pairs.size() + 63) / 64;

  // Word w settles ordered pair (a,b) when it puts b before a. Collapse
  // words with equal coverage, then drop dominated ones.
  std::vector<Bits> cover;
  std::vector<int> representative;
  {
    std::map<Bits, int> seen;
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (size_t wi = 0; wi < words.size(); ++wi) {
      for (int i = 0; i < n; ++i) pos[size_t(words[wi][size_t(i)])] = i;
      Bits sig(stride, 0);
      for (size_t q = 0; q < pairs.size(); ++q)
        if (pos[size_t(pairs[q].second)] < pos[size_t(pairs[q].first)])
          sig[q >> 6] |= uint64_t(1) << (q & 63);
      if (seen.emplace(sig, int(wi)).second) {
        cover.push_back(std::move(sig));
        representative.push_back(int(wi));
      }
    }
  }
  // The quadratic dominance filter only pays for itself on small sets.
  if (cover.size() <= 4096) {
    std::vector<bool> dominated(cover.size(), false);
    for (size_t i = 0; i < cover.size(); ++i)
      for (size_t j = 0; j < cover.size() && !dominated[i]; ++j)
        if (i != j && !dominated[j] && subset_of(cover[i], cover[j]) &&
            cover[i] != cover[j])
          dominated[i] = true;
    size_t keep = 0;
    for (size_t i = 0; i < cover.size(); ++i) {
      if (dominated[i]) continue;
      if (keep != i) {
        cover[keep] = std::move(cover[i]);
        representative[keep] = representative[i];
      }
      ++keep;
    }
    cover.resize(keep);
    representative.resize(keep);
  }

  std::vector<int> weight(cover.size());
  for (size_t s = 0; s < cover.size(); ++s) {
    int bits = 0;
    for (uint64_t w : cover[s]) bits += std::popcount(w);
    weight[s] = bits;
  }
  std::vector<std::vector<int>> coverers(pairs.size());
  for (size_t s = 0; s < cover.size(); ++s)
    for (size_t q = 0; q < pairs.size(); ++q)
      if (cover[s][q >> 6] >> (q & 63) & 1) coverers[q].push_back(int(s));
  // Try broad words first; branch on the scarcest pairs.
  for (auto& list : coverers)
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      if (weight[size_t(a)] != weight[size_t(b)])
        return weight[size_t(a)] > weight[size_t(b)];
      return a < b;
    });
  std::vector<int> scarcity_order(pairs.size());
  for (size_t q = 0; q < pairs.size(); ++q) scarcity_order[q] = int(q);
  std::sort(scarcity_order.begin(), scarcity_order.end(), [&](int a, int b) {
    if (coverers[size_t(a)].size() != coverers[size_t(b)].size())
      return coverers[size_t(a)].size() < coverers[size_t(b)].size();
    return a < b;
  });

  Bits everything(stride, 0);
  for (size_t q = 0; q < pairs.size(); ++q)
    everything[q >> 6] |= uint64_t(1) << (q & 63);
  {
    Bits reachable(stride, 0);
    for (const Bits& c : cover)
      for (size_t i = 0; i < stride; ++i) reachable[i] |= c[i];
    for (size_t i = 0; i < stride; ++i) reachable[i] = everything[i] & ~reachable[i];
    if (any_bit(reachable)) return {0, true, {}};  // cannot happen for posets
  }

  CoverSearch search{cover, coverers, scarcity_order};
  for (int k = 2; k <= k_max; ++k) {
    std::vector<int> chosen;
    if (search.run(everything, k, chosen)) {
      Realizer witness;
      for (int s : chosen) witness.push_back(words[size_t(representative[size_t(s)])]);
      return {int(chosen.size()), false, witness};
    }
  }
  return {0, true, {}};
}

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(size_t(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Uniform labeled tree skeleton on [n] decoded from a random sequence.
std::vector<std::pair<int, int>> random_tree_edges(int n, SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  std::vector<int> seq(static_cast<size_t>(n - 2), 0);
  for (int& s : seq) s = int(rng.uniform(uint64_t(n)));
  std::vector<int> degree(size_t(n), 1);
  for (int s : seq) ++degree[size_t(s)];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[size_t(v)] == 1) leaves.push(v);
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[size_t(s)] == 1) leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

Poset sample_gnp(int n, double c, SplitMix64& rng) {
  std::vector<std::pair<ElementId, ElementId>> rel;
  double prob = n > 0 ? c / n : 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(prob)) rel.emplace_back(i, j);
  return build_poset_ids(numbered_labels(n), rel);
}

Poset sample_tree(int n, SplitMix64& rng) {
  auto edges = random_tree_edges(n, rng);
  std::vector<std::pair<ElementId, ElementId>> rel;
  rel.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (rng.bernoulli(0.5)) std::swap(a, b);
    rel.emplace_back(a, b);
  }
  return build_poset_ids(numbered_labels(n), rel);
}

RootedTree sample_rooted_tree(const std::string& root_label, int size,
                              SplitMix64& rng) {
  std::vector<std::string> labels{root_label};
  for (int i = 1; i < size; ++i)
    labels.push_back(root_label + ".t" + std::to_string(i));
  std::vector<std::pair<ElementId, ElementId>> rel;
  for (int i = 1; i < size; ++i) {
    int parent = i == 1 ? 0 : rng.uniform_int(0, i - 1);
    if (rng.bernoulli(0.5))
      rel.emplace_back(parent, i);
    else
      rel.emplace_back(i, parent);
  }
  return {build_poset_ids(std::move(labels), rel), 0};
}

}  // namespace

UnicycleDecomposition sample_decomposition(const DecompositionModel& m,
                                           uint64_t seed) {
  if (m.n_min < 1 || m.n_max < m.n_min)
    raise(errc::invalid_model, "bad crown size range");
  SplitMix64 rng(seed);
  UnicycleDecomposition d;
  d.n = rng.uniform_int(m.n_min, m.n_max);

  if (d.n == 1) {
    d.x = {"x"};
    d.z = {"z"};
  } else {
    for (int i = 1; i <= d.n; ++i) d.x.push_back("x" + std::to_string(i));
    for (int i = 1; i <= d.n; ++i) d.z.push_back("z" + std::to_string(i));
  }

  int budget = m.size_budget - 2 * d.n - (d.n == 1 ? 2 : 0);
  if (budget < 0) budget = 0;

  d.chains.resize(size_t(2 * d.n));
  for (int p = 1; p <= 2 * d.n; ++p) {
    int k = d.n == 1 ? 1 : 0;
    if (!m.chains_empty) {
      int extra = std::min(rng.geometric(0.5), m.chain_cap - k);
      extra = std::min(extra, budget);
      budget -= extra;
      k += extra;
    }
    for (int j = 1; j <= k; ++j)
      d.chains[size_t(p - 1)].push_back("y" + std::to_string(p) + "." +
                                        std::to_string(j));
  }

  SplitMix64 tree_rng = rng.split();
  auto plant = [&](const std::string& v, bool trivial) {
    int size = 1;
    if (!trivial) {
      int extra = std::min(tree_rng.geometric(1.0 / 3.0), m.tree_cap - 1);
      extra = std::min(extra, budget);
      budget -= extra;
      size += extra;
    }
    d.trees.emplace(v, sample_rooted_tree(v, size, tree_rng));
  };
  for (const std::string& v : d.x) plant(v, m.crown_trees_trivial);
  for (const std::string& v : d.z) plant(v, m.crown_trees_trivial);
  for (const auto& chain : d.chains)
    for (const std::string& v : chain)
      plant(v, m.chain_trees_trivial || m.chains_empty);

  validate_decomposition(d);
  return d;
}

Poset sample(const RandomModel& model) {
  if (model.n < 0) raise(errc::invalid_model, "element count must be >= 0");
  if (model.c < 0) raise(errc::invalid_model, "edge rate must be >= 0");
  SplitMix64 rng(model.seed);
  switch (model.kind) {
    case ModelKind::gnp:
      return sample_gnp(model.n, model.c, rng);
    case ModelKind::tree:
      return sample_tree(model.n, rng);
    case ModelKind::unicycle: {
      DecompositionModel m;
      if (model.n > 0) {
        if (model.n < 4)
          raise(errc::invalid_model, "a unicycle poset needs at least 4 elements");
        m.size_budget = model.n;
        m.n_max = std::min(8, model.n / 2);
      }
      return graft(sample_decomposition(m, rng.next()));
    }
  }
  raise(errc::invalid_model, "unknown kind");
}

Poset sample_tree_with_minimum(int n, uint64_t seed) {
  if (n < 0) raise(errc::invalid_model, "element count must be >= 0");
  SplitMix64 rng(seed);
  auto edges = random_tree_edges(n, rng);
  // Hang the skeleton from vertex 0, all edges pointing up.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : edges) {
    adj[size_t(a)].push_back(b);
    adj[size_t(b)].push_back(a);
  }
  std::vector<std::pair<ElementId, ElementId>> rel;
  std::vector<bool> seen(size_t(n), false);
  if (n > 0) {
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[size_t(v)])
        if (!seen[size_t(w)]) {
          seen[size_t(w)] = true;
          rel.emplace_back(v, w);
          stack.push_back(w);
        }
    }
  }
  return build_poset_ids(numbered_labels(n), rel);
}

ComponentStats component_stats(const Poset& p) {
  ComponentStats stats;
  for (ComponentClass c : classify(p).components) {
    if (c == ComponentClass::tree) ++stats.tree;
    if (c == ComponentClass::unicycle) ++stats.unicycle;
    if (c == ComponentClass::other) ++stats.other;
  }
  return stats;
}

}  // namespace posetdim
