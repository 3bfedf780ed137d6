#pragma once

#include <string>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim::test {

inline Word ids(const Poset& p, const std::vector<std::string>& tokens) {
  return word_ids(p, tokens);
}

inline Realizer realizer(const Poset& p,
                         const std::vector<std::vector<std::string>>& words) {
  Realizer r;
  for (const auto& w : words) r.push_back(word_ids(p, w));
  return r;
}

inline std::vector<std::string> labels(const Poset& p, const Word& w) {
  return word_labels(p, w);
}

// Independent extension counter: sum over minimal elements of the count of
// the remainder. Exponential; for small oracles only.
inline long long naive_extension_count(const Poset& p,
                                       std::vector<bool> gone = {}) {
  if (gone.empty()) gone.assign(size_t(p.size()), false);
  bool empty = true;
  long long total = 0;
  for (int v = 0; v < p.size(); ++v) {
    if (gone[size_t(v)]) continue;
    empty = false;
    bool minimal = true;
    for (int u : p.lower_covers(v))
      if (!gone[size_t(u)]) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    gone[size_t(v)] = true;
    total += naive_extension_count(p, gone);
    gone[size_t(v)] = false;
  }
  return empty ? 1 : total;
}

}  // namespace posetdim::test
