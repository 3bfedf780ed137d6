#pragma once

#include <cstdint>
#include <functional>

#include "posetdim/classify.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

/// Small portable generator (splitmix64). Equal seeds give equal streams on
/// every platform; split() derives an independent stream.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();
  uint64_t uniform(uint64_t bound);  // [0, bound), bound > 0
  int uniform_int(int lo, int hi);   // inclusive
  double uniform01();                // [0, 1)
  bool bernoulli(double p);
  int geometric(double p);  // failures before first success
  SplitMix64 split();

private:
  uint64_t state_;
};

/// Calls fn for every linear extension (backtracking over minimal available
/// elements, ascending id); stops early when fn returns false.
void for_each_linear_extension(const Poset& p,
                               const std::function<bool(const Word&)>& fn);

/// All linear extensions; throws CapExceeded when there are more than cap.
std::vector<Word> all_linear_extensions(const Poset& p, long long cap = 200000);

struct DimensionResult {
  int value = 0;     // exact dimension when !exceeded
  bool exceeded = false;  // dimension > k_max
  Realizer witness;  // verifies via realizes when !exceeded
};

/// Exact dimension by exhaustive search over k-subsets of the extension
/// list, k = 1..k_max, pruned on uncovered incomparable pairs.
DimensionResult brute_dimension(const Poset& p, int k_max = 4,
                                long long cap = 200000);

enum class ModelKind { gnp, tree, unicycle };

struct RandomModel {
  ModelKind kind = ModelKind::gnp;
  int n = 0;          // element count (gnp, tree)
  double c = 0.0;     // gnp edge rate, p = c/n
  uint64_t seed = 1;
};

/// Seeded generator; identical models produce identical posets.
///  gnp     — each pair {i,j} an edge with probability c/n, directed from
///            the smaller to the larger label, closure taken.
///  tree    — uniform labeled tree skeleton, each edge oriented at random.
///  unicycle— graft of a random decomposition (desk-scale sizes).
Poset sample(const RandomModel& model);

/// Parameter ranges for the decomposition sampler.
struct DecompositionModel {
  int n_min = 1, n_max = 8;
  int chain_cap = 4;     // geometric(1/2), capped
  int tree_cap = 6;      // per-vertex tree size, 1 + geometric(1/3), capped
  int size_budget = 60;  // total element budget
  bool crown_trees_trivial = false;
  bool chain_trees_trivial = false;
  bool chains_empty = false;  // n >= 2 only; n = 1 keeps single-element chains
};

UnicycleDecomposition sample_decomposition(const DecompositionModel& m,
                                           uint64_t seed);

/// Tree poset whose every edge points up from one root (has a minimum).
Poset sample_tree_with_minimum(int n, uint64_t seed);

struct ComponentStats {
  int tree = 0;
  int unicycle = 0;
  int other = 0;
};

ComponentStats component_stats(const Poset& p);

}  // namespace posetdim
