#include "posetdim/oracle.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "posetdim/crown.hpp"
#include "posetdim/graft_realizer.hpp"

using namespace posetdim;

TEST_CASE("splitmix64 streams are stable and splittable") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(42);
  SplitMix64 d = c.split();
  CHECK(c.next() != d.next());
  SplitMix64 e(7);
  int hits = 0;
  for (int i = 0; i < 10000; ++i)
    if (e.uniform_int(0, 9) == 3) ++hits;
  CHECK(hits > 800);
  CHECK(hits < 1200);
}

TEST_CASE("linear extension enumeration") {
  Poset anti = build_poset({"a", "b", "c"}, {});
  CHECK(all_linear_extensions(anti).size() == 6);

  Poset chain = build_poset({"a", "b", "c", "d"},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(all_linear_extensions(chain).size() == 1);

  // Count for the 2-crown agrees with the independent recursive count.
  Poset c2 = crown_poset(2);
  CHECK(static_cast<long long>(all_linear_extensions(c2).size()) ==
        test::naive_extension_count(c2));
  Poset c3 = crown_poset(3);
  CHECK(static_cast<long long>(all_linear_extensions(c3).size()) ==
        test::naive_extension_count(c3));

  CHECK_THROWS_AS(all_linear_extensions(anti, 5), error);

  // Lazy enumeration stops on demand.
  int seen = 0;
  for_each_linear_extension(anti, [&](const Word&) { return ++seen < 3; });
  CHECK(seen == 3);

  // The empty poset has exactly the empty extension.
  CHECK(all_linear_extensions(Poset{}).size() == 1);
}

TEST_CASE("every enumerated word is a linear extension, exactly once") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    Poset p = sample({ModelKind::gnp, 6, 2.5, seed});
    auto words = all_linear_extensions(p);
    for (const Word& w : words) CHECK(is_linear_extension(p, w));
    auto sorted = words;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(static_cast<long long>(words.size()) == test::naive_extension_count(p));
  }
}

TEST_CASE("brute dimension on the standard fixtures") {
  Poset chain = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  DimensionResult one = brute_dimension(chain);
  CHECK(one.value == 1);
  CHECK(realizes(chain, one.witness));

  DimensionResult d1 = brute_dimension(crown_poset(1));
  CHECK(d1.value == 2);
  CHECK(realizes(crown_poset(1), d1.witness));

  DimensionResult d2 = brute_dimension(crown_poset(2));
  CHECK(d2.value == 2);

  DimensionResult d3 = brute_dimension(crown_poset(3));
  CHECK(d3.value == 3);
  CHECK(realizes(crown_poset(3), d3.witness));

  DimensionResult anti = brute_dimension(build_poset({"a", "b", "c"}, {}));
  CHECK(anti.value == 2);  // three incomparable points

  DimensionResult empty = brute_dimension(Poset{});
  CHECK(empty.value == 1);
}

TEST_CASE("brute dimension respects k_max and caps") {
  // The standard 4-dimensional example: a_i < b_j exactly when i != j.
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= 4; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) names.push_back("b" + std::to_string(i));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j)
        rel.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  Poset s4 = build_poset(names, rel);
  DimensionResult capped = brute_dimension(s4, 3);
  CHECK(capped.exceeded);
  DimensionResult exact = brute_dimension(s4, 4);
  CHECK_FALSE(exact.exceeded);
  CHECK(exact.value == 4);
  CHECK(realizes(s4, exact.witness));

  CHECK_THROWS_AS(brute_dimension(build_poset({"a", "b", "c", "d"}, {}), 4, 10),
                  error);
}

TEST_CASE("brute dimension equals that of the dual") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Poset p = sample({ModelKind::gnp, 7, 2.0, seed});
    DimensionResult a = brute_dimension(p);
    DimensionResult b = brute_dimension(dual(p));
    CHECK_FALSE(a.exceeded);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("gnp sampling") {
  Poset empty_rate = sample({ModelKind::gnp, 10, 0.0, 1});
  CHECK(empty_rate.size() == 10);
  CHECK(empty_rate.covers().empty());

  Poset a = sample({ModelKind::gnp, 30, 1.0, 9});
  Poset b = sample({ModelKind::gnp, 30, 1.0, 9});
  CHECK(a == b);
  Poset c = sample({ModelKind::gnp, 30, 1.0, 10});
  CHECK_FALSE(a == c);

  CHECK_THROWS_AS(sample({ModelKind::gnp, -1, 0.0, 1}), error);
  CHECK_THROWS_AS(sample({ModelKind::gnp, 5, -0.5, 1}), error);
}

TEST_CASE("tree sampling yields tree posets") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Poset t = sample({ModelKind::tree, 1 + int(seed % 30), 0.0, seed});
    PosetClass cls = classify(t);
    CHECK(cls.connected);
    CHECK(cls.components[0] == ComponentClass::tree);
  }
  Poset t1 = sample({ModelKind::tree, 12, 0.0, 3});
  Poset t2 = sample({ModelKind::tree, 12, 0.0, 3});
  CHECK(t1 == t2);
}

TEST_CASE("unicycle sampling yields connected unicycles") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Poset p = sample({ModelKind::unicycle, 0, 0.0, seed});
    PosetClass cls = classify(p);
    CHECK(cls.connected);
    REQUIRE(cls.components.size() == 1);
    CHECK(cls.components[0] == ComponentClass::unicycle);
    CHECK(p.size() <= 60);
  }
  // Requested element budget is honored.
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Poset p = sample({ModelKind::unicycle, 9, 0.0, seed});
    CHECK(p.size() <= 9);
    CHECK(classify(p).components[0] == ComponentClass::unicycle);
  }
  CHECK_THROWS_AS(sample({ModelKind::unicycle, 3, 0.0, 1}), error);
}

TEST_CASE("decomposition sampler respects its switches") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    DecompositionModel m;
    m.chains_empty = true;
    m.crown_trees_trivial = true;
    UnicycleDecomposition d = sample_decomposition(m, seed);
    for (const auto& [v, rt] : d.trees) CHECK(rt.trivial());
    if (d.n >= 2)
      for (const auto& chain : d.chains) CHECK(chain.empty());
  }
  UnicycleDecomposition a = sample_decomposition({}, 77);
  UnicycleDecomposition b = sample_decomposition({}, 77);
  CHECK(a == b);
}

TEST_CASE("tree posets with a minimum") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Poset t = sample_tree_with_minimum(1 + int(seed % 25), seed);
    CHECK(t.minimal_elements().size() == 1);
    CHECK(classify(t).components[0] == ComponentClass::tree);
  }
}

TEST_CASE("sampled tree and unicycle posets have dimension at most 3") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Poset t = sample({ModelKind::tree, 8, 0.0, seed});
    DimensionResult dt = brute_dimension(t);
    CHECK_FALSE(dt.exceeded);
    CHECK(dt.value <= 3);

    Poset u = sample({ModelKind::unicycle, 9, 0.0, seed});
    DimensionResult du = brute_dimension(u);
    CHECK_FALSE(du.exceeded);
    CHECK(du.value <= 3);
  }
}

TEST_CASE("component stats") {
  ComponentStats none = component_stats(Poset{});
  CHECK(none.tree == 0);
  CHECK(none.unicycle == 0);
  CHECK(none.other == 0);

  Poset mix = build_poset({"x1", "x2", "z1", "z2", "a", "b"},
                          {{"x1", "z1"}, {"x2", "z1"}, {"x2", "z2"},
                           {"x1", "z2"}, {"a", "b"}});
  ComponentStats stats = component_stats(mix);
  CHECK(stats.tree == 1);
  CHECK(stats.unicycle == 1);
  CHECK(stats.other == 0);
}
