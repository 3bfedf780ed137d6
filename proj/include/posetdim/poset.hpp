#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetdim/errors.hpp"

namespace posetdim {

using ElementId = int;

// A linear order written as a word, e.g. (a,c,b) for a < c < b.
using Word = std::vector<ElementId>;

// A family of linear extensions intended to intersect to the order.
using Realizer = std::vector<Word>;

/// Finite strict order on dense ids 0..size()-1 with a full reachability
/// table and the derived cover relation. Immutable after construction.
class Poset {
public:
  Poset() = default;

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId a) const { return labels_[a]; }
  std::optional<ElementId> find(std::string_view label) const;
  ElementId id_of(std::string_view label) const;  // throws UnknownElement

  bool less(ElementId a, ElementId b) const { return testbit(succ_, a, b); }
  bool comparable(ElementId a, ElementId b) const {
    return less(a, b) || less(b, a);
  }

  // Transitive reduction, sorted by (lower, upper) id.
  const std::vector<std::pair<ElementId, ElementId>>& covers() const {
    return covers_;
  }
  const std::vector<ElementId>& upper_covers(ElementId a) const {
    return up_[a];
  }
  const std::vector<ElementId>& lower_covers(ElementId a) const {
    return down_[a];
  }

  std::vector<ElementId> minimal_elements() const;
  std::vector<ElementId> maximal_elements() const;

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && succ_ == other.succ_;
  }

private:
  friend Poset build_poset_ids(std::vector<std::string>,
                               const std::vector<std::pair<ElementId, ElementId>>&);
  friend Poset dual(const Poset&);
  friend Poset restrict_poset(const Poset&, std::span<const ElementId>);

  bool testbit(const std::vector<uint64_t>& bits, int a, int b) const {
    return (bits[size_t(a) * stride_ + size_t(b >> 6)] >> (b & 63)) & 1u;
  }
  void setbit(std::vector<uint64_t>& bits, int a, int b) {
    bits[size_t(a) * stride_ + size_t(b >> 6)] |= uint64_t(1) << (b & 63);
  }
  void init(std::vector<std::string> labels);
  // Derives pred table, covers and adjacency from a filled succ table.
  void finish();

  int n_ = 0;
  size_t stride_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<uint64_t> succ_;  // row a: bitset of b with a < b
  std::vector<uint64_t> pred_;  // row a: bitset of b with b < a
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<std::vector<ElementId>> up_, down_;
};

/// Transitive closure of the declared relation digraph as a strict order.
/// Throws DuplicateElement, UnknownElement or RelationCycle.
Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& relations);
Poset build_poset_ids(std::vector<std::string> labels,
                      const std::vector<std::pair<ElementId, ElementId>>& relations);

/// True iff word is a permutation of the ground set that respects every
/// relation. Malformed sequences return false.
bool is_linear_extension(const Poset& p, std::span<const ElementId> word);

/// True iff every member is a linear extension and the common precedences
/// are exactly the order.
bool realizes(const Poset& p, const Realizer& r);

/// First ordered pair witnessing that r does not realize p: either a
/// relation broken by some member or an incomparable pair never reversed.
std::optional<std::pair<ElementId, ElementId>> first_violation(const Poset& p,
                                                               const Realizer& r);

Poset dual(const Poset& p);
Word reverse_word(Word w);
Realizer reverse_realizer(Realizer r);

/// Induced subposet on `keep`; new ids follow ascending old id.
Poset restrict_poset(const Poset& p, std::span<const ElementId> keep);
/// Subword of `word` on the retained letters, remapped to the ids of
/// restrict_poset(p, keep).
Word restrict_extension(const Poset& p, std::span<const ElementId> word,
                        std::span<const ElementId> keep);

/// Splices 3-word realizers of disjoint parts: word 1 and 3 concatenate the
/// parts in the given order, word 2 in reverse order.
std::pair<Poset, Realizer> disjoint_union_realizer(
    const std::vector<std::pair<Poset, Realizer>>& parts);

/// Exact order-isomorphism test by backtracking, capped at 64 elements.
bool is_isomorphic(const Poset& p, const Poset& q);

// Label/id word conversions (UnknownElement on misses).
std::vector<std::string> word_labels(const Poset& p, const Word& w);
Word word_ids(const Poset& p, const std::vector<std::string>& tokens);

}  // namespace posetdim
