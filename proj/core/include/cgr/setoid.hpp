#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgr/report.hpp"

namespace cgr {

// A finite set with an equivalence relation, stored as a partition.
// Elements are identified by string ids; all algorithms work on indices.
// Block order and in-block order are preserved as given, so a structure
// read from a file round-trips byte-for-byte.
class FiniteSetoid {
 public:
  FiniteSetoid() = default;

  // Every element in its own block.
  static FiniteSetoid discrete(std::vector<std::string> elements);

  // Blocks must partition the element list exactly; throws SchemaError.
  static FiniteSetoid from_partition(std::vector<std::string> elements,
                                     const std::vector<std::vector<std::string>>& blocks);

  // Same, but blocks given as element indices.
  static FiniteSetoid from_partition_indexed(std::vector<std::string> elements,
                                             std::vector<std::vector<int>> blocks);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::string& name(int i) const { return elements_.at(i); }

  int index_of(std::string_view id) const;          // throws SchemaError if unknown
  std::optional<int> find(std::string_view id) const;

  int block_of(int i) const { return block_of_.at(i); }
  bool related(int a, int b) const { return block_of_.at(a) == block_of_.at(b); }

  bool is_discrete() const;
  bool is_total() const { return blocks_.size() <= 1; }

  // True when both sides have the same elements in the same order and the
  // same partition (block identity, not just the same relation).
  friend bool operator==(const FiniteSetoid& a, const FiniteSetoid& b) {
    return a.elements_ == b.elements_ && a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
  std::unordered_map<std::string, int> index_;

  void rebuild_index();
};

// Smallest equivalence relation containing the given pairs. Blocks are
// canonical: ordered by least member index, members ascending.
FiniteSetoid build_congruence(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

// Product setoid on pairs "(a,b)", related componentwise.
FiniteSetoid product_setoid(const FiniteSetoid& s, const FiniteSetoid& t);

std::string pair_id(std::string_view a, std::string_view b);

// A function between setoid carriers, as a full table source index -> target index.
struct SetoidMap {
  FiniteSetoid source;
  FiniteSetoid target;
  std::vector<int> table;

  static SetoidMap make(FiniteSetoid source, FiniteSetoid target, std::vector<int> table);
  static SetoidMap make_by_ids(FiniteSetoid source, FiniteSetoid target,
                               const std::vector<std::string>& images);

  int apply(int i) const { return table.at(i); }
};

// Checks totality (structural) and that related inputs map to related outputs.
ValidationReport is_setoid_map(const SetoidMap& f);

}  // namespace cgr
