#include "cgr/setoid.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace cgr {

void FiniteSetoid::rebuild_index() {
  index_.clear();
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
    auto [it, inserted] = index_.emplace(elements_[i], i);
    if (!inserted)
      throw SchemaError(fmt::format("duplicate element id '{}'", elements_[i]));
  }
  block_of_.assign(elements_.size(), -1);
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    for (int e : blocks_[b]) {
      if (e < 0 || e >= static_cast<int>(elements_.size()))
        throw SchemaError(fmt::format("block {} refers to element index {}", b, e));
      if (block_of_[e] != -1)
        throw SchemaError(fmt::format("element '{}' appears in two blocks", elements_[e]));
      block_of_[e] = b;
    }
  }
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    if (block_of_[i] == -1)
      throw SchemaError(fmt::format("element '{}' missing from the partition", elements_[i]));
  for (const auto& b : blocks_)
    if (b.empty()) throw SchemaError("empty block in partition");
}

FiniteSetoid FiniteSetoid::discrete(std::vector<std::string> elements) {
  FiniteSetoid s;
  s.elements_ = std::move(elements);
  s.blocks_.reserve(s.elements_.size());
  for (int i = 0; i < static_cast<int>(s.elements_.size()); ++i) s.blocks_.push_back({i});
  s.rebuild_index();
  return s;
}

FiniteSetoid FiniteSetoid::from_partition(std::vector<std::string> elements,
                                          const std::vector<std::vector<std::string>>& blocks) {
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) idx.emplace(elements[i], i);
  std::vector<std::vector<int>> indexed;
  indexed.reserve(blocks.size());
  for (const auto& blk : blocks) {
    std::vector<int> row;
    row.reserve(blk.size());
    for (const auto& id : blk) {
      auto it = idx.find(id);
      if (it == idx.end()) throw SchemaError(fmt::format("unknown element '{}' in block", id));
      row.push_back(it->second);
    }
    indexed.push_back(std::move(row));
  }
  return from_partition_indexed(std::move(elements), std::move(indexed));
}

FiniteSetoid FiniteSetoid::from_partition_indexed(std::vector<std::string> elements,
                                                  std::vector<std::vector<int>> blocks) {
  FiniteSetoid s;
  s.elements_ = std::move(elements);
  s.blocks_ = std::move(blocks);
  s.rebuild_index();
  return s;
}

int FiniteSetoid::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw SchemaError(fmt::format("unknown element '{}'", id));
  return it->second;
}

std::optional<int> FiniteSetoid::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteSetoid::is_discrete() const {
  return blocks_.size() == elements_.size();
}

FiniteSetoid build_congruence(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i) {
    if (!idx.emplace(elements[i], i).second)
      throw SchemaError(fmt::format("duplicate element id '{}'", elements[i]));
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : pairs) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end()) throw SchemaError(fmt::format("unknown element '{}' in pair", a));
    if (ib == idx.end()) throw SchemaError(fmt::format("unknown element '{}' in pair", b));
    int ra = root(ia->second), rb = root(ib->second);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  // Canonical form: blocks keyed by least member, members ascending.
  std::vector<std::vector<int>> by_root(n);
  for (int i = 0; i < n; ++i) by_root[root(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (int r = 0; r < n; ++r)
    if (!by_root[r].empty()) blocks.push_back(std::move(by_root[r]));
  return FiniteSetoid::from_partition_indexed(std::move(elements), std::move(blocks));
}

std::string pair_id(std::string_view a, std::string_view b) {
  return fmt::format("({},{})", a, b);
}

FiniteSetoid product_setoid(const FiniteSetoid& s, const FiniteSetoid& t) {
  std::vector<std::string> elements;
  elements.reserve(static_cast<std::size_t>(s.size()) * t.size());
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      elements.push_back(pair_id(s.name(i), t.name(j)));

  std::vector<std::vector<int>> blocks;
  for (const auto& bs : s.blocks()) {
    for (const auto& bt : t.blocks()) {
      std::vector<int> blk;
      blk.reserve(bs.size() * bt.size());
      for (int i : bs)
        for (int j : bt) blk.push_back(i * t.size() + j);
      blocks.push_back(std::move(blk));
    }
  }
  // from_partition_indexed also rejects pair-id collisions via the
  // duplicate check, e.g. ("a,b", "c") versus ("a", "b,c").
  return FiniteSetoid::from_partition_indexed(std::move(elements), std::move(blocks));
}

SetoidMap SetoidMap::make(FiniteSetoid source, FiniteSetoid target, std::vector<int> table) {
  if (static_cast<int>(table.size()) != source.size())
    throw SchemaError(fmt::format("map table has {} entries for {} elements", table.size(),
                                  source.size()));
  for (int i = 0; i < source.size(); ++i)
    if (table[i] < 0 || table[i] >= target.size())
      throw SchemaError(fmt::format("map value {} out of range at '{}'", table[i],
                                    source.name(i)));
  return SetoidMap{std::move(source), std::move(target), std::move(table)};
}

SetoidMap SetoidMap::make_by_ids(FiniteSetoid source, FiniteSetoid target,
                                 const std::vector<std::string>& images) {
  std::vector<int> table;
  table.reserve(images.size());
  for (const auto& id : images) table.push_back(target.index_of(id));
  return make(std::move(source), std::move(target), std::move(table));
}

ValidationReport is_setoid_map(const SetoidMap& f) {
  ValidationReport r;
  r.subject = "setoid-map";
  bool ok = true;
  std::string witness;
  for (const auto& blk : f.source.blocks()) {
    for (std::size_t i = 0; ok && i + 1 < blk.size(); ++i) {
      int a = blk[i], b = blk[i + 1];
      if (!f.target.related(f.apply(a), f.apply(b))) {
        ok = false;
        witness = fmt::format("'{}' ~ '{}' but images '{}', '{}' are unrelated",
                              f.source.name(a), f.source.name(b),
                              f.target.name(f.apply(a)), f.target.name(f.apply(b)));
      }
    }
    if (!ok) break;
  }
  r.record("map.preserves-relation", ok, witness);
  return r;
}

}  // namespace cgr
