#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgr/report.hpp"
#include "cgr/setoid.hpp"

namespace cgr {

// An ordinary finite group as explicit tables. All laws hold on the nose;
// validate_plain_group certifies that.
struct PlainGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> add;  // add[a][b]
  int zero = 0;
  std::vector<int> neg;

  static PlainGroup make(std::vector<std::string> elements,
                         std::vector<std::vector<int>> add,
                         int zero, std::vector<int> neg);

  int size() const { return static_cast<int>(elements.size()); }
  int plus(int a, int b) const { return add.at(a).at(b); }
  int minus(int a) const { return neg.at(a); }
  const std::string& name(int i) const { return elements.at(i); }
  int index_of(std::string_view id) const;  // throws SchemaError if unknown
  std::optional<int> find(std::string_view id) const;

  friend bool operator==(const PlainGroup&, const PlainGroup&) = default;
};

ValidationReport validate_plain_group(const PlainGroup& g);

// A group object up to a congruence: carrier setoid, addition table, zero,
// negation table. The group laws are only required up to the relation, and
// nothing is assumed at construction; validate_cgroup certifies them.
struct CGroup {
  FiniteSetoid carrier;
  std::vector<std::vector<int>> add;
  int zero = 0;
  std::vector<int> neg;

  static CGroup make(FiniteSetoid carrier, std::vector<std::vector<int>> add,
                     int zero, std::vector<int> neg);

  int size() const { return carrier.size(); }
  int plus(int a, int b) const { return add.at(a).at(b); }
  int minus(int a) const { return neg.at(a); }
  bool related(int a, int b) const { return carrier.related(a, b); }
  const std::string& name(int i) const { return carrier.name(i); }

  friend bool operator==(const CGroup&, const CGroup&) = default;
};

// Plain group viewed with the discrete relation.
CGroup to_cgroup(const PlainGroup& g);

// True when the relation is discrete and the tables satisfy the laws
// exactly, i.e. the structure is an ordinary group.
std::optional<PlainGroup> as_plain_group(const CGroup& g);

// Associativity, unit, inverses up to the relation; compatibility of + and -
// with the relation, checked both directly and by running the addition as a
// setoid map out of the product setoid.
ValidationReport validate_cgroup(const CGroup& g);

// A map of c-groups: exactly additive, relation preserving.
struct CGroupHom {
  CGroup source;
  CGroup target;
  std::vector<int> table;

  static CGroupHom make(CGroup source, CGroup target, std::vector<int> table);
  static CGroupHom make_by_ids(CGroup source, CGroup target,
                               const std::vector<std::string>& images);

  int apply(int a) const { return table.at(a); }

  friend bool operator==(const CGroupHom&, const CGroupHom&) = default;
};

CGroupHom identity_hom(const CGroup& g);
CGroupHom compose_homs(const CGroupHom& outer, const CGroupHom& inner);

// Exact additivity, relation preservation, and the derived facts
// f(0) ~ 0 and f(-a) ~ -f(a) as sanity checks.
ValidationReport validate_hom(const CGroupHom& f);

// Elements of the c-kernel {a | f(a) ~ 0} and c-image {b | some f(a) ~ b},
// as sorted source / target indices.
struct KernelImage {
  std::vector<int> ckernel;
  std::vector<int> cimage;
};

KernelImage kernel_image(const CGroupHom& f);

// Properties of a subset H of a c-group G, where H carries the structure
// induced from G. A c-subgroup needs exact closure under the induced
// addition, an element acting as zero up to ~, and inverses up to ~.
struct SubgroupProfile {
  bool c_subgroup = false;
  bool normal = false;   // g + h - g lands in the block closure of H
  bool perfect = false;  // g ~ h in H forces g in H
  std::optional<CGroup> induced;  // present when c_subgroup holds
  std::string detail;             // first obstruction when something fails
};

SubgroupProfile subgroup_profile(const CGroup& g, const std::vector<int>& subset);
SubgroupProfile subgroup_profile_by_ids(const CGroup& g, const std::vector<std::string>& subset);

// Global properties of a c-group.
struct GroupProfile {
  bool connected = false;  // the relation is total
  bool c_abelian = false;  // a + b ~ b + a for all a, b
  std::string witness;     // first commutativity failure, if any
};

GroupProfile group_profile(const CGroup& g);

// Quotient of a certified c-group by its own congruence: blocks become
// elements and the induced table is an ordinary group. The projection is a
// certified hom onto the quotient with the discrete relation.
struct QuotientResult {
  PlainGroup group;
  CGroupHom projection;
  std::vector<int> class_of;  // element index -> quotient element index
};

QuotientResult quotient_by_relation(const CGroup& g);

// Quotient by a perfect normal c-subgroup H: classes are the block closures
// of the cosets g + H, merged when they overlap.
QuotientResult quotient_by_normal(const CGroup& g, const std::vector<int>& subgroup);

// Given f : G -> T with T an ordinary group (discrete relation, exact laws)
// and f(h) = 0 for h in a perfect normal c-subgroup H, factor f as
// theta . projection through G / H. theta is unique; checked exhaustively.
struct FactorizationResult {
  QuotientResult quotient;
  CGroupHom theta;
};

FactorizationResult universal_factorization(const CGroupHom& f, const std::vector<int>& subgroup);

// f and g form a c-isomorphism pair when both are certified homs and both
// composites are pointwise related to the identities.
bool check_c_isomorphism(const CGroupHom& f, const CGroupHom& g, std::string* detail = nullptr);

enum class SearchStatus { found, absent, not_attempted };

struct IsoSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<std::pair<CGroupHom, CGroupHom>> witness;
};

// Exhaustive search for a c-isomorphism pair between two c-groups.
// Carriers larger than max_size on either side are not attempted, which is
// reported distinctly from a completed search that found nothing.
IsoSearchResult search_c_isomorphism(const CGroup& a, const CGroup& b, int max_size = 12);

// All certified homs a -> b, by depth-first table search with forced
// propagation of additivity. Intended for small carriers.
std::vector<CGroupHom> enumerate_homs(const CGroup& a, const CGroup& b);

// Table of a group isomorphism between plain groups, if one exists.
std::optional<std::vector<int>> search_group_isomorphism(const PlainGroup& a, const PlainGroup& b);

}  // namespace cgr
