#pragma once

#include <string>
#include <vector>

#include "cgr/actions.hpp"
#include "cgr/cgroup.hpp"
#include "cgr/report.hpp"
#include "cgr/setoid.hpp"

namespace cgr {

// A crossed module of c-groups: bd : G -> H with an action of H on G, plus
// a distinguished sub-relation special_h of H's congruence used to state
// the weak form of lifting uniqueness. special_h partitions H's carrier
// and must refine H's own relation.
struct CCrossedModule {
  CGroup g;
  CGroup h;
  CGroupHom bd;    // g -> h
  CAction act;     // h acting on g
  FiniteSetoid special_h;

  friend bool operator==(const CCrossedModule&, const CCrossedModule&) = default;
};

enum class CcmLevel {
  base,    // bd(r.c) = r + (bd c - r) exact; Peiffer up to ~
  strict,  // Peiffer exact as well
};

// Component certification (both c-groups, bd a hom, act an action,
// special_h refines H), then the two crossed module laws. When the
// equivariance law fails exactly but holds up to ~, the witness says so.
ValidationReport validate_ccm(const CCrossedModule& x, CcmLevel level = CcmLevel::base);

struct CcmClassification {
  bool connected = false;  // G's relation is total
  bool strict = false;     // both laws exact
  bool special = false;    // lifting condition holds
  std::string detail;      // first obstruction, if any
};

// The lifting condition: whenever bd(c) ~ r there is c' ~ c with
// bd(c') = r exactly; and when bd(c) and r are special-related all such
// lifts agree up to the weak relation (related in G with special-related
// images).
CcmClassification classify_ccm(const CCrossedModule& x);

// g ~ g' in G and bd g, bd g' special-related in H.
bool weak_special_related(const CCrossedModule& x, int g1, int g2);

// A morphism of c-crossed modules: on_g and on_h certified homs with
// on_h . bd = bd' . on_g and on_g(r.c) = on_h(r).on_g(c), both exact.
struct CCrossedModuleMorphism {
  CCrossedModule source;
  CCrossedModule target;
  CGroupHom on_g;
  CGroupHom on_h;
};

ValidationReport validate_ccm_morphism(const CCrossedModuleMorphism& m);

// Conjugation c-crossed module of a perfect normal c-subgroup: the
// inclusion H -> G with g acting by g + h - g. special_h is the diagonal.
CCrossedModule conjugation_ccm(const CGroup& g, const std::vector<std::string>& subgroup);

// Diagonal sub-relation on the same carrier: every element alone.
FiniteSetoid diagonal_special(const FiniteSetoid& s);

}  // namespace cgr
