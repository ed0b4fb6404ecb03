#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgr/catgroup.hpp"
#include "cgr/cgroup.hpp"
#include "cgr/report.hpp"

namespace cgr {

// A crossed module of ordinary groups: mu : A -> B with a left action of B
// on A, written action[b][a].
struct CrossedModule {
  PlainGroup a;
  PlainGroup b;
  std::vector<int> mu;
  std::vector<std::vector<int>> action;

  friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

// Group laws on both sides, mu a homomorphism, action laws, equivariance
// mu(b.a) = b + mu(a) - b, and the Peiffer identity mu(a).a' = a + a' - a.
ValidationReport validate_crossed_module(const CrossedModule& x);

// A groupoid internal to groups: group structures on objects and morphisms
// making source, target, identity, and composition homomorphisms.
struct GroupGroupoid {
  FiniteGroupoid gd;
  PlainGroup obj_group;  // elements parallel to gd.objects
  PlainGroup mor_group;  // elements parallel to gd.morphisms

  friend bool operator==(const GroupGroupoid&, const GroupGroupoid&) = default;
};

ValidationReport validate_group_groupoid(const GroupGroupoid& g);

// Morphisms are pairs (b, a) : b -> mu(a) + b, composing by adding the
// A-parts; the morphism group is the semidirect sum.
GroupGroupoid gg_from_xmod(const CrossedModule& x);

// The kernel of the source map under d1, with B acting by conjugation
// through identities.
CrossedModule xmod_from_gg(const GroupGroupoid& g);

// Strict categorical group on a group-groupoid: group sums as the monoidal
// structure, all components identities.
CategoricalGroup catgroup_from_gg(const GroupGroupoid& g);

// Isomorphism of crossed modules as a pair of group isomorphism tables
// (on A and on B) commuting with mu and the actions.
struct XmodIso {
  std::vector<int> on_a;
  std::vector<int> on_b;
};

std::optional<XmodIso> search_xmod_isomorphism(const CrossedModule& x, const CrossedModule& y);

// Named small groups.
PlainGroup cyclic_group(int n);
PlainGroup symmetric3();
PlainGroup klein_four();
PlainGroup named_group(std::string_view name);  // "z2", "z3", ..., "s3", "klein4"

// Automorphism tables of a small group, lexicographic by table; the list
// is the carrier of automorphism_group, composition as the sum.
std::vector<std::vector<int>> automorphism_tables(const PlainGroup& g);
PlainGroup automorphism_group(const PlainGroup& g,
                              std::vector<std::vector<int>>* tables_out = nullptr);

// Fixtures.

// Pair groupoid on a group X: exactly one morphism (x, y) : x -> y, sums
// componentwise. Strict and totally connected.
GroupGroupoid pair_gg(const PlainGroup& x);

// Only identities. Strict and totally disconnected.
GroupGroupoid discrete_gg(const PlainGroup& g);

// The c-group of a group G with the congruence generated by a subgroup:
// g ~ g' when -g + g' lands in the subgroup.
CGroup mac_lane_cgroup(const PlainGroup& g, const std::vector<std::string>& subgroup);

// Conjugation crossed module G -> G.
CrossedModule inner_xmod(const PlainGroup& g);

// Inclusion of a normal subgroup with the conjugation action.
CrossedModule inclusion_xmod(const PlainGroup& g, const std::vector<std::string>& normal_subgroup);

// Identity map G -> G with conjugation.
CrossedModule identity_xmod(const PlainGroup& g);

// Zero map A -> B with a chosen action (defaults to trivial); needs A
// abelian to satisfy Peiffer.
CrossedModule zero_xmod(const PlainGroup& a, const PlainGroup& b,
                        std::optional<std::vector<std::vector<int>>> action = std::nullopt);

// Skeletal data: one object per element of a group B, morphisms x -> x
// with coefficients in an abelian group A, associativity twisted by a
// 3-cocycle omega (values are A-indices).
struct SkeletalSpec {
  PlainGroup objects;
  PlainGroup coeff;
  std::vector<std::vector<std::vector<int>>> omega;
};

// Builds the categorical group, checking the cocycle identity and the
// normalization omega(x,y,z) = 0 whenever some argument is 0, and solving
// the contraction triangles for eps. Throws CgrError when no consistent
// eps exists.
CategoricalGroup skeletal_catgroup(const SkeletalSpec& spec);

// The nontrivial normalized 3-cocycle on Z/2 with Z/2 coefficients.
std::vector<std::vector<std::vector<int>>> z2_nontrivial_cocycle();

// Fixture dispatcher used by the command line tool.
struct FixtureParams {
  std::string kind;                  // pair-gg | discrete-gg | mac-lane | inner-xmod | skeletal
  std::string group = "z2";          // base group name for group-shaped fixtures
  std::vector<std::string> subgroup; // mac-lane only
  std::string cocycle = "nontrivial"; // skeletal only: nontrivial | trivial
};

using FixtureValue = std::variant<CGroup, CategoricalGroup, CrossedModule>;

FixtureValue make_fixture(const FixtureParams& params);

}  // namespace cgr
