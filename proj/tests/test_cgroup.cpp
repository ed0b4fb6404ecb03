#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cgr/cgroup.hpp"
#include "cgr/classical.hpp"
#include "fixtures.hpp"

using namespace cgr;

namespace {

// Independent brute-force check of every c-group law, straight off the
// tables. Used to cross-examine validate_cgroup on mutated inputs.
bool oracle_valid(const FiniteSetoid& s, const std::vector<std::vector<int>>& add, int zero,
                  const std::vector<int>& neg) {
  int n = s.size();
  auto rel = [&](int a, int b) { return s.related(a, b); };
  for (int a = 0; a < n; ++a) {
    if (!rel(add[zero][a], a) || !rel(add[a][zero], a)) return false;
    if (!rel(add[a][neg[a]], zero) || !rel(add[neg[a]][a], zero)) return false;
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c)
        if (!rel(add[add[a][b]][c], add[a][add[b][c]])) return false;
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          if (rel(a, a2) && rel(b, b2) && !rel(add[a][b], add[a2][b2])) return false;
    }
    for (int a2 = 0; a2 < n; ++a2)
      if (rel(a, a2) && !rel(neg[a], neg[a2])) return false;
  }
  return true;
}

// Returns (agreements, survivors) over all 48 single-cell mutations.
std::pair<int, int> mutation_scan(const CGroup& g) {
  int agree = 0;
  int survivors = 0;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      for (int v = 0; v < g.size(); ++v) {
        if (v == g.add[i][j]) continue;
        auto add = g.add;
        add[i][j] = v;
        bool expect = oracle_valid(g.carrier, add, g.zero, g.neg);
        CGroup m = CGroup::make(g.carrier, add, g.zero, g.neg);
        bool got = validate_cgroup(m).passed();
        if (expect == got) ++agree;
        if (got) ++survivors;
      }
  return {agree, survivors};
}

}  // namespace

TEST_CASE("plain groups certify") {
  CHECK(validate_plain_group(cyclic_group(1)).passed());
  CHECK(validate_plain_group(cyclic_group(4)).passed());
  CHECK(validate_plain_group(symmetric3()).passed());
  CHECK(validate_plain_group(klein_four()).passed());

  PlainGroup bad = cyclic_group(3);
  bad.add[1][2] = 1;
  ValidationReport r = validate_plain_group(bad);
  CHECK(!r.passed());
}

TEST_CASE("discrete and blocked c-groups certify") {
  CHECK(validate_cgroup(to_cgroup(cyclic_group(4))).passed());
  CHECK(validate_cgroup(to_cgroup(symmetric3())).passed());
  CHECK(validate_cgroup(to_cgroup(klein_four())).passed());
  CHECK(validate_cgroup(fixtures::mac_lane_z4()).passed());
}

TEST_CASE("mac lane carrier has the mod-2 blocks") {
  CGroup ml = fixtures::mac_lane_z4();
  CHECK(ml.related(0, 2));
  CHECK(ml.related(1, 3));
  CHECK(!ml.related(0, 1));
  CHECK(ml.carrier.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("single broken laws are caught by name") {
  CGroup g = to_cgroup(cyclic_group(4));
  SUBCASE("zero") {
    g.add[0][1] = 2;
    ValidationReport r = validate_cgroup(g);
    CHECK(!r.passed());
  }
  SUBCASE("neg") {
    g.neg[1] = 1;
    ValidationReport r = validate_cgroup(g);
    CHECK(!r.passed());
    bool neg_failed = false;
    for (const auto& c : r.checks)
      if (c.axiom == "group.neg" && !c.passed) neg_failed = true;
    CHECK(neg_failed);
  }
  SUBCASE("add compatibility with blocks") {
    CGroup ml = fixtures::mac_lane_z4();
    ml.add[1][1] = 1;  // 1 + 1 lands in the odd block
    ValidationReport r = validate_cgroup(ml);
    CHECK(!r.passed());
  }
}

TEST_CASE("48 mutations agree with the oracle") {
  auto [agree_ml, surv_ml] = mutation_scan(fixtures::mac_lane_z4());
  CHECK(agree_ml == 48);
  CHECK(surv_ml == 16);  // a cell may only move within its own block

  auto [agree_z4, surv_z4] = mutation_scan(to_cgroup(cyclic_group(4)));
  CHECK(agree_z4 == 48);
  CHECK(surv_z4 == 0);
}

TEST_CASE("homs certify and fail correctly") {
  CGroup ml = fixtures::mac_lane_z4();
  CGroup z2 = to_cgroup(cyclic_group(2));
  CGroupHom parity = CGroupHom::make(ml, z2, {0, 1, 0, 1});
  CHECK(validate_hom(parity).passed());

  CGroupHom shifted = CGroupHom::make(z2, z2, {1, 0});
  CHECK(!validate_hom(shifted).passed());

  // Exactly additive but forgets the blocks.
  CGroupHom forgetful = CGroupHom::make(ml, to_cgroup(cyclic_group(4)), {0, 1, 2, 3});
  ValidationReport r = validate_hom(forgetful);
  CHECK(!r.passed());
  CHECK(r.first_failure()->axiom == "hom.map.preserves-relation");
}

TEST_CASE("kernel and image") {
  CGroup ml = fixtures::mac_lane_z4();
  CGroup z2 = to_cgroup(cyclic_group(2));
  KernelImage ki = kernel_image(CGroupHom::make(ml, z2, {0, 1, 0, 1}));
  CHECK(ki.ckernel == std::vector<int>{0, 2});
  CHECK(ki.cimage == std::vector<int>{0, 1});

  KernelImage incl = kernel_image(fixtures::s3_extension().incl);
  CHECK(incl.ckernel == std::vector<int>{0});
  CHECK(incl.cimage == std::vector<int>{0, 4, 5});
}

TEST_CASE("subgroup profiles") {
  CGroup z4 = to_cgroup(cyclic_group(4));
  SUBCASE("even subgroup of discrete z4") {
    SubgroupProfile p = subgroup_profile(z4, {0, 2});
    CHECK(p.c_subgroup);
    CHECK(p.normal);
    CHECK(p.perfect);
    REQUIRE(p.induced.has_value());
    CHECK(validate_cgroup(*p.induced).passed());
    CHECK(p.induced->size() == 2);
  }
  SUBCASE("not closed") {
    SubgroupProfile p = subgroup_profile(z4, {0, 1});
    CHECK(!p.c_subgroup);
  }
  SUBCASE("zero alone in the mac lane group is not perfect") {
    SubgroupProfile p = subgroup_profile(fixtures::mac_lane_z4(), {0});
    CHECK(p.c_subgroup);
    CHECK(p.normal);
    CHECK(!p.perfect);
  }
  SUBCASE("even block of the mac lane group") {
    SubgroupProfile p = subgroup_profile(fixtures::mac_lane_z4(), {0, 2});
    CHECK(p.c_subgroup);
    CHECK(p.normal);
    CHECK(p.perfect);
  }
  SUBCASE("non-normal subgroup of s3") {
    SubgroupProfile p = subgroup_profile_by_ids(to_cgroup(symmetric3()), {"e", "(12)"});
    CHECK(p.c_subgroup);
    CHECK(!p.normal);
  }
  SUBCASE("alternating subgroup of s3") {
    SubgroupProfile p = subgroup_profile_by_ids(to_cgroup(symmetric3()), {"e", "(123)", "(132)"});
    CHECK(p.c_subgroup);
    CHECK(p.normal);
    CHECK(p.perfect);
  }
}

TEST_CASE("group profiles") {
  GroupProfile s3 = group_profile(to_cgroup(symmetric3()));
  CHECK(!s3.c_abelian);
  CHECK(!s3.connected);
  CHECK(!s3.witness.empty());

  GroupProfile ml = group_profile(fixtures::mac_lane_z4());
  CHECK(ml.c_abelian);
  CHECK(!ml.connected);

  CGroup sign_s3 = mac_lane_cgroup(symmetric3(), {"e", "(123)", "(132)"});
  GroupProfile sp = group_profile(sign_s3);
  CHECK(sp.c_abelian);  // commutators are even, so a + b ~ b + a
}

TEST_CASE("quotient by the relation") {
  CGroup ml = fixtures::mac_lane_z4();
  QuotientResult q = quotient_by_relation(ml);
  CHECK(q.group.size() == 2);
  CHECK(validate_plain_group(q.group).passed());
  CHECK(validate_hom(q.projection).passed());
  CHECK(q.class_of == std::vector<int>{0, 1, 0, 1});
  CHECK(search_group_isomorphism(q.group, cyclic_group(2)).has_value());
}

TEST_CASE("quotient by a perfect normal c-subgroup") {
  CGroup z4 = to_cgroup(cyclic_group(4));
  QuotientResult q = quotient_by_normal(z4, {0, 2});
  CHECK(q.group.size() == 2);
  CHECK(search_group_isomorphism(q.group, cyclic_group(2)).has_value());

  QuotientResult qs3 = quotient_by_normal(to_cgroup(symmetric3()), {0, 4, 5});
  CHECK(qs3.group.size() == 2);

  // {0} inside the mac lane group is not perfect: rejected.
  CHECK_THROWS_AS(quotient_by_normal(fixtures::mac_lane_z4(), {0}), CgrError);
  // {0,1} is not a c-subgroup at all.
  CHECK_THROWS_AS(quotient_by_normal(z4, {0, 1}), CgrError);
}

TEST_CASE("universal factorization") {
  CGroup z4 = to_cgroup(cyclic_group(4));
  CGroup z2 = to_cgroup(cyclic_group(2));
  CGroupHom parity = CGroupHom::make(z4, z2, {0, 1, 0, 1});
  FactorizationResult f = universal_factorization(parity, {0, 2});
  CHECK(validate_hom(f.theta).passed());
  CHECK(f.theta.table == std::vector<int>{0, 1});
  for (int a = 0; a < z4.size(); ++a)
    CHECK(f.theta.apply(f.quotient.projection.apply(a)) == parity.apply(a));

  // A map that does not kill the subgroup cannot factor.
  CGroupHom ident = identity_hom(z4);
  CHECK_THROWS_AS(universal_factorization(ident, {0, 2}), CgrError);
}

TEST_CASE("c-isomorphism checking") {
  // Z/2 with the total relation collapses onto the trivial group: the
  // composite on the big side is only related to the identity, not equal.
  CGroup t2 = CGroup::make(FiniteSetoid::from_partition({"0", "1"}, {{"0", "1"}}),
                           {{0, 1}, {1, 0}}, 0, {0, 1});
  CGroup z1 = to_cgroup(cyclic_group(1));
  CGroupHom phi = CGroupHom::make(t2, z1, {0, 0});
  CGroupHom psi = CGroupHom::make(z1, t2, {0});
  CHECK(check_c_isomorphism(phi, psi));

  // Negation is an exact automorphism of the mac lane fixture.
  CGroup ml = fixtures::mac_lane_z4();
  CGroupHom neg = CGroupHom::make(ml, ml, {0, 3, 2, 1});
  CHECK(check_c_isomorphism(neg, neg));

  CGroup z4 = to_cgroup(cyclic_group(4));
  std::string detail;
  CHECK(!check_c_isomorphism(identity_hom(z4), CGroupHom::make(z4, z4, {0, 3, 2, 1}), &detail));
  CHECK(!detail.empty());
}

TEST_CASE("c-isomorphism search") {
  CGroup ml = fixtures::mac_lane_z4();
  SUBCASE("the total relation on z2 absorbs into the trivial group") {
    CGroup t2 = CGroup::make(FiniteSetoid::from_partition({"0", "1"}, {{"0", "1"}}),
                             {{0, 1}, {1, 0}}, 0, {0, 1});
    IsoSearchResult r = search_c_isomorphism(t2, to_cgroup(cyclic_group(1)));
    REQUIRE(r.status == SearchStatus::found);
    CHECK(check_c_isomorphism(r.witness->first, r.witness->second));
  }
  SUBCASE("mac lane z4 is not c-isomorphic to discrete z2") {
    // Exact additivity pins the candidate z2 -> ml maps to {0,0} and
    // {0,2}, and both land in the class of zero.
    IsoSearchResult r = search_c_isomorphism(ml, to_cgroup(cyclic_group(2)));
    CHECK(r.status == SearchStatus::absent);
  }
  SUBCASE("mac lane z4 is not c-isomorphic to discrete z4") {
    IsoSearchResult r = search_c_isomorphism(ml, to_cgroup(cyclic_group(4)));
    CHECK(r.status == SearchStatus::absent);
  }
  SUBCASE("mismatched sizes") {
    IsoSearchResult r =
        search_c_isomorphism(to_cgroup(cyclic_group(3)), to_cgroup(cyclic_group(4)));
    CHECK(r.status == SearchStatus::absent);
  }
  SUBCASE("oversized carriers are not attempted") {
    IsoSearchResult r =
        search_c_isomorphism(to_cgroup(cyclic_group(13)), to_cgroup(cyclic_group(13)));
    CHECK(r.status == SearchStatus::not_attempted);
  }
}

TEST_CASE("hom enumeration") {
  std::vector<CGroupHom> homs =
      enumerate_homs(to_cgroup(cyclic_group(2)), to_cgroup(cyclic_group(4)));
  CHECK(homs.size() == 2);  // 1 may map to 0 or 2
  for (const auto& f : homs) CHECK(validate_hom(f).passed());

  std::vector<CGroupHom> s3_to_z3 =
      enumerate_homs(to_cgroup(symmetric3()), to_cgroup(cyclic_group(3)));
  CHECK(s3_to_z3.size() == 1);  // only the zero map
}

TEST_CASE("as_plain_group round trip") {
  PlainGroup g = symmetric3();
  std::optional<PlainGroup> back = as_plain_group(to_cgroup(g));
  REQUIRE(back.has_value());
  CHECK(*back == g);
  CHECK(!as_plain_group(fixtures::mac_lane_z4()).has_value());
}
