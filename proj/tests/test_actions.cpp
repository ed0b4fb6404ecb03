#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cgr/actions.hpp"
#include "cgr/classical.hpp"
#include "fixtures.hpp"

using namespace cgr;

TEST_CASE("action validation") {
  CHECK(validate_caction(fixtures::inversion_action()).passed());
  CHECK(validate_caction(
            fixtures::trivial_action(to_cgroup(cyclic_group(2)), fixtures::mac_lane_z4()))
            .passed());

  SUBCASE("broken distributivity") {
    CAction a = fixtures::inversion_action();
    a.table[1][1] = 1;  // 1.(1) should be 2
    ValidationReport r = validate_caction(a);
    CHECK(!r.passed());
  }
  SUBCASE("broken unit law") {
    CAction a = fixtures::inversion_action();
    a.table[0] = {0, 2, 1};
    CHECK(!validate_caction(a).passed());
  }
}

TEST_CASE("split extensions certify") {
  for (const auto& e : fixtures::extension_suite()) {
    ValidationReport r = validate_split_extension(e);
    CAPTURE(r.first_failure() ? r.first_failure()->axiom : "all-passed");
    CHECK(r.passed());
  }
}

TEST_CASE("broken extensions are rejected") {
  SUBCASE("section that does not split proj") {
    SplitExtension e = fixtures::s3_extension();
    e.section = CGroupHom::make_by_ids(e.base, e.total, {"e", "e"});
    ValidationReport r = validate_split_extension(e);
    CHECK(!r.passed());
    bool split_failed = false;
    for (const auto& c : r.checks)
      if (c.axiom == "ext.split" && !c.passed) split_failed = true;
    CHECK(split_failed);
  }
  SUBCASE("projection that forgets additivity") {
    SplitExtension e = fixtures::s3_extension();
    e.proj = CGroupHom::make_by_ids(e.total, e.base, {"0", "1", "1", "1", "1", "0"});
    CHECK(!validate_split_extension(e).passed());
  }
  SUBCASE("inclusion missing the kernel") {
    SplitExtension e = fixtures::trivial_extension();
    // Map A into the section image instead of the kernel.
    e.incl = CGroupHom::make(e.sub, e.total, {0, 0, 0});
    CHECK(!validate_split_extension(e).passed());
  }
}

TEST_CASE("induced actions") {
  SUBCASE("s3 extension induces inversion on the alternating subgroup") {
    CAction a = induced_action(fixtures::s3_extension());
    CHECK(validate_caction(a).passed());
    CHECK(a.table[0] == std::vector<int>{0, 1, 2});
    CHECK(a.table[1] == std::vector<int>{0, 2, 1});
  }
  SUBCASE("parity extension induces the trivial action up to blocks") {
    CAction a = induced_action(fixtures::parity_extension());
    CHECK(validate_caction(a).passed());
    for (int b = 0; b < 2; ++b)
      for (int p = 0; p < 2; ++p) CHECK(a.acted.related(a.act(b, p), p));
  }
  SUBCASE("conjugates must stay near the subgroup") {
    // {e, (12)} is not normal: conjugating by (13) walks out of it.
    SplitExtension f = fixtures::s3_extension();
    f.sub = to_cgroup(cyclic_group(2));
    f.incl = CGroupHom::make_by_ids(f.sub, f.total, {"e", "(12)"});
    f.section = CGroupHom::make_by_ids(f.base, f.total, {"e", "(13)"});
    CHECK_THROWS_AS(induced_action(f), CgrError);
  }
}

TEST_CASE("semidirect products") {
  Semidirect sd = semidirect(fixtures::inversion_action());
  CHECK(sd.group.size() == 6);
  CHECK(validate_cgroup(sd.group).passed());
  CHECK(validate_hom(sd.proj).passed());
  CHECK(sd.group.carrier.name(0) == "(0,0)");

  SUBCASE("not commutative even up to the relation") {
    GroupProfile p = group_profile(sd.group);
    CHECK(!p.c_abelian);
  }
  SUBCASE("isomorphic to s3") {
    IsoSearchResult r = search_c_isomorphism(sd.group, to_cgroup(symmetric3()));
    CHECK(r.status == SearchStatus::found);
  }
  SUBCASE("trivial action gives the direct product") {
    Semidirect dp = semidirect(fixtures::trivial_action(to_cgroup(cyclic_group(2)),
                                                        to_cgroup(cyclic_group(3))));
    std::optional<PlainGroup> plain = as_plain_group(dp.group);
    REQUIRE(plain.has_value());
    CHECK(search_group_isomorphism(*plain, cyclic_group(6)).has_value());
  }
  SUBCASE("semidirect group presents its own split extension") {
    CAction a = fixtures::inversion_action();
    Semidirect s = semidirect(a);
    std::vector<int> incl(a.acted.size());
    for (int p = 0; p < a.acted.size(); ++p) incl[p] = p;  // (0, p)
    SplitExtension e{a.acted, s.group, a.acting,
                     CGroupHom::make(a.acted, s.group, std::move(incl)), s.proj, s.section};
    CHECK(validate_split_extension(e).passed());
    CHECK(check_semidirect_iso(e).passed());
  }
}

TEST_CASE("comparison with the semidirect product") {
  for (const auto& e : fixtures::extension_suite()) {
    ValidationReport r = check_semidirect_iso(e);
    CAPTURE(r.first_failure() ? r.first_failure()->axiom : "all-passed");
    CHECK(r.passed());
  }

  SUBCASE("collapsed section cannot be compared") {
    SplitExtension e = fixtures::s3_extension();
    e.section = CGroupHom::make_by_ids(e.base, e.total, {"e", "e"});
    ValidationReport r = check_semidirect_iso(e);
    CHECK(!r.passed());
    bool phi_failed = false;
    for (const auto& c : r.checks)
      if (c.axiom == "iso.phi-defined" && !c.passed) phi_failed = true;
    CHECK(phi_failed);
  }
}

TEST_CASE("exact sections need not exist but congruence ones do") {
  // The parity extension's section is not exactly additive; the validator
  // accepts it because additivity holds up to the blocks.
  SplitExtension e = fixtures::parity_extension();
  int s1 = e.section.apply(1);
  int lhs = e.section.apply(e.base.plus(1, 1));
  int rhs = e.total.plus(s1, s1);
  CHECK(lhs != rhs);                  // 0 versus 2 in z4
  CHECK(e.total.related(lhs, rhs));   // same mod-2 block
}
