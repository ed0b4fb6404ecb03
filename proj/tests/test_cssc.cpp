#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "cgr/classical.hpp"
#include "cgr/cssc.hpp"
#include "fixtures.hpp"

using namespace cgr;

TEST_CASE("relaxed kernels are c-crossed modules") {
  const std::map<std::string, int> expected_size = {
      {"pair-z2", 4},     {"pair-z3", 9},    {"pair-s3", 36},
      {"discrete-z4", 1}, {"gg-inner-z3", 3}, {"skeletal", 2},
  };
  for (const auto& [name, c] : fixtures::catgroup_suite()) {
    CAPTURE(name);
    RelaxedKernel k = relaxed_kernel_ccm(c);
    CHECK(k.ccm.g.size() == expected_size.at(name));
    CHECK(k.ccm.g.carrier.is_total());
    ValidationReport r = validate_ccm(k.ccm);
    CAPTURE(r.first_failure() ? r.first_failure()->axiom : "all-passed");
    CHECK(r.passed());
    CHECK(validate_caction(k.ccm.act).passed());
  }
}

TEST_CASE("strict kernels") {
  SUBCASE("pair groupoid of s3 recovers s3") {
    CategoricalGroup c = catgroup_from_gg(pair_gg(symmetric3()));
    KernelCGroup k = strict_kernel_cgroup(c);
    PlainGroup s3 = symmetric3();
    REQUIRE(k.group.size() == 6);
    CHECK(validate_cgroup(k.group).passed());
    CHECK(k.gamma == c.id_of(0));
    CHECK(k.kappa == c.id_of(0));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int ti = c.tgt(k.morphism_of[i]);
        int tj = c.tgt(k.morphism_of[j]);
        CHECK(c.tgt(k.morphism_of[k.group.plus(i, j)]) == s3.plus(ti, tj));
      }
  }
  SUBCASE("discrete z4 has a trivial kernel") {
    KernelCGroup k = strict_kernel_cgroup(catgroup_from_gg(discrete_gg(cyclic_group(4))));
    CHECK(k.group.size() == 1);
  }
  SUBCASE("skeletal nontrivial cocycle is ambiguous") {
    CategoricalGroup c = skeletal_catgroup(fixtures::skeletal_spec(true));
    CHECK_THROWS_AS(strict_kernel_cgroup(c), UniqueSpecialError);
  }
  SUBCASE("skeletal trivial cocycle works") {
    KernelCGroup k = strict_kernel_cgroup(skeletal_catgroup(fixtures::skeletal_spec(false)));
    CHECK(k.group.size() == 2);
    CHECK(validate_cgroup(k.group).passed());
  }
}

TEST_CASE("cssc construction succeeds on strict fixtures") {
  for (const auto& [name, c] : fixtures::catgroup_suite()) {
    if (name == "skeletal") continue;
    CAPTURE(name);
    CsscResult res = build_cssc(c);
    REQUIRE(res.ok);
    CHECK(res.certification.passed());
    CHECK(res.classification.connected);
    CHECK(res.classification.strict);
    CHECK(res.classification.special);
    CHECK(validate_ccm(*res.ccm, CcmLevel::strict).passed());
  }
}

TEST_CASE("cssc boundary and action match conjugation on the pair groupoid") {
  CategoricalGroup c = catgroup_from_gg(pair_gg(symmetric3()));
  CsscResult res = build_cssc(c);
  REQUIRE(res.ok);
  PlainGroup s3 = symmetric3();
  const CCrossedModule& x = *res.ccm;
  REQUIRE(x.h.size() == 6);
  for (int i = 0; i < x.g.size(); ++i)
    CHECK(x.bd.apply(i) == c.tgt(res.kernel->morphism_of[i]));
  for (int r = 0; r < x.h.size(); ++r)
    for (int i = 0; i < x.g.size(); ++i)
      CHECK(x.bd.apply(x.act.act(r, i)) ==
            s3.plus(r, s3.plus(x.bd.apply(i), s3.minus(r))));
}

TEST_CASE("cssc aborts on the ambiguous skeletal fixture, stably") {
  CategoricalGroup c = skeletal_catgroup(fixtures::skeletal_spec(true));
  CsscResult first = build_cssc(c);
  CsscResult second = build_cssc(c);
  CHECK(!first.ok);
  CHECK(!first.ccm.has_value());
  CHECK(first.diagnostic.find("ambiguous") != std::string::npos);
  CHECK(first.diagnostic == second.diagnostic);
}

TEST_CASE("cssc succeeds on the trivial-cocycle skeletal fixture") {
  CsscResult res = build_cssc(skeletal_catgroup(fixtures::skeletal_spec(false)));
  REQUIRE(res.ok);
  CHECK(res.classification.connected);
  CHECK(res.classification.strict);
  CHECK(res.classification.special);
  CHECK(res.ccm->g.size() == 2);
}

TEST_CASE("relaxed kernel extends the strict kernel") {
  CategoricalGroup c = catgroup_from_gg(pair_gg(cyclic_group(3)));
  RelaxedKernel relaxed = relaxed_kernel_ccm(c);
  KernelCGroup strict = strict_kernel_cgroup(c);
  CHECK(relaxed.ccm.g.size() == 9);
  CHECK(strict.group.size() == 3);
  for (int f : strict.morphism_of) {
    bool found = false;
    for (int g : relaxed.morphism_of) found = found || f == g;
    CHECK(found);
  }
}
