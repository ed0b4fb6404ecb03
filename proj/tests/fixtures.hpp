#pragma once

#include <string>
#include <vector>

#include "cgr/actions.hpp"
#include "cgr/catgroup.hpp"
#include "cgr/ccm.hpp"
#include "cgr/cgroup.hpp"
#include "cgr/classical.hpp"
#include "cgr/cssc.hpp"

namespace cgr::fixtures {

inline CGroup mac_lane_z4() { return mac_lane_cgroup(cyclic_group(4), {"0", "2"}); }

inline CAction inversion_action() {
  CGroup z2 = to_cgroup(cyclic_group(2));
  CGroup z3 = to_cgroup(cyclic_group(3));
  return CAction{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
}

inline CAction trivial_action(const CGroup& b, const CGroup& a) {
  std::vector<std::vector<int>> table(b.size());
  for (auto& row : table)
    for (int p = 0; p < a.size(); ++p) row.push_back(p);
  return CAction{b, a, std::move(table)};
}

// Direct product of Z/2 and Z/3 presented as a split extension.
inline SplitExtension trivial_extension() {
  CGroup a = to_cgroup(cyclic_group(3));
  CGroup b = to_cgroup(cyclic_group(2));
  Semidirect sd = semidirect(trivial_action(b, a));
  std::vector<int> incl(a.size());
  for (int p = 0; p < a.size(); ++p) incl[p] = p;  // (0, p) sits at index p
  return SplitExtension{a,
                        sd.group,
                        b,
                        CGroupHom::make(a, sd.group, std::move(incl)),
                        sd.proj,
                        sd.section};
}

// Z/4 with mod-2 blocks over Z/2; the section 1 -> 1 is additive only up
// to the relation (1 + 1 = 2 ~ 0).
inline SplitExtension parity_extension() {
  CGroup e = mac_lane_z4();
  CGroup b = to_cgroup(cyclic_group(2));
  FiniteSetoid sub_carrier = FiniteSetoid::from_partition({"0", "2"}, {{"0", "2"}});
  CGroup a = CGroup::make(std::move(sub_carrier), {{0, 1}, {1, 0}}, 0, {0, 1});
  return SplitExtension{a,
                        e,
                        b,
                        CGroupHom::make_by_ids(a, e, {"0", "2"}),
                        CGroupHom::make_by_ids(e, b, {"0", "1", "0", "1"}),
                        CGroupHom::make_by_ids(b, e, {"0", "1"})};
}

// S3 as A3 extended by the sign, with the transposition (12) as section.
inline SplitExtension s3_extension() {
  CGroup a = to_cgroup(cyclic_group(3));
  CGroup e = to_cgroup(symmetric3());
  CGroup b = to_cgroup(cyclic_group(2));
  return SplitExtension{a,
                        e,
                        b,
                        CGroupHom::make_by_ids(a, e, {"e", "(123)", "(132)"}),
                        CGroupHom::make_by_ids(e, b, {"0", "1", "1", "1", "0", "0"}),
                        CGroupHom::make_by_ids(b, e, {"e", "(12)"})};
}

inline std::vector<SplitExtension> extension_suite() {
  return {trivial_extension(), parity_extension(), s3_extension()};
}

inline SkeletalSpec skeletal_spec(bool nontrivial) {
  SkeletalSpec spec;
  spec.objects = cyclic_group(2);
  spec.coeff = cyclic_group(2);
  if (nontrivial)
    spec.omega = z2_nontrivial_cocycle();
  else
    spec.omega.assign(2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
  return spec;
}

struct NamedCatGroup {
  std::string name;
  CategoricalGroup value;
};

inline std::vector<NamedCatGroup> catgroup_suite() {
  return {
      {"pair-z2", catgroup_from_gg(pair_gg(cyclic_group(2)))},
      {"pair-z3", catgroup_from_gg(pair_gg(cyclic_group(3)))},
      {"pair-s3", catgroup_from_gg(pair_gg(symmetric3()))},
      {"discrete-z4", catgroup_from_gg(discrete_gg(cyclic_group(4)))},
      {"gg-inner-z3", catgroup_from_gg(gg_from_xmod(inner_xmod(cyclic_group(3))))},
      {"skeletal", skeletal_catgroup(skeletal_spec(true))},
  };
}

struct NamedHom {
  std::string name;
  CGroupHom value;
};

// Certified homs drawn from every corner of the fixture suite.
inline std::vector<NamedHom> hom_suite() {
  std::vector<NamedHom> out;
  CGroup ml = mac_lane_z4();
  out.push_back({"identity-mac-lane", identity_hom(ml)});
  out.push_back({"identity-s3", identity_hom(to_cgroup(symmetric3()))});
  out.push_back({"quotient-mac-lane", quotient_by_relation(ml).projection});
  out.push_back({"quotient-z4-mod2",
                 quotient_by_normal(to_cgroup(cyclic_group(4)), {0, 2}).projection});
  int tag = 0;
  for (const auto& e : extension_suite()) {
    std::string suffix = std::to_string(tag++);
    out.push_back({"incl-" + suffix, e.incl});
    out.push_back({"proj-" + suffix, e.proj});
    out.push_back({"proj-after-section-" + suffix, compose_homs(e.proj, e.section)});
  }
  Semidirect sd = semidirect(inversion_action());
  out.push_back({"semidirect-proj", sd.proj});
  out.push_back({"semidirect-section", sd.section});
  CsscResult cssc = build_cssc(catgroup_from_gg(pair_gg(symmetric3())));
  out.push_back({"cssc-boundary", cssc.ccm->bd});
  return out;
}

}  // namespace cgr::fixtures
