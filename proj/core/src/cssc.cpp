#include "cgr/cssc.hpp"

#include <fmt/format.h>

namespace cgr {

namespace {

std::vector<int> collect_members(const CategoricalGroup& c, const FiniteSetoid& objs) {
  std::vector<int> members;
  for (int f = 0; f < static_cast<int>(c.gd.morphisms.size()); ++f)
    if (objs.related(c.src(f), c.mon.zero_obj)) members.push_back(f);
  return members;
}

int member_pos(const std::vector<int>& members, int f, const char* what) {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == f) return static_cast<int>(i);
  throw CgrError(fmt::format("{} left the kernel", what));
}

FiniteSetoid total_on(const CategoricalGroup& c, const std::vector<int>& members) {
  std::vector<std::string> ids;
  ids.reserve(members.size());
  for (int f : members) ids.push_back(c.mor_name(f));
  std::vector<std::vector<std::string>> blocks;
  if (!ids.empty()) blocks.push_back(ids);
  return FiniteSetoid::from_partition(ids, blocks);
}

CGroupHom boundary_hom(const CategoricalGroup& c, const CGroup& g, const CGroup& h,
                       const std::vector<int>& members) {
  std::vector<int> table(members.size());
  for (size_t i = 0; i < members.size(); ++i) table[i] = c.tgt(members[i]);
  return CGroupHom::make(g, h, std::move(table));
}

}  // namespace

RelaxedKernel relaxed_kernel_ccm(const CategoricalGroup& c) {
  FiniteSetoid iso = object_iso_setoid(c);
  std::vector<int> members = collect_members(c, iso);
  if (members.empty()) throw CgrError("kernel has no members");

  const int n = static_cast<int>(members.size());
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<int> neg(n);
  for (int i = 0; i < n; ++i) {
    neg[i] = member_pos(members, neg_morphism(c, members[i]), "negation");
    for (int j = 0; j < n; ++j)
      add[i][j] = member_pos(members, c.msum(members[i], members[j]), "sum");
  }
  int zero = member_pos(members, c.gd.ident[c.mon.zero_obj], "zero");
  CGroup g = CGroup::make(total_on(c, members), std::move(add), zero, std::move(neg));

  CGroup h = objects_cgroup(c);
  SpecialClosure clo = special_closure(c);

  std::vector<std::vector<int>> act(h.size(), std::vector<int>(n));
  for (int r = 0; r < h.size(); ++r) {
    int one_r = c.gd.ident[r];
    int neg_r = neg_morphism(c, one_r);
    for (int i = 0; i < n; ++i)
      act[r][i] = member_pos(members, c.msum(one_r, c.msum(members[i], neg_r)), "action value");
  }

  CCrossedModule ccm{g, h, boundary_hom(c, g, h, members), CAction{h, g, std::move(act)},
                     object_special_setoid(c, clo)};
  return RelaxedKernel{std::move(ccm), std::move(members)};
}

KernelCGroup strict_kernel_cgroup(const CategoricalGroup& c) {
  std::vector<int> members;
  for (int f = 0; f < static_cast<int>(c.gd.morphisms.size()); ++f)
    if (c.src(f) == c.mon.zero_obj) members.push_back(f);
  if (members.empty()) throw CgrError("kernel has no members");

  SpecialClosure clo = special_closure(c);
  int z = c.mon.zero_obj;
  int gamma = unique_special_or_throw(c, clo, z, c.osum(z, z));
  int kappa = unique_special_or_throw(c, clo, z, c.oneg(z));

  const int n = static_cast<int>(members.size());
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<int> neg(n);
  for (int i = 0; i < n; ++i) {
    neg[i] = member_pos(members, c.compose(neg_morphism(c, members[i]), kappa), "negation");
    for (int j = 0; j < n; ++j)
      add[i][j] =
          member_pos(members, c.compose(c.msum(members[i], members[j]), gamma), "sum");
  }
  int zero = member_pos(members, c.gd.ident[z], "zero");
  CGroup group = CGroup::make(total_on(c, members), std::move(add), zero, std::move(neg));
  return KernelCGroup{std::move(group), std::move(members), gamma, kappa};
}

CsscResult build_cssc(const CategoricalGroup& c) {
  CsscResult out;
  SpecialClosure clo = special_closure(c);
  try {
    out.kernel = strict_kernel_cgroup(c);

    CGroup h = objects_cgroup(c);
    const std::vector<int>& members = out.kernel->morphism_of;
    const int n = static_cast<int>(members.size());
    int z = c.mon.zero_obj;

    std::vector<std::vector<int>> act(h.size(), std::vector<int>(n));
    for (int r = 0; r < h.size(); ++r) {
      int gamma_r = unique_special_or_throw(c, clo, z, c.osum(r, c.osum(z, c.oneg(r))));
      int one_r = c.gd.ident[r];
      int neg_r = neg_morphism(c, one_r);
      for (int i = 0; i < n; ++i) {
        int raw = c.msum(one_r, c.msum(members[i], neg_r));
        act[r][i] = member_pos(members, c.compose(raw, gamma_r), "action value");
      }
    }

    out.ccm = CCrossedModule{out.kernel->group, h,
                             boundary_hom(c, out.kernel->group, h, members),
                             CAction{h, out.kernel->group, std::move(act)},
                             object_special_setoid(c, clo)};
  } catch (const UniqueSpecialError& e) {
    out.ok = false;
    out.diagnostic = e.what();
    return out;
  } catch (const CgrError& e) {
    out.ok = false;
    out.diagnostic = e.what();
    return out;
  }

  out.certification = validate_ccm(*out.ccm, CcmLevel::strict);
  out.classification = classify_ccm(*out.ccm);
  out.certification.record("cssc.connected", out.classification.connected,
                           out.classification.connected ? "" : out.classification.detail);
  out.certification.record("cssc.strict", out.classification.strict,
                           out.classification.strict ? "" : out.classification.detail);
  out.certification.record("cssc.special", out.classification.special,
                           out.classification.special ? "" : out.classification.detail);
  out.ok = out.certification.passed();
  return out;
}

}  // namespace cgr
