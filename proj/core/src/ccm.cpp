#include "cgr/ccm.hpp"

#include <fmt/format.h>

namespace cgr {

bool weak_special_related(const CCrossedModule& x, int c, int c2) {
  return x.g.related(c, c2) && x.special_h.related(x.bd.apply(c), x.bd.apply(c2));
}

ValidationReport validate_ccm(const CCrossedModule& x, CcmLevel level) {
  ValidationReport r;
  r.subject = "c-crossed-module";
  r.merge(validate_cgroup(x.g), "g.");
  r.merge(validate_cgroup(x.h), "h.");

  {
    bool ok = x.bd.source == x.g && x.bd.target == x.h && x.act.acting == x.h &&
              x.act.acted == x.g;
    r.record("ccm.wiring", ok, ok ? "" : "boundary or action does not connect G and H");
    if (!ok) return r;
  }

  r.merge(validate_hom(x.bd), "bd.");
  r.merge(validate_caction(x.act), "act.");

  {
    bool ok = x.special_h.elements() == x.h.carrier.elements();
    std::string w = ok ? "" : "special relation lives on a different carrier";
    if (ok)
      for (int p = 0; ok && p < x.h.size(); ++p)
        for (int q = 0; ok && q < x.h.size(); ++q)
          if (x.special_h.related(p, q) && !x.h.related(p, q)) {
            ok = false;
            w = fmt::format("specially related {} and {} are not related in H", x.h.name(p),
                            x.h.name(q));
          }
    r.record("ccm.special-refines", ok, w);
  }

  {
    // bd(r.c) = r + (bd(c) - r), exactly.
    bool ok = true;
    std::string w;
    for (int rr = 0; ok && rr < x.h.size(); ++rr)
      for (int c = 0; ok && c < x.g.size(); ++c) {
        int lhs = x.bd.apply(x.act.act(rr, c));
        int rhs = x.h.plus(rr, x.h.plus(x.bd.apply(c), x.h.minus(rr)));
        if (lhs != rhs) {
          ok = false;
          w = fmt::format("bd({}.{}) = {} but {} + (bd({}) - {}) = {}{}", x.h.name(rr),
                          x.g.name(c), x.h.name(lhs), x.h.name(rr), x.g.name(c), x.h.name(rr),
                          x.h.name(rhs),
                          x.h.related(lhs, rhs) ? " (they are related, not equal)" : "");
        }
      }
    r.record("ccm.boundary-equivariance", ok, w);
  }

  {
    // bd(c).c1 agrees with c + (c1 - c), up to the relation at the base
    // level and exactly at the strict level.
    bool ok = true;
    std::string w;
    for (int c = 0; ok && c < x.g.size(); ++c)
      for (int c1 = 0; ok && c1 < x.g.size(); ++c1) {
        int lhs = x.act.act(x.bd.apply(c), c1);
        int rhs = x.g.plus(c, x.g.plus(c1, x.g.minus(c)));
        bool here = level == CcmLevel::strict ? lhs == rhs : x.g.related(lhs, rhs);
        if (!here) {
          ok = false;
          w = fmt::format("bd({}).{} = {} vs {} + ({} - {}) = {}", x.g.name(c), x.g.name(c1),
                          x.g.name(lhs), x.g.name(c), x.g.name(c1), x.g.name(c),
                          x.g.name(rhs));
        }
      }
    r.record("ccm.peiffer", ok, w);
  }

  return r;
}

CcmClassification classify_ccm(const CCrossedModule& x) {
  CcmClassification out;
  out.connected = x.g.carrier.is_total();
  if (!out.connected) out.detail = "the relation on G is not total";

  out.strict = validate_ccm(x, CcmLevel::strict).passed();

  // Special: every r related to bd(c) admits a lift of c with boundary
  // exactly r, uniquely up to weak special relatedness when r is specially
  // related to bd(c).
  out.special = true;
  for (int c = 0; out.special && c < x.g.size(); ++c)
    for (int rr = 0; out.special && rr < x.h.size(); ++rr) {
      if (!x.h.related(x.bd.apply(c), rr)) continue;
      std::vector<int> lifts;
      for (int c2 = 0; c2 < x.g.size(); ++c2)
        if (x.g.related(c2, c) && x.bd.apply(c2) == rr) lifts.push_back(c2);
      if (lifts.empty()) {
        out.special = false;
        out.detail = fmt::format("no lift of {} with boundary {}", x.g.name(c), x.h.name(rr));
        break;
      }
      if (x.special_h.related(x.bd.apply(c), rr))
        for (size_t i = 0; out.special && i < lifts.size(); ++i)
          for (size_t j = i + 1; out.special && j < lifts.size(); ++j)
            if (!weak_special_related(x, lifts[i], lifts[j])) {
              out.special = false;
              out.detail = fmt::format("lifts {} and {} of {} are not weakly specially related",
                                       x.g.name(lifts[i]), x.g.name(lifts[j]), x.g.name(c));
            }
    }
  return out;
}

ValidationReport validate_ccm_morphism(const CCrossedModuleMorphism& m) {
  ValidationReport r;
  r.subject = "c-crossed-module-morphism";
  {
    bool ok = m.on_g.source == m.source.g && m.on_g.target == m.target.g &&
              m.on_h.source == m.source.h && m.on_h.target == m.target.h;
    r.record("ccmmor.wiring", ok, ok ? "" : "component maps do not connect the two modules");
    if (!ok) return r;
  }
  r.merge(validate_hom(m.on_g), "on-g.");
  r.merge(validate_hom(m.on_h), "on-h.");

  {
    bool ok = true;
    std::string w;
    for (int c = 0; ok && c < m.source.g.size(); ++c) {
      int lhs = m.on_h.apply(m.source.bd.apply(c));
      int rhs = m.target.bd.apply(m.on_g.apply(c));
      if (lhs != rhs) {
        ok = false;
        w = fmt::format("square fails at {}: {} vs {}", m.source.g.name(c),
                        m.target.h.name(lhs), m.target.h.name(rhs));
      }
    }
    r.record("ccmmor.square", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int rr = 0; ok && rr < m.source.h.size(); ++rr)
      for (int c = 0; ok && c < m.source.g.size(); ++c) {
        int lhs = m.on_g.apply(m.source.act.act(rr, c));
        int rhs = m.target.act.act(m.on_h.apply(rr), m.on_g.apply(c));
        if (lhs != rhs) {
          ok = false;
          w = fmt::format("equivariance fails at {}, {}", m.source.h.name(rr),
                          m.source.g.name(c));
        }
      }
    r.record("ccmmor.equivariance", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int p = 0; ok && p < m.source.h.size(); ++p)
      for (int q = 0; ok && q < m.source.h.size(); ++q)
        if (m.source.special_h.related(p, q) &&
            !m.target.special_h.related(m.on_h.apply(p), m.on_h.apply(q))) {
          ok = false;
          w = fmt::format("special relatedness of {} and {} is not preserved",
                          m.source.h.name(p), m.source.h.name(q));
        }
    r.record("ccmmor.special", ok, w);
  }

  return r;
}

FiniteSetoid diagonal_special(const FiniteSetoid& s) {
  return FiniteSetoid::discrete(s.elements());
}

CCrossedModule conjugation_ccm(const CGroup& g, const std::vector<std::string>& subgroup_ids) {
  SubgroupProfile prof = subgroup_profile_by_ids(g, subgroup_ids);
  if (!(prof.c_subgroup && prof.normal && prof.perfect) || !prof.induced)
    throw CgrError(fmt::format("subset is not a perfect normal c-subgroup: {}", prof.detail));
  const CGroup& sub = *prof.induced;

  std::vector<int> member(sub.size());
  for (int i = 0; i < sub.size(); ++i) member[i] = g.carrier.index_of(sub.name(i));

  CGroupHom bd = CGroupHom::make(sub, g, member);

  std::vector<std::vector<int>> table(g.size(), std::vector<int>(sub.size()));
  for (int x = 0; x < g.size(); ++x)
    for (int p = 0; p < sub.size(); ++p) {
      int conj = g.plus(x, g.plus(member[p], g.minus(x)));
      int found = -1;
      for (int q = 0; q < sub.size(); ++q)
        if (member[q] == conj) {
          found = q;
          break;
        }
      if (found == -1)
        throw CgrError(fmt::format("conjugate of {} by {} escapes the subset", sub.name(p),
                                   g.name(x)));
      table[x][p] = found;
    }
  CAction act{g, sub, std::move(table)};

  return CCrossedModule{sub, g, std::move(bd), std::move(act), diagonal_special(g.carrier)};
}

}  // namespace cgr
