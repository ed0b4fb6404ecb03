#include "cgr/actions.hpp"

#include <fmt/format.h>

namespace cgr {

ValidationReport validate_caction(const CAction& act) {
  ValidationReport r;
  r.subject = "c-action";
  r.merge(validate_cgroup(act.acting), "acting.");
  r.merge(validate_cgroup(act.acted), "acted.");

  const CGroup& b = act.acting;
  const CGroup& a = act.acted;
  {
    bool ok = static_cast<int>(act.table.size()) == b.size();
    if (ok)
      for (const auto& row : act.table) {
        ok = ok && static_cast<int>(row.size()) == a.size();
        for (int v : row) ok = ok && v >= 0 && v < a.size();
      }
    r.record("action.shape", ok, ok ? "" : "action table malformed");
    if (!ok) return r;
  }

  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < b.size(); ++x)
      for (int p = 0; ok && p < a.size(); ++p)
        for (int q = 0; ok && q < a.size(); ++q)
          if (!a.related(act.act(x, a.plus(p, q)), a.plus(act.act(x, p), act.act(x, q)))) {
            ok = false;
            w = fmt::format("{}.({}+{}) is unrelated to {}.{} + {}.{}", b.name(x), a.name(p),
                            a.name(q), b.name(x), a.name(p), b.name(x), a.name(q));
          }
    r.record("action.distributes", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < b.size(); ++x)
      for (int y = 0; ok && y < b.size(); ++y)
        for (int p = 0; ok && p < a.size(); ++p)
          if (!a.related(act.act(b.plus(x, y), p), act.act(x, act.act(y, p)))) {
            ok = false;
            w = fmt::format("({}+{}).{} is unrelated to {}.({}.{})", b.name(x), b.name(y),
                            a.name(p), b.name(x), b.name(y), a.name(p));
          }
    r.record("action.composes", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int p = 0; ok && p < a.size(); ++p)
      if (!a.related(act.act(b.zero, p), p)) {
        ok = false;
        w = fmt::format("0.{} is unrelated to {}", a.name(p), a.name(p));
      }
    r.record("action.unit", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < b.size(); ++x)
      for (int y = 0; ok && y < b.size(); ++y) {
        if (!b.related(x, y)) continue;
        for (int p = 0; ok && p < a.size(); ++p)
          for (int q = 0; ok && q < a.size(); ++q) {
            if (!a.related(p, q)) continue;
            if (!a.related(act.act(x, p), act.act(y, q))) {
              ok = false;
              w = fmt::format("{} ~ {} and {} ~ {} but the action values are unrelated",
                              b.name(x), b.name(y), a.name(p), a.name(q));
            }
          }
      }
    r.record("action.congruence", ok, w);
  }

  // For ordinary groups on both sides the mixed associativity law is exact.
  if (b.carrier.is_discrete() && a.carrier.is_discrete()) {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < b.size(); ++x)
      for (int y = 0; ok && y < b.size(); ++y)
        for (int p = 0; ok && p < a.size(); ++p)
          if (act.act(b.plus(x, y), p) != act.act(x, act.act(y, p))) {
            ok = false;
            w = fmt::format("exact composition fails at {}, {}, {}", b.name(x), b.name(y),
                            a.name(p));
          }
    r.record("action.composes-exact", ok, w);
  }

  return r;
}

ValidationReport validate_split_extension(const SplitExtension& e) {
  ValidationReport r;
  r.subject = "split-extension";
  r.merge(validate_cgroup(e.sub), "sub.");
  r.merge(validate_cgroup(e.total), "total.");
  r.merge(validate_cgroup(e.base), "base.");

  {
    bool ok = e.incl.source == e.sub && e.incl.target == e.total && e.proj.source == e.total &&
              e.proj.target == e.base && e.section.source == e.base &&
              e.section.target == e.total;
    r.record("ext.wiring", ok, ok ? "" : "maps do not connect A -> E -> B as expected");
    if (!ok) return r;
  }

  r.merge(validate_hom(e.incl), "incl.");
  r.merge(validate_hom(e.proj), "proj.");

  // The section need not be exactly additive (no exact section exists for
  // some extensions); it must be a setoid map, additive up to the relation.
  r.merge(is_setoid_map(SetoidMap::make(e.base.carrier, e.total.carrier, e.section.table)),
          "section.");
  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < e.base.size(); ++x)
      for (int y = 0; ok && y < e.base.size(); ++y) {
        int lhs = e.section.apply(e.base.plus(x, y));
        int rhs = e.total.plus(e.section.apply(x), e.section.apply(y));
        if (!e.total.related(lhs, rhs)) {
          ok = false;
          w = fmt::format("s({}+{}) = {} is unrelated to s({})+s({}) = {}", e.base.name(x),
                          e.base.name(y), e.total.name(lhs), e.base.name(x), e.base.name(y),
                          e.total.name(rhs));
        }
      }
    r.record("ext.section-additive", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < e.base.size(); ++x)
      if (e.proj.apply(e.section.apply(x)) != x) {
        ok = false;
        w = fmt::format("p(s({})) = {}", e.base.name(x),
                        e.base.name(e.proj.apply(e.section.apply(x))));
      }
    r.record("ext.split", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < e.base.size(); ++x) {
      bool hit = false;
      for (int z = 0; !hit && z < e.total.size(); ++z) hit = e.proj.apply(z) == x;
      if (!hit) {
        ok = false;
        w = fmt::format("nothing projects onto {}", e.base.name(x));
      }
    }
    r.record("ext.proj-surjective", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int p = 0; ok && p < e.sub.size(); ++p)
      for (int q = 0; ok && q < e.sub.size(); ++q)
        if (e.total.related(e.incl.apply(p), e.incl.apply(q)) && !e.sub.related(p, q)) {
          ok = false;
          w = fmt::format("incl identifies unrelated {} and {}", e.sub.name(p), e.sub.name(q));
        }
    r.record("ext.incl-embeds", ok, w);
  }

  {
    // The c-kernel of proj is exactly the closure of the image of incl.
    bool ok = true;
    std::string w;
    for (int z = 0; ok && z < e.total.size(); ++z) {
      bool in_kernel = e.base.related(e.proj.apply(z), e.base.zero);
      bool near_image = false;
      for (int p = 0; !near_image && p < e.sub.size(); ++p)
        near_image = e.total.related(z, e.incl.apply(p));
      if (in_kernel != near_image) {
        ok = false;
        w = fmt::format("{} is {} the kernel but {} the image closure", e.total.name(z),
                        in_kernel ? "in" : "outside", near_image ? "in" : "outside");
      }
    }
    r.record("ext.kernel-matches", ok, w);
  }

  return r;
}

CAction induced_action(const SplitExtension& e) {
  std::vector<std::vector<int>> table(e.base.size(), std::vector<int>(e.sub.size()));
  for (int x = 0; x < e.base.size(); ++x) {
    int sx = e.section.apply(x);
    for (int p = 0; p < e.sub.size(); ++p) {
      int conj = e.total.plus(sx, e.total.plus(e.incl.apply(p), e.total.minus(sx)));
      int found = -1;
      for (int q = 0; q < e.sub.size(); ++q)
        if (e.total.related(conj, e.incl.apply(q))) {
          found = q;
          break;
        }
      if (found == -1)
        throw CgrError(fmt::format("conjugate of {} by s({}) leaves the image closure of A",
                                   e.sub.name(p), e.base.name(x)));
      table[x][p] = found;
    }
  }
  return CAction{e.base, e.sub, std::move(table)};
}

Semidirect semidirect(const CAction& act) {
  const CGroup& b = act.acting;
  const CGroup& a = act.acted;
  const int na = a.size();
  auto pos = [&](int x, int p) { return x * na + p; };

  FiniteSetoid carrier = product_setoid(b.carrier, a.carrier);
  const int n = carrier.size();
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<int> neg(n);
  for (int x = 0; x < b.size(); ++x)
    for (int p = 0; p < na; ++p) {
      int nx = b.minus(x);
      neg[pos(x, p)] = pos(nx, a.minus(act.act(nx, p)));
      for (int y = 0; y < b.size(); ++y)
        for (int q = 0; q < na; ++q)
          add[pos(x, p)][pos(y, q)] = pos(b.plus(x, y), a.plus(p, act.act(x, q)));
    }

  CGroup group = CGroup::make(std::move(carrier), std::move(add), pos(b.zero, a.zero),
                              std::move(neg));

  std::vector<int> proj_table(n);
  for (int x = 0; x < b.size(); ++x)
    for (int p = 0; p < na; ++p) proj_table[pos(x, p)] = x;
  CGroupHom proj = CGroupHom::make(group, b, std::move(proj_table));

  std::vector<int> sec_table(b.size());
  for (int x = 0; x < b.size(); ++x) sec_table[x] = pos(x, a.zero);
  CGroupHom section = CGroupHom::make(b, group, std::move(sec_table));

  return Semidirect{std::move(group), std::move(proj), std::move(section)};
}

ValidationReport check_semidirect_iso(const SplitExtension& e) {
  ValidationReport r;
  r.subject = "semidirect-comparison";

  CAction act{e.base, e.sub, {}};
  try {
    act = induced_action(e);
  } catch (const CgrError& err) {
    r.fail("iso.action-defined", err.what());
    return r;
  }
  r.pass("iso.action-defined");
  r.merge(validate_caction(act), "action.");

  Semidirect sd = semidirect(act);
  const CGroup& s = sd.group;
  const int na = e.sub.size();
  auto pos = [&](int x, int p) { return x * na + p; };

  // phi : E -> B x| A and psi the other way.
  std::vector<int> phi(e.total.size(), -1);
  {
    bool ok = true;
    std::string w;
    for (int z = 0; ok && z < e.total.size(); ++z) {
      int x = e.proj.apply(z);
      int diff = e.total.plus(z, e.total.minus(e.section.apply(x)));
      int found = -1;
      for (int p = 0; p < na; ++p)
        if (e.total.related(diff, e.incl.apply(p))) {
          found = p;
          break;
        }
      if (found == -1) {
        ok = false;
        w = fmt::format("{} - s(p({})) misses the image closure of A", e.total.name(z),
                        e.total.name(z));
      } else {
        phi[z] = pos(x, found);
      }
    }
    r.record("iso.phi-defined", ok, w);
    if (!ok) return r;
  }
  std::vector<int> psi(s.size());
  for (int x = 0; x < e.base.size(); ++x)
    for (int p = 0; p < na; ++p)
      psi[pos(x, p)] = e.total.plus(e.incl.apply(p), e.section.apply(x));

  {
    bool ok = true;
    std::string w;
    for (int z = 0; ok && z < e.total.size(); ++z)
      for (int z2 = 0; ok && z2 < e.total.size(); ++z2)
        if (!s.related(phi[e.total.plus(z, z2)], s.plus(phi[z], phi[z2]))) {
          ok = false;
          w = fmt::format("phi({}+{}) is unrelated to phi({})+phi({})", e.total.name(z),
                          e.total.name(z2), e.total.name(z), e.total.name(z2));
        }
    r.record("iso.phi-additive", ok, w);
  }
  r.merge(is_setoid_map(SetoidMap::make(e.total.carrier, s.carrier, phi)), "phi.");

  {
    bool ok = true;
    std::string w;
    for (int u = 0; ok && u < s.size(); ++u)
      for (int v = 0; ok && v < s.size(); ++v)
        if (!e.total.related(psi[s.plus(u, v)], e.total.plus(psi[u], psi[v]))) {
          ok = false;
          w = fmt::format("psi({}+{}) is unrelated to psi({})+psi({})", s.name(u), s.name(v),
                          s.name(u), s.name(v));
        }
    r.record("iso.psi-additive", ok, w);
  }
  r.merge(is_setoid_map(SetoidMap::make(s.carrier, e.total.carrier, psi)), "psi.");

  {
    bool ok = true;
    std::string w;
    for (int z = 0; ok && z < e.total.size(); ++z)
      if (!e.total.related(psi[phi[z]], z)) {
        ok = false;
        w = fmt::format("psi(phi({})) is unrelated to {}", e.total.name(z), e.total.name(z));
      }
    for (int u = 0; ok && u < s.size(); ++u)
      if (!s.related(phi[psi[u]], u)) {
        ok = false;
        w = fmt::format("phi(psi({})) is unrelated to {}", s.name(u), s.name(u));
      }
    r.record("iso.composites", ok, w);
  }

  // c-kernel of the semidirect projection against A, via a <-> (0, a).
  {
    bool ok = true;
    std::string w;
    for (int p = 0; ok && p < na; ++p)
      for (int q = 0; ok && q < na; ++q)
        if (!s.related(s.plus(pos(e.base.zero, p), pos(e.base.zero, q)),
                       pos(e.base.zero, e.sub.plus(p, q)))) {
          ok = false;
          w = fmt::format("(0,{}) + (0,{}) is unrelated to (0,{}+{})", e.sub.name(p),
                          e.sub.name(q), e.sub.name(p), e.sub.name(q));
        }
    for (int u = 0; ok && u < s.size(); ++u) {
      bool in_kernel = e.base.related(sd.proj.apply(u), e.base.zero);
      if (!in_kernel) continue;
      // u = (x, p) with x ~ 0 must be related to its A-part's image (0, p).
      int p = u % na;
      if (!s.related(u, pos(e.base.zero, p))) {
        ok = false;
        w = fmt::format("kernel element {} is unrelated to (0, its A part)", s.name(u));
      }
    }
    r.record("iso.kernel-matches-sub", ok, w);
  }

  return r;
}

}  // namespace cgr
