#include "cgr/classical.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace cgr {

ValidationReport validate_crossed_module(const CrossedModule& x) {
  ValidationReport r;
  r.subject = "crossed-module";
  r.merge(validate_plain_group(x.a), "a.");
  r.merge(validate_plain_group(x.b), "b.");
  if (!r.passed()) return r;

  const int na = x.a.size();
  const int nb = x.b.size();
  {
    bool ok = static_cast<int>(x.mu.size()) == na && static_cast<int>(x.action.size()) == nb;
    for (int v : x.mu) ok = ok && v >= 0 && v < nb;
    if (ok)
      for (const auto& row : x.action) {
        ok = ok && static_cast<int>(row.size()) == na;
        for (int v : row) ok = ok && v >= 0 && v < na;
      }
    r.record("xmod.shape", ok, ok ? "" : "mu or action table malformed");
    if (!ok) return r;
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < na; ++a)
      for (int a2 = 0; ok && a2 < na; ++a2)
        if (x.mu[x.a.plus(a, a2)] != x.b.plus(x.mu[a], x.mu[a2])) {
          ok = false;
          w = fmt::format("mu({}+{}) differs from mu({})+mu({})", x.a.name(a), x.a.name(a2),
                          x.a.name(a), x.a.name(a2));
        }
    r.record("xmod.mu-hom", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int b = 0; ok && b < nb; ++b)
      for (int a = 0; ok && a < na; ++a)
        for (int a2 = 0; ok && a2 < na; ++a2)
          if (x.action[b][x.a.plus(a, a2)] != x.a.plus(x.action[b][a], x.action[b][a2])) {
            ok = false;
            w = fmt::format("{} does not act additively on {}+{}", x.b.name(b), x.a.name(a),
                            x.a.name(a2));
          }
    for (int b = 0; ok && b < nb; ++b)
      for (int b2 = 0; ok && b2 < nb; ++b2)
        for (int a = 0; ok && a < na; ++a)
          if (x.action[x.b.plus(b, b2)][a] != x.action[b][x.action[b2][a]]) {
            ok = false;
            w = fmt::format("action of {}+{} is not the composite at {}", x.b.name(b),
                            x.b.name(b2), x.a.name(a));
          }
    for (int a = 0; ok && a < na; ++a)
      if (x.action[x.b.zero][a] != a) {
        ok = false;
        w = fmt::format("zero does not act trivially at {}", x.a.name(a));
      }
    r.record("xmod.action", ok, w);
    if (!ok) return r;
  }

  {
    bool ok = true;
    std::string w;
    for (int b = 0; ok && b < nb; ++b)
      for (int a = 0; ok && a < na; ++a) {
        int lhs = x.mu[x.action[b][a]];
        int rhs = x.b.plus(b, x.b.plus(x.mu[a], x.b.minus(b)));
        if (lhs != rhs) {
          ok = false;
          w = fmt::format("equivariance fails at b = {}, a = {}", x.b.name(b), x.a.name(a));
        }
      }
    r.record("xmod.equivariance", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < na; ++a)
      for (int a1 = 0; ok && a1 < na; ++a1) {
        int lhs = x.action[x.mu[a]][a1];
        int rhs = x.a.plus(a, x.a.plus(a1, x.a.minus(a)));
        if (lhs != rhs) {
          ok = false;
          w = fmt::format("Peiffer identity fails at a = {}, a1 = {}", x.a.name(a),
                          x.a.name(a1));
        }
      }
    r.record("xmod.peiffer", ok, w);
  }

  return r;
}

ValidationReport validate_group_groupoid(const GroupGroupoid& g) {
  ValidationReport r;
  r.subject = "group-groupoid";
  r.merge(validate_groupoid(g.gd), "");
  r.merge(validate_plain_group(g.obj_group), "obj.");
  r.merge(validate_plain_group(g.mor_group), "mor.");
  if (!r.passed()) return r;

  {
    bool ok = g.obj_group.elements == g.gd.objects &&
              static_cast<int>(g.mor_group.elements.size()) == g.gd.morphism_count();
    for (int f = 0; ok && f < g.gd.morphism_count(); ++f)
      ok = g.mor_group.elements[f] == g.gd.morphisms[f].id;
    r.record("gg.parallel-carriers", ok,
             ok ? "" : "group carriers do not match the groupoid data");
    if (!ok) return r;
  }

  const int m = g.gd.morphism_count();
  auto src = [&](int f) { return g.gd.morphisms[f].src; };
  auto tgt = [&](int f) { return g.gd.morphisms[f].tgt; };

  {
    bool ok = true;
    std::string w;
    for (int f = 0; ok && f < m; ++f)
      for (int f2 = 0; ok && f2 < m; ++f2) {
        int s = g.mor_group.plus(f, f2);
        if (src(s) != g.obj_group.plus(src(f), src(f2))) {
          ok = false;
          w = fmt::format("source map is not additive at '{}', '{}'",
                          g.mor_group.name(f), g.mor_group.name(f2));
        } else if (tgt(s) != g.obj_group.plus(tgt(f), tgt(f2))) {
          ok = false;
          w = fmt::format("target map is not additive at '{}', '{}'",
                          g.mor_group.name(f), g.mor_group.name(f2));
        }
      }
    r.record("gg.endpoint-homs", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int x = 0; ok && x < g.obj_group.size(); ++x)
      for (int y = 0; ok && y < g.obj_group.size(); ++y)
        if (g.gd.ident[g.obj_group.plus(x, y)] !=
            g.mor_group.plus(g.gd.ident[x], g.gd.ident[y])) {
          ok = false;
          w = fmt::format("identity section is not additive at {}, {}", g.obj_group.name(x),
                          g.obj_group.name(y));
        }
    if (ok && g.mor_group.zero != g.gd.ident[g.obj_group.zero]) {
      ok = false;
      w = "morphism zero is not the identity of the object zero";
    }
    r.record("gg.ident-hom", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int f1 = 0; ok && f1 < m; ++f1)
      for (int f2 = 0; ok && f2 < m; ++f2) {
        if (tgt(f1) != src(f2)) continue;
        for (int h1 = 0; ok && h1 < m; ++h1)
          for (int h2 = 0; ok && h2 < m; ++h2) {
            if (tgt(h1) != src(h2)) continue;
            int lhs = g.gd.comp[g.mor_group.plus(f2, h2)][g.mor_group.plus(f1, h1)];
            int rhs = g.mor_group.plus(g.gd.comp[f2][f1], g.gd.comp[h2][h1]);
            if (lhs != rhs) {
              ok = false;
              w = fmt::format("composition is not additive at ('{}','{}') and ('{}','{}')",
                              g.mor_group.name(f2), g.mor_group.name(f1), g.mor_group.name(h2),
                              g.mor_group.name(h1));
            }
          }
      }
    r.record("gg.comp-hom", ok, w);
  }

  {
    // Derived: groupoid inverse is i(d1 f) - f + i(d0 f).
    bool ok = true;
    std::string w;
    for (int f = 0; ok && f < m; ++f) {
      int expect = g.mor_group.plus(g.gd.ident[tgt(f)],
                                    g.mor_group.plus(g.mor_group.minus(f), g.gd.ident[src(f)]));
      if (g.gd.inv[f] != expect) {
        ok = false;
        w = fmt::format("groupoid inverse of '{}' differs from the group formula",
                        g.mor_group.name(f));
      }
    }
    r.record("gg.inv-formula", ok, w);
  }

  return r;
}

GroupGroupoid gg_from_xmod(const CrossedModule& x) {
  const int na = x.a.size();
  const int nb = x.b.size();
  const int m = nb * na;
  auto mor = [&](int b, int a) { return b * na + a; };

  std::vector<Morphism> morphisms;
  morphisms.reserve(m);
  std::vector<std::string> mor_names;
  mor_names.reserve(m);
  for (int b = 0; b < nb; ++b)
    for (int a = 0; a < na; ++a) {
      std::string id = pair_id(x.b.name(b), x.a.name(a));
      morphisms.push_back({id, b, x.b.plus(x.mu[a], b)});
      mor_names.push_back(std::move(id));
    }

  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int b = 0; b < nb; ++b)
    for (int a = 0; a < na; ++a) {
      int f = mor(b, a);
      int mid = x.b.plus(x.mu[a], b);
      for (int a2 = 0; a2 < na; ++a2) {
        // g = (mid, a2) follows f = (b, a); the composite stacks the A parts.
        comp[mor(mid, a2)][f] = mor(b, x.a.plus(a2, a));
      }
    }

  std::vector<int> ident(nb);
  for (int b = 0; b < nb; ++b) ident[b] = mor(b, x.a.zero);
  std::vector<int> inv(m);
  for (int b = 0; b < nb; ++b)
    for (int a = 0; a < na; ++a)
      inv[mor(b, a)] = mor(x.b.plus(x.mu[a], b), x.a.minus(a));

  // Semidirect sum on morphisms: (b,a) + (b2,a2) = (b+b2, a + b.a2).
  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  for (int b = 0; b < nb; ++b)
    for (int a = 0; a < na; ++a)
      for (int b2 = 0; b2 < nb; ++b2)
        for (int a2 = 0; a2 < na; ++a2)
          add[mor(b, a)][mor(b2, a2)] =
              mor(x.b.plus(b, b2), x.a.plus(a, x.action[b][a2]));
  std::vector<int> gneg(m);
  for (int b = 0; b < nb; ++b)
    for (int a = 0; a < na; ++a)
      gneg[mor(b, a)] = mor(x.b.minus(b), x.a.minus(x.action[x.b.minus(b)][a]));

  PlainGroup mor_group = PlainGroup::make(mor_names, std::move(add), mor(x.b.zero, x.a.zero),
                                          std::move(gneg));
  FiniteGroupoid gd = FiniteGroupoid::make(x.b.elements, std::move(morphisms), std::move(comp),
                                           std::move(ident), std::move(inv));
  return GroupGroupoid{std::move(gd), x.b, std::move(mor_group)};
}

CrossedModule xmod_from_gg(const GroupGroupoid& g) {
  std::vector<int> members;
  for (int f = 0; f < g.gd.morphism_count(); ++f)
    if (g.gd.morphisms[f].src == g.obj_group.zero) members.push_back(f);

  std::vector<int> pos(g.gd.morphism_count(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) pos[members[i]] = i;

  std::vector<std::string> names;
  names.reserve(members.size());
  for (int f : members) names.push_back(g.mor_group.name(f));

  auto in_kernel = [&](int f) {
    if (pos[f] == -1)
      throw CgrError(fmt::format("kernel of the source map is not closed at '{}'",
                                 g.mor_group.name(f)));
    return pos[f];
  };

  const int k = static_cast<int>(members.size());
  std::vector<std::vector<int>> add(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) add[i][j] = in_kernel(g.mor_group.plus(members[i], members[j]));
  std::vector<int> neg(k);
  for (int i = 0; i < k; ++i) neg[i] = in_kernel(g.mor_group.minus(members[i]));
  PlainGroup a = PlainGroup::make(std::move(names), std::move(add),
                                  in_kernel(g.mor_group.zero), std::move(neg));

  std::vector<int> mu(k);
  for (int i = 0; i < k; ++i) mu[i] = g.gd.morphisms[members[i]].tgt;

  std::vector<std::vector<int>> action(g.obj_group.size(), std::vector<int>(k));
  for (int b = 0; b < g.obj_group.size(); ++b) {
    int ib = g.gd.ident[b];
    for (int i = 0; i < k; ++i)
      action[b][i] = in_kernel(
          g.mor_group.plus(ib, g.mor_group.plus(members[i], g.mor_group.minus(ib))));
  }

  return CrossedModule{std::move(a), g.obj_group, std::move(mu), std::move(action)};
}

CategoricalGroup catgroup_from_gg(const GroupGroupoid& g) {
  CategoricalGroup c;
  c.gd = g.gd;
  c.mon.obj_sum = g.obj_group.add;
  c.mon.mor_sum = g.mor_group.add;
  c.mon.zero_obj = g.obj_group.zero;
  const int n = g.obj_group.size();
  c.mon.alpha.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        c.mon.alpha[x][y][z] = g.gd.ident[g.obj_group.plus(g.obj_group.plus(x, y), z)];
  c.mon.lambda.resize(n);
  c.mon.rho.resize(n);
  c.eps.resize(n);
  c.delta.resize(n);
  c.neg_obj = g.obj_group.neg;
  for (int x = 0; x < n; ++x) {
    c.mon.lambda[x] = g.gd.ident[x];
    c.mon.rho[x] = g.gd.ident[x];
    c.eps[x] = g.gd.ident[g.obj_group.zero];
    c.delta[x] = g.gd.ident[g.obj_group.zero];
  }
  return c;
}

namespace {

std::vector<std::vector<int>> enumerate_group_isos(const PlainGroup& a, const PlainGroup& b,
                                                   bool first_only) {
  std::vector<std::vector<int>> out;
  if (a.size() != b.size()) return out;
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.zero] != b.zero) continue;
    bool ok = true;
    for (int x = 0; ok && x < n; ++x)
      for (int y = 0; ok && y < n; ++y)
        if (perm[a.plus(x, y)] != b.plus(perm[x], perm[y])) ok = false;
    if (ok) {
      out.push_back(perm);
      if (first_only) return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::optional<XmodIso> search_xmod_isomorphism(const CrossedModule& x, const CrossedModule& y) {
  if (x.a.size() > 10 || x.b.size() > 10)
    throw CgrError("crossed module isomorphism search limited to small groups");
  for (const auto& on_b : enumerate_group_isos(x.b, y.b, false)) {
    for (const auto& on_a : enumerate_group_isos(x.a, y.a, false)) {
      bool ok = true;
      for (int a = 0; ok && a < x.a.size(); ++a)
        if (y.mu[on_a[a]] != on_b[x.mu[a]]) ok = false;
      for (int b = 0; ok && b < x.b.size(); ++b)
        for (int a = 0; ok && a < x.a.size(); ++a)
          if (on_a[x.action[b][a]] != y.action[on_b[b]][on_a[a]]) ok = false;
      if (ok) return XmodIso{on_a, on_b};
    }
  }
  return std::nullopt;
}

PlainGroup cyclic_group(int n) {
  if (n < 1) throw CgrError("cyclic group order must be positive");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<int> neg(n);
  for (int i = 0; i < n; ++i) {
    neg[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) add[i][j] = (i + j) % n;
  }
  return PlainGroup::make(std::move(names), std::move(add), 0, std::move(neg));
}

PlainGroup symmetric3() {
  // Permutations of {1,2,3}, stored 0-based; sum applies the right summand
  // first: (s + t)(i) = s(t(i)).
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto find = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw CgrError("permutation lookup failed");
  };
  std::vector<std::vector<int>> add(6, std::vector<int>(6));
  std::vector<int> neg(6);
  for (int s = 0; s < 6; ++s) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perms[s][i]] = i;
    neg[s] = find(inv);
    for (int t = 0; t < 6; ++t) {
      std::array<int, 3> st{};
      for (int i = 0; i < 3; ++i) st[i] = perms[s][perms[t][i]];
      add[s][t] = find(st);
    }
  }
  return PlainGroup::make(names, std::move(add), 0, std::move(neg));
}

PlainGroup klein_four() {
  const std::vector<std::string> names = {"e", "a", "b", "c"};
  // x + x = e; the sum of two distinct non-units is the third.
  std::vector<std::vector<int>> add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return PlainGroup::make(names, std::move(add), 0, {0, 1, 2, 3});
}

PlainGroup named_group(std::string_view name) {
  if (name == "s3") return symmetric3();
  if (name == "klein4") return klein_four();
  if (name.size() >= 2 && name[0] == 'z') {
    int n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw SchemaError(fmt::format("unknown group '{}'", name));
      n = n * 10 + (ch - '0');
    }
    if (n >= 1 && n <= 24) return cyclic_group(n);
  }
  throw SchemaError(fmt::format("unknown group '{}'", name));
}

std::vector<std::vector<int>> automorphism_tables(const PlainGroup& g) {
  if (g.size() > 10) throw CgrError("automorphism enumeration limited to small groups");
  return enumerate_group_isos(g, g, false);
}

PlainGroup automorphism_group(const PlainGroup& g, std::vector<std::vector<int>>* tables_out) {
  std::vector<std::vector<int>> tables = automorphism_tables(g);
  const int k = static_cast<int>(tables.size());
  auto find = [&](const std::vector<int>& t) {
    for (int i = 0; i < k; ++i)
      if (tables[i] == t) return i;
    throw CgrError("automorphism composition left the enumerated set");
  };

  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i) names.push_back(fmt::format("a{}", i));

  int zero = -1;
  std::vector<int> identity(g.size());
  std::iota(identity.begin(), identity.end(), 0);
  zero = find(identity);

  std::vector<std::vector<int>> add(k, std::vector<int>(k));
  std::vector<int> neg(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> inv(g.size());
    for (int x = 0; x < g.size(); ++x) inv[tables[i][x]] = x;
    neg[i] = find(inv);
    for (int j = 0; j < k; ++j) {
      // Sum is composition: (phi + psi)(x) = phi(psi(x)).
      std::vector<int> comp(g.size());
      for (int x = 0; x < g.size(); ++x) comp[x] = tables[i][tables[j][x]];
      add[i][j] = find(comp);
    }
  }

  if (tables_out) *tables_out = std::move(tables);
  return PlainGroup::make(std::move(names), std::move(add), zero, std::move(neg));
}

GroupGroupoid pair_gg(const PlainGroup& x) {
  const int n = x.size();
  const int m = n * n;
  auto mor = [&](int a, int b) { return a * n + b; };

  std::vector<Morphism> morphisms;
  morphisms.reserve(m);
  std::vector<std::string> names;
  names.reserve(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::string id = pair_id(x.name(a), x.name(b));
      morphisms.push_back({id, a, b});
      names.push_back(std::move(id));
    }

  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c2 = 0; c2 < n; ++c2) comp[mor(b, c2)][mor(a, b)] = mor(a, c2);

  std::vector<int> ident(n);
  for (int a = 0; a < n; ++a) ident[a] = mor(a, a);
  std::vector<int> inv(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) inv[mor(a, b)] = mor(b, a);

  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  std::vector<int> neg(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      neg[mor(a, b)] = mor(x.minus(a), x.minus(b));
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          add[mor(a, b)][mor(a2, b2)] = mor(x.plus(a, a2), x.plus(b, b2));
    }

  PlainGroup mor_group = PlainGroup::make(names, std::move(add), mor(x.zero, x.zero),
                                          std::move(neg));
  FiniteGroupoid gd = FiniteGroupoid::make(x.elements, std::move(morphisms), std::move(comp),
                                           std::move(ident), std::move(inv));
  return GroupGroupoid{std::move(gd), x, std::move(mor_group)};
}

GroupGroupoid discrete_gg(const PlainGroup& g) {
  const int n = g.size();
  std::vector<Morphism> morphisms;
  morphisms.reserve(n);
  std::vector<std::string> names;
  names.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::string id = fmt::format("1_{}", g.name(a));
    morphisms.push_back({id, a, a});
    names.push_back(std::move(id));
  }
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  std::vector<int> ident(n), inv(n);
  for (int a = 0; a < n; ++a) {
    comp[a][a] = a;
    ident[a] = a;
    inv[a] = a;
  }
  PlainGroup mor_group = PlainGroup::make(names, g.add, g.zero, g.neg);
  FiniteGroupoid gd = FiniteGroupoid::make(g.elements, std::move(morphisms), std::move(comp),
                                           std::move(ident), std::move(inv));
  return GroupGroupoid{std::move(gd), g, std::move(mor_group)};
}

CGroup mac_lane_cgroup(const PlainGroup& g, const std::vector<std::string>& subgroup) {
  std::vector<int> h;
  h.reserve(subgroup.size());
  for (const auto& id : subgroup) h.push_back(g.index_of(id));
  std::vector<char> in_h(g.size(), 0);
  for (int x : h) in_h[x] = 1;
  if (h.empty() || !in_h[g.zero])
    throw CgrError("congruence subgroup must contain the unit");
  for (int x : h) {
    if (!in_h[g.minus(x)]) throw CgrError("congruence subgroup must be closed under negation");
    for (int y : h)
      if (!in_h[g.plus(x, y)]) throw CgrError("congruence subgroup must be closed under addition");
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < g.size(); ++a)
    for (int x : h) pairs.emplace_back(g.name(a), g.name(g.plus(a, x)));
  FiniteSetoid carrier = build_congruence(g.elements, pairs);
  return CGroup{std::move(carrier), g.add, g.zero, g.neg};
}

CrossedModule inner_xmod(const PlainGroup& g) {
  std::vector<std::vector<int>> tables;
  PlainGroup aut = automorphism_group(g, &tables);
  auto find = [&](const std::vector<int>& t) {
    for (int i = 0; i < static_cast<int>(tables.size()); ++i)
      if (tables[i] == t) return i;
    throw CgrError("conjugation is not among the enumerated automorphisms");
  };
  std::vector<int> mu(g.size());
  for (int a = 0; a < g.size(); ++a) {
    std::vector<int> conj(g.size());
    for (int x = 0; x < g.size(); ++x) conj[x] = g.plus(a, g.plus(x, g.minus(a)));
    mu[a] = find(conj);
  }
  std::vector<std::vector<int>> action(aut.size(), std::vector<int>(g.size()));
  for (int b = 0; b < aut.size(); ++b)
    for (int a = 0; a < g.size(); ++a) action[b][a] = tables[b][a];
  return CrossedModule{g, std::move(aut), std::move(mu), std::move(action)};
}

CrossedModule inclusion_xmod(const PlainGroup& g, const std::vector<std::string>& normal_subgroup) {
  std::vector<int> n_idx;
  n_idx.reserve(normal_subgroup.size());
  for (const auto& id : normal_subgroup) n_idx.push_back(g.index_of(id));
  std::sort(n_idx.begin(), n_idx.end());
  n_idx.erase(std::unique(n_idx.begin(), n_idx.end()), n_idx.end());

  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < static_cast<int>(n_idx.size()); ++i) pos[n_idx[i]] = i;
  auto member = [&](int x, const char* why) {
    if (pos[x] == -1)
      throw CgrError(fmt::format("subgroup is not {} at {}", why, g.name(x)));
    return pos[x];
  };

  const int k = static_cast<int>(n_idx.size());
  std::vector<std::string> names;
  names.reserve(k);
  for (int x : n_idx) names.push_back(g.name(x));
  std::vector<std::vector<int>> add(k, std::vector<int>(k));
  std::vector<int> neg(k);
  for (int i = 0; i < k; ++i) {
    neg[i] = member(g.minus(n_idx[i]), "closed under negation");
    for (int j = 0; j < k; ++j) add[i][j] = member(g.plus(n_idx[i], n_idx[j]), "closed");
  }
  PlainGroup a = PlainGroup::make(std::move(names), std::move(add),
                                  member(g.zero, "containing the unit"), std::move(neg));

  std::vector<int> mu(k);
  for (int i = 0; i < k; ++i) mu[i] = n_idx[i];
  std::vector<std::vector<int>> action(g.size(), std::vector<int>(k));
  for (int b = 0; b < g.size(); ++b)
    for (int i = 0; i < k; ++i)
      action[b][i] = member(g.plus(b, g.plus(n_idx[i], g.minus(b))), "normal");
  return CrossedModule{std::move(a), g, std::move(mu), std::move(action)};
}

CrossedModule identity_xmod(const PlainGroup& g) {
  std::vector<int> mu(g.size());
  std::iota(mu.begin(), mu.end(), 0);
  std::vector<std::vector<int>> action(g.size(), std::vector<int>(g.size()));
  for (int b = 0; b < g.size(); ++b)
    for (int a = 0; a < g.size(); ++a) action[b][a] = g.plus(b, g.plus(a, g.minus(b)));
  return CrossedModule{g, g, std::move(mu), std::move(action)};
}

CrossedModule zero_xmod(const PlainGroup& a, const PlainGroup& b,
                        std::optional<std::vector<std::vector<int>>> action) {
  std::vector<std::vector<int>> act;
  if (action) {
    act = std::move(*action);
  } else {
    act.assign(b.size(), std::vector<int>(a.size()));
    for (auto& row : act) std::iota(row.begin(), row.end(), 0);
  }
  return CrossedModule{a, b, std::vector<int>(a.size(), b.zero), std::move(act)};
}

CategoricalGroup skeletal_catgroup(const SkeletalSpec& spec) {
  const PlainGroup& b = spec.objects;
  const PlainGroup& a = spec.coeff;
  const int nb = b.size();
  const int na = a.size();

  if (!validate_plain_group(a).passed() || !validate_plain_group(b).passed())
    throw CgrError("skeletal data needs valid groups");
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (a.plus(x, y) != a.plus(y, x)) throw CgrError("coefficients must be abelian");

  if (static_cast<int>(spec.omega.size()) != nb) throw CgrError("cocycle table malformed");
  for (const auto& plane : spec.omega) {
    if (static_cast<int>(plane.size()) != nb) throw CgrError("cocycle table malformed");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != nb) throw CgrError("cocycle table malformed");
      for (int v : row)
        if (v < 0 || v >= na) throw CgrError("cocycle value out of range");
    }
  }
  auto w = [&](int x, int y, int z) { return spec.omega[x][y][z]; };
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y) {
      if (w(b.zero, x, y) != a.zero || w(x, b.zero, y) != a.zero || w(x, y, b.zero) != a.zero)
        throw CgrError("cocycle must be normalized");
    }
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < nb; ++z)
        for (int t = 0; t < nb; ++t) {
          int lhs = a.plus(w(x, y, b.plus(z, t)), w(b.plus(x, y), z, t));
          int rhs = a.plus(w(y, z, t), a.plus(w(x, b.plus(y, z), t), w(x, y, z)));
          if (lhs != rhs)
            throw CgrError(fmt::format("cocycle identity fails at ({},{},{},{})", b.name(x),
                                       b.name(y), b.name(z), b.name(t)));
        }

  const int m = nb * na;
  auto mor = [&](int x, int c) { return x * na + c; };
  std::vector<Morphism> morphisms;
  morphisms.reserve(m);
  for (int x = 0; x < nb; ++x)
    for (int c = 0; c < na; ++c)
      morphisms.push_back({fmt::format("{}.{}", b.name(x), a.name(c)), x, x});

  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int x = 0; x < nb; ++x)
    for (int c = 0; c < na; ++c)
      for (int c2 = 0; c2 < na; ++c2) comp[mor(x, c2)][mor(x, c)] = mor(x, a.plus(c2, c));
  std::vector<int> ident(nb);
  for (int x = 0; x < nb; ++x) ident[x] = mor(x, a.zero);
  std::vector<int> inv(m);
  for (int x = 0; x < nb; ++x)
    for (int c = 0; c < na; ++c) inv[mor(x, c)] = mor(x, a.minus(c));

  CategoricalGroup cg;
  cg.gd = FiniteGroupoid::make(b.elements, std::move(morphisms), std::move(comp),
                               std::move(ident), std::move(inv));
  cg.mon.obj_sum = b.add;
  cg.mon.zero_obj = b.zero;
  cg.neg_obj = b.neg;

  cg.mon.mor_sum.assign(m, std::vector<int>(m));
  for (int x = 0; x < nb; ++x)
    for (int c = 0; c < na; ++c)
      for (int y = 0; y < nb; ++y)
        for (int c2 = 0; c2 < na; ++c2)
          cg.mon.mor_sum[mor(x, c)][mor(y, c2)] = mor(b.plus(x, y), a.plus(c, c2));

  cg.mon.alpha.assign(nb, std::vector<std::vector<int>>(nb, std::vector<int>(nb)));
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < nb; ++z)
        cg.mon.alpha[x][y][z] = mor(b.plus(b.plus(x, y), z), w(x, y, z));

  cg.mon.lambda.resize(nb);
  cg.mon.rho.resize(nb);
  cg.eps.resize(nb);
  cg.delta.resize(nb);
  for (int x = 0; x < nb; ++x) {
    cg.mon.lambda[x] = cg.gd.ident[x];
    cg.mon.rho[x] = cg.gd.ident[x];
    // The contraction triangles force eps once delta is fixed at zero:
    // eps(x) = omega(-x, x, -x), consistent because the normalized cocycle
    // identity gives omega(x,-x,x) + omega(-x,x,-x) = 0.
    cg.delta[x] = mor(b.zero, a.zero);
    cg.eps[x] = mor(b.zero, w(b.minus(x), x, b.minus(x)));
  }
  return cg;
}

std::vector<std::vector<std::vector<int>>> z2_nontrivial_cocycle() {
  std::vector<std::vector<std::vector<int>>> omega(
      2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
  omega[1][1][1] = 1;
  return omega;
}

FixtureValue make_fixture(const FixtureParams& params) {
  if (params.kind == "pair-gg")
    return catgroup_from_gg(pair_gg(named_group(params.group)));
  if (params.kind == "discrete-gg")
    return catgroup_from_gg(discrete_gg(named_group(params.group)));
  if (params.kind == "mac-lane") {
    if (params.subgroup.empty())
      throw SchemaError("mac-lane fixture needs a subgroup");
    return mac_lane_cgroup(named_group(params.group), params.subgroup);
  }
  if (params.kind == "inner-xmod") return inner_xmod(named_group(params.group));
  if (params.kind == "skeletal") {
    SkeletalSpec spec{cyclic_group(2), cyclic_group(2), {}};
    if (params.cocycle == "trivial")
      spec.omega.assign(2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
    else if (params.cocycle == "nontrivial")
      spec.omega = z2_nontrivial_cocycle();
    else
      throw SchemaError(fmt::format("unknown cocycle '{}'", params.cocycle));
    return skeletal_catgroup(spec);
  }
  throw SchemaError(fmt::format("unknown fixture kind '{}'", params.kind));
}

}  // namespace cgr
