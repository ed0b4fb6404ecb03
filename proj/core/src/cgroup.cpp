#include "cgr/cgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace cgr {

namespace {

void check_table_shape(const std::vector<std::vector<int>>& add, int n, const char* what) {
  if (static_cast<int>(add.size()) != n)
    throw SchemaError(fmt::format("{} table has {} rows for {} elements", what, add.size(), n));
  for (const auto& row : add) {
    if (static_cast<int>(row.size()) != n)
      throw SchemaError(fmt::format("{} table row has {} entries for {} elements", what,
                                    row.size(), n));
    for (int v : row)
      if (v < 0 || v >= n)
        throw SchemaError(fmt::format("{} table value {} out of range", what, v));
  }
}

void check_unary_shape(const std::vector<int>& neg, int n, const char* what) {
  if (static_cast<int>(neg.size()) != n)
    throw SchemaError(fmt::format("{} table has {} entries for {} elements", what, neg.size(), n));
  for (int v : neg)
    if (v < 0 || v >= n) throw SchemaError(fmt::format("{} table value {} out of range", what, v));
}

}  // namespace

PlainGroup PlainGroup::make(std::vector<std::string> elements, std::vector<std::vector<int>> add,
                            int zero, std::vector<int> neg) {
  const int n = static_cast<int>(elements.size());
  check_table_shape(add, n, "add");
  check_unary_shape(neg, n, "neg");
  if (zero < 0 || zero >= n) throw SchemaError(fmt::format("zero index {} out of range", zero));
  std::set<std::string> seen(elements.begin(), elements.end());
  if (static_cast<int>(seen.size()) != n) throw SchemaError("duplicate element id in group");
  return PlainGroup{std::move(elements), std::move(add), zero, std::move(neg)};
}

int PlainGroup::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == id) return i;
  throw SchemaError(fmt::format("unknown group element '{}'", id));
}

std::optional<int> PlainGroup::find(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == id) return i;
  return std::nullopt;
}

ValidationReport validate_plain_group(const PlainGroup& g) {
  ValidationReport r;
  r.subject = "plain-group";
  const int n = g.size();

  bool ok = true;
  std::string w;
  for (int a = 0; ok && a < n; ++a)
    for (int b = 0; ok && b < n; ++b)
      for (int c = 0; ok && c < n; ++c)
        if (g.plus(g.plus(a, b), c) != g.plus(a, g.plus(b, c))) {
          ok = false;
          w = fmt::format("({}+{})+{} = {} differs from {}+({}+{}) = {}", g.name(a), g.name(b),
                          g.name(c), g.name(g.plus(g.plus(a, b), c)), g.name(a), g.name(b),
                          g.name(c), g.name(g.plus(a, g.plus(b, c))));
        }
  r.record("pgroup.assoc", ok, w);

  ok = true;
  w.clear();
  for (int a = 0; ok && a < n; ++a)
    if (g.plus(a, g.zero) != a || g.plus(g.zero, a) != a) {
      ok = false;
      w = fmt::format("unit fails at {}", g.name(a));
    }
  r.record("pgroup.zero", ok, w);

  ok = true;
  w.clear();
  for (int a = 0; ok && a < n; ++a)
    if (g.plus(a, g.minus(a)) != g.zero || g.plus(g.minus(a), a) != g.zero) {
      ok = false;
      w = fmt::format("inverse fails at {}", g.name(a));
    }
  r.record("pgroup.neg", ok, w);

  return r;
}

CGroup CGroup::make(FiniteSetoid carrier, std::vector<std::vector<int>> add, int zero,
                    std::vector<int> neg) {
  const int n = carrier.size();
  check_table_shape(add, n, "add");
  check_unary_shape(neg, n, "neg");
  if (zero < 0 || zero >= n) throw SchemaError(fmt::format("zero index {} out of range", zero));
  return CGroup{std::move(carrier), std::move(add), zero, std::move(neg)};
}

CGroup to_cgroup(const PlainGroup& g) {
  return CGroup{FiniteSetoid::discrete(g.elements), g.add, g.zero, g.neg};
}

std::optional<PlainGroup> as_plain_group(const CGroup& g) {
  if (!g.carrier.is_discrete()) return std::nullopt;
  PlainGroup p{g.carrier.elements(), g.add, g.zero, g.neg};
  if (!validate_plain_group(p).passed()) return std::nullopt;
  return p;
}

ValidationReport validate_cgroup(const CGroup& g) {
  ValidationReport r;
  r.subject = "cgroup";
  const int n = g.size();

  bool ok = true;
  std::string w;
  for (int a = 0; ok && a < n; ++a)
    for (int b = 0; ok && b < n; ++b)
      for (int c = 0; ok && c < n; ++c)
        if (!g.related(g.plus(g.plus(a, b), c), g.plus(a, g.plus(b, c)))) {
          ok = false;
          w = fmt::format("({}+{})+{} = {} is unrelated to {}+({}+{}) = {}", g.name(a),
                          g.name(b), g.name(c), g.name(g.plus(g.plus(a, b), c)), g.name(a),
                          g.name(b), g.name(c), g.name(g.plus(a, g.plus(b, c))));
        }
  r.record("group.assoc", ok, w);

  ok = true;
  w.clear();
  for (int a = 0; ok && a < n; ++a)
    if (!g.related(g.plus(a, g.zero), a) || !g.related(g.plus(g.zero, a), a)) {
      ok = false;
      w = fmt::format("unit fails at {} up to the relation", g.name(a));
    }
  r.record("group.zero", ok, w);

  ok = true;
  w.clear();
  for (int a = 0; ok && a < n; ++a)
    if (!g.related(g.plus(a, g.minus(a)), g.zero) || !g.related(g.plus(g.minus(a), a), g.zero)) {
      ok = false;
      w = fmt::format("inverse fails at {} up to the relation", g.name(a));
    }
  r.record("group.neg", ok, w);

  // Compatibility, route one: direct check against block-mates.
  ok = true;
  w.clear();
  for (const auto& blk : g.carrier.blocks()) {
    for (std::size_t i = 0; ok && i + 1 < blk.size(); ++i) {
      int a = blk[i], a2 = blk[i + 1];
      for (int b = 0; ok && b < n; ++b) {
        if (!g.related(g.plus(a, b), g.plus(a2, b)) || !g.related(g.plus(b, a), g.plus(b, a2))) {
          ok = false;
          w = fmt::format("{} ~ {} but sums with {} land in different blocks", g.name(a),
                          g.name(a2), g.name(b));
        }
      }
    }
    if (!ok) break;
  }
  r.record("group.add-compat", ok, w);

  // Compatibility, route two: addition as a setoid map out of the square.
  {
    FiniteSetoid square = product_setoid(g.carrier, g.carrier);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = g.plus(a, b);
    SetoidMap m = SetoidMap::make(square, g.carrier, std::move(table));
    r.merge(is_setoid_map(m), "group.add-as-");
  }

  ok = true;
  w.clear();
  for (const auto& blk : g.carrier.blocks()) {
    for (std::size_t i = 0; ok && i + 1 < blk.size(); ++i) {
      int a = blk[i], a2 = blk[i + 1];
      if (!g.related(g.minus(a), g.minus(a2))) {
        ok = false;
        w = fmt::format("{} ~ {} but negatives are unrelated", g.name(a), g.name(a2));
      }
    }
    if (!ok) break;
  }
  r.record("group.neg-compat", ok, w);

  return r;
}

CGroupHom CGroupHom::make(CGroup source, CGroup target, std::vector<int> table) {
  if (static_cast<int>(table.size()) != source.size())
    throw SchemaError(fmt::format("hom table has {} entries for {} elements", table.size(),
                                  source.size()));
  for (int v : table)
    if (v < 0 || v >= target.size())
      throw SchemaError(fmt::format("hom table value {} out of range", v));
  return CGroupHom{std::move(source), std::move(target), std::move(table)};
}

CGroupHom CGroupHom::make_by_ids(CGroup source, CGroup target,
                                 const std::vector<std::string>& images) {
  std::vector<int> table;
  table.reserve(images.size());
  for (const auto& id : images) table.push_back(target.carrier.index_of(id));
  return make(std::move(source), std::move(target), std::move(table));
}

CGroupHom identity_hom(const CGroup& g) {
  std::vector<int> table(g.size());
  std::iota(table.begin(), table.end(), 0);
  return CGroupHom{g, g, std::move(table)};
}

CGroupHom compose_homs(const CGroupHom& outer, const CGroupHom& inner) {
  if (!(inner.target == outer.source)) throw CgrError("hom composition endpoint mismatch");
  std::vector<int> table(inner.table.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = outer.apply(inner.apply(i));
  return CGroupHom{inner.source, outer.target, std::move(table)};
}

ValidationReport validate_hom(const CGroupHom& f) {
  ValidationReport r;
  r.subject = "cgroup-hom";
  const CGroup& s = f.source;
  const CGroup& t = f.target;

  bool ok = true;
  std::string w;
  for (int a = 0; ok && a < s.size(); ++a)
    for (int b = 0; ok && b < s.size(); ++b)
      if (f.apply(s.plus(a, b)) != t.plus(f.apply(a), f.apply(b))) {
        ok = false;
        w = fmt::format("f({}+{}) = {} differs from f({})+f({}) = {}", s.name(a), s.name(b),
                        t.name(f.apply(s.plus(a, b))), s.name(a), s.name(b),
                        t.name(t.plus(f.apply(a), f.apply(b))));
      }
  r.record("hom.additive", ok, w);

  r.merge(is_setoid_map(SetoidMap::make(s.carrier, t.carrier, f.table)), "hom.");

  // Derived facts, kept as sanity checks.
  r.record("hom.zero", t.related(f.apply(s.zero), t.zero),
           fmt::format("f(0) = {} is unrelated to 0", t.name(f.apply(s.zero))));
  ok = true;
  w.clear();
  for (int a = 0; ok && a < s.size(); ++a)
    if (!t.related(f.apply(s.minus(a)), t.minus(f.apply(a)))) {
      ok = false;
      w = fmt::format("f(-{}) is unrelated to -f({})", s.name(a), s.name(a));
    }
  r.record("hom.neg", ok, w);

  return r;
}

KernelImage kernel_image(const CGroupHom& f) {
  KernelImage ki;
  for (int a = 0; a < f.source.size(); ++a)
    if (f.target.related(f.apply(a), f.target.zero)) ki.ckernel.push_back(a);
  for (int b = 0; b < f.target.size(); ++b) {
    for (int a = 0; a < f.source.size(); ++a) {
      if (f.target.related(f.apply(a), b)) {
        ki.cimage.push_back(b);
        break;
      }
    }
  }
  return ki;
}

namespace {

// Restriction of the carrier partition to a subset, in subset order.
FiniteSetoid induced_setoid(const FiniteSetoid& s, const std::vector<int>& subset) {
  std::vector<std::string> elements;
  elements.reserve(subset.size());
  for (int i : subset) elements.push_back(s.name(i));
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_index(s.blocks().size(), -1);
  for (int pos = 0; pos < static_cast<int>(subset.size()); ++pos) {
    int b = s.block_of(subset[pos]);
    if (block_index[b] == -1) {
      block_index[b] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_index[b]].push_back(pos);
  }
  return FiniteSetoid::from_partition_indexed(std::move(elements), std::move(blocks));
}

}  // namespace

SubgroupProfile subgroup_profile(const CGroup& g, const std::vector<int>& subset) {
  SubgroupProfile prof;
  std::vector<int> h = subset;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (h.empty() || h.front() < 0 || h.back() >= g.size()) {
    prof.detail = "subset empty or out of range";
    return prof;
  }
  std::vector<char> in_h(g.size(), 0);
  for (int x : h) in_h[x] = 1;
  std::vector<int> pos_of(g.size(), -1);
  for (int i = 0; i < static_cast<int>(h.size()); ++i) pos_of[h[i]] = i;

  // Perfect: the subset absorbs everything its blocks contain.
  prof.perfect = true;
  for (int x = 0; prof.perfect && x < g.size(); ++x) {
    if (in_h[x]) continue;
    for (int y : h)
      if (g.related(x, y)) {
        prof.perfect = false;
        if (prof.detail.empty())
          prof.detail = fmt::format("{} ~ {} but {} is outside the subset", g.name(x), g.name(y),
                                    g.name(x));
        break;
      }
  }

  // Normal: conjugates stay within the block closure of the subset.
  prof.normal = true;
  for (int x = 0; prof.normal && x < g.size(); ++x) {
    for (int y : h) {
      int conj = g.plus(g.plus(x, y), g.minus(x));
      bool near = false;
      for (int z : h)
        if (g.related(conj, z)) {
          near = true;
          break;
        }
      if (!near) {
        prof.normal = false;
        if (prof.detail.empty())
          prof.detail = fmt::format("conjugate {}+{}-{} = {} leaves the subset closure",
                                    g.name(x), g.name(y), g.name(x), g.name(conj));
        break;
      }
    }
  }

  // c-subgroup: exact closure, then a unit and inverses inside the subset.
  for (int a : h)
    for (int b : h)
      if (!in_h[g.plus(a, b)]) {
        prof.detail = fmt::format("not closed: {}+{} = {} is outside", g.name(a), g.name(b),
                                  g.name(g.plus(a, b)));
        return prof;
      }

  int zero = -1;
  if (in_h[g.zero])
    zero = g.zero;
  else
    for (int z : h) {
      bool unit = true;
      for (int a : h)
        if (!g.related(g.plus(a, z), a) || !g.related(g.plus(z, a), a)) {
          unit = false;
          break;
        }
      if (unit) {
        zero = z;
        break;
      }
    }
  if (zero == -1) {
    prof.detail = "no unit inside the subset";
    return prof;
  }

  std::vector<int> neg(h.size(), -1);
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    int a = h[i];
    int cand = g.minus(a);
    if (in_h[cand] && g.related(g.plus(a, cand), zero) && g.related(g.plus(cand, a), zero)) {
      neg[i] = pos_of[cand];
      continue;
    }
    for (int b : h)
      if (g.related(g.plus(a, b), zero) && g.related(g.plus(b, a), zero)) {
        neg[i] = pos_of[b];
        break;
      }
    if (neg[i] == -1) {
      prof.detail = fmt::format("no inverse for {} inside the subset", g.name(a));
      return prof;
    }
  }

  std::vector<std::vector<int>> add(h.size(), std::vector<int>(h.size()));
  for (int i = 0; i < static_cast<int>(h.size()); ++i)
    for (int j = 0; j < static_cast<int>(h.size()); ++j) add[i][j] = pos_of[g.plus(h[i], h[j])];

  CGroup induced = CGroup::make(induced_setoid(g.carrier, h), std::move(add), pos_of[zero],
                                std::move(neg));
  ValidationReport rep = validate_cgroup(induced);
  if (!rep.passed()) {
    prof.detail = fmt::format("induced structure fails {}", rep.first_failure()->axiom);
    return prof;
  }
  prof.c_subgroup = true;
  prof.induced = std::move(induced);
  return prof;
}

SubgroupProfile subgroup_profile_by_ids(const CGroup& g, const std::vector<std::string>& subset) {
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (const auto& id : subset) idx.push_back(g.carrier.index_of(id));
  return subgroup_profile(g, idx);
}

GroupProfile group_profile(const CGroup& g) {
  GroupProfile p;
  p.connected = g.carrier.is_total();
  p.c_abelian = true;
  for (int a = 0; p.c_abelian && a < g.size(); ++a)
    for (int b = 0; p.c_abelian && b < g.size(); ++b)
      if (!g.related(g.plus(a, b), g.plus(b, a))) {
        p.c_abelian = false;
        p.witness = fmt::format("{}+{} = {} is unrelated to {}+{} = {}", g.name(a), g.name(b),
                                g.name(g.plus(a, b)), g.name(b), g.name(a),
                                g.name(g.plus(b, a)));
      }
  return p;
}

namespace {

// Shared core of the two quotients: collapse a partition (at least as
// coarse as the relation) to an ordinary group.
QuotientResult quotient_by_classes(const CGroup& g, const std::vector<std::vector<int>>& classes,
                                   const std::vector<int>& class_of) {
  const int m = static_cast<int>(classes.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& cls : classes) names.push_back(fmt::format("[{}]", g.name(cls.front())));

  std::vector<std::vector<int>> add(m, std::vector<int>(m, -1));
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      int& cell = add[class_of[a]][class_of[b]];
      int got = class_of[g.plus(a, b)];
      if (cell == -1)
        cell = got;
      else if (cell != got)
        throw CgrError(fmt::format("quotient addition ill-defined at ({}, {})", g.name(a),
                                   g.name(b)));
    }

  std::vector<int> neg(m, -1);
  for (int a = 0; a < g.size(); ++a) {
    int& cell = neg[class_of[a]];
    int got = class_of[g.minus(a)];
    if (cell == -1)
      cell = got;
    else if (cell != got)
      throw CgrError(fmt::format("quotient negation ill-defined at {}", g.name(a)));
  }

  PlainGroup q = PlainGroup::make(std::move(names), std::move(add), class_of[g.zero],
                                  std::move(neg));
  ValidationReport rep = validate_plain_group(q);
  if (!rep.passed())
    throw CgrError(fmt::format("quotient is not an exact group: {} ({})",
                               rep.first_failure()->axiom, rep.first_failure()->witness));

  CGroupHom proj = CGroupHom::make(g, to_cgroup(q), class_of);
  return QuotientResult{std::move(q), std::move(proj), class_of};
}

}  // namespace

QuotientResult quotient_by_relation(const CGroup& g) {
  std::vector<int> class_of(g.size());
  for (int i = 0; i < g.size(); ++i) class_of[i] = g.carrier.block_of(i);
  return quotient_by_classes(g, g.carrier.blocks(), class_of);
}

QuotientResult quotient_by_normal(const CGroup& g, const std::vector<int>& subgroup) {
  SubgroupProfile prof = subgroup_profile(g, subgroup);
  if (!prof.c_subgroup || !prof.normal || !prof.perfect)
    throw CgrError(fmt::format("quotient needs a perfect normal c-subgroup: {}",
                               prof.detail.empty() ? "profile failed" : prof.detail));

  // Classes generated by a ~ a + h together with the relation; overlapping
  // coset closures merge.
  const int n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    int ra = root(a), rb = root(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (const auto& blk : g.carrier.blocks())
    for (std::size_t i = 0; i + 1 < blk.size(); ++i) unite(blk[i], blk[i + 1]);
  for (int a = 0; a < n; ++a)
    for (int x : subgroup) unite(a, g.plus(a, x));

  std::vector<std::vector<int>> by_root(n);
  for (int i = 0; i < n; ++i) by_root[root(i)].push_back(i);
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(n, -1);
  for (int r = 0; r < n; ++r) {
    if (by_root[r].empty()) continue;
    for (int x : by_root[r]) class_of[x] = static_cast<int>(classes.size());
    classes.push_back(std::move(by_root[r]));
  }
  return quotient_by_classes(g, classes, class_of);
}

FactorizationResult universal_factorization(const CGroupHom& f,
                                            const std::vector<int>& subgroup) {
  auto plain_target = as_plain_group(f.target);
  if (!plain_target)
    throw CgrError("factorization target must be an ordinary group (discrete, exact laws)");
  for (int x : subgroup)
    if (f.apply(x) != f.target.zero)
      throw CgrError(fmt::format("f does not kill the subgroup: f({}) = {}",
                                 f.source.name(x), f.target.name(f.apply(x))));

  QuotientResult q = quotient_by_normal(f.source, subgroup);
  const int m = q.group.size();
  std::vector<int> theta(m, -1);
  for (int a = 0; a < f.source.size(); ++a) {
    int& cell = theta[q.class_of[a]];
    if (cell == -1)
      cell = f.apply(a);
    else if (cell != f.apply(a))
      throw CgrError(fmt::format("factorization ill-defined on class {} at {}",
                                 q.group.name(q.class_of[a]), f.source.name(a)));
  }
  for (int c = 0; c < m; ++c)
    if (theta[c] == -1) throw CgrError("projection misses a quotient class");

  CGroupHom th = CGroupHom::make(to_cgroup(q.group), f.target, std::move(theta));
  ValidationReport rep = validate_hom(th);
  if (!rep.passed())
    throw CgrError(fmt::format("factor map is not a hom: {}", rep.first_failure()->axiom));
  for (int a = 0; a < f.source.size(); ++a)
    if (th.apply(q.projection.apply(a)) != f.apply(a))
      throw CgrError("factorization does not reproduce f");
  return FactorizationResult{std::move(q), std::move(th)};
}

bool check_c_isomorphism(const CGroupHom& f, const CGroupHom& g, std::string* detail) {
  auto set_detail = [&](std::string msg) {
    if (detail) *detail = std::move(msg);
  };
  if (!(f.source == g.target) || !(f.target == g.source)) {
    set_detail("endpoints do not match");
    return false;
  }
  ValidationReport rf = validate_hom(f);
  if (!rf.passed()) {
    set_detail(fmt::format("forward map fails {}", rf.first_failure()->axiom));
    return false;
  }
  ValidationReport rg = validate_hom(g);
  if (!rg.passed()) {
    set_detail(fmt::format("backward map fails {}", rg.first_failure()->axiom));
    return false;
  }
  for (int a = 0; a < f.source.size(); ++a)
    if (!f.source.related(g.apply(f.apply(a)), a)) {
      set_detail(fmt::format("g(f({})) is unrelated to {}", f.source.name(a), f.source.name(a)));
      return false;
    }
  for (int b = 0; b < g.source.size(); ++b)
    if (!g.source.related(f.apply(g.apply(b)), b)) {
      set_detail(fmt::format("f(g({})) is unrelated to {}", g.source.name(b), g.source.name(b)));
      return false;
    }
  return true;
}

namespace {

// Depth-first hom search with forced additivity closure. Partial tables
// use -1 for unknown; closing propagates f(a+b) = f(a)+f(b) wherever both
// arguments are known.
struct HomSearch {
  const CGroup& s;
  const CGroup& t;
  std::vector<int> table;
  // Optional constraint: allowed[a] restricts candidate images of a.
  const std::vector<std::vector<int>>* allowed = nullptr;
  bool block_injective = false;

  bool close() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < s.size(); ++a) {
        if (table[a] == -1) continue;
        for (int b = 0; b < s.size(); ++b) {
          if (table[b] == -1) continue;
          int ab = s.plus(a, b);
          int forced = t.plus(table[a], table[b]);
          if (table[ab] == -1) {
            table[ab] = forced;
            changed = true;
          } else if (table[ab] != forced) {
            return false;
          }
        }
      }
    }
    // Relation preservation and the optional injectivity prune on the
    // currently known part.
    for (int a = 0; a < s.size(); ++a) {
      if (table[a] == -1) continue;
      if (allowed) {
        const auto& opts = (*allowed)[a];
        if (!opts.empty() && std::find(opts.begin(), opts.end(), table[a]) == opts.end())
          return false;
      }
      for (int b = a + 1; b < s.size(); ++b) {
        if (table[b] == -1) continue;
        if (s.related(a, b) && !t.related(table[a], table[b])) return false;
        if (block_injective && t.related(table[a], table[b]) && !s.related(a, b)) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  bool run(Visit&& visit) {
    int next = -1;
    for (int a = 0; a < s.size(); ++a)
      if (table[a] == -1) {
        next = a;
        break;
      }
    if (next == -1) return visit(table);

    std::vector<int> candidates;
    if (allowed && !(*allowed)[next].empty())
      candidates = (*allowed)[next];
    else {
      candidates.resize(t.size());
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    std::vector<int> saved = table;
    for (int v : candidates) {
      table = saved;
      table[next] = v;
      if (close() && run(visit)) return true;
    }
    table = saved;
    return false;
  }
};

}  // namespace

std::vector<CGroupHom> enumerate_homs(const CGroup& a, const CGroup& b) {
  std::vector<CGroupHom> out;
  HomSearch search{a, b, std::vector<int>(a.size(), -1)};
  search.run([&](const std::vector<int>& table) {
    out.push_back(CGroupHom{a, b, table});
    return false;  // keep enumerating
  });
  return out;
}

IsoSearchResult search_c_isomorphism(const CGroup& a, const CGroup& b, int max_size) {
  IsoSearchResult res;
  if (a.size() > max_size || b.size() > max_size) {
    res.status = SearchStatus::not_attempted;
    return res;
  }
  if (a.carrier.blocks().size() != b.carrier.blocks().size()) {
    res.status = SearchStatus::absent;
    return res;
  }

  HomSearch forward{a, b, std::vector<int>(a.size(), -1)};
  forward.block_injective = true;
  bool found = forward.run([&](const std::vector<int>& ftab) {
    // Image must reach every block of b, or no inverse can exist.
    std::vector<char> hit(b.carrier.blocks().size(), 0);
    for (int x = 0; x < a.size(); ++x) hit[b.carrier.block_of(ftab[x])] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;

    // Partner search constrained by both composite conditions.
    std::vector<std::vector<int>> allowed(b.size());
    for (int y = 0; y < b.size(); ++y) {
      int x0 = -1;
      for (int x = 0; x < a.size(); ++x)
        if (ftab[x] == y) {
          x0 = x;
          break;
        }
      for (int v = 0; v < a.size(); ++v) {
        if (x0 != -1 && !a.related(v, x0)) continue;
        if (!b.related(ftab[v], y)) continue;  // f(g(y)) ~ y
        allowed[y].push_back(v);
      }
      if (allowed[y].empty()) return false;
    }
    HomSearch backward{b, a, std::vector<int>(b.size(), -1)};
    backward.allowed = &allowed;
    return backward.run([&](const std::vector<int>& gtab) {
      CGroupHom f{a, b, ftab};
      CGroupHom g{b, a, gtab};
      if (!check_c_isomorphism(f, g)) return false;
      res.witness = std::make_pair(std::move(f), std::move(g));
      return true;
    });
  });
  res.status = found ? SearchStatus::found : SearchStatus::absent;
  return res;
}

std::optional<std::vector<int>> search_group_isomorphism(const PlainGroup& a,
                                                         const PlainGroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  CGroup ca = to_cgroup(a), cb = to_cgroup(b);
  HomSearch search{ca, cb, std::vector<int>(ca.size(), -1)};
  search.block_injective = true;  // discrete relations make this injectivity
  std::optional<std::vector<int>> out;
  search.table[a.zero] = b.zero;
  if (!search.close()) return std::nullopt;
  search.run([&](const std::vector<int>& table) {
    std::vector<char> hit(b.size(), 0);
    for (int v : table) hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
    out = table;
    return true;
  });
  return out;
}

}  // namespace cgr
