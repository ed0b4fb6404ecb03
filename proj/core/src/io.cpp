#include "cgr/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

namespace cgr {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw SchemaError(fmt::format("{}: {}", where, what));
}

const json& member(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, fmt::format("missing field '{}'", key));
  return *it;
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : keys) allowed.insert(k);
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) bad(where, fmt::format("unknown field '{}'", item.key()));
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) bad(where, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Resolves an id against an index map built from an element list.
struct Ids {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;

  explicit Ids(std::vector<std::string> ns) : names(std::move(ns)) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
  }

  int resolve(const json& v, const std::string& where) const {
    if (!v.is_string()) bad(where, "expected an element id");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) bad(where, fmt::format("unknown id '{}'", v.get<std::string>()));
    return it->second;
  }
};

std::vector<int> id_list(const json& j, const Ids& ids, size_t want, const std::string& where) {
  if (!j.is_array() || j.size() != want)
    bad(where, fmt::format("expected an array of {} ids", want));
  std::vector<int> out;
  out.reserve(want);
  for (const auto& v : j) out.push_back(ids.resolve(v, where));
  return out;
}

std::vector<std::vector<int>> id_table(const json& j, const Ids& ids, size_t rows, size_t cols,
                                       const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    bad(where, fmt::format("expected an array of {} rows", rows));
  std::vector<std::vector<int>> out;
  out.reserve(rows);
  for (size_t r = 0; r < rows; ++r)
    out.push_back(id_list(j[r], ids, cols, fmt::format("{}[{}]", where, r)));
  return out;
}

// setoid

json emit_setoid(const FiniteSetoid& s) {
  json blocks = json::array();
  for (const auto& blk : s.blocks()) {
    json b = json::array();
    for (int i : blk) b.push_back(s.name(i));
    blocks.push_back(std::move(b));
  }
  return json{{"elements", s.elements()}, {"blocks", std::move(blocks)}};
}

FiniteSetoid parse_setoid(const json& j, const std::string& where) {
  only_keys(j, where, {"elements", "blocks"});
  auto elements = string_list(member(j, where, "elements"), where + ".elements");
  const json& bj = member(j, where, "blocks");
  if (!bj.is_array()) bad(where + ".blocks", "expected an array of blocks");
  std::vector<std::vector<std::string>> blocks;
  for (const auto& b : bj) blocks.push_back(string_list(b, where + ".blocks"));
  return FiniteSetoid::from_partition(std::move(elements), blocks);
}

// plain group

json emit_plain_group(const PlainGroup& g) {
  json add = json::array();
  for (int a = 0; a < g.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(g.name(g.plus(a, b)));
    add.push_back(std::move(row));
  }
  json neg = json::array();
  for (int a = 0; a < g.size(); ++a) neg.push_back(g.name(g.minus(a)));
  return json{{"elements", g.elements},
              {"add", std::move(add)},
              {"zero", g.name(g.zero)},
              {"neg", std::move(neg)}};
}

PlainGroup parse_plain_group(const json& j, const std::string& where) {
  only_keys(j, where, {"elements", "add", "zero", "neg"});
  Ids ids(string_list(member(j, where, "elements"), where + ".elements"));
  size_t n = ids.names.size();
  auto add = id_table(member(j, where, "add"), ids, n, n, where + ".add");
  int zero = ids.resolve(member(j, where, "zero"), where + ".zero");
  auto neg = id_list(member(j, where, "neg"), ids, n, where + ".neg");
  return PlainGroup::make(ids.names, std::move(add), zero, std::move(neg));
}

// cgroup

json emit_cgroup(const CGroup& g) {
  json add = json::array();
  for (int a = 0; a < g.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(g.name(g.plus(a, b)));
    add.push_back(std::move(row));
  }
  json neg = json::array();
  for (int a = 0; a < g.size(); ++a) neg.push_back(g.name(g.minus(a)));
  return json{{"carrier", emit_setoid(g.carrier)},
              {"add", std::move(add)},
              {"zero", g.name(g.zero)},
              {"neg", std::move(neg)}};
}

CGroup parse_cgroup(const json& j, const std::string& where) {
  only_keys(j, where, {"carrier", "add", "zero", "neg"});
  FiniteSetoid carrier = parse_setoid(member(j, where, "carrier"), where + ".carrier");
  Ids ids(carrier.elements());
  size_t n = ids.names.size();
  auto add = id_table(member(j, where, "add"), ids, n, n, where + ".add");
  int zero = ids.resolve(member(j, where, "zero"), where + ".zero");
  auto neg = id_list(member(j, where, "neg"), ids, n, where + ".neg");
  return CGroup::make(std::move(carrier), std::move(add), zero, std::move(neg));
}

// groupoid

json emit_groupoid(const FiniteGroupoid& gd) {
  json mors = json::array();
  for (const auto& m : gd.morphisms)
    mors.push_back(json{{"id", m.id}, {"src", gd.objects[m.src]}, {"tgt", gd.objects[m.tgt]}});
  json comp = json::array();
  for (size_t g = 0; g < gd.comp.size(); ++g)
    for (size_t f = 0; f < gd.comp[g].size(); ++f)
      if (gd.comp[g][f] != -1)
        comp.push_back(json::array({gd.morphisms[g].id, gd.morphisms[f].id,
                                    gd.morphisms[gd.comp[g][f]].id}));
  json ident = json::array();
  for (int m : gd.ident) ident.push_back(gd.morphisms[m].id);
  json inv = json::array();
  for (int m : gd.inv) inv.push_back(gd.morphisms[m].id);
  return json{{"objects", gd.objects},
              {"morphisms", std::move(mors)},
              {"comp", std::move(comp)},
              {"ident", std::move(ident)},
              {"inv", std::move(inv)}};
}

FiniteGroupoid parse_groupoid(const json& j, const std::string& where) {
  only_keys(j, where, {"objects", "morphisms", "comp", "ident", "inv"});
  Ids objs(string_list(member(j, where, "objects"), where + ".objects"));

  const json& mj = member(j, where, "morphisms");
  if (!mj.is_array()) bad(where + ".morphisms", "expected an array");
  std::vector<Morphism> morphisms;
  std::vector<std::string> mor_names;
  for (size_t i = 0; i < mj.size(); ++i) {
    std::string mw = fmt::format("{}.morphisms[{}]", where, i);
    only_keys(mj[i], mw, {"id", "src", "tgt"});
    const json& idj = member(mj[i], mw, "id");
    if (!idj.is_string()) bad(mw, "morphism id must be a string");
    Morphism m;
    m.id = idj.get<std::string>();
    m.src = objs.resolve(member(mj[i], mw, "src"), mw + ".src");
    m.tgt = objs.resolve(member(mj[i], mw, "tgt"), mw + ".tgt");
    morphisms.push_back(m);
    mor_names.push_back(m.id);
  }
  Ids mors(mor_names);
  size_t nm = morphisms.size();

  const json& cj = member(j, where, "comp");
  if (!cj.is_array()) bad(where + ".comp", "expected an array of [g, f, g.f] triples");
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (size_t i = 0; i < cj.size(); ++i) {
    std::string cw = fmt::format("{}.comp[{}]", where, i);
    if (!cj[i].is_array() || cj[i].size() != 3) bad(cw, "expected a [g, f, g.f] triple");
    int g = mors.resolve(cj[i][0], cw);
    int f = mors.resolve(cj[i][1], cw);
    int gf = mors.resolve(cj[i][2], cw);
    if (morphisms[f].tgt != morphisms[g].src)
      bad(cw, fmt::format("'{}' after '{}' is not composable", morphisms[g].id,
                          morphisms[f].id));
    if (comp[g][f] != -1) bad(cw, "duplicate composite");
    comp[g][f] = gf;
  }

  auto ident = id_list(member(j, where, "ident"), mors, objs.names.size(), where + ".ident");
  auto inv = id_list(member(j, where, "inv"), mors, nm, where + ".inv");
  return FiniteGroupoid::make(objs.names, std::move(morphisms), std::move(comp),
                              std::move(ident), std::move(inv));
}

// categorical group

json emit_catgroup(const CategoricalGroup& c) {
  const auto& onames = c.gd.objects;
  auto mor = [&](int f) { return c.gd.morphisms[f].id; };
  json obj_sum = json::array();
  for (int x = 0; x < c.object_count(); ++x) {
    json row = json::array();
    for (int y = 0; y < c.object_count(); ++y) row.push_back(onames[c.osum(x, y)]);
    obj_sum.push_back(std::move(row));
  }
  json mor_sum = json::array();
  for (int f = 0; f < c.morphism_count(); ++f) {
    json row = json::array();
    for (int g = 0; g < c.morphism_count(); ++g) row.push_back(mor(c.msum(f, g)));
    mor_sum.push_back(std::move(row));
  }
  json alpha = json::array();
  for (int x = 0; x < c.object_count(); ++x) {
    json plane = json::array();
    for (int y = 0; y < c.object_count(); ++y) {
      json row = json::array();
      for (int z = 0; z < c.object_count(); ++z) row.push_back(mor(c.mon.alpha[x][y][z]));
      plane.push_back(std::move(row));
    }
    alpha.push_back(std::move(plane));
  }
  auto mor_list = [&](const std::vector<int>& v) {
    json out = json::array();
    for (int f : v) out.push_back(mor(f));
    return out;
  };
  json neg_obj = json::array();
  for (int x : c.neg_obj) neg_obj.push_back(onames[x]);
  return json{{"groupoid", emit_groupoid(c.gd)},
              {"obj_sum", std::move(obj_sum)},
              {"mor_sum", std::move(mor_sum)},
              {"zero_obj", onames[c.mon.zero_obj]},
              {"alpha", std::move(alpha)},
              {"lambda", mor_list(c.mon.lambda)},
              {"rho", mor_list(c.mon.rho)},
              {"neg_obj", std::move(neg_obj)},
              {"eps", mor_list(c.eps)},
              {"delta", mor_list(c.delta)}};
}

CategoricalGroup parse_catgroup(const json& j, const std::string& where) {
  only_keys(j, where,
            {"groupoid", "obj_sum", "mor_sum", "zero_obj", "alpha", "lambda", "rho", "neg_obj",
             "eps", "delta"});
  CategoricalGroup c;
  c.gd = parse_groupoid(member(j, where, "groupoid"), where + ".groupoid");
  Ids objs(c.gd.objects);
  std::vector<std::string> mor_names;
  for (const auto& m : c.gd.morphisms) mor_names.push_back(m.id);
  Ids mors(mor_names);
  size_t no = objs.names.size();
  size_t nm = mor_names.size();

  c.mon.obj_sum = id_table(member(j, where, "obj_sum"), objs, no, no, where + ".obj_sum");
  c.mon.mor_sum = id_table(member(j, where, "mor_sum"), mors, nm, nm, where + ".mor_sum");
  c.mon.zero_obj = objs.resolve(member(j, where, "zero_obj"), where + ".zero_obj");
  const json& aj = member(j, where, "alpha");
  if (!aj.is_array() || aj.size() != no) bad(where + ".alpha", "expected one plane per object");
  for (size_t x = 0; x < no; ++x)
    c.mon.alpha.push_back(
        id_table(aj[x], mors, no, no, fmt::format("{}.alpha[{}]", where, x)));
  c.mon.lambda = id_list(member(j, where, "lambda"), mors, no, where + ".lambda");
  c.mon.rho = id_list(member(j, where, "rho"), mors, no, where + ".rho");
  c.neg_obj = id_list(member(j, where, "neg_obj"), objs, no, where + ".neg_obj");
  c.eps = id_list(member(j, where, "eps"), mors, no, where + ".eps");
  c.delta = id_list(member(j, where, "delta"), mors, no, where + ".delta");
  return c;
}

// crossed module

json emit_xmod(const CrossedModule& x) {
  json mu = json::array();
  for (int v : x.mu) mu.push_back(x.b.name(v));
  json action = json::array();
  for (const auto& row : x.action) {
    json r = json::array();
    for (int v : row) r.push_back(x.a.name(v));
    action.push_back(std::move(r));
  }
  return json{{"a", emit_plain_group(x.a)},
              {"b", emit_plain_group(x.b)},
              {"mu", std::move(mu)},
              {"action", std::move(action)}};
}

CrossedModule parse_xmod(const json& j, const std::string& where) {
  only_keys(j, where, {"a", "b", "mu", "action"});
  CrossedModule x;
  x.a = parse_plain_group(member(j, where, "a"), where + ".a");
  x.b = parse_plain_group(member(j, where, "b"), where + ".b");
  Ids aids(x.a.elements);
  Ids bids(x.b.elements);
  x.mu = id_list(member(j, where, "mu"), bids, aids.names.size(), where + ".mu");
  x.action = id_table(member(j, where, "action"), aids, bids.names.size(), aids.names.size(),
                      where + ".action");
  return x;
}

// group groupoid

json emit_gg(const GroupGroupoid& g) {
  return json{{"groupoid", emit_groupoid(g.gd)},
              {"obj_group", emit_plain_group(g.obj_group)},
              {"mor_group", emit_plain_group(g.mor_group)}};
}

GroupGroupoid parse_gg(const json& j, const std::string& where) {
  only_keys(j, where, {"groupoid", "obj_group", "mor_group"});
  GroupGroupoid g;
  g.gd = parse_groupoid(member(j, where, "groupoid"), where + ".groupoid");
  g.obj_group = parse_plain_group(member(j, where, "obj_group"), where + ".obj_group");
  g.mor_group = parse_plain_group(member(j, where, "mor_group"), where + ".mor_group");
  return g;
}

// c-crossed module

json emit_ccm(const CCrossedModule& x) {
  json bd = json::array();
  for (int v : x.bd.table) bd.push_back(x.h.name(v));
  json action = json::array();
  for (const auto& row : x.act.table) {
    json r = json::array();
    for (int v : row) r.push_back(x.g.name(v));
    action.push_back(std::move(r));
  }
  return json{{"g", emit_cgroup(x.g)},
              {"h", emit_cgroup(x.h)},
              {"bd", std::move(bd)},
              {"action", std::move(action)},
              {"special_h", emit_setoid(x.special_h)["blocks"]}};
}

CCrossedModule parse_ccm(const json& j, const std::string& where) {
  only_keys(j, where, {"g", "h", "bd", "action", "special_h"});
  CGroup g = parse_cgroup(member(j, where, "g"), where + ".g");
  CGroup h = parse_cgroup(member(j, where, "h"), where + ".h");
  Ids gids(g.carrier.elements());
  Ids hids(h.carrier.elements());
  auto bd = id_list(member(j, where, "bd"), hids, gids.names.size(), where + ".bd");
  auto action = id_table(member(j, where, "action"), gids, hids.names.size(),
                         gids.names.size(), where + ".action");
  const json& sj = member(j, where, "special_h");
  if (!sj.is_array()) bad(where + ".special_h", "expected an array of blocks");
  std::vector<std::vector<std::string>> blocks;
  for (const auto& b : sj) blocks.push_back(string_list(b, where + ".special_h"));
  FiniteSetoid special = FiniteSetoid::from_partition(h.carrier.elements(), blocks);
  CGroupHom bd_hom = CGroupHom::make(g, h, std::move(bd));
  CAction act{h, g, std::move(action)};
  return CCrossedModule{std::move(g), std::move(h), std::move(bd_hom), std::move(act),
                        std::move(special)};
}

// split extension

json emit_extension(const SplitExtension& e) {
  auto hom_list = [](const CGroupHom& f, const CGroup& target) {
    json out = json::array();
    for (int v : f.table) out.push_back(target.name(v));
    return out;
  };
  return json{{"sub", emit_cgroup(e.sub)},
              {"total", emit_cgroup(e.total)},
              {"base", emit_cgroup(e.base)},
              {"incl", hom_list(e.incl, e.total)},
              {"proj", hom_list(e.proj, e.base)},
              {"section", hom_list(e.section, e.total)}};
}

SplitExtension parse_extension(const json& j, const std::string& where) {
  only_keys(j, where, {"sub", "total", "base", "incl", "proj", "section"});
  CGroup sub = parse_cgroup(member(j, where, "sub"), where + ".sub");
  CGroup total = parse_cgroup(member(j, where, "total"), where + ".total");
  CGroup base = parse_cgroup(member(j, where, "base"), where + ".base");
  Ids aids(sub.carrier.elements());
  Ids eids(total.carrier.elements());
  Ids bids(base.carrier.elements());
  auto incl = id_list(member(j, where, "incl"), eids, aids.names.size(), where + ".incl");
  auto proj = id_list(member(j, where, "proj"), bids, eids.names.size(), where + ".proj");
  auto section =
      id_list(member(j, where, "section"), eids, bids.names.size(), where + ".section");
  SplitExtension e{sub, total, base, CGroupHom::make(sub, total, std::move(incl)),
                   CGroupHom::make(total, base, std::move(proj)),
                   CGroupHom::make(base, total, std::move(section))};
  return e;
}

// action

json emit_action(const CAction& a) {
  json table = json::array();
  for (const auto& row : a.table) {
    json r = json::array();
    for (int v : row) r.push_back(a.acted.name(v));
    table.push_back(std::move(r));
  }
  return json{{"acting", emit_cgroup(a.acting)},
              {"acted", emit_cgroup(a.acted)},
              {"table", std::move(table)}};
}

CAction parse_action(const json& j, const std::string& where) {
  only_keys(j, where, {"acting", "acted", "table"});
  CGroup acting = parse_cgroup(member(j, where, "acting"), where + ".acting");
  CGroup acted = parse_cgroup(member(j, where, "acted"), where + ".acted");
  Ids ids(acted.carrier.elements());
  auto table = id_table(member(j, where, "table"), ids, acting.size(), acted.size(),
                        where + ".table");
  return CAction{std::move(acting), std::move(acted), std::move(table)};
}

}  // namespace

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::setoid: return "setoid";
    case StructureKind::cgroup: return "cgroup";
    case StructureKind::catgroup: return "catgroup";
    case StructureKind::xmod: return "xmod";
    case StructureKind::gg: return "group-groupoid";
    case StructureKind::ccm: return "c-crossed-module";
    case StructureKind::extension: return "extension";
    case StructureKind::action: return "action";
  }
  throw CgrError("unreachable kind");
}

StructureKind kind_from_name(std::string_view name) {
  for (StructureKind k :
       {StructureKind::setoid, StructureKind::cgroup, StructureKind::catgroup,
        StructureKind::xmod, StructureKind::gg, StructureKind::ccm, StructureKind::extension,
        StructureKind::action})
    if (kind_name(k) == name) return k;
  throw SchemaError(fmt::format("unknown structure kind '{}'", name));
}

StructureFile parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(fmt::format("not valid JSON: {}", e.what()));
  }
  only_keys(j, "document", {"format", "kind", "body"});
  const json& fj = member(j, "document", "format");
  if (!fj.is_string() || fj.get<std::string>() != "cgr/1")
    bad("document.format", "expected \"cgr/1\"");
  const json& kj = member(j, "document", "kind");
  if (!kj.is_string()) bad("document.kind", "expected a string");
  StructureKind kind = kind_from_name(kj.get<std::string>());
  const json& body = member(j, "document", "body");

  StructureFile out;
  out.kind = kind;
  switch (kind) {
    case StructureKind::setoid: out.body = parse_setoid(body, "body"); break;
    case StructureKind::cgroup: out.body = parse_cgroup(body, "body"); break;
    case StructureKind::catgroup: out.body = parse_catgroup(body, "body"); break;
    case StructureKind::xmod: out.body = parse_xmod(body, "body"); break;
    case StructureKind::gg: out.body = parse_gg(body, "body"); break;
    case StructureKind::ccm: out.body = parse_ccm(body, "body"); break;
    case StructureKind::extension: out.body = parse_extension(body, "body"); break;
    case StructureKind::action: out.body = parse_action(body, "body"); break;
  }
  return out;
}

std::string emit_structure(const StructureFile& f) {
  json body;
  switch (f.kind) {
    case StructureKind::setoid: body = emit_setoid(std::get<FiniteSetoid>(f.body)); break;
    case StructureKind::cgroup: body = emit_cgroup(std::get<CGroup>(f.body)); break;
    case StructureKind::catgroup:
      body = emit_catgroup(std::get<CategoricalGroup>(f.body));
      break;
    case StructureKind::xmod: body = emit_xmod(std::get<CrossedModule>(f.body)); break;
    case StructureKind::gg: body = emit_gg(std::get<GroupGroupoid>(f.body)); break;
    case StructureKind::ccm: body = emit_ccm(std::get<CCrossedModule>(f.body)); break;
    case StructureKind::extension:
      body = emit_extension(std::get<SplitExtension>(f.body));
      break;
    case StructureKind::action: body = emit_action(std::get<CAction>(f.body)); break;
  }
  json doc{{"format", "cgr/1"}, {"kind", kind_name(f.kind)}, {"body", std::move(body)}};
  return doc.dump(2) + "\n";
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

void save_structure(const StructureFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CgrError(fmt::format("cannot write '{}'", path));
  out << emit_structure(f);
}

std::string report_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"axiom", c.axiom}, {"passed", c.passed}, {"witness", c.witness}});
  json doc{{"subject", r.subject}, {"passed", r.passed()}, {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

}  // namespace cgr
