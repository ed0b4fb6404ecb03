#include "cgr/cli.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include "CLI11.hpp"

#include "cgr/actions.hpp"
#include "cgr/catgroup.hpp"
#include "cgr/ccm.hpp"
#include "cgr/cgroup.hpp"
#include "cgr/classical.hpp"
#include "cgr/cssc.hpp"
#include "cgr/io.hpp"
#include "cgr/report.hpp"

namespace cgr {

namespace {

void print_report(const ValidationReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report_to_json(r);
    return;
  }
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.axiom;
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  size_t total = r.checks.size();
  out << (r.passed() ? "ok" : "failed") << ": " << r.subject << " ("
      << (total - r.failure_count()) << "/" << total << " checks)\n";
}

ValidationReport validate_any(const StructureFile& f, bool strict) {
  switch (f.kind) {
    case StructureKind::setoid: {
      ValidationReport r;
      r.subject = "setoid";
      r.pass("setoid.partition");
      return r;
    }
    case StructureKind::cgroup: return validate_cgroup(std::get<CGroup>(f.body));
    case StructureKind::catgroup:
      return validate_categorical_group(std::get<CategoricalGroup>(f.body));
    case StructureKind::xmod: return validate_crossed_module(std::get<CrossedModule>(f.body));
    case StructureKind::gg: return validate_group_groupoid(std::get<GroupGroupoid>(f.body));
    case StructureKind::ccm:
      return validate_ccm(std::get<CCrossedModule>(f.body),
                          strict ? CcmLevel::strict : CcmLevel::base);
    case StructureKind::extension:
      return validate_split_extension(std::get<SplitExtension>(f.body));
    case StructureKind::action: return validate_caction(std::get<CAction>(f.body));
  }
  throw CgrError("unreachable kind");
}

void write_or_print(const StructureFile& f, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << emit_structure(f);
  else
    save_structure(f, out_path);
}

int run_validate(const std::string& path, const std::string& as, bool strict, bool as_json,
                 std::ostream& out, std::ostream& err) {
  StructureFile f = load_structure(path);
  if (!as.empty() && kind_from_name(as) != f.kind) {
    err << "error: '" << path << "' holds a " << kind_name(f.kind) << ", not a " << as << "\n";
    return 2;
  }
  ValidationReport r = validate_any(f, strict);
  print_report(r, as_json, out);
  return r.passed() ? 0 : 1;
}

int run_construct(const std::string& what, const std::string& path,
                  const std::vector<std::string>& subgroup, const std::string& out_path,
                  bool as_json, std::ostream& out, std::ostream& err) {
  StructureFile f = load_structure(path);
  auto expect = [&](StructureKind k) {
    if (f.kind != k)
      throw SchemaError(fmt::format("construct {} expects a {} file, got {}", what,
                                    kind_name(k), kind_name(f.kind)));
  };
  if (what == "cssc") {
    if (f.kind == StructureKind::gg)
      f = {StructureKind::catgroup, catgroup_from_gg(std::get<GroupGroupoid>(f.body))};
    expect(StructureKind::catgroup);
    CsscResult res = build_cssc(std::get<CategoricalGroup>(f.body));
    if (!res.ok && !res.ccm) {
      err << "construction aborted: " << res.diagnostic << "\n";
      return 1;
    }
    print_report(res.certification, as_json, out);
    if (res.ok) write_or_print({StructureKind::ccm, *res.ccm}, out_path, out);
    return res.ok ? 0 : 1;
  }
  if (what == "semidirect") {
    expect(StructureKind::action);
    Semidirect sd = semidirect(std::get<CAction>(f.body));
    write_or_print({StructureKind::cgroup, sd.group}, out_path, out);
    return 0;
  }
  if (what == "quotient") {
    expect(StructureKind::cgroup);
    const CGroup& g = std::get<CGroup>(f.body);
    QuotientResult q;
    if (subgroup.empty()) {
      q = quotient_by_relation(g);
    } else {
      std::vector<int> subset;
      for (const auto& id : subgroup) subset.push_back(g.carrier.index_of(id));
      q = quotient_by_normal(g, subset);
    }
    write_or_print({StructureKind::cgroup, to_cgroup(q.group)}, out_path, out);
    return 0;
  }
  if (what == "gg-from-xmod") {
    expect(StructureKind::xmod);
    write_or_print({StructureKind::gg, gg_from_xmod(std::get<CrossedModule>(f.body))},
                   out_path, out);
    return 0;
  }
  if (what == "xmod-from-gg") {
    expect(StructureKind::gg);
    write_or_print({StructureKind::xmod, xmod_from_gg(std::get<GroupGroupoid>(f.body))},
                   out_path, out);
    return 0;
  }
  err << "error: unknown construction '" << what << "'\n";
  return 2;
}

int run_classify(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  StructureFile f = load_structure(path);
  if (f.kind == StructureKind::ccm) {
    CcmClassification c = classify_ccm(std::get<CCrossedModule>(f.body));
    if (as_json)
      out << fmt::format(
          "{{\"connected\": {}, \"strict\": {}, \"special\": {}, \"detail\": \"{}\"}}\n",
          c.connected, c.strict, c.special, c.detail);
    else
      out << "connected: " << (c.connected ? "yes" : "no")
          << "\nstrict: " << (c.strict ? "yes" : "no")
          << "\nspecial: " << (c.special ? "yes" : "no")
          << (c.detail.empty() ? "" : "\ndetail: " + c.detail) << "\n";
    return 0;
  }
  if (f.kind == StructureKind::cgroup) {
    GroupProfile p = group_profile(std::get<CGroup>(f.body));
    if (as_json)
      out << fmt::format("{{\"connected\": {}, \"c_abelian\": {}}}\n", p.connected,
                         p.c_abelian);
    else
      out << "connected: " << (p.connected ? "yes" : "no")
          << "\nc-abelian: " << (p.c_abelian ? "yes" : "no")
          << (p.witness.empty() ? "" : "\nwitness: " + p.witness) << "\n";
    return 0;
  }
  err << "error: classify expects a cgroup or c-crossed-module file\n";
  return 2;
}

int run_fixture(const FixtureParams& params, const std::string& out_path, std::ostream& out) {
  FixtureValue v = make_fixture(params);
  StructureFile f;
  if (std::holds_alternative<CGroup>(v))
    f = {StructureKind::cgroup, std::get<CGroup>(v)};
  else if (std::holds_alternative<CategoricalGroup>(v))
    f = {StructureKind::catgroup, std::get<CategoricalGroup>(v)};
  else
    f = {StructureKind::xmod, std::get<CrossedModule>(v)};
  write_or_print(f, out_path, out);
  return 0;
}

int run_check(const std::string& which, const std::string& path, const std::string& scope,
              bool as_json, std::ostream& out, std::ostream& err) {
  StructureFile f = load_structure(path);
  if (which == "lemma-comm") {
    if (f.kind != StructureKind::catgroup)
      throw SchemaError("check lemma-comm expects a catgroup file");
    KernelScope ks = scope == "isomorphic" ? KernelScope::isomorphic : KernelScope::special;
    ValidationReport r = check_lemma_comm(std::get<CategoricalGroup>(f.body), ks);
    print_report(r, as_json, out);
    return r.passed() ? 0 : 1;
  }
  if (which == "extension") {
    if (f.kind != StructureKind::extension)
      throw SchemaError("check extension expects an extension file");
    const SplitExtension& e = std::get<SplitExtension>(f.body);
    ValidationReport r = validate_split_extension(e);
    r.merge(check_semidirect_iso(e), "");
    print_report(r, as_json, out);
    return r.passed() ? 0 : 1;
  }
  if (which == "roundtrip") {
    if (f.kind != StructureKind::xmod)
      throw SchemaError("check roundtrip expects an xmod file");
    const CrossedModule& x = std::get<CrossedModule>(f.body);
    ValidationReport r;
    r.subject = "roundtrip";
    GroupGroupoid g = gg_from_xmod(x);
    ValidationReport rg = validate_group_groupoid(g);
    r.record("roundtrip.gg-valid", rg.passed(),
             rg.passed() ? "" : rg.first_failure()->axiom);
    CrossedModule y = xmod_from_gg(g);
    ValidationReport ry = validate_crossed_module(y);
    r.record("roundtrip.xmod-valid", ry.passed(),
             ry.passed() ? "" : ry.first_failure()->axiom);
    auto iso = search_xmod_isomorphism(x, y);
    r.record("roundtrip.isomorphic", iso.has_value(),
             iso ? "" : "no isomorphism of crossed modules found");
    print_report(r, as_json, out);
    return r.passed() ? 0 : 1;
  }
  err << "error: unknown check '" << which << "'\n";
  return 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("finite c-groups, categorical groups, and c-crossed modules");
  app.name("cgr");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine readable output");

  std::string v_path, v_as;
  bool v_strict = false;
  CLI::App* v = app.add_subcommand("validate", "certify the axioms of a structure file");
  v->add_option("file", v_path, "structure file")->required();
  v->add_option("--as", v_as, "require this structure kind");
  v->add_flag("--strict", v_strict, "strict level (c-crossed modules)");

  std::string c_what, c_path, c_out;
  std::vector<std::string> c_subgroup;
  CLI::App* c = app.add_subcommand(
      "construct", "cssc | semidirect | quotient | gg-from-xmod | xmod-from-gg");
  c->add_option("what", c_what, "construction name")->required();
  c->add_option("input", c_path, "input structure file")->required();
  c->add_option("--out", c_out, "output file (stdout when omitted)");
  c->add_option("--subgroup", c_subgroup, "subgroup element ids (quotient)")->delimiter(',');

  std::string k_path;
  CLI::App* k = app.add_subcommand("classify", "classification flags of a structure");
  k->add_option("file", k_path, "structure file")->required();

  FixtureParams params;
  std::string f_out;
  CLI::App* x = app.add_subcommand(
      "fixture", "pair-gg | discrete-gg | mac-lane | inner-xmod | skeletal");
  x->add_option("kind", params.kind, "fixture kind")->required();
  x->add_option("--group", params.group, "base group (z2, z3, z4, z6, s3, klein4, ...)");
  x->add_option("--subgroup", params.subgroup, "subgroup ids (mac-lane)")->delimiter(',');
  x->add_option("--cocycle", params.cocycle, "nontrivial | trivial (skeletal)");
  x->add_option("--out", f_out, "output file (stdout when omitted)");

  std::string h_which, h_path, h_scope = "special";
  CLI::App* h = app.add_subcommand("check", "lemma-comm | extension | roundtrip");
  h->add_option("which", h_which, "check name")->required();
  h->add_option("input", h_path, "input structure file")->required();
  h->add_option("--scope", h_scope, "kernel scope for lemma-comm: special | isomorphic");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (v->parsed()) return run_validate(v_path, v_as, v_strict, as_json, out, err);
    if (c->parsed()) return run_construct(c_what, c_path, c_subgroup, c_out, as_json, out, err);
    if (k->parsed()) return run_classify(k_path, as_json, out, err);
    if (x->parsed()) return run_fixture(params, f_out, out);
    if (h->parsed()) return run_check(h_which, h_path, h_scope, as_json, out, err);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CgrError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cgr
