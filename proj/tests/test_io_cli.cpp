#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgr/cli.hpp"
#include "cgr/cssc.hpp"
#include "cgr/io.hpp"
#include "fixtures.hpp"

using namespace cgr;

namespace {

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cgr-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }

  std::string write(const StructureFile& f, const std::string& name) const {
    std::string p = file(name);
    save_structure(f, p);
    return p;
  }
};

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

template <typename T>
void check_roundtrip(StructureKind kind, const T& value) {
  StructureFile f{kind, value};
  std::string text = emit_structure(f);
  StructureFile back = parse_structure(text);
  CHECK(back.kind == kind);
  CHECK(std::get<T>(back.body) == value);
  CHECK(emit_structure(back) == text);
}

}  // namespace

TEST_CASE("every structure kind round-trips") {
  check_roundtrip(StructureKind::setoid, fixtures::mac_lane_z4().carrier);
  check_roundtrip(StructureKind::cgroup, fixtures::mac_lane_z4());
  check_roundtrip(StructureKind::catgroup, catgroup_from_gg(pair_gg(cyclic_group(2))));
  check_roundtrip(StructureKind::catgroup, skeletal_catgroup(fixtures::skeletal_spec(true)));
  check_roundtrip(StructureKind::xmod, inner_xmod(cyclic_group(3)));
  check_roundtrip(StructureKind::gg, pair_gg(cyclic_group(3)));
  check_roundtrip(StructureKind::extension, fixtures::parity_extension());
  check_roundtrip(StructureKind::action, fixtures::inversion_action());

  CsscResult res = build_cssc(catgroup_from_gg(pair_gg(cyclic_group(2))));
  REQUIRE(res.ok);
  check_roundtrip(StructureKind::ccm, *res.ccm);
}

TEST_CASE("kind names") {
  CHECK(kind_name(StructureKind::ccm) == "c-crossed-module");
  CHECK(kind_from_name("cgroup") == StructureKind::cgroup);
  CHECK_THROWS_AS(kind_from_name("widget"), SchemaError);
}

TEST_CASE("parser rejects malformed documents") {
  std::string good = emit_structure({StructureKind::cgroup, fixtures::mac_lane_z4()});
  using nlohmann::ordered_json;

  SUBCASE("not json") { CHECK_THROWS_AS(parse_structure("{"), SchemaError); }
  SUBCASE("unknown top-level field") {
    ordered_json j = ordered_json::parse(good);
    j["note"] = "hello";
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("wrong format tag") {
    ordered_json j = ordered_json::parse(good);
    j["format"] = "cgr/2";
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("unknown kind") {
    ordered_json j = ordered_json::parse(good);
    j["kind"] = "widget";
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("unknown body field") {
    ordered_json j = ordered_json::parse(good);
    j["body"]["extra"] = 1;
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("unknown element id in a table") {
    ordered_json j = ordered_json::parse(good);
    j["body"]["add"][0][0] = "7";
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("missing field") {
    ordered_json j = ordered_json::parse(good);
    j["body"].erase("neg");
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("wrong row count") {
    ordered_json j = ordered_json::parse(good);
    j["body"]["add"].erase(3);
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
}

TEST_CASE("groupoid parser checks composability") {
  std::string good =
      emit_structure({StructureKind::gg, pair_gg(cyclic_group(2))});
  using nlohmann::ordered_json;
  ordered_json j = ordered_json::parse(good);

  SUBCASE("non-composable pair") {
    j["body"]["groupoid"]["comp"].push_back({"(0,1)", "(0,1)", "(0,0)"});
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
  SUBCASE("duplicate composite") {
    auto first = j["body"]["groupoid"]["comp"][0];
    j["body"]["groupoid"]["comp"].push_back(first);
    CHECK_THROWS_AS(parse_structure(j.dump()), SchemaError);
  }
}

TEST_CASE("reports serialize to json") {
  ValidationReport r = validate_cgroup(fixtures::mac_lane_z4());
  nlohmann::json j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["subject"] == "cgroup");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == r.checks.size());
}

TEST_CASE("cli validates structures") {
  TempDir tmp;
  std::string ok_path = tmp.write({StructureKind::cgroup, fixtures::mac_lane_z4()}, "ml.json");
  CHECK(cli({"validate", ok_path}) == 0);
  CHECK(cli({"validate", ok_path, "--as", "cgroup"}) == 0);
  CHECK(cli({"validate", ok_path, "--as", "xmod"}) == 2);

  CGroup broken = to_cgroup(cyclic_group(4));
  broken.neg[1] = 1;
  std::string bad_path = tmp.write({StructureKind::cgroup, broken}, "bad.json");
  CHECK(cli({"validate", bad_path}) == 1);

  CHECK(cli({"validate", tmp.file("missing.json")}) == 2);

  std::string out;
  CHECK(cli({"--json", "validate", ok_path}, &out) == 0);
  nlohmann::json j = nlohmann::json::parse(out);
  CHECK(j["passed"] == true);
}

TEST_CASE("cli constructs and classifies") {
  TempDir tmp;
  std::string ml = tmp.write({StructureKind::cgroup, fixtures::mac_lane_z4()}, "ml.json");
  std::string q = tmp.file("q.json");
  CHECK(cli({"construct", "quotient", ml, "--out", q}) == 0);
  StructureFile qf = load_structure(q);
  CHECK(std::get<CGroup>(qf.body).size() == 2);

  std::string q2 = tmp.file("q2.json");
  CHECK(cli({"construct", "quotient", ml, "--subgroup", "0,2", "--out", q2}) == 0);
  CHECK(std::get<CGroup>(load_structure(q2).body).size() == 2);

  std::string act =
      tmp.write({StructureKind::action, fixtures::inversion_action()}, "act.json");
  std::string sd = tmp.file("sd.json");
  CHECK(cli({"construct", "semidirect", act, "--out", sd}) == 0);
  CHECK(std::get<CGroup>(load_structure(sd).body).size() == 6);
  CHECK(cli({"validate", sd}) == 0);

  std::string xm = tmp.write({StructureKind::xmod, inner_xmod(cyclic_group(3))}, "xm.json");
  std::string gg = tmp.file("gg.json");
  CHECK(cli({"construct", "gg-from-xmod", xm, "--out", gg}) == 0);
  CHECK(cli({"validate", gg}) == 0);
  std::string xm2 = tmp.file("xm2.json");
  CHECK(cli({"construct", "xmod-from-gg", gg, "--out", xm2}) == 0);
  CHECK(cli({"validate", xm2}) == 0);

  CHECK(cli({"construct", "cssc", gg, "--out", tmp.file("ccm.json")}) == 0);
  CHECK(cli({"classify", tmp.file("ccm.json")}) == 0);
  std::string out;
  CHECK(cli({"classify", ml}, &out) == 0);
  CHECK(out.find("c-abelian: yes") != std::string::npos);

  CHECK(cli({"construct", "widget", ml}) == 2);
  CHECK(cli({"construct", "cssc", ml}) == 2);  // wrong input kind
}

TEST_CASE("cli fixtures and checks") {
  TempDir tmp;
  std::string pair = tmp.file("pair.json");
  CHECK(cli({"fixture", "pair-gg", "--group", "s3", "--out", pair}) == 0);
  CHECK(cli({"validate", pair}) == 0);
  CHECK(cli({"check", "lemma-comm", pair}) == 0);
  CHECK(cli({"check", "lemma-comm", pair, "--scope", "isomorphic"}) == 1);

  std::string skel = tmp.file("skel.json");
  CHECK(cli({"fixture", "skeletal", "--out", skel}) == 0);
  std::string err;
  CHECK(cli({"construct", "cssc", skel}, nullptr, &err) == 1);
  CHECK(err.find("ambiguous") != std::string::npos);

  std::string ext =
      tmp.write({StructureKind::extension, fixtures::parity_extension()}, "ext.json");
  CHECK(cli({"check", "extension", ext}) == 0);

  std::string xm = tmp.file("inner.json");
  CHECK(cli({"fixture", "inner-xmod", "--group", "z3", "--out", xm}) == 0);
  CHECK(cli({"check", "roundtrip", xm}) == 0);

  CHECK(cli({"fixture", "widget"}) == 2);
  CHECK(cli({"check", "widget", pair}) == 2);
  CHECK(cli({"nonsense"}) == 2);
  CHECK(cli({}) == 2);
  CHECK(cli({"--help"}) == 0);
}
