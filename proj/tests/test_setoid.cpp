#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cgr/setoid.hpp"

using namespace cgr;

TEST_CASE("discrete setoid") {
  FiniteSetoid s = FiniteSetoid::discrete({"a", "b", "c"});
  CHECK(s.size() == 3);
  CHECK(s.is_discrete());
  CHECK(!s.is_total());
  CHECK(s.related(1, 1));
  CHECK(!s.related(0, 1));
  CHECK(s.index_of("b") == 1);
  CHECK(!s.find("d").has_value());
  CHECK_THROWS_AS((void)s.index_of("d"), SchemaError);
}

TEST_CASE("partition setoid") {
  FiniteSetoid s = FiniteSetoid::from_partition({"0", "1", "2", "3"}, {{"0", "2"}, {"1", "3"}});
  CHECK(s.related(0, 2));
  CHECK(s.related(1, 3));
  CHECK(!s.related(0, 1));
  CHECK(s.block_of(2) == 0);
  CHECK(!s.is_discrete());
  CHECK(!s.is_total());

  FiniteSetoid t = FiniteSetoid::from_partition({"x", "y"}, {{"y", "x"}});
  CHECK(t.is_total());
  CHECK(t.related(0, 1));
}

TEST_CASE("partition must be exact") {
  CHECK_THROWS_AS(FiniteSetoid::from_partition({"a", "b"}, {{"a"}}), SchemaError);
  CHECK_THROWS_AS(FiniteSetoid::from_partition({"a", "b"}, {{"a", "b"}, {"a"}}), SchemaError);
  CHECK_THROWS_AS(FiniteSetoid::from_partition({"a", "b"}, {{"a", "c"}, {"b"}}), SchemaError);
  CHECK_THROWS_AS(FiniteSetoid::discrete({"a", "a"}), SchemaError);
}

TEST_CASE("congruence closure with canonical blocks") {
  FiniteSetoid s = build_congruence({"p", "q", "r", "s"}, {{"p", "r"}, {"r", "p"}, {"s", "s"}});
  CHECK(s.related(0, 2));
  CHECK(!s.related(0, 1));
  CHECK(s.blocks() == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});

  FiniteSetoid chain = build_congruence({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.is_total());
}

TEST_CASE("product setoid relates componentwise") {
  FiniteSetoid s = FiniteSetoid::from_partition({"0", "1"}, {{"0"}, {"1"}});
  FiniteSetoid t = FiniteSetoid::from_partition({"x", "y"}, {{"x", "y"}});
  FiniteSetoid p = product_setoid(s, t);
  CHECK(p.size() == 4);
  CHECK(p.index_of("(0,x)") == 0);
  CHECK(p.related(p.index_of("(0,x)"), p.index_of("(0,y)")));
  CHECK(!p.related(p.index_of("(0,x)"), p.index_of("(1,x)")));
}

TEST_CASE("setoid maps preserve relations") {
  FiniteSetoid s = FiniteSetoid::from_partition({"0", "1", "2", "3"}, {{"0", "2"}, {"1", "3"}});
  FiniteSetoid t = FiniteSetoid::discrete({"even", "odd"});
  SetoidMap parity = SetoidMap::make(s, t, {0, 1, 0, 1});
  CHECK(is_setoid_map(parity).passed());

  SetoidMap bad = SetoidMap::make(s, t, {0, 1, 1, 1});
  ValidationReport r = is_setoid_map(bad);
  CHECK(!r.passed());
  CHECK(r.first_failure()->axiom == "map.preserves-relation");
}

TEST_CASE("setoid map table is shape checked") {
  FiniteSetoid s = FiniteSetoid::discrete({"a"});
  FiniteSetoid t = FiniteSetoid::discrete({"x"});
  CHECK_THROWS_AS(SetoidMap::make(s, t, {0, 0}), SchemaError);
  CHECK_THROWS_AS(SetoidMap::make(s, t, {1}), SchemaError);
  CHECK_THROWS_AS(SetoidMap::make_by_ids(s, t, {"zz"}), SchemaError);
}

TEST_CASE("random partitions round through blocks") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    int extra = static_cast<int>(rng() % 6);
    for (int k = 0; k < extra; ++k)
      pairs.push_back({ids[rng() % n], ids[rng() % n]});
    FiniteSetoid s = build_congruence(ids, pairs);

    // Relatedness is an equivalence containing every generator.
    for (const auto& [x, y] : pairs) CHECK(s.related(s.index_of(x), s.index_of(y)));
    for (int a = 0; a < n; ++a) {
      CHECK(s.related(a, a));
      for (int b = 0; b < n; ++b) {
        CHECK(s.related(a, b) == s.related(b, a));
        for (int c = 0; c < n; ++c)
          if (s.related(a, b) && s.related(b, c)) CHECK(s.related(a, c));
      }
    }

    // Rebuilding from the produced blocks is identity.
    std::vector<std::vector<std::string>> blocks;
    for (const auto& blk : s.blocks()) {
      std::vector<std::string> names;
      for (int i : blk) names.push_back(s.name(i));
      blocks.push_back(names);
    }
    CHECK(FiniteSetoid::from_partition(ids, blocks) == s);
  }
}
