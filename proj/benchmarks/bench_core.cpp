#include <benchmark/benchmark.h>

#include "cgr/actions.hpp"
#include "cgr/catgroup.hpp"
#include "cgr/cgroup.hpp"
#include "cgr/classical.hpp"
#include "cgr/cssc.hpp"

namespace {

using namespace cgr;

CAction inversion_action() {
  CGroup z2 = to_cgroup(cyclic_group(2));
  CGroup z3 = to_cgroup(cyclic_group(3));
  return CAction{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
}

void bm_validate_cgroup_semidirect(benchmark::State& state) {
  CGroup g = semidirect(inversion_action()).group;
  for (auto _ : state) benchmark::DoNotOptimize(validate_cgroup(g).passed());
}
BENCHMARK(bm_validate_cgroup_semidirect);

void bm_validate_catgroup_pair_s3(benchmark::State& state) {
  CategoricalGroup c = catgroup_from_gg(pair_gg(symmetric3()));
  for (auto _ : state) benchmark::DoNotOptimize(validate_categorical_group(c).passed());
}
BENCHMARK(bm_validate_catgroup_pair_s3);

void bm_special_closure_pair_s3(benchmark::State& state) {
  CategoricalGroup c = catgroup_from_gg(pair_gg(symmetric3()));
  for (auto _ : state) benchmark::DoNotOptimize(special_closure(c).members.size());
}
BENCHMARK(bm_special_closure_pair_s3);

void bm_lemma_comm_pair_s3(benchmark::State& state) {
  CategoricalGroup c = catgroup_from_gg(pair_gg(symmetric3()));
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma_comm(c).passed());
}
BENCHMARK(bm_lemma_comm_pair_s3);

void bm_build_cssc_pair_s3(benchmark::State& state) {
  CategoricalGroup c = catgroup_from_gg(pair_gg(symmetric3()));
  for (auto _ : state) benchmark::DoNotOptimize(build_cssc(c).ok);
}
BENCHMARK(bm_build_cssc_pair_s3);

void bm_iso_search_semidirect_s3(benchmark::State& state) {
  CGroup a = semidirect(inversion_action()).group;
  CGroup b = to_cgroup(symmetric3());
  for (auto _ : state)
    benchmark::DoNotOptimize(search_c_isomorphism(a, b).status == SearchStatus::found);
}
BENCHMARK(bm_iso_search_semidirect_s3);

}  // namespace

BENCHMARK_MAIN();
