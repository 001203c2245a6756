#include <coxbp/bp.hpp>
#include <coxbp/lehmer.hpp>
#include <coxbp/roots.hpp>

#include <benchmark/benchmark.h>

#include <map>
#include <numeric>
#include <random>

using namespace coxbp;

namespace {

const std::vector<Element>& group_of(const char* tag) {
  static std::map<std::string, std::vector<Element>> cache;
  auto it = cache.find(tag);
  if (it == cache.end()) it = cache.emplace(tag, enumerate_group(CoxeterSystem::parse(tag))).first;
  return it->second;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_bp_families_A4(benchmark::State& st) {
  const auto& ws = group_of("A4");
  for (auto _ : st) benchmark::DoNotOptimize(bp_families(ws, exec_of(st)));
}
BENCHMARK(BM_bp_families_A4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_oracles_B3(benchmark::State& st) {
  const auto& ws = group_of("B3");
  const auto* rs = &RootSystem::of(CoxeterSystem::parse("B3"));
  for (auto _ : st) benchmark::DoNotOptimize(compare_bp_tests(ws, rs, exec_of(st)));
}
BENCHMARK(BM_oracles_B3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_simple_head_F4(benchmark::State& st) {
  const auto& rs = RootSystem::of(CoxeterSystem::parse("F4"));
  for (auto _ : st) benchmark::DoNotOptimize(verify_simple_head_lemma(rs, exec_of(st)));
}
BENCHMARK(BM_simple_head_F4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_search_w0_B4(benchmark::State& st) {
  const auto sys = CoxeterSystem::parse("B4");
  const auto iv = bruhat_interval(longest_element(sys));
  for (auto _ : st) benchmark::DoNotOptimize(search_code(iv, 60, exec_of(st)));
}
BENCHMARK(BM_search_w0_B4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

std::vector<std::vector<int>> random_perms(int n, int count) {
  std::mt19937 rng(20240601);
  std::vector<std::vector<int>> out(count, std::vector<int>(n));
  for (auto& p : out) {
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
  }
  return out;
}

void BM_bp_poset_exhaustive(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto sys = CoxeterSystem::build("A", n - 1);
  std::vector<Element> ws;
  for (const auto& p : random_perms(n, 16)) ws.push_back(sys.from_one_line(p));
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(bp_poset(ws[i++ % ws.size()]));
}
BENCHMARK(BM_bp_poset_exhaustive)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_bp_poset_patterns(benchmark::State& st) {
  const auto ps = random_perms(static_cast<int>(st.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(typeA_bp_poset(ps[i++ % ps.size()]));
}
BENCHMARK(BM_bp_poset_patterns)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
