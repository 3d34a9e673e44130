// bench_main.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "submodal/builders.hpp"
#include "submodal/compiled.hpp"
#include "submodal/corpus.hpp"
#include "submodal/enumerate.hpp"
#include "submodal/modal.hpp"
#include "submodal/parse.hpp"
#include "submodal/transforms.hpp"
#include "submodal/verify.hpp"

using namespace submodal;

namespace {

FiniteModel sample_relation(int n) {
  FiniteModel m(corpus::signature("R"), n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a * 7 + b * 3) % 5 < 2) m.set_rel("R", {a, b}, true);
  return m;
}

void BM_evaluate_serial(benchmark::State& state) {
  FiniteModel m = sample_relation(static_cast<int>(state.range(0)));
  CompiledFormula cf(
      parse_formula("(forall (x) (exists (y) (R x y)))", m.signature()),
      m.signature());
  for (auto _ : state) benchmark::DoNotOptimize(cf.eval_closed(m));
}
BENCHMARK(BM_evaluate_serial)->Arg(5)->Arg(8);

void BM_theta_semantic(benchmark::State& state) {
  FiniteModel m = sample_relation(static_cast<int>(state.range(0)));
  Formula dom = parse_formula("(exists (x) (forall (y) (R x y)))",
                              m.signature());
  for (auto _ : state) benchmark::DoNotOptimize(theta_le_sem(m, dom, 3));
}
BENCHMARK(BM_theta_semantic)->Arg(5)->Arg(8);

void BM_theta_built(benchmark::State& state) {
  FiniteModel m = sample_relation(static_cast<int>(state.range(0)));
  Formula dom = parse_formula("(exists (x) (forall (y) (R x y)))",
                              m.signature());
  Formula built = build_theta_le(dom, m.signature(), 3);
  CompiledFormula cf(built, m.signature().with_equality());
  for (auto _ : state) benchmark::DoNotOptimize(cf.eval_closed(m));
}
BENCHMARK(BM_theta_built)->Arg(5)->Arg(8);

void BM_group_enumeration(benchmark::State& state) {
  const Signature& tau = corpus::signature("group");
  Formula axioms = corpus::group_axioms();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_model(tau, n, &axioms, [&](const FiniteModel&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_group_enumeration)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_extension_search(benchmark::State& state) {
  const Signature& tau = corpus::signature("group");
  Formula axioms = corpus::group_axioms();
  FiniteModel c2(tau, 2);
  c2.set_fun("mul", {0, 1}, 1);
  c2.set_fun("mul", {1, 0}, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        theta_star_sem(c2, axioms, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_extension_search)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_monadic_closed_form(benchmark::State& state) {
  const Signature& pq = corpus::signature("PQ");
  Formula f = parse_formula(
      "(forall (x) (exists (y) (or (and (P x) (Q y)) (not (Q y)))))", pq);
  for (auto _ : state) benchmark::DoNotOptimize(build_theta_monadic(f, pq));
}
BENCHMARK(BM_monadic_closed_form);

}  // namespace

BENCHMARK_MAIN();
