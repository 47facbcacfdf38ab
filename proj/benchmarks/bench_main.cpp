// Copyright 2026 The omegamon Authors.
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

#include <omegamon/burnside.hpp>
#include <omegamon/corpus.hpp>
#include <omegamon/identity.hpp>
#include <omegamon/languages.hpp>
#include <omegamon/monoid.hpp>
#include <omegamon/presentation.hpp>
#include <omegamon/provability.hpp>
#include <omegamon/pseudovariety.hpp>
#include <omegamon/regex.hpp>
#include <omegamon/syntactic.hpp>

namespace {

  using namespace omegamon;

  // Full transformation monoid T_n from its three standard generators.
  void BM_FullTransformationMonoid(benchmark::State& state) {
    auto const n = static_cast<std::uint32_t>(state.range(0));
    std::vector<std::uint32_t> cycle(n), swap(n), merge(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
      swap[i]  = i;
      merge[i] = i;
    }
    std::swap(swap[0], swap[1]);
    merge[n - 1] = 0;
    std::vector<Transformation> const gens{Transformation(cycle), Transformation(swap),
                                           Transformation(merge)};
    for (auto _ : state) {
      benchmark::DoNotOptimize(from_generators(gens).size());
    }
  }
  BENCHMARK(BM_FullTransformationMonoid)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

  void BM_SyntacticL2(benchmark::State& state) {
    Dfa const L2 = lang_L2();
    for (auto _ : state) {
      benchmark::DoNotOptimize(syntactic_ordered_monoid(L2).monoid().size());
    }
  }
  BENCHMARK(BM_SyntacticL2)->Unit(benchmark::kMillisecond);

  void BM_CheckIdentityAbcdbdc(benchmark::State& state) {
    auto const S  = syntactic_ordered_monoid(compile("(abcdbdc)*", "abcd"));
    auto const id = equation("(yztytzx)^w", "(xyztytz)^w");
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_identity(S.monoid(), id).holds);
    }
  }
  BENCHMARK(BM_CheckIdentityAbcdbdc)->Unit(benchmark::kMillisecond);

  void BM_BurnsideEnumerate(benchmark::State& state) {
    std::string const gens = std::string("abcd").substr(0, static_cast<std::size_t>(state.range(0)));
    BurnsideOracle const B(gens, 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(B.enumerate().size());
    }
  }
  BENCHMARK(BM_BurnsideEnumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

  void BM_PairMonoidCorpus(benchmark::State& state) {
    auto const corpus = transformation_corpus(50, 2026);
    for (auto _ : state) {
      std::size_t pairs = 0;
      for (auto const& M : corpus) {
        pairs += pair_monoid(M, static_cast<unsigned>(state.range(0))).size();
      }
      benchmark::DoNotOptimize(pairs);
    }
  }
  BENCHMARK(BM_PairMonoidCorpus)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

  void BM_SurveyCorpus(benchmark::State& state) {
    auto const corpus = transformation_corpus(50, 2026);
    for (auto _ : state) {
      std::size_t members = 0;
      for (auto const& M : corpus) {
        for (auto const& r : survey(M, 2)) {
          members += r.member();
        }
      }
      benchmark::DoNotOptimize(members);
    }
  }
  BENCHMARK(BM_SurveyCorpus)->Unit(benchmark::kMillisecond);

  void BM_PresentationEx1(benchmark::State& state) {
    auto const p = builder_monoid_1(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_presentation(p).monoid.size());
    }
  }
  BENCHMARK(BM_PresentationEx1)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

  void BM_ProvableSquares(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(provable_leq("", "abcacb", 2).provable);
      benchmark::DoNotOptimize(provable_leq("ab", "aabbab", 2).provable);
    }
  }
  BENCHMARK(BM_ProvableSquares);

}  // namespace

BENCHMARK_MAIN();
