// Copyright 2026 The atensor Authors.
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

#include <sstream>

#include "atensor/relations.hpp"
#include "atensor/session.hpp"
#include "atensor/simplify.hpp"

namespace {

using namespace atensor;

constexpr const char* kDeclarations =
    "tensor a2, s2, a3, ri;"
    "tsym a2(i,j)+a2(j,i);"
    "tsym s2(i,j)-s2(j,i);"
    "tsym a3(i,j,k)+a3(j,i,k), a3(i,j,k)-a3(j,k,i);"
    "tsym ri(i,j,k,l)+ri(j,i,k,l), ri(i,j,k,l)+ri(i,j,l,k),"
    "     ri(i,j,k,l)+ri(i,k,l,j)+ri(i,l,j,k);";

struct Fixture {
  std::ostringstream out, err;
  Session session{out, err};
  Fixture() { session.run(kDeclarations); }
  TensorExpr expr(const char* text) {
    return session.normalize(session.evaluate(*parse_expression(text)));
  }
};

void BM_K0Riemann(benchmark::State& state) {
  for (auto _ : state) {
    std::ostringstream out, err;
    Session s(out, err);
    s.run("tensor ri; tsym ri(i,j,k,l)+ri(j,i,k,l), ri(i,j,k,l)+ri(i,j,l,k),"
          " ri(i,j,k,l)+ri(i,k,l,j)+ri(i,l,j,k);");
    benchmark::DoNotOptimize(s.registry().k0("ri").dim());
  }
}
BENCHMARK(BM_K0Riemann)->Unit(benchmark::kMillisecond);

void BM_ProductBasisS2A3(benchmark::State& state) {
  Fixture f;
  const auto header = f.expr("s2(i,j)*a3(k,l,m)").header;
  for (auto _ : state) benchmark::DoNotOptimize(product_basis(header, f.session.registry()).dim());
}
BENCHMARK(BM_ProductBasisS2A3)->Unit(benchmark::kMillisecond);

void BM_SimplifyContraction(benchmark::State& state) {
  Fixture f;
  const auto e = f.expr("(ri(i,j,k,l)-ri(i,k,j,l))*a2(i,j)");
  for (auto _ : state) benchmark::DoNotOptimize(simplify(e, f.session.registry()).vec.size());
}
BENCHMARK(BM_SimplifyContraction)->Unit(benchmark::kMillisecond);

void BM_SieveRiemann(benchmark::State& state) {
  Fixture f;
  const KBasis b = f.session.registry().k0("ri");
  const auto v = f.expr("ri(i,j,k,l)+ri(j,k,l,i)+ri(k,l,i,j)+ri(l,i,j,k)").vec;
  for (auto _ : state) benchmark::DoNotOptimize(b.sieve(v).size());
}
BENCHMARK(BM_SieveRiemann);

}  // namespace

BENCHMARK_MAIN();
