#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gkat/bench.hpp"
#include "gkat/closure.hpp"

namespace {

void learn(benchmark::State& state, gkat::BenchSuite suite, gkat::Learner learner) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::size_t mq = 0;
    for (auto _ : state) {
        const gkat::BenchRecord r = gkat::run_bench(suite, n, learner);
        mq = r.membership_queries;
        benchmark::DoNotOptimize(mq);
    }
    state.counters["membership_queries"] = static_cast<double>(mq);
}

void canon(benchmark::State& state, gkat::Construction con, const char* regex) {
    const std::vector<std::string> alphabet{"a", "b"};
    std::size_t states = 0;
    for (auto _ : state) {
        const gkat::CanonResult r = gkat::canonize(regex, alphabet, con);
        states = gkat::num_states(r.automaton);
        benchmark::DoNotOptimize(states);
    }
    state.counters["states"] = static_cast<double>(states);
}

using gkat::BenchSuite;
using gkat::Construction;
using gkat::Learner;

BENCHMARK_CAPTURE(learn, ifelse_gl, BenchSuite::IfElse, Learner::GlStar)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(learn, ifelse_lstar, BenchSuite::IfElse, Learner::LStar)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(learn, while_gl, BenchSuite::While, Learner::GlStar)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(learn, while_lstar, BenchSuite::While, Learner::LStar)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(canon, rfsa, Construction::Rfsa, "(a+b)*a");
BENCHMARK_CAPTURE(canon, atomaton, Construction::Atomaton, "(a+b)*a");
BENCHMARK_CAPTURE(canon, distromaton, Construction::Distromaton, "(a+b)*a");
BENCHMARK_CAPTURE(canon, xor, Construction::Xor, "(a+b)*a");
BENCHMARK_CAPTURE(canon, xorcaba, Construction::XorCaba, "(a+b)*a");
BENCHMARK_CAPTURE(canon, rfsa_third_last, Construction::Rfsa, "(a+b)*a(a+b)(a+b)");
BENCHMARK_CAPTURE(canon, xor_third_last, Construction::Xor, "(a+b)*a(a+b)(a+b)");

}  // namespace

BENCHMARK_MAIN();
