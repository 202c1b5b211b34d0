#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gkat;

TEST_CASE("benchmark rows for small n") {
    const auto ife = run_bench_range(BenchSuite::IfElse, 1, 4);
    const auto whl = run_bench_range(BenchSuite::While, 1, 4);
    const std::vector<std::size_t> ife_gl{26, 100, 392, 1552}, ife_l{114, 444, 1752, 6960};
    const std::vector<std::size_t> whl_gl{36, 102, 330, 1170}, whl_l{78, 300, 1176, 4656};
    REQUIRE(ife.size() == 8);
    REQUIRE(whl.size() == 8);
    for (std::size_t n = 0; n < 4; ++n) {
        CHECK(ife[2 * n].algo == "gl");
        CHECK(ife[2 * n].membership_queries == ife_gl[n]);
        CHECK(ife[2 * n + 1].membership_queries == ife_l[n]);
        CHECK(whl[2 * n].membership_queries == whl_gl[n]);
        CHECK(whl[2 * n + 1].membership_queries == whl_l[n]);
        CHECK(ife[2 * n].states == 2);
        CHECK(whl[2 * n + 1].states == 3);
    }
}

TEST_CASE("GL* beats L* with a growing margin") {
    for (BenchSuite s : {BenchSuite::IfElse, BenchSuite::While}) {
        const auto rows = run_bench_range(s, 1, 6);
        double last_ratio = 0;
        for (std::size_t i = 0; i < rows.size(); i += 2) {
            CHECK(rows[i].membership_queries < rows[i + 1].membership_queries);
            const double ratio = double(rows[i + 1].membership_queries) / double(rows[i].membership_queries);
            CHECK(ratio > last_ratio);
            last_ratio = ratio;
        }
    }
}

TEST_CASE("bench CSV is deterministic and parallelism does not change it") {
    const std::string a = bench_csv(run_bench_range(BenchSuite::While, 1, 5, true));
    const std::string b = bench_csv(run_bench_range(BenchSuite::While, 1, 5, false));
    CHECK(a == b);
    CHECK(a.rfind("suite,n_tests,algo,membership_queries,equivalence_queries,states\n", 0) == 0);
    CHECK(a.find("while,3,gl,330,") != std::string::npos);
    CHECK(a.find("while,3,lstar,1176,") != std::string::npos);
    CHECK(parse_suite("ifelse") == BenchSuite::IfElse);
    CHECK_THROWS_AS(parse_suite("loop"), InputError);
}

TEST_CASE("JSON exchange round-trips") {
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        const Alphabet al = oracle::random_alphabet(rng);
        const GAutomaton g = oracle::random_automaton(rng, al, 1 + rng() % 4);
        CHECK(g_automaton_from_json(to_json(g)) == g);
    }
    CHECK_THROWS_AS(g_automaton_from_json("{"), InputError);
    CHECK_THROWS_AS(g_automaton_from_json(R"({"tests":["b"],"actions":["p"],"initial":3,"states":[]})"), InputError);
}

TEST_CASE("DOT output") {
    const std::string g = to_dot(fixtures::golden_gl_result());
    CHECK(g.find("init -> q0") != std::string::npos);
    CHECK(g.find("q0 -> q0 [label=\"b|p\"]") != std::string::npos);
    CHECK(g.find("q0 -> q1 [label=\"!b|q\"]") != std::string::npos);
    const std::string m = to_dot(fixtures::golden_moore(), fixtures::bpq());
    CHECK(m.find("1b+1!b") != std::string::npos);
    const std::string x = to_dot(SuccinctAutomaton{fixtures::golden_xor()});
    CHECK(x.find("label=\"a +\"") != std::string::npos);
}
