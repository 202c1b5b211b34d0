#pragma once

#include <string>
#include <vector>

#include "gkat/alphabet.hpp"
#include "gkat/expr.hpp"

namespace gkat {

enum class BenchSuite { IfElse, While };
enum class Learner { GlStar, LStar };

struct BenchRecord {
    std::string suite;
    std::size_t n_tests = 0;
    std::size_t n_actions = 0;
    std::string algo;
    std::size_t membership_queries = 0;
    std::size_t equivalence_queries = 0;
    std::size_t states = 0;
    double seconds = 0.0;
};

BenchSuite parse_suite(const std::string& name);
std::string suite_name(BenchSuite s);
std::string learner_name(Learner l);

// Tests t1..tn; ifelse uses actions p1..p3, while uses p1..p2.
Alphabet bench_alphabet(BenchSuite suite, std::size_t n_tests);
Expr bench_expr(BenchSuite suite, const Alphabet& alphabet);

BenchRecord run_bench(BenchSuite suite, std::size_t n_tests, Learner learner);
// Runs every (n, learner) cell, possibly concurrently; records come back in
// (n, GL*, L*) order.
std::vector<BenchRecord> run_bench_range(BenchSuite suite, std::size_t n_min, std::size_t n_max,
                                         bool parallel = true);

// Columns suite,n_tests,algo,membership_queries,equivalence_queries,states.
std::string bench_csv(const std::vector<BenchRecord>& records, bool with_header = true);

}  // namespace gkat
