#include "gkat/bench.hpp"

#include <chrono>
#include <future>

#include "gkat/errors.hpp"
#include "gkat/gl_star.hpp"
#include "gkat/l_star.hpp"

namespace gkat {

BenchSuite parse_suite(const std::string& name) {
    if (name == "ifelse") return BenchSuite::IfElse;
    if (name == "while") return BenchSuite::While;
    throw InputError("unknown suite '" + name + "' (expected ifelse or while)");
}

std::string suite_name(BenchSuite s) { return s == BenchSuite::IfElse ? "ifelse" : "while"; }
std::string learner_name(Learner l) { return l == Learner::GlStar ? "gl" : "lstar"; }

Alphabet bench_alphabet(BenchSuite suite, std::size_t n_tests) {
    std::vector<std::string> tests;
    for (std::size_t i = 1; i <= n_tests; ++i) tests.push_back("t" + std::to_string(i));
    std::vector<std::string> actions{"p1", "p2"};
    if (suite == BenchSuite::IfElse) actions.push_back("p3");
    return Alphabet(std::move(tests), std::move(actions));
}

Expr bench_expr(BenchSuite suite, const Alphabet& alphabet) {
    return parse_expr(suite == BenchSuite::IfElse ? "if t1 then do p1 else do p2" : "(while t1 do p1); do p2",
                      alphabet);
}

BenchRecord run_bench(BenchSuite suite, std::size_t n_tests, Learner learner) {
    const auto start = std::chrono::steady_clock::now();
    Alphabet alphabet = bench_alphabet(suite, n_tests);
    Expr e = bench_expr(suite, alphabet);
    BenchRecord rec;
    rec.suite = suite_name(suite);
    rec.n_tests = n_tests;
    rec.n_actions = alphabet.num_actions();
    rec.algo = learner_name(learner);
    if (learner == Learner::GlStar) {
        GuardedTeacher teacher = make_guarded_teacher(alphabet, e);
        GlResult r = gl_star(teacher);
        rec.membership_queries = r.stats.membership_queries;
        rec.equivalence_queries = r.stats.equivalence_queries;
        rec.states = r.automaton.num_states();
    } else {
        MooreTeacher teacher = make_moore_teacher(alphabet, e);
        LStarResult r = l_star(teacher);
        rec.membership_queries = r.stats.membership_queries;
        rec.equivalence_queries = r.stats.equivalence_queries;
        rec.states = r.automaton.num_states();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<BenchRecord> run_bench_range(BenchSuite suite, std::size_t n_min, std::size_t n_max, bool parallel) {
    if (n_min < 1 || n_max > Alphabet::kMaxTests || n_min > n_max) throw InputError("bad test-count range");
    std::vector<std::future<BenchRecord>> jobs;
    for (std::size_t n = n_min; n <= n_max; ++n)
        for (Learner l : {Learner::GlStar, Learner::LStar})
            jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                                      [=] { return run_bench(suite, n, l); }));
    std::vector<BenchRecord> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool with_header) {
    std::string out = with_header ? "suite,n_tests,algo,membership_queries,equivalence_queries,states\n" : "";
    for (const auto& r : records)
        out += r.suite + "," + std::to_string(r.n_tests) + "," + r.algo + "," +
               std::to_string(r.membership_queries) + "," + std::to_string(r.equivalence_queries) + "," +
               std::to_string(r.states) + "\n";
    return out;
}

}  // namespace gkat
