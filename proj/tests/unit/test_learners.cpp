#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gkat;
using fixtures::kB;
using fixtures::kNotB;
using fixtures::kP;
using fixtures::kQ;

namespace {

GuardedWord gw(const std::string& text) { return parse_guarded_word(text, fixtures::bpq()); }
GuardedString gs(const std::string& text) { return parse_guarded_string(text, fixtures::bpq()); }

std::size_t count_ones(const GLTable& t, const GuardedWord& w) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < t.columns().size(); ++c) n += t.cell(w, c) == 1;
    return n;
}

// Moore-state count of the minimal target, used by the query bound.
std::size_t moore_size(const Alphabet& al, const Expr& e) {
    return moore_minimise(to_moore(minimise(expr_to_automaton(al, e)))).num_states();
}

}  // namespace

TEST_CASE("teachers count queries") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher t = make_guarded_teacher(al, fixtures::while_then_q(al));
    CHECK(t.membership(gs("!b q b")));
    CHECK(t.membership_queries() == 1);
    CHECK_FALSE(t.equivalence(t.target()).has_value());
    CHECK(t.equivalence_queries() == 1);

    MooreTeacher m = make_moore_teacher(al, fixtures::while_then_q(al));
    CHECK(m.membership({al.letter(kNotB, kQ)}) == MooreOutput{true, true});
    CHECK(m.membership_queries() == 2);

    GuardedTeacher dedup = make_guarded_teacher(al, fixtures::while_then_q(al), QueryAccounting::PerDistinctString);
    dedup.membership(gs("b"));
    dedup.membership(gs("b"));
    CHECK(dedup.membership_queries() == 1);
}

TEST_CASE("worked GL* run, step by step") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher teacher = make_guarded_teacher(al, fixtures::while_then_q(al));
    GLTable table(al);
    GlStats stats;
    gl_fill(table, teacher, {}, stats);
    CHECK(gl_check_table(table).empty());

    // initial table is not closed: row !b q is non-zero and new
    auto defect = gl_closedness_defect(table);
    REQUIRE(defect.has_value());
    CHECK(*defect == gw("!b q"));
    table.add_upper(*defect);
    gl_fill(table, teacher, {}, stats);
    CHECK(gl_check_table(table).empty());
    CHECK_FALSE(gl_closedness_defect(table).has_value());
    CHECK(count_ones(table, gw("!b q")) == 2);

    // second hypothesis has no b-loop yet
    GAutomaton h2 = gl_hypothesis(table);
    CHECK(h2.num_states() == 2);
    CHECK(h2.at(0, kB).is_reject());
    auto cex = teacher.equivalence(h2);
    REQUIRE(cex.has_value());
    CHECK(*cex == gs("b p !b q b"));

    GLTable optimized = table;
    const std::size_t before = table.columns().size();
    gl_handle_cex(table, teacher, *cex, false);
    CHECK(table.columns().size() == before + 2);
    CHECK(table.column_index(gs("b p !b q b")).has_value());
    CHECK(table.column_index(gs("!b q b")).has_value());

    GuardedString z = gl_handle_cex(optimized, teacher, *cex, true);
    CHECK(z == gs("!b q b"));
    CHECK(optimized.columns().size() == before + 1);

    gl_fill(table, teacher, {}, stats);
    CHECK(gl_check_table(table).empty());
    CHECK_FALSE(gl_closedness_defect(table).has_value());
    CHECK(count_ones(table, gw("b p")) > 0);
    CHECK(count_ones(table, gw("b q")) == 0);
    CHECK(g_isomorphic(gl_hypothesis(table), fixtures::golden_gl_result()));
}

TEST_CASE("zero inference fills blocks without queries") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher teacher = make_guarded_teacher(al, fixtures::while_then_q(al));
    GLTable table(al);
    GlStats stats;
    gl_fill(table, teacher, {}, stats);
    table.add_upper(gw("!b q"));
    // row !b q accepts both atoms, so its whole extension block is zero
    GlOptions infer;
    infer.infer_zeros = true;
    const std::size_t q0 = teacher.membership_queries();
    gl_fill(table, teacher, infer, stats);
    for (const char* row : {"!b q b p", "!b q b q", "!b q !b p", "!b q !b q"})
        for (std::size_t c = 0; c < table.columns().size(); ++c) {
            CHECK(table.cell(gw(row), c) == 0);
            CHECK(table.source(gw(row), c) == CellSource::Inferred);
        }
    CHECK(teacher.membership_queries() - q0 == 0);
    CHECK(stats.inferred_cells == 8);
}

TEST_CASE("zero inference from a non-zero sibling row") {
    const Alphabet al = fixtures::bpq();
    GLTable table(al);
    table.add_column(gs("!b q b"));
    const std::size_t col = *table.column_index(gs("!b q b"));
    for (std::size_t c = 0; c < table.columns().size(); ++c) table.set_cell(GuardedWord{}, c, false, CellSource::Queried);
    table.set_cell(gw("b p"), col, true, CellSource::Queried);
    CHECK(gl_infer_zeros(table, GuardedWord{}, kB) == table.columns().size());
    for (std::size_t c = 0; c < table.columns().size(); ++c) CHECK(table.cell(gw("b q"), c) == 0);
    // nothing known to be non-zero under !b: no inference
    CHECK(gl_infer_zeros(table, GuardedWord{}, kNotB) == 0);
    table.set_cell(gw("!b p"), col, true, CellSource::Queried);
    table.set_cell(gw("!b q"), col, true, CellSource::Queried);
    CHECK_THROWS_AS(gl_infer_zeros(table, GuardedWord{}, kNotB), DeterminismViolation);
}

TEST_CASE("hypothesis of an all-zero table") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher teacher = make_guarded_teacher(al, e_test(b_zero()));
    GLTable table(al);
    GlStats stats;
    gl_fill(table, teacher, {}, stats);
    CHECK_FALSE(gl_closedness_defect(table).has_value());
    GAutomaton h = gl_hypothesis(table);
    CHECK(h.num_states() == 1);
    for (AtomId a : atoms_of(al)) CHECK(h.at(0, a).is_reject());

    GuardedTeacher t2 = make_guarded_teacher(al, e_test(b_zero()));
    GlResult r = gl_star(t2);
    CHECK(r.automaton.num_states() == 1);
    CHECK(r.stats.failed_equivalence_queries == 0);
}

TEST_CASE("bare-atom counterexample is its own shortening") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher teacher = make_guarded_teacher(al, e_test(b_test(0)));
    GLTable table(al);
    GlStats stats;
    gl_fill(table, teacher, {}, stats);
    CHECK(gl_shorten_cex(table, teacher, gs("b")) == gs("b"));
    CHECK_THROWS_AS(gl_handle_cex(table, teacher, gs("b"), true), InputError);
}

TEST_CASE("worked GL* run end to end") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher teacher = make_guarded_teacher(al, fixtures::while_then_q(al));
    GlResult r = gl_star(teacher);
    CHECK(g_isomorphic(r.automaton, fixtures::golden_gl_result()));
    CHECK_FALSE(r.stats.initial_table_closed);
    CHECK(r.stats.failed_equivalence_queries == 1);
    CHECK(r.stats.membership_queries == 36);

    GuardedTeacher t2 = make_guarded_teacher(al, fixtures::while_then_q(al));
    GlOptions opt;
    opt.optimized_cex = true;
    GlResult o = gl_star(t2, opt);
    CHECK(g_isomorphic(o.automaton, r.automaton));
    CHECK(o.stats.membership_queries <= 36);
    CHECK(o.table.columns().size() <= r.table.columns().size());
}

TEST_CASE("worked L* run") {
    const Alphabet al = fixtures::bpq();
    MooreTeacher teacher = make_moore_teacher(al, fixtures::while_then_q(al));
    LStarResult r = l_star(teacher);
    CHECK(moore_isomorphic(r.automaton, fixtures::golden_moore()));
    CHECK(r.stats.membership_queries == 78);
    REQUIRE(r.stats.counterexamples.size() == 1);
    CHECK(r.stats.counterexamples[0] == MooreWord{al.letter(kB, kQ), al.letter(kNotB, kQ)});

    MooreTeacher zero = make_moore_teacher(al, e_test(b_zero()));
    CHECK(l_star(zero).automaton.num_states() == 1);
}

TEST_CASE("published query counts for one and two tests") {
    const Alphabet one({"t1"}, {"p1", "p2", "p3"});
    GuardedTeacher t = make_guarded_teacher(one, parse_expr("if t1 then do p1 else do p2", one));
    CHECK(gl_star(t).stats.membership_queries == 26);

    const Alphabet two({"t1", "t2"}, {"p1", "p2", "p3"});
    MooreTeacher m = make_moore_teacher(two, parse_expr("if t1 then do p1 else do p2", two));
    LStarResult r = l_star(m);
    CHECK(r.stats.membership_queries == 444);
    CHECK(r.automaton.num_states() == 3);
}

TEST_CASE("table stays well formed at every step") {
    std::mt19937 rng(41);
    for (int i = 0; i < 150; ++i) {
        const Alphabet al = oracle::random_alphabet(rng);
        const Expr e = oracle::random_expr(rng, al, 4);
        INFO(to_string(e, al));
        GuardedTeacher teacher = make_guarded_teacher(al, e);
        GlOptions opt;
        opt.infer_zeros = rng() % 2 == 0;
        GLTable table(al);
        GlStats stats;
        auto check = [&] {
            auto problems = gl_check_table(table);
            CHECK(problems.empty());
        };
        gl_fill(table, teacher, opt, stats);
        check();
        for (int round = 0; round < 20; ++round) {
            while (auto d = gl_closedness_defect(table)) {
                table.add_upper(*d);
                check();
                gl_fill(table, teacher, opt, stats);
                check();
            }
            GAutomaton h = gl_hypothesis(table);
            for (const auto& s : table.upper())
                for (std::size_t c = 0; c < table.columns().size(); ++c)
                    CHECK(g_accepts(h, concat(s, table.columns()[c])) == (table.cell(s, c) == 1));
            auto cex = teacher.equivalence(h);
            if (!cex) break;
            gl_handle_cex(table, teacher, *cex, rng() % 2 == 0);
            check();
            gl_fill(table, teacher, opt, stats);
            check();
        }
    }
}

TEST_CASE("GL* learns the minimal automaton of 500 random expressions") {
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Alphabet al = oracle::random_alphabet(rng);
        const Expr e = oracle::random_expr(rng, al, 4);
        INFO(to_string(e, al));
        const GAutomaton target = minimise(expr_to_automaton(al, e));

        GuardedTeacher plain = make_guarded_teacher(al, e);
        GlResult r = gl_star(plain);
        CHECK(g_isomorphic(r.automaton, target));

        GuardedTeacher opt_teacher = make_guarded_teacher(al, e);
        GlOptions opt;
        opt.optimized_cex = true;
        GlResult o = gl_star(opt_teacher, opt);
        CHECK(g_isomorphic(o.automaton, target));

        GuardedTeacher verify_teacher = make_guarded_teacher(al, e);
        GlOptions verify;
        verify.verify_inferred = true;
        GlResult v = gl_star(verify_teacher, verify);
        CHECK(g_isomorphic(v.automaton, target));
        CHECK(v.stats.verification_queries == v.stats.inferred_cells);

        // query bound in the minimal Moore size and the longest counterexample
        const std::size_t n = moore_size(al, e), at = al.num_atoms(), sigma = al.num_actions();
        std::size_t m = 0;
        for (const auto& z : r.stats.counterexamples) m = std::max(m, z.length() + 1);
        if (n >= 2) CHECK(r.stats.membership_queries <= ((n - 1) + (n - 1) * at * sigma) * (at + m * (n - 1)));

        MooreTeacher mt = make_moore_teacher(al, e);
        LStarResult l = l_star(mt);
        CHECK(moore_isomorphic(l.automaton, moore_minimise(to_moore(target))));
    }
}

TEST_CASE("inferred zeros are confirmed by re-query") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (BenchSuite s : {BenchSuite::IfElse, BenchSuite::While}) {
            const Alphabet al = bench_alphabet(s, n);
            GuardedTeacher t = make_guarded_teacher(al, bench_expr(s, al));
            GlOptions verify;
            verify.verify_inferred = true;
            GlResult r = gl_star(t, verify);
            CHECK(r.stats.inferred_cells > 0);
            CHECK(r.stats.verification_queries == r.stats.inferred_cells);
            CHECK(g_isomorphic(r.automaton, minimise(expr_to_automaton(al, bench_expr(s, al)))));
        }
}

TEST_CASE("transcripts and table CSV") {
    const Alphabet al = fixtures::bpq();
    GuardedTeacher t = make_guarded_teacher(al, fixtures::while_then_q(al));
    GlOptions opt;
    opt.record_transcript = true;
    GlResult r = gl_star(t, opt);
    const std::string csv = r.transcript.csv();
    CHECK(csv.rfind("step,kind,payload\n", 0) == 0);
    CHECK(csv.find("cex,b p !b q b") != std::string::npos);
    const std::string table = gl_table_csv(r.table);
    CHECK(table.rfind("row,part,b,!b", 0) == 0);
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
