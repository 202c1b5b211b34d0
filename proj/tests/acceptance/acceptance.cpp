// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: gkat_acceptance [--full] [--known-failure ACn]...
// Exit status is 0 when the set of failing criteria equals the set passed
// via --known-failure; the FAIL lines are printed either way.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gkat;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            if (!failures_.empty()) failures_ += "; ";
            failures_ += what;
        }
    }
    void note(const std::string& s) {
        if (!notes_.empty()) notes_ += ", ";
        notes_ += s;
    }
    Verdict verdict() const { return {pass_, pass_ ? notes_ : failures_ + (notes_.empty() ? "" : " | " + notes_)}; }

private:
    bool pass_ = true;
    std::string failures_;
    std::string notes_;
};

std::string str(std::size_t n) { return std::to_string(n); }

Verdict worked_gl_run() {
    Checker c;
    const Alphabet al = fixtures::bpq();
    GuardedTeacher t = make_guarded_teacher(al, fixtures::while_then_q(al));
    const GlResult r = gl_star(t);
    c.expect(g_isomorphic(r.automaton, fixtures::golden_gl_result()), "learned automaton differs from the golden one");
    c.expect(!r.stats.initial_table_closed, "initial table was closed");
    c.expect(r.stats.failed_equivalence_queries == 1,
             "failed equivalence queries = " + str(r.stats.failed_equivalence_queries));
    c.expect(r.stats.membership_queries == 36, "GL* membership queries = " + str(r.stats.membership_queries));
    MooreTeacher m = make_moore_teacher(al, fixtures::while_then_q(al));
    const LStarResult l = l_star(m);
    c.expect(l.stats.membership_queries == 78, "L* membership queries = " + str(l.stats.membership_queries));
    c.note("states " + str(r.automaton.num_states()) + ", GL* " + str(r.stats.membership_queries) + ", L* " +
           str(l.stats.membership_queries));
    return c.verdict();
}

Verdict worked_lstar_run() {
    Checker c;
    const Alphabet al = fixtures::bpq();
    MooreTeacher m = make_moore_teacher(al, fixtures::while_then_q(al));
    const LStarResult l = l_star(m);
    c.expect(moore_isomorphic(l.automaton, fixtures::golden_moore()), "learned Moore machine differs from the golden one");
    const MooreWord expected{al.letter(fixtures::kB, fixtures::kQ), al.letter(fixtures::kNotB, fixtures::kQ)};
    c.expect(!l.stats.counterexamples.empty() && l.stats.counterexamples.front() == expected,
             "first counterexample is not b q !b q");
    std::string cex;
    if (!l.stats.counterexamples.empty())
        for (LetterId x : l.stats.counterexamples.front()) cex += (cex.empty() ? "" : " ") + al.letter_name(x);
    c.note("states " + str(l.automaton.num_states()) + ", first counterexample [" + cex + "]");
    return c.verdict();
}

Verdict bench_tables(bool full) {
    Checker c;
    const std::vector<std::size_t> ife_gl{26, 100, 392, 1552, 6176, 24640, 98432, 393472, 1573376};
    const std::vector<std::size_t> ife_l{114, 444, 1752, 6960, 27744, 110784, 442752, 1770240, 7079424};
    const std::vector<std::size_t> whl_gl{36, 102, 330, 1170, 4386, 16962, 66690, 264450, 1053186};
    const std::vector<std::size_t> whl_l{78, 300, 1176, 4656, 18528, 73920, 295296, 1180416, 4720128};
    const std::size_t n_max = full ? 9 : 7;
    std::size_t exact = 0;
    for (BenchSuite s : {BenchSuite::IfElse, BenchSuite::While}) {
        const auto& gl = s == BenchSuite::IfElse ? ife_gl : whl_gl;
        const auto& ls = s == BenchSuite::IfElse ? ife_l : whl_l;
        const auto rows = run_bench_range(s, 1, n_max);
        for (std::size_t n = 1; n <= n_max; ++n) {
            const BenchRecord& g = rows[2 * (n - 1)];
            const BenchRecord& l = rows[2 * (n - 1) + 1];
            const std::string where = suite_name(s) + " n=" + str(n);
            c.expect(g.membership_queries == gl[n - 1], where + " GL* " + str(g.membership_queries) + " != " + str(gl[n - 1]));
            c.expect(l.membership_queries == ls[n - 1], where + " L* " + str(l.membership_queries) + " != " + str(ls[n - 1]));
            c.expect(g.states == 2 && l.states == 3, where + " unexpected automaton size");
            exact += (g.membership_queries == gl[n - 1]) + (l.membership_queries == ls[n - 1]);
        }
    }
    c.note(str(exact) + "/" + str(4 * n_max) + " counts exact, n = 1.." + str(n_max));
    return c.verdict();
}

Verdict canonical_acceptors() {
    Checker c;
    const auto& ab = fixtures::kAB;
    const char* re = "(a+b)*a";
    const Dfa dfa = minimal_dfa(re, ab);
    c.expect(dfa.num_states == 2, "minimal DFA has " + str(dfa.num_states) + " states");

    auto classes = [&](Monad m) { return minimise_bialgebra(free_bialgebra(dfa, m)).num_classes(); };
    const std::size_t p = classes(Monad::P), h = classes(Monad::H), a = classes(Monad::A), r = classes(Monad::R);
    c.expect(p == 3 && h == 8 && a == 4 && r == 4,
             "class counts " + str(p) + "/" + str(h) + "/" + str(a) + "/" + str(r) + " != 3/8/4/4");

    const CanonResult rfsa = canonize(dfa, Construction::Rfsa);
    const CanonResult atom = canonize(dfa, Construction::Atomaton);
    const CanonResult distro = canonize(dfa, Construction::Distromaton);
    const CanonResult xr = canonize(dfa, Construction::Xor);
    const CanonResult xc = canonize(dfa, Construction::XorCaba);
    c.expect(set_automata_isomorphic(std::get<Nfa>(rfsa.automaton), fixtures::golden_rfsa()),
             "canonical RFSA differs from the figure");
    c.expect(set_automata_isomorphic(std::get<Nfa>(atom.automaton), fixtures::golden_atomaton()),
             "atomaton differs from the figure");
    c.expect(set_automata_isomorphic(std::get<Nfa>(distro.automaton), fixtures::golden_distromaton()),
             "distromaton differs from the figure");
    c.expect(xr.num_states() == 2 && set_automata_isomorphic(std::get<XorAutomaton>(xr.automaton), fixtures::golden_xor()),
             "minimal xor automaton has " + str(xr.num_states()) + " states");
    c.expect(xc.num_states() == 4, "xor-CABA automaton has " + str(xc.num_states()) + " states, expected 4");

    bool languages = true;
    for (const CanonResult* res : {&rfsa, &atom, &distro, &xr, &xc})
        languages &= std::visit([&](const auto& x) { return agrees_with_dfa(x, dfa, 10); }, res->automaton);
    c.expect(languages, "a canonical acceptor has the wrong language");
    c.note(std::string("drawn 4-state xor-CABA figure ") +
           (agrees_with_dfa(fixtures::drawn_xorcaba(), dfa, 10) ? "accepts" : "does not accept") + " L");
    c.note("sizes rfsa " + str(rfsa.num_states()) + ", atomaton " + str(atom.num_states()) + ", distromaton " +
           str(distro.num_states()) + ", xor " + str(xr.num_states()) + ", xorcaba " + str(xc.num_states()));
    return c.verdict();
}

Verdict distinct_pairs() {
    Checker c;
    const Dfa d = minimal_dfa("ab+ac+ba+bc+ca+cb", fixtures::kABC);
    c.expect(d.num_states == 6, "minimal DFA has " + str(d.num_states) + " states");
    const Nfa first = fixtures::distinct_pairs_nfa_by_first(), last = fixtures::distinct_pairs_nfa_by_last();
    c.expect(agrees_with_dfa(first, d, 5), "first NFA has the wrong language");
    c.expect(agrees_with_dfa(last, d, 5), "second NFA has the wrong language");
    c.expect(!set_automata_isomorphic(first, last), "the two NFAs are isomorphic");
    c.note("DFA " + str(d.num_states) + " states, NFAs 5 states each, non-isomorphic");
    return c.verdict();
}

Verdict property_suites() {
    Checker c;
    std::mt19937 rng(20240601);
    std::size_t failures = 0, exprs = 0, regexes = 0;
    auto fail = [&](bool ok) { failures += !ok; };

    for (int i = 0; i < 500; ++i) {
        const Alphabet al = oracle::random_alphabet(rng);
        const Expr e = oracle::random_expr(rng, al, 4);
        ++exprs;
        const GAutomaton x = expr_to_automaton(al, e);
        const FiniteGsLang l = lang_upto(al, e, 3);
        const auto strings = oracle::strings_upto(al, 3);
        for (const auto& w : strings) fail(g_accepts(x, w) == l.contains(w));

        const GAutomaton m = minimise(x);
        for (const auto& w : strings) fail(g_accepts(m, w) == l.contains(w));
        fail(is_normal(m));
        fail(g_isomorphic(reachable(m), m));
        fail(is_observable(m));

        const GAutomaton nx = normalise(x);
        const auto sim = simulation_relation(nx);
        const std::size_t n = nx.num_states();
        for (StateId s = 0; s < n && s < 6; ++s)
            for (StateId t = 0; t < n && t < 6; ++t) {
                fail((sim[s * n + t] && sim[t * n + s]) == bisimilar(nx, s, nx, t));
                if (sim[s * n + t]) {
                    const FiniteGsLang ls = g_language_upto(nx, s, 2), lt = g_language_upto(nx, t, 2);
                    for (const auto& w : ls.strings) fail(lt.contains(w));
                }
            }

        GuardedTeacher teacher = make_guarded_teacher(al, e);
        fail(g_isomorphic(gl_star(teacher).automaton, m));
        GuardedTeacher verifying = make_guarded_teacher(al, e);
        GlOptions verify;
        verify.verify_inferred = true;
        const GlResult v = gl_star(verifying, verify);
        fail(g_isomorphic(v.automaton, m));
        fail(v.stats.verification_queries == v.stats.inferred_cells);
    }

    const std::vector<Construction> all{Construction::Rfsa, Construction::Atomaton, Construction::Distromaton,
                                        Construction::Xor, Construction::XorCaba};
    while (regexes < 100) {
        const oracle::RegexPair re = oracle::random_regex(rng, 4);
        const Dfa d = minimal_dfa(re.text, fixtures::kAB);
        if (d.num_states > 4) continue;
        ++regexes;
        for (Construction con : all) {
            const CanonResult r = canonize(d, con);
            const std::size_t bound = std::max<std::size_t>(1, d.num_states * r.num_states());
            fail(std::visit([&](const auto& x) { return agrees_with_dfa(x, d, bound); }, r.automaton));
            for (std::uint32_t cl = 0; cl < r.algebra.num_classes(); ++cl)
                fail(recompose(r.algebra, r.generators, r.generators.decompose(cl)) == cl);
        }
    }
    c.expect(failures == 0, str(failures) + " property violations");
    c.note(str(exprs) + " expressions, " + str(regexes) + " regexes, " + str(failures) + " violations");
    return c.verdict();
}

Verdict alpha_closedness() {
    Checker c;
    auto aut = [](Construction con) { return canonize("(a+b)*a", fixtures::kAB, con).automaton; };
    const bool atom = check_alpha_closed(aut(Construction::Atomaton), ClosurePair::CslCaba).closed;
    const bool distro = check_alpha_closed(aut(Construction::Distromaton), ClosurePair::CslCdl).closed;
    const bool rfsa = check_alpha_closed(aut(Construction::Rfsa), ClosurePair::CslCaba).closed;
    c.expect(atom, "atomaton is not CSL-CABA closed");
    c.expect(distro, "distromaton is not CSL-CDL closed");
    c.expect(!rfsa, "canonical RFSA reported CSL-CABA closed");
    c.note(std::string("atomaton ") + (atom ? "true" : "false") + ", distromaton " + (distro ? "true" : "false") +
           ", rfsa " + (rfsa ? "true" : "false"));
    return c.verdict();
}

struct Criterion {
    std::string id;
    std::string name;
    double limit_seconds;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    std::set<std::string> known;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--full") == 0) {
            full = true;
        } else if (std::strcmp(argv[i], "--known-failure") == 0 && i + 1 < argc) {
            known.insert(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--full] [--known-failure ACn]...\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {"AC1", "worked GL* run", 1.0, worked_gl_run},
        {"AC2", "worked L* run", 1.0, worked_lstar_run},
        {"AC3", "benchmark query tables", 30.0, [full] { return bench_tables(full); }},
        {"AC4", "canonical acceptors for (a+b)*a", 5.0, canonical_acceptors},
        {"AC5", "distinct-pairs DFA and NFAs", 1.0, distinct_pairs},
        {"AC6", "property suites", 120.0, property_suites},
        {"AC7", "alpha-closedness", 1.0, alpha_closedness},
    };

    std::set<std::string> failed;
    for (const Criterion& cr : criteria) {
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            v = cr.run();
        } catch (const std::exception& ex) {
            v = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.id == "AC3" && full) {
            // the time limit covers n <= 7 only
        } else if (secs >= cr.limit_seconds) {
            v.pass = false;
            v.detail += " | over time limit";
        }
        std::printf("%s %s %s: %s [%.3f s, limit %.0f s]%s\n", v.pass ? "PASS" : "FAIL", cr.id.c_str(),
                    cr.name.c_str(), v.detail.c_str(), secs, cr.limit_seconds,
                    !v.pass && known.count(cr.id) ? " (known failure)" : "");
        std::fflush(stdout);
        if (!v.pass) failed.insert(cr.id);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
    return failed == known ? 0 : 1;
}
