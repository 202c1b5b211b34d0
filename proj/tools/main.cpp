#include <gkat/gkat.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gkat;

enum Exit : int { kOk = 0, kInequivalent = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct Common {
    std::string tests;
    std::string actions;
    std::string out;
    std::size_t max_states = kDefaultStateCap;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw InputError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Alphabet alphabet_from(const Common& c) {
    return Alphabet(split_names(c.tests), split_names(c.actions));
}

GAutomaton target_automaton(const Alphabet& al, const std::string& text, std::size_t cap) {
    return minimise(expr_to_automaton(al, parse_expr(text, al), cap));
}

// ---- learn -----------------------------------------------------------------

struct LearnArgs {
    Common common;
    std::string expr;
    std::string algo = "gl";
    std::string emit = "dot";
    std::string transcript;
    std::string table;
    bool optimize_cex = false;
    bool infer_zeros = false;
    bool verify_inferred = false;
    bool per_distinct = false;
};

int cmd_learn(const LearnArgs& a) {
    const Alphabet al = alphabet_from(a.common);
    const GAutomaton target = target_automaton(al, a.expr, a.common.max_states);
    const QueryAccounting acc = a.per_distinct ? QueryAccounting::PerDistinctString : QueryAccounting::PerCall;

    std::string dot, transcript, table;
    std::size_t mq = 0, eq = 0, states = 0, inferred = 0;
    if (a.algo == "gl") {
        GuardedTeacher teacher(target, acc);
        GlOptions opt;
        opt.optimized_cex = a.optimize_cex;
        opt.infer_zeros = a.infer_zeros;
        opt.verify_inferred = a.verify_inferred;
        opt.record_transcript = !a.transcript.empty();
        const GlResult r = gl_star(teacher, opt);
        dot = to_dot(r.automaton);
        transcript = r.transcript.csv();
        table = gl_table_csv(r.table);
        mq = r.stats.membership_queries;
        eq = r.stats.equivalence_queries;
        states = r.automaton.num_states();
        inferred = r.stats.inferred_cells;
    } else {
        if (a.optimize_cex || a.infer_zeros || a.verify_inferred)
            throw InputError("--optimize-cex, --infer-zeros and --verify-inferred apply to --algo gl only");
        MooreTeacher teacher(moore_minimise(to_moore(target)), al.num_atoms(), acc);
        LStarOptions opt;
        opt.record_transcript = !a.transcript.empty();
        const LStarResult r = l_star(teacher, opt);
        dot = to_dot(r.automaton, al);
        transcript = r.transcript.csv();
        table = l_table_csv(r.table, al);
        mq = r.stats.membership_queries;
        eq = r.stats.equivalence_queries;
        states = r.automaton.num_states();
    }

    std::ostringstream stats;
    stats << "algo,membership_queries,equivalence_queries,states,inferred_cells\n"
          << (a.algo == "gl" ? "gl" : "lstar") << ',' << mq << ',' << eq << ',' << states << ',' << inferred << '\n';
    if (!a.transcript.empty()) write_output(a.transcript, transcript);
    if (!a.table.empty()) write_output(a.table, table);
    if (a.emit == "csv") {
        write_output(a.common.out, stats.str());
    } else {
        write_output(a.common.out, dot);
        std::cerr << stats.str();
    }
    return kOk;
}

// ---- canonize --------------------------------------------------------------

struct CanonArgs {
    std::string construction;
    std::string regex;
    std::string alphabet;
    std::string out;
    std::string alpha_closed;
};

int cmd_canonize(const CanonArgs& a) {
    const Construction con = parse_construction(a.construction);
    const CanonResult r = canonize(a.regex, split_names(a.alphabet), con);
    write_output(a.out, to_dot(r.automaton));
    std::cerr << construction_name(con) << ": " << r.num_states() << " states (minimal DFA " << r.dfa.num_states
              << ", closure classes " << r.algebra.num_classes() << ")\n";
    if (!a.alpha_closed.empty()) {
        const AlphaClosedReport rep = check_alpha_closed(r.automaton, parse_closure_pair(a.alpha_closed));
        std::cerr << a.alpha_closed << "-closed: " << (rep.closed ? "true" : "false") << " (weak " << rep.weak_size
                  << ", strong " << rep.strong_size << ")\n";
    }
    return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
    std::string suite = "all";
    std::size_t n_min = 1;
    std::size_t n_max = 7;
    bool full = false;
    bool sequential = false;
    bool timing = false;
    std::string out;
};

int cmd_bench(const BenchArgs& a, bool n_max_given) {
    const std::size_t n_max = a.full && !n_max_given ? 9 : a.n_max;
    if (a.n_min < 1 || n_max > 9 || a.n_min > n_max) throw InputError("n-range must satisfy 1 <= n-min <= n-max <= 9");
    if (n_max > 7 && !a.full) throw InputError("n > 7 needs --full");
    std::vector<BenchSuite> suites;
    if (a.suite == "all") suites = {BenchSuite::IfElse, BenchSuite::While};
    else suites = {parse_suite(a.suite)};
    std::vector<BenchRecord> rows;
    for (BenchSuite s : suites) {
        auto part = run_bench_range(s, a.n_min, n_max, !a.sequential);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    write_output(a.out, bench_csv(rows));
    if (a.timing)
        for (const auto& r : rows)
            std::cerr << r.suite << ',' << r.n_tests << ',' << r.algo << ',' << r.seconds << "s\n";
    return kOk;
}

// ---- equiv / minimise ------------------------------------------------------

struct Operand {
    std::optional<std::string> expr;
    std::optional<std::string> file;
};

struct EquivArgs {
    Common common;
    std::vector<std::string> exprs;
    std::vector<std::string> files;
};

GAutomaton load_operand(const Operand& op, const std::optional<Alphabet>& al, std::size_t cap) {
    if (op.file) return g_automaton_from_json(read_file(*op.file));
    if (!al) throw InputError("--tests and --actions are required with --expr");
    return target_automaton(*al, *op.expr, cap);
}

std::optional<Alphabet> optional_alphabet(const Common& c) {
    if (c.tests.empty() && c.actions.empty()) return std::nullopt;
    return alphabet_from(c);
}

int cmd_equiv(const EquivArgs& a) {
    std::vector<Operand> ops;
    for (const auto& e : a.exprs) ops.push_back({e, std::nullopt});
    for (const auto& f : a.files) ops.push_back({std::nullopt, f});
    if (ops.size() != 2) throw InputError("equiv needs exactly two operands (--expr and/or --automaton)");
    const std::optional<Alphabet> al = optional_alphabet(a.common);
    const GAutomaton left = minimise(load_operand(ops[0], al, a.common.max_states));
    const GAutomaton right = minimise(load_operand(ops[1], al, a.common.max_states));
    if (!(left.alphabet() == right.alphabet())) throw InputError("operands use different alphabets");
    GuardedTeacher oracle(left);
    const auto cex = oracle.equivalence(right);
    if (!cex) {
        std::cout << "equivalent\n";
        return kOk;
    }
    std::cout << "inequivalent\ncounterexample: " << to_string(*cex, left.alphabet()) << "\n"
              << "accepted by: " << (g_accepts(left, *cex) ? "first" : "second") << "\n";
    return kInequivalent;
}

struct MinimiseArgs {
    Common common;
    std::string expr;
    std::string file;
    std::string emit = "dot";
};

int cmd_minimise(const MinimiseArgs& a) {
    if (a.expr.empty() == a.file.empty()) throw InputError("minimise needs exactly one of --expr or --automaton");
    const Operand op{a.expr.empty() ? std::nullopt : std::optional<std::string>(a.expr),
                     a.file.empty() ? std::nullopt : std::optional<std::string>(a.file)};
    const GAutomaton m = minimise(load_operand(op, optional_alphabet(a.common), a.common.max_states));
    write_output(a.common.out, a.emit == "json" ? to_json(m) + "\n" : to_dot(m));
    std::cerr << "states: " << m.num_states() << "\n";
    return kOk;
}

void add_alphabet_flags(CLI::App* app, Common& c, bool required) {
    auto* t = app->add_option("--tests", c.tests, "comma-separated primitive tests");
    auto* s = app->add_option("--actions", c.actions, "comma-separated actions");
    if (required) {
        t->required();
        s->required();
    }
    app->add_option("--max-states", c.max_states, "cap on derivative-automaton states")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learning and canonical acceptors for guarded programs and regular languages"};
    app.require_subcommand(1);

    LearnArgs learn;
    auto* l = app.add_subcommand("learn", "learn a program's language with GL* or L*");
    add_alphabet_flags(l, learn.common, true);
    l->add_option("--expr", learn.expr, "target program")->required();
    l->add_option("--algo", learn.algo, "gl or lstar")->check(CLI::IsMember({"gl", "lstar"}));
    l->add_flag("--optimize-cex", learn.optimize_cex, "shorten counterexamples before adding columns");
    l->add_flag("--infer-zeros", learn.infer_zeros, "fill cells forced to zero by determinism without querying");
    l->add_flag("--verify-inferred", learn.verify_inferred, "infer zeros and confirm each by a query");
    l->add_flag("--per-distinct-string", learn.per_distinct, "charge each distinct guarded string once");
    l->add_option("--emit", learn.emit, "dot (automaton) or csv (query statistics)")
        ->check(CLI::IsMember({"dot", "csv"}));
    l->add_option("--out", learn.common.out, "output file (default stdout)");
    l->add_option("--transcript", learn.transcript, "write the run transcript as CSV");
    l->add_option("--table", learn.table, "write the final observation table as CSV");

    CanonArgs canon;
    auto* c = app.add_subcommand("canonize", "build a canonical acceptor for a regular expression");
    c->add_option("--construction", canon.construction, "rfsa, atomaton, distromaton, xor or xorcaba")
        ->required()
        ->check(CLI::IsMember({"rfsa", "atomaton", "distromaton", "xor", "xorcaba"}));
    c->add_option("--regex", canon.regex, "regular expression")->required();
    c->add_option("--alphabet", canon.alphabet, "comma-separated single-character letters")->required();
    c->add_option("--out", canon.out, "output file (default stdout)");
    c->add_option("--alpha-closed", canon.alpha_closed, "also report closedness for CSL-CABA, CSL-CDL or Z2-CABA")
        ->check(CLI::IsMember({"CSL-CABA", "CSL-CDL", "Z2-CABA"}));

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "membership-query counts of GL* and L* on the benchmark programs");
    b->add_option("--suite", bench.suite, "ifelse, while or all")->check(CLI::IsMember({"ifelse", "while", "all"}));
    b->add_option("--n-min", bench.n_min, "smallest number of tests");
    auto* n_max_opt = b->add_option("--n-max", bench.n_max, "largest number of tests (default 7, or 9 with --full)");
    b->add_flag("--full", bench.full, "allow up to nine tests");
    b->add_flag("--sequential", bench.sequential, "run the cells one after another");
    b->add_flag("--timing", bench.timing, "report wall time per cell on stderr");
    b->add_option("--out", bench.out, "output file (default stdout)");

    EquivArgs equiv;
    auto* e = app.add_subcommand("equiv", "decide equivalence of two programs or automata");
    add_alphabet_flags(e, equiv.common, false);
    e->add_option("--expr", equiv.exprs, "program operand (repeatable)");
    e->add_option("--automaton", equiv.files, "JSON automaton operand (repeatable)");

    MinimiseArgs mini;
    auto* m = app.add_subcommand("minimise", "minimal automaton of a program or automaton file");
    add_alphabet_flags(m, mini.common, false);
    m->add_option("--expr", mini.expr, "program");
    m->add_option("--automaton", mini.file, "JSON automaton file");
    m->add_option("--emit", mini.emit, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    m->add_option("--out", mini.common.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (l->parsed()) return cmd_learn(learn);
        if (c->parsed()) return cmd_canonize(canon);
        if (b->parsed()) return cmd_bench(bench, n_max_opt->count() > 0);
        if (e->parsed()) return cmd_equiv(equiv);
        if (m->parsed()) return cmd_minimise(mini);
    } catch (const ResourceError& err) {
        std::cerr << "resource limit: " << err.what() << "\n";
        return kResource;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
