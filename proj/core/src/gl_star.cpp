#include "gkat/gl_star.hpp"

#include <unordered_map>

#include "gkat/errors.hpp"

namespace gkat {

GLTable::GLTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    add_upper(GuardedWord{});
    for (AtomId a = 0; a < alphabet_.num_atoms(); ++a) add_column(GuardedString(a));
}

std::optional<std::size_t> GLTable::upper_index(const GuardedWord& w) const {
    auto it = upper_index_.find(w);
    if (it == upper_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> GLTable::column_index(const GuardedString& e) const {
    auto it = column_index_.find(e);
    if (it == column_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<GuardedWord> GLTable::lower() const {
    std::vector<GuardedWord> out;
    for (const auto& s : upper_)
        for (AtomId a = 0; a < alphabet_.num_atoms(); ++a)
            for (ActionId p = 0; p < alphabet_.num_actions(); ++p) {
                GuardedWord t = s.extended(a, p);
                if (!in_upper(t)) out.push_back(std::move(t));
            }
    return out;
}

std::vector<GuardedWord> GLTable::all_rows() const {
    std::vector<GuardedWord> out = upper_;
    auto low = lower();
    out.insert(out.end(), low.begin(), low.end());
    return out;
}

bool GLTable::add_column(const GuardedString& e) {
    if (column_index_.count(e)) return false;
    column_index_.emplace(e, columns_.size());
    columns_.push_back(e);
    return true;
}

void GLTable::add_upper(const GuardedWord& w) {
    if (in_upper(w)) return;
    upper_index_.emplace(w, upper_.size());
    upper_.push_back(w);
}

GLTable::Row& GLTable::ensure_row(const GuardedWord& w) {
    Row& r = rows_[w];
    if (r.value.size() < columns_.size()) {
        r.value.resize(columns_.size(), -1);
        r.source.resize(columns_.size(), CellSource::Unknown);
        r.verified.resize(columns_.size(), false);
    }
    return r;
}

const GLTable::Row& GLTable::row(const GuardedWord& w) const {
    auto it = rows_.find(w);
    if (it == rows_.end()) throw PreconditionError("row not present in table");
    return it->second;
}

std::int8_t GLTable::cell(const GuardedWord& w, std::size_t col) const {
    auto it = rows_.find(w);
    if (it == rows_.end() || col >= it->second.value.size()) return -1;
    return it->second.value[col];
}

CellSource GLTable::source(const GuardedWord& w, std::size_t col) const {
    auto it = rows_.find(w);
    if (it == rows_.end() || col >= it->second.source.size()) return CellSource::Unknown;
    return it->second.source[col];
}

void GLTable::set_cell(const GuardedWord& w, std::size_t col, bool value, CellSource src) {
    Row& r = ensure_row(w);
    r.value.at(col) = value ? 1 : 0;
    r.source.at(col) = src;
}

bool GLTable::mark_verified(const GuardedWord& w, std::size_t col) {
    Row& r = ensure_row(w);
    if (r.verified.at(col)) return false;
    r.verified[col] = true;
    return true;
}

bool GLTable::row_has_one(const GuardedWord& w) const {
    auto it = rows_.find(w);
    if (it == rows_.end()) return false;
    for (auto v : it->second.value)
        if (v == 1) return true;
    return false;
}

std::string GLTable::row_signature(const GuardedWord& w) const {
    std::string sig(columns_.size(), '?');
    auto it = rows_.find(w);
    if (it == rows_.end()) return sig;
    for (std::size_t c = 0; c < it->second.value.size() && c < sig.size(); ++c)
        if (it->second.value[c] >= 0) sig[c] = static_cast<char>('0' + it->second.value[c]);
    return sig;
}

namespace {

GuardedWord parent_of(const GuardedWord& t) {
    return GuardedWord{std::vector<std::uint32_t>(t.symbols.begin(), t.symbols.end() - 2)};
}

}  // namespace

std::size_t gl_infer_zeros(GLTable& table, const GuardedWord& s, AtomId alpha) {
    const Alphabet& al = table.alphabet();
    const std::size_t alpha_col = *table.column_index(GuardedString(alpha));
    const bool terminal = table.cell(s, alpha_col) == 1;
    std::vector<GuardedWord> block;
    std::vector<ActionId> with_one;
    for (ActionId p = 0; p < al.num_actions(); ++p) {
        block.push_back(s.extended(alpha, p));
        if (table.row_has_one(block.back())) with_one.push_back(p);
    }
    const std::string where = to_string(s, al) + " / " + al.atom_name(alpha);
    if (terminal && !with_one.empty())
        throw DeterminismViolation("atom both terminates and continues after " + where);
    if (with_one.size() > 1) throw DeterminismViolation("two actions continue after " + where);
    if (!terminal && with_one.empty()) return 0;
    std::size_t inferred = 0;
    for (ActionId p = 0; p < al.num_actions(); ++p) {
        if (!terminal && p == with_one.front()) continue;
        for (std::size_t c = 0; c < table.columns().size(); ++c) {
            if (table.cell(block[p], c) != -1) continue;
            table.set_cell(block[p], c, false, CellSource::Inferred);
            ++inferred;
        }
    }
    return inferred;
}

void gl_fill(GLTable& table, GuardedTeacher& teacher, const GlOptions& options, GlStats& stats,
             Transcript* transcript) {
    const bool infer = options.infer_zeros || options.verify_inferred;
    const Alphabet& al = table.alphabet();
    const auto& cols = table.columns();
    for (const GuardedWord& t : table.all_rows()) {
        const bool extension = !t.empty();
        GuardedWord s;
        AtomId alpha = 0;
        if (extension) {
            s = parent_of(t);
            alpha = t.atom(t.length() - 1);
        }
        if (infer && extension) stats.inferred_cells += gl_infer_zeros(table, s, alpha);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (table.cell(t, c) != -1) continue;
            GuardedString w = concat(t, cols[c]);
            bool v = teacher.membership(w);
            table.set_cell(t, c, v, CellSource::Queried);
            if (transcript && options.record_queries)
                transcript->add("query", to_string(w, al) + " -> " + (v ? "1" : "0"));
            if (v && infer && extension) stats.inferred_cells += gl_infer_zeros(table, s, alpha);
        }
    }
    if (!options.verify_inferred) return;
    for (const GuardedWord& t : table.all_rows()) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (table.source(t, c) != CellSource::Inferred) continue;
            if (!table.mark_verified(t, c)) continue;
            ++stats.verification_queries;
            if (teacher.truth(concat(t, cols[c])))
                throw DeterminismViolation("inferred zero contradicted by the oracle at " +
                                           to_string(concat(t, cols[c]), al));
        }
    }
}

std::optional<GuardedWord> gl_closedness_defect(const GLTable& table) {
    std::unordered_map<std::string, std::size_t> upper;
    for (const auto& s : table.upper()) upper.emplace(table.row_signature(s), 0);
    for (const auto& t : table.lower()) {
        if (!table.row_has_one(t)) continue;
        if (!upper.count(table.row_signature(t))) return t;
    }
    return std::nullopt;
}

GAutomaton gl_hypothesis(const GLTable& table) {
    const Alphabet& al = table.alphabet();
    std::unordered_map<std::string, StateId> state_of;
    for (std::size_t i = 0; i < table.upper().size(); ++i) {
        std::string sig = table.row_signature(table.upper()[i]);
        if (sig.find('?') != std::string::npos) throw PreconditionError("table has unfilled cells");
        state_of.emplace(sig, static_cast<StateId>(i));
    }
    GAutomaton h(al, table.upper().size(), 0);
    for (std::size_t i = 0; i < table.upper().size(); ++i) {
        const GuardedWord& s = table.upper()[i];
        for (AtomId a = 0; a < al.num_atoms(); ++a) {
            const bool terminal = table.cell(s, *table.column_index(GuardedString(a))) == 1;
            std::optional<Outcome> step;
            for (ActionId p = 0; p < al.num_actions(); ++p) {
                GuardedWord t = s.extended(a, p);
                if (!table.row_has_one(t)) continue;
                if (step || terminal)
                    throw DeterminismViolation("conflicting continuations after " + to_string(s, al));
                auto it = state_of.find(table.row_signature(t));
                if (it == state_of.end()) throw PreconditionError("table is not closed");
                step = Outcome::step(p, it->second);
            }
            h.set(static_cast<StateId>(i), a, step ? *step : terminal ? Outcome::accept() : Outcome::reject());
        }
    }
    return h;
}

GuardedString gl_shorten_cex(const GLTable& table, GuardedTeacher& teacher, const GuardedString& z) {
    const GAutomaton h = gl_hypothesis(table);
    for (std::size_t i = z.length(); i-- > 0;) {
        StateId x = h.initial();
        bool followed = true;
        for (std::size_t j = 0; j < i && followed; ++j) {
            const Outcome& o = h.at(x, z.atom(j));
            followed = o.is_step() && o.action == z.action(j);
            if (followed) x = o.target;
        }
        if (!followed) continue;
        GuardedString rest = z.suffix_from(i);
        bool hyp = g_accepts_from(h, x, rest);
        bool target = teacher.membership(concat(table.upper()[x], rest));
        if (hyp != target) return z.suffix_from(i + 1);
    }
    return z;
}

GuardedString gl_handle_cex(GLTable& table, GuardedTeacher& teacher, const GuardedString& z, bool optimized) {
    if (g_accepts(gl_hypothesis(table), z) == teacher.truth(z))
        throw InputError("not a counterexample: " + to_string(z, table.alphabet()));
    GuardedString chosen = optimized ? gl_shorten_cex(table, teacher, z) : z;
    for (const auto& suf : suffixes(chosen)) table.add_column(suf);
    return chosen;
}

std::vector<std::string> gl_check_table(const GLTable& table) {
    const Alphabet& al = table.alphabet();
    std::vector<std::string> bad;
    if (table.upper().empty() || !table.upper().front().empty()) bad.push_back("ε is not the first row of S");
    for (AtomId a = 0; a < al.num_atoms(); ++a)
        if (!table.column_index(GuardedString(a))) bad.push_back("atom column missing: " + al.atom_name(a));
    for (const auto& s : table.upper())
        if (!s.empty() && !table.in_upper(parent_of(s)))
            bad.push_back("S not prefix-closed at " + to_string(s, al));
    for (const auto& e : table.columns())
        if (e.length() > 0 && !table.column_index(e.suffix_from(1)))
            bad.push_back("E not suffix-closed at " + to_string(e, al));
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& s : table.upper()) {
        if (!seen.emplace(table.row_signature(s), 0).second)
            bad.push_back("duplicate upper row " + to_string(s, al));
        if (!s.empty() && !table.row_has_one(s)) bad.push_back("upper row without a 1: " + to_string(s, al));
    }
    for (const auto& t : table.all_rows()) {
        if (t.empty()) continue;
        GuardedWord s = parent_of(t);
        const GuardedWord last{{t.atom(t.length() - 1), t.action(t.length() - 1)}};
        for (std::size_t c = 0; c < table.columns().size(); ++c) {
            GuardedString shifted = concat(last, table.columns()[c]);
            auto sc = table.column_index(shifted);
            if (!sc) continue;
            auto v1 = table.cell(t, c), v2 = table.cell(s, *sc);
            if (v1 != -1 && v2 != -1 && v1 != v2)
                bad.push_back("row " + to_string(t, al) + " disagrees with its parent on " +
                              to_string(shifted, al));
        }
    }
    return bad;
}

GlResult gl_star(GuardedTeacher& teacher, const GlOptions& options) {
    GlResult result{GAutomaton(teacher.alphabet(), 1), {}, GLTable(teacher.alphabet()), {}};
    GlStats& stats = result.stats;
    GLTable& table = result.table;
    Transcript* tr = options.record_transcript ? &result.transcript : nullptr;
    const Alphabet& al = teacher.alphabet();
    const std::size_t mq0 = teacher.membership_queries();
    const std::size_t eq0 = teacher.equivalence_queries();

    gl_fill(table, teacher, options, stats, tr);
    bool first_check = true;
    while (true) {
        while (auto defect = gl_closedness_defect(table)) {
            if (first_check) stats.initial_table_closed = false;
            first_check = false;
            if (tr) tr->add("close", to_string(*defect, al));
            table.add_upper(*defect);
            ++stats.closing_steps;
            gl_fill(table, teacher, options, stats, tr);
        }
        first_check = false;
        result.automaton = gl_hypothesis(table);
        if (tr) tr->add("hypothesis", std::to_string(result.automaton.num_states()) + " states");
        auto cex = teacher.equivalence(result.automaton);
        if (!cex) break;
        ++stats.failed_equivalence_queries;
        stats.counterexamples.push_back(*cex);
        if (tr) tr->add("cex", to_string(*cex, al));
        stats.handled_counterexamples.push_back(gl_handle_cex(table, teacher, *cex, options.optimized_cex));
        gl_fill(table, teacher, options, stats, tr);
    }
    stats.membership_queries = teacher.membership_queries() - mq0;
    stats.equivalence_queries = teacher.equivalence_queries() - eq0;
    return result;
}

std::string gl_table_csv(const GLTable& table) {
    const Alphabet& al = table.alphabet();
    std::string out = "row,part";
    for (const auto& e : table.columns()) out += "," + csv_field(to_string(e, al));
    out += "\n";
    for (const auto& t : table.all_rows()) {
        out += csv_field(to_string(t, al)) + (table.in_upper(t) ? ",S" : ",bottom");
        for (std::size_t c = 0; c < table.columns().size(); ++c) {
            auto v = table.cell(t, c);
            out += ",";
            out += v < 0 ? "?" : v == 1 ? "1" : "0";
        }
        out += "\n";
    }
    return out;
}

}  // namespace gkat
