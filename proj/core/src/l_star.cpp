#include "gkat/l_star.hpp"

#include <unordered_map>

#include "gkat/errors.hpp"

namespace gkat {

LStarTable::LStarTable(std::size_t num_inputs) : num_inputs_(num_inputs) {
    add_upper(MooreWord{});
    add_column(MooreWord{});
}

std::vector<MooreWord> LStarTable::lower() const {
    std::vector<MooreWord> out;
    for (const auto& s : upper_)
        for (LetterId a = 0; a < num_inputs_; ++a) {
            MooreWord t = s;
            t.push_back(a);
            if (!in_upper(t)) out.push_back(std::move(t));
        }
    return out;
}

std::vector<MooreWord> LStarTable::all_rows() const {
    std::vector<MooreWord> out = upper_;
    auto low = lower();
    out.insert(out.end(), low.begin(), low.end());
    return out;
}

bool LStarTable::add_column(const MooreWord& e) {
    if (column_index_.count(e)) return false;
    column_index_.emplace(e, columns_.size());
    columns_.push_back(e);
    return true;
}

void LStarTable::add_upper(const MooreWord& w) {
    if (in_upper(w)) return;
    upper_index_.emplace(w, upper_.size());
    upper_.push_back(w);
}

const std::vector<MooreOutput>& LStarTable::row(const MooreWord& w) const {
    auto it = rows_.find(w);
    if (it == rows_.end()) throw PreconditionError("row not present in table");
    return it->second;
}

namespace {

std::string signature(const std::vector<MooreOutput>& cells) {
    std::string sig;
    for (const auto& out : cells) {
        for (bool b : out) sig += b ? '1' : '0';
        sig += '|';
    }
    return sig;
}

}  // namespace

void l_fill(LStarTable& table, MooreTeacher& teacher) {
    const auto& cols = table.columns();
    for (const MooreWord& t : table.all_rows()) {
        auto& cells = table.row_mut(t);
        for (std::size_t c = cells.size(); c < cols.size(); ++c) {
            MooreWord w = t;
            w.insert(w.end(), cols[c].begin(), cols[c].end());
            cells.push_back(teacher.membership(w));
        }
    }
}

std::optional<MooreWord> l_closedness_defect(const LStarTable& table) {
    std::unordered_map<std::string, std::size_t> upper;
    for (const auto& s : table.upper()) upper.emplace(signature(table.row(s)), 0);
    for (const auto& t : table.lower())
        if (!upper.count(signature(table.row(t)))) return t;
    return std::nullopt;
}

MooreAutomaton l_hypothesis(const LStarTable& table) {
    std::unordered_map<std::string, StateId> state_of;
    for (std::size_t i = 0; i < table.upper().size(); ++i)
        state_of.emplace(signature(table.row(table.upper()[i])), static_cast<StateId>(i));
    MooreAutomaton m;
    m.num_inputs = table.num_inputs();
    m.initial = 0;
    for (const auto& s : table.upper()) {
        m.out.push_back(table.row(s).at(0));  // column ε
        for (LetterId a = 0; a < m.num_inputs; ++a) {
            MooreWord t = s;
            t.push_back(a);
            auto it = state_of.find(signature(table.row(t)));
            if (it == state_of.end()) throw PreconditionError("table is not closed");
            m.delta.push_back(it->second);
        }
    }
    return m;
}

LStarResult l_star(MooreTeacher& teacher, const LStarOptions& options) {
    LStarResult result{MooreAutomaton{}, {}, LStarTable(teacher.num_inputs()), {}};
    auto& stats = result.stats;
    auto& table = result.table;
    Transcript* tr = options.record_transcript ? &result.transcript : nullptr;
    auto word_text = [](const MooreWord& w) {
        std::string s;
        for (auto l : w) s += (s.empty() ? "" : " ") + std::to_string(l);
        return s.empty() ? std::string("ε") : s;
    };
    const std::size_t mq0 = teacher.membership_queries();
    const std::size_t eq0 = teacher.equivalence_queries();
    l_fill(table, teacher);
    bool first_check = true;
    while (true) {
        while (auto defect = l_closedness_defect(table)) {
            if (first_check) stats.initial_table_closed = false;
            first_check = false;
            if (tr) tr->add("close", word_text(*defect));
            table.add_upper(*defect);
            l_fill(table, teacher);
        }
        first_check = false;
        result.automaton = l_hypothesis(table);
        if (tr) tr->add("hypothesis", std::to_string(result.automaton.num_states()) + " states");
        auto cex = teacher.equivalence(result.automaton);
        if (!cex) break;
        ++stats.failed_equivalence_queries;
        stats.counterexamples.push_back(*cex);
        if (tr) tr->add("cex", word_text(*cex));
        // Shortest suffix first, so columns grow in length order.
        for (std::size_t i = cex->size(); i-- > 0;)
            table.add_column(MooreWord(cex->begin() + static_cast<std::ptrdiff_t>(i), cex->end()));
        l_fill(table, teacher);
    }
    stats.membership_queries = teacher.membership_queries() - mq0;
    stats.equivalence_queries = teacher.equivalence_queries() - eq0;
    return result;
}

std::string l_table_csv(const LStarTable& table, const Alphabet& alphabet) {
    auto text = [&](const MooreWord& w) { return to_string(word_to_guarded(w, alphabet), alphabet); };
    auto output_text = [&](const MooreOutput& out) {
        std::string s;
        for (AtomId a = 0; a < out.size(); ++a) {
            if (!s.empty()) s += "+";
            s += std::string(out[a] ? "1" : "0") + alphabet.atom_name(a);
        }
        return s;
    };
    std::string out = "row,part";
    for (const auto& e : table.columns()) out += "," + csv_field(text(e));
    out += "\n";
    for (const auto& t : table.all_rows()) {
        out += csv_field(text(t)) + (table.in_upper(t) ? ",S" : ",bottom");
        for (const auto& cell : table.row(t)) out += "," + csv_field(output_text(cell));
        out += "\n";
    }
    return out;
}

}  // namespace gkat
