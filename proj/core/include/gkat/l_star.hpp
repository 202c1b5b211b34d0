#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkat/moore.hpp"
#include "gkat/teacher.hpp"
#include "gkat/transcript.hpp"

namespace gkat {

// Rows and columns are words over the Moore input letters; S and E both
// start as {ε}. Counterexample suffixes become columns.
class LStarTable {
public:
    explicit LStarTable(std::size_t num_inputs);

    std::size_t num_inputs() const noexcept { return num_inputs_; }
    const std::vector<MooreWord>& upper() const noexcept { return upper_; }
    const std::vector<MooreWord>& columns() const noexcept { return columns_; }
    bool in_upper(const MooreWord& w) const { return upper_index_.count(w) != 0; }
    std::vector<MooreWord> lower() const;
    std::vector<MooreWord> all_rows() const;

    bool add_column(const MooreWord& e);
    void add_upper(const MooreWord& w);

    // Cells filled so far for w, in column order.
    const std::vector<MooreOutput>& row(const MooreWord& w) const;
    std::vector<MooreOutput>& row_mut(const MooreWord& w) { return rows_[w]; }

private:
    std::size_t num_inputs_;
    std::vector<MooreWord> upper_;
    std::map<MooreWord, std::size_t> upper_index_;
    std::vector<MooreWord> columns_;
    std::map<MooreWord, std::size_t> column_index_;
    std::map<MooreWord, std::vector<MooreOutput>> rows_;
};

struct LStarOptions {
    bool record_transcript = false;
};

struct LStarStats {
    std::size_t membership_queries = 0;
    std::size_t equivalence_queries = 0;
    std::size_t failed_equivalence_queries = 0;
    bool initial_table_closed = true;
    std::vector<MooreWord> counterexamples;
};

struct LStarResult {
    MooreAutomaton automaton;
    LStarStats stats;
    LStarTable table;
    Transcript transcript;
};

void l_fill(LStarTable& table, MooreTeacher& teacher);
std::optional<MooreWord> l_closedness_defect(const LStarTable& table);
MooreAutomaton l_hypothesis(const LStarTable& table);
LStarResult l_star(MooreTeacher& teacher, const LStarOptions& options = {});

std::string l_table_csv(const LStarTable& table, const Alphabet& alphabet);

}  // namespace gkat
