#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkat/automaton.hpp"
#include "gkat/teacher.hpp"
#include "gkat/transcript.hpp"

namespace gkat {

enum class CellSource : std::uint8_t { Unknown, Queried, Inferred };

// Rows are indexed by guarded words (S together with its one-letter
// extensions), columns by guarded strings. S starts as {ε} and the columns
// as the atoms, in atom order.
class GLTable {
public:
    struct Row {
        std::vector<std::int8_t> value;  // -1 unknown, else 0/1
        std::vector<CellSource> source;
        std::vector<bool> verified;  // inferred cells already re-queried
    };

    explicit GLTable(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<GuardedWord>& upper() const noexcept { return upper_; }
    const std::vector<GuardedString>& columns() const noexcept { return columns_; }
    bool in_upper(const GuardedWord& w) const { return upper_index_.count(w) != 0; }
    std::optional<std::size_t> upper_index(const GuardedWord& w) const;
    std::optional<std::size_t> column_index(const GuardedString& e) const;

    // One-letter extensions of S not themselves in S, in (S, atom, action) order.
    std::vector<GuardedWord> lower() const;
    // Upper rows followed by lower rows.
    std::vector<GuardedWord> all_rows() const;

    bool add_column(const GuardedString& e);
    void add_upper(const GuardedWord& w);

    const Row& row(const GuardedWord& w) const;
    bool has_row(const GuardedWord& w) const { return rows_.count(w) != 0; }
    std::int8_t cell(const GuardedWord& w, std::size_t col) const;
    CellSource source(const GuardedWord& w, std::size_t col) const;
    void set_cell(const GuardedWord& w, std::size_t col, bool value, CellSource src);
    // Returns false if the cell had already been marked.
    bool mark_verified(const GuardedWord& w, std::size_t col);
    bool row_has_one(const GuardedWord& w) const;
    // Cell contents as text; "?" marks unknown cells.
    std::string row_signature(const GuardedWord& w) const;

private:
    Row& ensure_row(const GuardedWord& w);

    Alphabet alphabet_;
    std::vector<GuardedWord> upper_;
    std::map<GuardedWord, std::size_t> upper_index_;
    std::vector<GuardedString> columns_;
    std::map<GuardedString, std::size_t> column_index_;
    std::map<GuardedWord, Row> rows_;
};

struct GlOptions {
    bool optimized_cex = false;
    bool infer_zeros = false;
    // Re-query every inferred cell (implies infer_zeros).
    bool verify_inferred = false;
    bool record_transcript = false;
    bool record_queries = false;
};

struct GlStats {
    std::size_t membership_queries = 0;
    std::size_t equivalence_queries = 0;
    std::size_t failed_equivalence_queries = 0;
    std::size_t inferred_cells = 0;
    std::size_t verification_queries = 0;
    std::size_t closing_steps = 0;
    bool initial_table_closed = true;
    std::vector<GuardedString> counterexamples;
    std::vector<GuardedString> handled_counterexamples;  // after optional shortening
};

struct GlResult {
    GAutomaton automaton;
    GlStats stats;
    GLTable table;
    Transcript transcript;
};

// Applies both zero-inference rules to the block of rows s·α·p. Throws
// DeterminismViolation when the block's known entries already conflict.
// Returns the number of newly inferred cells.
std::size_t gl_infer_zeros(GLTable& table, const GuardedWord& s, AtomId alpha);

// Fills every unknown cell by querying (or by inference when enabled).
void gl_fill(GLTable& table, GuardedTeacher& teacher, const GlOptions& options, GlStats& stats,
             Transcript* transcript = nullptr);

std::optional<GuardedWord> gl_closedness_defect(const GLTable& table);
GAutomaton gl_hypothesis(const GLTable& table);

// Shortest suffix z'' of z = v·α·p·z'' for which the hypothesis state reached
// by v and the target state reached by its access word disagree on α·p·z''.
GuardedString gl_shorten_cex(const GLTable& table, GuardedTeacher& teacher, const GuardedString& z);
// Adds the (optionally shortened) counterexample's suffixes as columns and
// returns the string whose suffixes were added.
GuardedString gl_handle_cex(GLTable& table, GuardedTeacher& teacher, const GuardedString& z, bool optimized);

// Violations of the table's structural invariants; empty when well formed.
std::vector<std::string> gl_check_table(const GLTable& table);

GlResult gl_star(GuardedTeacher& teacher, const GlOptions& options = {});

std::string gl_table_csv(const GLTable& table);

}  // namespace gkat
