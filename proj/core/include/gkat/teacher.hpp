#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "gkat/automaton.hpp"
#include "gkat/expr.hpp"
#include "gkat/moore.hpp"

namespace gkat {

// How membership queries are charged. PerCall ticks once for every call;
// PerDistinctString ticks once per distinct guarded string per run.
enum class QueryAccounting { PerCall, PerDistinctString };

// Oracle for the guarded-string language of a fixed target automaton.
class GuardedTeacher {
public:
    explicit GuardedTeacher(GAutomaton target, QueryAccounting accounting = QueryAccounting::PerCall);

    const Alphabet& alphabet() const noexcept { return target_.alphabet(); }
    const GAutomaton& target() const noexcept { return target_; }

    bool membership(const GuardedString& w);
    // The least distinguishing guarded string, or none when equivalent.
    std::optional<GuardedString> equivalence(const GAutomaton& hypothesis);
    // Uncharged ground truth, for precondition checks and verification.
    bool truth(const GuardedString& w) const { return g_accepts(target_, w); }

    std::size_t membership_queries() const noexcept { return membership_queries_; }
    std::size_t equivalence_queries() const noexcept { return equivalence_queries_; }

private:
    GAutomaton target_;
    MooreAutomaton target_moore_;
    QueryAccounting accounting_;
    std::set<GuardedString> seen_;
    std::size_t membership_queries_ = 0;
    std::size_t equivalence_queries_ = 0;
};

// Oracle for the Moore-machine view: a query on w returns, for every atom,
// whether w followed by that atom is accepted, and costs one guarded query
// per atom.
class MooreTeacher {
public:
    MooreTeacher(MooreAutomaton target, std::size_t cost_per_query,
                 QueryAccounting accounting = QueryAccounting::PerCall);

    const MooreAutomaton& target() const noexcept { return target_; }
    std::size_t num_inputs() const noexcept { return target_.num_inputs; }

    MooreOutput membership(const MooreWord& w);
    std::optional<MooreWord> equivalence(const MooreAutomaton& hypothesis);

    std::size_t membership_queries() const noexcept { return membership_queries_; }
    std::size_t equivalence_queries() const noexcept { return equivalence_queries_; }

private:
    MooreAutomaton target_;
    std::size_t cost_;
    QueryAccounting accounting_;
    std::set<MooreWord> seen_;
    std::size_t membership_queries_ = 0;
    std::size_t equivalence_queries_ = 0;
};

struct Teachers {
    GuardedTeacher guarded;
    MooreTeacher moore;
};

// Both teachers for the language of e; the target is the minimised
// derivative automaton.
Teachers mk_teacher(const Alphabet& alphabet, const Expr& e,
                    QueryAccounting accounting = QueryAccounting::PerCall);
GuardedTeacher make_guarded_teacher(const Alphabet& alphabet, const Expr& e,
                                    QueryAccounting accounting = QueryAccounting::PerCall);
MooreTeacher make_moore_teacher(const Alphabet& alphabet, const Expr& e,
                                QueryAccounting accounting = QueryAccounting::PerCall);

}  // namespace gkat
