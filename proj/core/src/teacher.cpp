#include "gkat/teacher.hpp"

#include "gkat/derivative.hpp"

namespace gkat {

GuardedTeacher::GuardedTeacher(GAutomaton target, QueryAccounting accounting)
    : target_(std::move(target)), target_moore_(to_moore(target_)), accounting_(accounting) {}

bool GuardedTeacher::membership(const GuardedString& w) {
    if (accounting_ == QueryAccounting::PerCall || seen_.insert(w).second) ++membership_queries_;
    return g_accepts(target_, w);
}

std::optional<GuardedString> GuardedTeacher::equivalence(const GAutomaton& hypothesis) {
    ++equivalence_queries_;
    auto word = moore_bisim_cex(to_moore(hypothesis), target_moore_);
    if (!word) return std::nullopt;
    GuardedWord prefix = word_to_guarded(*word, alphabet());
    for (AtomId a = 0; a < alphabet().num_atoms(); ++a) {
        GuardedString z(prefix, a);
        if (g_accepts(hypothesis, z) != g_accepts(target_, z)) return z;
    }
    return std::nullopt;  // unreachable: differing Moore outputs name an atom
}

MooreTeacher::MooreTeacher(MooreAutomaton target, std::size_t cost_per_query, QueryAccounting accounting)
    : target_(std::move(target)), cost_(cost_per_query), accounting_(accounting) {}

MooreOutput MooreTeacher::membership(const MooreWord& w) {
    if (accounting_ == QueryAccounting::PerCall || seen_.insert(w).second) membership_queries_ += cost_;
    return moore_accepts(target_, w);
}

std::optional<MooreWord> MooreTeacher::equivalence(const MooreAutomaton& hypothesis) {
    ++equivalence_queries_;
    return moore_bisim_cex(hypothesis, target_);
}

GuardedTeacher make_guarded_teacher(const Alphabet& alphabet, const Expr& e, QueryAccounting accounting) {
    return GuardedTeacher(minimise(expr_to_automaton(alphabet, e)), accounting);
}

MooreTeacher make_moore_teacher(const Alphabet& alphabet, const Expr& e, QueryAccounting accounting) {
    GAutomaton target = minimise(expr_to_automaton(alphabet, e));
    return MooreTeacher(moore_minimise(to_moore(target)), alphabet.num_atoms(), accounting);
}

Teachers mk_teacher(const Alphabet& alphabet, const Expr& e, QueryAccounting accounting) {
    GAutomaton target = minimise(expr_to_automaton(alphabet, e));
    MooreAutomaton moore = moore_minimise(to_moore(target));
    return Teachers{GuardedTeacher(std::move(target), accounting),
                    MooreTeacher(std::move(moore), alphabet.num_atoms(), accounting)};
}

}  // namespace gkat
