#pragma once

#include <string>

#include "bregex/ast.hpp"
#include "bregex/logic.hpp"
#include "bregex/state.hpp"

namespace bregex {

// --- building blocks of the logic-to-regex encodings ---

// Positive literal x_i -> \i ; negative literal ¬x_i -> \i x. With a group
// map that agrees with an environment, the literal regex matches "x" exactly
// when the literal is true.
RegexPtr lit_regex(const Literal& lit);

// (?: l1 | l2 | ... ) ; with a right-nested disjunction.
RegexPtr clause_regex(const Clause& c);

// Clause regexes in sequence, one per clause.
RegexPtr conj_regex(const CnfFormula& f);

// (?:(i x)|x); — sets group i to "x" (true) with priority, or leaves it
// undefined (false).
RegexPtr evar_regex(uint32_t i);

// Atomic negation: (?= r | R_cap(g)) R_chk(g) where R_cap(g) = (?:x;)*(g z)
// and R_chk(g) = (?:x;)*\g$. Matches a gadget-family string iff r does not.
RegexPtr cap_regex(GroupId g, std::optional<std::string> name = std::nullopt);
RegexPtr chk_regex(GroupId g);
RegexPtr negation_gadget(RegexPtr r, GroupId g, std::optional<std::string> name = std::nullopt);

struct ReductionOutput {
    RegexPtr regex;
    std::string target;  // ASCII subject string
    TextPtr target_text() const { return make_text(target); }
};

// QBF' decision via negative lookaheads (R_i family).
ReductionOutput reduce_qbf_neg(const QbfPrime& q);

// QBF' decision with only atomic positive lookaheads (R'_i family). The
// output contains no negative lookarounds.
ReductionOutput reduce_qbf_posonly(const QbfPrime& q);

// CNF LEXICOGRAPHIC SAT as a metric reduction: the regex is lookaround-free
// and the matched group map decodes to the lexicographically maximum
// satisfying assignment.
ReductionOutput reduce_lexsat(const CnfFormula& f);

// T2 of the metric reduction: x_i is true iff gm defines group i.
Assignment decode_assignment(const GroupMap& gm, uint32_t n);

// Group maps arising from lexsat matches: every defined x-group covers
// exactly its "x" slot (2(i-1), 2(i-1)+1).
bool well_formed(const GroupMap& gm, uint32_t n);

// Strict lexicographic order on well-formed maps: gm2 > gm iff they agree up
// to some index where gm2 defines the group and gm leaves it undefined.
bool lex_gt(const GroupMap& gm2, const GroupMap& gm, uint32_t n);

}  // namespace bregex
