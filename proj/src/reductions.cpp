#include "bregex/reductions.hpp"

#include <stdexcept>

namespace bregex {

namespace {

const Char kX = U'x';
const Char kSep = U';';
const Char kZ = U'z';

std::string target_string(uint32_t pairs) {
    std::string s;
    s.reserve(pairs * 2 + 1);
    for (uint32_t i = 0; i < pairs; ++i) s += "x;";
    s += 'z';
    return s;
}

std::vector<RegexPtr> evar_terms(uint32_t i) {
    return {re::noncap(re::disj(re::group(i, re::chr(kX)), re::chr(kX))), re::chr(kSep)};
}

std::vector<RegexPtr> clause_terms(const Clause& c) {
    std::vector<RegexPtr> lits;
    lits.reserve(c.size());
    for (const Literal& l : c) lits.push_back(lit_regex(l));
    return {re::noncap(re::disj_all(lits)), re::chr(kSep)};
}

std::vector<RegexPtr> conj_terms(const CnfFormula& f) {
    std::vector<RegexPtr> terms;
    for (const Clause& c : f.clauses)
        for (RegexPtr& t : clause_terms(c)) terms.push_back(std::move(t));
    return terms;
}

std::vector<RegexPtr> cap_terms(GroupId g, std::optional<std::string> name) {
    return {re::star(re::noncap(re::seq(re::chr(kX), re::chr(kSep)))),
            re::group(g, re::chr(kZ), std::move(name))};
}

std::vector<RegexPtr> chk_terms(GroupId g) {
    return {re::star(re::noncap(re::seq(re::chr(kX), re::chr(kSep)))), re::backref(g),
            re::anchor(AnchorKind::End)};
}

std::vector<RegexPtr> gadget_terms(RegexPtr inner, GroupId g, std::optional<std::string> name) {
    std::vector<RegexPtr> terms;
    terms.push_back(
        re::look(LookKind::Ahead, true, re::disj(std::move(inner), re::seq_all(cap_terms(g, name)))));
    for (RegexPtr& t : chk_terms(g)) terms.push_back(std::move(t));
    return terms;
}

void require_valid(const QbfPrime& q) {
    if (!q.valid()) throw std::invalid_argument("invalid QBF' instance");
}

void require_valid(const CnfFormula& f) {
    if (!f.valid()) throw std::invalid_argument("invalid CNF instance");
}

}  // namespace

RegexPtr lit_regex(const Literal& lit) {
    RegexPtr ref = re::backref(lit.var);
    if (!lit.negated) return ref;
    return re::seq(std::move(ref), re::chr(kX));
}

RegexPtr clause_regex(const Clause& c) {
    if (c.empty()) throw std::invalid_argument("empty clause");
    return re::seq_all(clause_terms(c));
}

RegexPtr conj_regex(const CnfFormula& f) {
    require_valid(f);
    return re::seq_all(conj_terms(f));
}

RegexPtr evar_regex(uint32_t i) { return re::seq_all(evar_terms(i)); }

RegexPtr cap_regex(GroupId g, std::optional<std::string> name) {
    return re::seq_all(cap_terms(g, std::move(name)));
}

RegexPtr chk_regex(GroupId g) { return re::seq_all(chk_terms(g)); }

RegexPtr negation_gadget(RegexPtr r, GroupId g, std::optional<std::string> name) {
    return re::seq_all(gadget_terms(std::move(r), g, std::move(name)));
}

ReductionOutput reduce_qbf_neg(const QbfPrime& q) {
    require_valid(q);
    uint32_t n = q.matrix.var_count;
    uint32_t m = static_cast<uint32_t>(q.matrix.clauses.size());
    std::vector<RegexPtr> terms = conj_terms(q.matrix);
    if (q.matrix_negated) terms = {re::look(LookKind::Ahead, false, re::seq_all(terms))};
    for (uint32_t i = n; i >= 1; --i) {
        std::vector<RegexPtr> next = evar_terms(i);
        for (RegexPtr& t : terms) next.push_back(std::move(t));
        if (q.prefix[i - 1] == Quantifier::NotExists)
            next = {re::look(LookKind::Ahead, false, re::seq_all(next))};
        terms = std::move(next);
    }
    return ReductionOutput{re::seq_all(terms), target_string(n + m)};
}

ReductionOutput reduce_qbf_posonly(const QbfPrime& q) {
    require_valid(q);
    uint32_t n = q.matrix.var_count;
    uint32_t m = static_cast<uint32_t>(q.matrix.clauses.size());
    // Fresh gadget groups take indices n+1, n+2, ... innermost-first, which
    // is also their left-to-right opening order in the final regex. Names
    // follow the quantifier position (z2 for quantifier 2, z_{n+1} for a
    // negated matrix).
    GroupId next_gadget = n + 1;
    std::vector<RegexPtr> terms = conj_terms(q.matrix);
    if (q.matrix_negated) {
        GroupId g = next_gadget++;
        terms = gadget_terms(re::seq_all(terms), g, "z" + std::to_string(n + 1));
    }
    for (uint32_t i = n; i >= 1; --i) {
        std::vector<RegexPtr> next = evar_terms(i);
        for (RegexPtr& t : terms) next.push_back(std::move(t));
        if (q.prefix[i - 1] == Quantifier::NotExists) {
            GroupId g = next_gadget++;
            next = gadget_terms(re::noncap(re::seq_all(next)), g, "z" + std::to_string(i));
        }
        terms = std::move(next);
    }
    return ReductionOutput{re::seq_all(terms), target_string(n + m)};
}

ReductionOutput reduce_lexsat(const CnfFormula& f) {
    require_valid(f);
    uint32_t n = f.var_count;
    uint32_t m = static_cast<uint32_t>(f.clauses.size());
    std::vector<RegexPtr> terms;
    for (uint32_t i = 1; i <= n; ++i)
        for (RegexPtr& t : evar_terms(i)) terms.push_back(std::move(t));
    for (RegexPtr& t : conj_terms(f)) terms.push_back(std::move(t));
    return ReductionOutput{re::seq_all(terms), target_string(n + m)};
}

Assignment decode_assignment(const GroupMap& gm, uint32_t n) {
    Assignment a(n);
    for (uint32_t i = 1; i <= n; ++i) a.set(i, gm.defined(i));
    return a;
}

bool well_formed(const GroupMap& gm, uint32_t n) {
    for (uint32_t i = 1; i <= n; ++i) {
        auto e = gm.get(i);
        if (!e) continue;
        if (e->open) return false;
        size_t slot = 2 * (static_cast<size_t>(i) - 1);
        if (e->start != slot || e->end != slot + 1) return false;
    }
    return true;
}

bool lex_gt(const GroupMap& gm2, const GroupMap& gm, uint32_t n) {
    for (uint32_t i = 1; i <= n; ++i) {
        bool d2 = gm2.defined(i);
        bool d1 = gm.defined(i);
        if (d2 != d1) return d2;  // first divergence decides
    }
    return false;
}

}  // namespace bregex
