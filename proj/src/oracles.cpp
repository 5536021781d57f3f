#include "bregex/oracles.hpp"

#include <stdexcept>

namespace bregex {

namespace {
constexpr uint32_t kOracleVarCap = 24;
}

bool eval_cnf(const Assignment& a, const CnfFormula& f) {
    for (const Clause& c : f.clauses) {
        bool any = false;
        for (const Literal& l : c)
            if (a.get(l.var) != l.negated) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

namespace {

bool eval_from(const QbfPrime& q, uint32_t i, Assignment& env) {
    if (i > q.matrix.var_count) {
        bool base = eval_cnf(env, q.matrix);
        return q.matrix_negated ? !base : base;
    }
    env.set(i, true);
    bool with_true = eval_from(q, i + 1, env);
    env.set(i, false);
    bool with_false = eval_from(q, i + 1, env);
    bool exists = with_true || with_false;
    return q.prefix[i - 1] == Quantifier::Exists ? exists : !exists;
}

}  // namespace

bool eval_qbf(const QbfPrime& q) {
    if (!q.valid()) throw std::invalid_argument("invalid QBF' instance");
    if (q.matrix.var_count > kOracleVarCap)
        throw std::invalid_argument("eval_qbf guard: n > 24");
    Assignment env(q.matrix.var_count);
    return eval_from(q, 1, env);
}

std::optional<Assignment> brute_lexsat(const CnfFormula& f) {
    if (!f.valid()) throw std::invalid_argument("invalid CNF instance");
    uint32_t n = f.var_count;
    if (n > kOracleVarCap) throw std::invalid_argument("brute_lexsat guard: n > 24");
    Assignment a(n);
    uint64_t total = uint64_t{1} << n;
    for (uint64_t step = 0; step < total; ++step) {
        uint64_t bits = total - 1 - step;  // descending: all-true first
        for (uint32_t v = 1; v <= n; ++v) a.set(v, (bits >> (n - v)) & 1);
        if (eval_cnf(a, f)) return a;
    }
    return std::nullopt;
}

}  // namespace bregex
