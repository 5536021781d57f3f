#include "doctest.h"

#include <random>

#include "bregex/oracles.hpp"
#include "bregex/testgen.hpp"

using namespace bregex;

namespace {

Assignment assign(std::initializer_list<bool> values) {
    Assignment a(static_cast<uint32_t>(values.size()));
    uint32_t i = 1;
    for (bool v : values) a.set(i++, v);
    return a;
}

const CnfFormula phi_c{3, {{{1, false}, {2, false}}, {{2, true}, {3, false}}}};

}  // namespace

TEST_CASE("eval_cnf") {
    CnfFormula f{2, {{{1, false}, {2, false}}}};
    CHECK(eval_cnf(assign({true, false}), f));
    CHECK_FALSE(eval_cnf(assign({false, false}), f));
    CHECK(eval_cnf(assign({true, true, true}), phi_c));
    CHECK_FALSE(eval_cnf(assign({false, true, false}), phi_c));
}

TEST_CASE("eval_qbf") {
    QbfPrime qa{{Quantifier::NotExists, Quantifier::Exists, Quantifier::NotExists},
                false,
                phi_c};
    CHECK_FALSE(eval_qbf(qa));
    QbfPrime qb{{Quantifier::Exists, Quantifier::NotExists},
                false,
                CnfFormula{2, {{{1, false}, {2, false}}}}};
    CHECK_FALSE(eval_qbf(qb));
    QbfPrime trivial{{Quantifier::Exists}, false, CnfFormula{1, {{{1, false}}}}};
    CHECK(eval_qbf(trivial));
    QbfPrime negated = trivial;
    negated.matrix_negated = true;  // ∃x. ¬(x) is also true (x = ⊥)
    CHECK(eval_qbf(negated));
    QbfPrime none{{Quantifier::NotExists}, false, CnfFormula{1, {{{1, false}}}}};
    CHECK_FALSE(eval_qbf(none));
}

TEST_CASE("brute_lexsat scans from the top") {
    auto best = brute_lexsat(phi_c);
    REQUIRE(best);
    CHECK(*best == assign({true, true, true}));
    auto neg = brute_lexsat(CnfFormula{1, {{{1, true}}}});
    REQUIRE(neg);
    CHECK(*neg == assign({false}));
    CHECK_FALSE(brute_lexsat(CnfFormula{1, {{{1, false}}, {{1, true}}}}));
}

TEST_CASE("pure-existential truth coincides with satisfiability") {
    std::mt19937_64 rng(5);
    testgen::CnfGenOptions opts{4, 4, 3};
    for (int i = 0; i < 300; ++i) {
        CnfFormula f = testgen::random_cnf(rng, opts);
        QbfPrime q;
        q.matrix = f;
        q.prefix.assign(f.var_count, Quantifier::Exists);
        auto best = brute_lexsat(f);
        CHECK(eval_qbf(q) == best.has_value());
        if (best) {
            CHECK(eval_cnf(*best, f));
            // Nothing lexicographically greater satisfies f.
            uint64_t value = 0;
            for (uint32_t v = 1; v <= f.var_count; ++v)
                value = (value << 1) | (best->get(v) ? 1 : 0);
            for (uint64_t greater = value + 1; greater < (uint64_t{1} << f.var_count);
                 ++greater) {
                Assignment a(f.var_count);
                for (uint32_t v = 1; v <= f.var_count; ++v)
                    a.set(v, (greater >> (f.var_count - v)) & 1);
                CHECK_FALSE(eval_cnf(a, f));
            }
        }
    }
}

TEST_CASE("guards refuse oversized instances") {
    CnfFormula big;
    big.var_count = 30;
    big.clauses = {{{1, false}}};
    CHECK_THROWS_AS(brute_lexsat(big), std::invalid_argument);
    QbfPrime q;
    q.matrix = big;
    q.prefix.assign(30, Quantifier::Exists);
    CHECK_THROWS_AS(eval_qbf(q), std::invalid_argument);
}
