#pragma once

#include <random>

#include "bregex/ast.hpp"
#include "bregex/logic.hpp"

namespace bregex::testgen {

struct RegexGenOptions {
    uint64_t max_size = 25;  // cap on the regex size measure
    std::vector<Char> letters = {U'a', U'b', U'c'};
    bool lookarounds = true;
    bool lower_bounded = false;
    uint32_t max_min = 3;  // quantifier minimum when lower_bounded
    bool groups = true;    // capture groups and backreferences
    bool anchors = true;
};

// Seeded generator producing validated, parser-shaped regexes (groups
// numbered left to right, canonical right-nested sequences/disjunctions).
class RegexGen {
public:
    RegexGen(uint64_t seed, RegexGenOptions opts) : rng_(seed), opts_(std::move(opts)) {}

    RegexPtr next();
    Text next_string(size_t max_len);
    // A string correlated with r: produced by walking the AST and emitting
    // plausible characters, then randomly mutated. Exercises deep
    // backtracking far better than uniform strings.
    Text sample_for(const RegexPtr& r, size_t max_len);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    RegexGenOptions opts_;

    uint64_t pick(uint64_t lo, uint64_t hi);  // inclusive
    RegexPtr gen_pattern(uint64_t budget, int depth);
    RegexPtr gen_term(uint64_t budget, int depth);
    RegexPtr gen_atom(uint64_t budget, int depth, bool* quantifiable);
    // Backreference targets are patched once the group count is known.
    RegexPtr renumber_and_patch(const RegexPtr& r);
};

struct CnfGenOptions {
    uint32_t max_vars = 4;
    uint32_t max_clauses = 4;
    uint32_t max_width = 3;
};

CnfFormula random_cnf(std::mt19937_64& rng, const CnfGenOptions& opts);
QbfPrime random_qbf(std::mt19937_64& rng, const CnfGenOptions& opts);

// Every clause of width 1..max_width over n variables (no repeated variable
// inside a clause), in a fixed order.
std::vector<Clause> all_clauses(uint32_t n, uint32_t max_width);

// Overlapping-quantifier shapes with failing tails; the step counts are
// exponential in the string length, which exercises deep backtracking and
// long chunk chains deterministically.
RegexPtr adversarial_regex(std::mt19937_64& rng);
Text adversarial_string(std::mt19937_64& rng, size_t max_len);

}  // namespace bregex::testgen
