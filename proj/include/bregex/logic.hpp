#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bregex {

struct Literal {
    uint32_t var = 1;  // 1..n
    bool negated = false;
    bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;  // non-empty disjunction

struct CnfFormula {
    uint32_t var_count = 0;
    std::vector<Clause> clauses;  // m >= 1

    bool operator==(const CnfFormula&) const = default;
    bool valid() const {
        if (clauses.empty()) return false;
        for (const Clause& c : clauses) {
            if (c.empty()) return false;
            for (const Literal& l : c)
                if (l.var == 0 || l.var > var_count) return false;
        }
        return true;
    }
};

enum class Quantifier { Exists, NotExists };

// Prenex formula over x_1..x_n with quantifiers in {∃, ¬∃} and a possibly
// negated CNF matrix.
struct QbfPrime {
    std::vector<Quantifier> prefix;  // length = matrix.var_count
    bool matrix_negated = false;
    CnfFormula matrix;

    bool operator==(const QbfPrime&) const = default;
    bool valid() const { return matrix.valid() && prefix.size() == matrix.var_count; }
};

// Total assignment of x_1..x_n.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(uint32_t n) : values_(n, false) {}

    uint32_t var_count() const { return static_cast<uint32_t>(values_.size()); }
    bool get(uint32_t var) const { return values_.at(var - 1); }
    void set(uint32_t var, bool value) { values_.at(var - 1) = value; }
    bool operator==(const Assignment&) const = default;

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ' ';
            s += values_[i] ? '1' : '0';
        }
        return s;
    }

private:
    std::vector<bool> values_;
};

}  // namespace bregex
