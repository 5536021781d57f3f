#pragma once

#include <optional>

#include "bregex/logic.hpp"

namespace bregex {

// Deliberately naive ground truth; no propagation or pruning.

bool eval_cnf(const Assignment& a, const CnfFormula& f);

// Recursive evaluation, exponential in n; guarded at n <= 24.
bool eval_qbf(const QbfPrime& q);

// Scans assignments in descending lexicographic order (x1 most significant,
// true > false) and returns the first satisfying one. Guarded at n <= 24.
std::optional<Assignment> brute_lexsat(const CnfFormula& f);

}  // namespace bregex
