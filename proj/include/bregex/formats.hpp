#pragma once

#include <string>
#include <vector>

#include "bregex/logic.hpp"
#include "bregex/reductions.hpp"

namespace bregex {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// QBF' text format:
//   p qbfp <n> <m>
//   q E <i> | q NE <i>     (one line per variable, i = 1..n in order)
//   neg 0|1
//   <m clause lines of DIMACS literals terminated by 0>
QbfPrime parse_qbfp(const std::string& text);
std::string write_qbfp(const QbfPrime& q);

// Standard DIMACS CNF ("p cnf n m").
CnfFormula parse_dimacs_cnf(const std::string& text);
std::string write_dimacs_cnf(const CnfFormula& f);

// Prenex QBF in QDIMACS form: DIMACS plus a/e quantifier lines, outermost
// first. Every clause variable must be quantified.
struct PcnfQbf {
    // (universal?, original variable id), outermost first.
    std::vector<std::pair<bool, uint32_t>> prefix;
    CnfFormula matrix;  // literals in original variable ids
};

PcnfQbf parse_qdimacs(const std::string& text);

// Each ∀ becomes ¬∃ with polarity propagation; variables are renumbered to
// prefix order. The QBF' value equals the PCNF-QBF value.
QbfPrime qdimacs_to_qbfprime(const PcnfQbf& p);
QbfPrime qdimacs_to_qbfprime(const std::string& text);

// Self-contained JavaScript snippet that runs the emitted regex on the target
// string and prints a one-line JSON verdict (match-at-0 plus group spans).
std::string emit_js_snippet(const ReductionOutput& out);

}  // namespace bregex
