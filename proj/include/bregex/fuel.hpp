#pragma once

#include <string>
#include <vector>

#include "bregex/state.hpp"

namespace bregex {

// Chunks are the maximal Acheck-free sublists of an action list, in order;
// the separating check inputs are returned alongside.
struct ChunkSplit {
    std::vector<std::vector<Action>> chunks;
    std::vector<Input> check_inputs;
};

ChunkSplit split_chunks(const ActionList& l);

// 1 iff inp is strictly further (in d) than every check input in l.
int prog(const ActionList& l, const Input& inp, Direction d);

uint64_t fuel_first(const std::vector<Action>& chunk, int p);
uint64_t fuel_middle(const std::vector<Action>& chunk);
uint64_t fuel_last(const std::vector<Action>& chunk, const Input& inp, Direction d, int p);

// Fuel reserve for matching the lookarounds of r from any position in a
// subject of the given length.
uint64_t reg_lk_fuel(size_t subject_len, const RegexPtr& r);
uint64_t act_lk_fuel(size_t subject_len, const ActionList& l);

// The termination measure. A single chunk is measured entirely by fuel_last;
// with two or more chunks, every check separator contributes one unit: the
// middle chunks via fuel_middle(c)+1 and the final separator a lone +1.
uint64_t fuel(const ActionList& l, const Input& inp, Direction d);

struct FuelBreakdown {
    ChunkSplit split;
    int prog = 1;
    uint64_t first = 0;
    std::vector<uint64_t> middles;
    uint64_t check_bonus = 0;
    uint64_t last = 0;
    uint64_t lk = 0;
    uint64_t total = 0;
};

FuelBreakdown fuel_breakdown(const ActionList& l, const Input& inp, Direction d);

// Reachable-state invariants:
//  1. every Acheck is immediately followed by an Areg of a min-0 quantifier;
//  2. every non-last chunk is smaller than the quantified regex after its
//     trailing check;
//  3. check inputs run from more restrictive to less restrictive.
struct InvariantViolation {
    int invariant;  // 1..3
    std::string detail;
};

struct InvariantReport {
    std::vector<InvariantViolation> violations;
    bool ok() const { return violations.empty(); }
};

InvariantReport check_reachable_invariants(const ActionList& l, const Input& inp, Direction d);

}  // namespace bregex
