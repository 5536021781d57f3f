#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bregex/fuel.hpp"
#include "bregex/state.hpp"

namespace bregex {

struct RunStats {
    uint64_t initial_fuel = 0;
    uint64_t steps = 0;      // recursive calls performed
    uint64_t max_depth = 0;  // deepest nesting of calls; bounded by initial fuel
    uint64_t peak_action_list_size = 0;
};

// Observation points for property tests and tracing. on_enter fires for every
// state the algorithm visits (including the initial one); on_call fires for
// every recursive call with the calling and callee states. Group maps are not
// exposed: fuel and the reachability invariants do not depend on them.
struct EngineHooks {
    std::function<void(const ActionList&, const Input&, Direction, uint64_t fuel_left)> on_enter;
    std::function<void(const ActionList&, const Input&, Direction, const ActionList&,
                       const Input&, Direction)>
        on_call;
};

// Depth-first exploration of the backtracking tree, one fuel unit per
// recursive call. Realized with an explicit stack so the measured depth bound
// is also the engine's real stack bound.
MatchOutcome compute_result(const MatchConfig& cfg, ActionList l, Input inp, GroupMap gm,
                            Direction d, uint64_t fuel, RunStats* stats = nullptr,
                            const EngineHooks* hooks = nullptr,
                            std::vector<Choice>* trail = nullptr);

// Runs [Areg r] at the given position with fuel(...)+1; never OutOfFuel.
MatchOutcome match_at(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s, size_t pos,
                      RunStats* stats = nullptr, const EngineHooks* hooks = nullptr,
                      std::vector<Choice>* trail = nullptr);

struct MatchRecord {
    size_t start = 0;
    size_t end = 0;
    GroupMap groups;
};

// First starting position, left to right, where match_at succeeds.
std::optional<MatchRecord> search(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s,
                                  RunStats* stats = nullptr);

}  // namespace bregex
