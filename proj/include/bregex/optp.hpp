#pragma once

#include <optional>
#include <vector>

#include "bregex/matcher.hpp"
#include "bregex/state.hpp"

namespace bregex {

// Key under which single-branch runs are ranked: lexicographic on the choice
// list (Left < Right), then Success before NoMatch/OutOfFuel. Failing runs
// carry the maximal (all-Right) list of the same length, so any accepting run
// outranks every rejecting one.
struct RankedOutcome {
    std::vector<Choice> key_choices;
    int rank = 1;  // 0 = success, 1 = no-match / out-of-fuel
    MatchOutcome outcome;

    bool key_less(const RankedOutcome& o) const {
        if (key_choices != o.key_choices)
            return std::lexicographical_compare(key_choices.begin(), key_choices.end(),
                                                o.key_choices.begin(), o.key_choices.end());
        return rank < o.rank;
    }
};

// Single-branch matcher: follows the given choices instead of backtracking,
// popping exactly one choice per step. Supports neither lookarounds nor
// lower-bounded quantifiers (throws std::invalid_argument on them).
MatchOutcome optp_result(const MatchConfig& cfg, ActionList l, Input inp, GroupMap gm,
                         Direction d, const std::vector<Choice>& choices);

// Wraps optp_result on [Areg r] at position 0. |choices| must equal
// fuel([Areg r], s@0, forward).
RankedOutcome optp_algo(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s,
                        std::vector<Choice> choices);

inline constexpr uint64_t kEnumerationFuelCap = 20;

struct EnumerationGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerates all 2^fuel choice lists and returns the outcome of the minimal
// ranked key; equals match_at(r, s, 0). Refuses when fuel > 20.
MatchOutcome minimize_over_choices(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s);

// Turns the per-step trail of a successful compute_result run into a choice
// list of the given fuel length that makes optp_result reproduce the same
// leaf. Throws if the trail does not come from a Success run.
std::vector<Choice> extract_choices(const std::vector<Choice>& trail, bool was_success,
                                    uint64_t fuel_len);

std::string render_choices(const std::vector<Choice>& choices);
std::optional<std::vector<Choice>> parse_choices(const std::string& text);

}  // namespace bregex
