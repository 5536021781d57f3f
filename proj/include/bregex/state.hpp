#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bregex/ast.hpp"
#include "bregex/chars.hpp"

namespace bregex {

enum class Direction { Forward, Backward };

inline Direction look_direction(LookKind k) {
    return k == LookKind::Ahead ? Direction::Forward : Direction::Backward;
}

// Fixed flagless matching behavior: case-sensitive, non-multiline, non-dotall,
// ASCII word set. Kept as an explicit record so every read goes through it.
struct MatchConfig {
    bool word_char(Char c) const { return is_word_char(c); }
};

// A subject string plus a position between characters (0..size inclusive).
struct Input {
    TextPtr text;
    size_t pos = 0;

    size_t length() const { return text->size(); }
    size_t remaining(Direction d) const {
        return d == Direction::Forward ? text->size() - pos : pos;
    }
    bool operator==(const Input& o) const { return text == o.text && pos == o.pos; }
};

inline Input input_at(TextPtr text, size_t pos) { return Input{std::move(text), pos}; }

struct GroupEntry {
    bool open = false;
    size_t start = 0;
    size_t end = 0;  // meaningful when closed

    static GroupEntry opened(size_t start) { return GroupEntry{true, start, 0}; }
    static GroupEntry closed(size_t start, size_t end) { return GroupEntry{false, start, end}; }
    bool operator==(const GroupEntry&) const = default;
};

class GroupMap {
public:
    static GroupMap empty() { return GroupMap{}; }

    std::optional<GroupEntry> get(GroupId g) const {
        auto it = entries_.find(g);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }
    // Defined means closed; an open entry is still being captured.
    bool defined(GroupId g) const {
        auto e = get(g);
        return e && !e->open;
    }
    bool has_open_entries() const {
        for (auto& [g, e] : entries_)
            if (e.open) return true;
        return false;
    }
    const std::map<GroupId, GroupEntry>& entries() const { return entries_; }
    bool operator==(const GroupMap&) const = default;

    friend GroupMap gm_open(GroupMap gm, GroupId g, size_t pos);
    friend GroupMap gm_close(GroupMap gm, GroupId g, size_t pos);
    friend GroupMap gm_reset(GroupMap gm, const std::vector<GroupId>& gs);

private:
    std::map<GroupId, GroupEntry> entries_;
};

GroupMap gm_open(GroupMap gm, GroupId g, size_t pos);
// Requires an open entry for g; closes it as (min, max) of the two positions,
// which covers backward matching. Closing a non-open group throws.
GroupMap gm_close(GroupMap gm, GroupId g, size_t pos);
GroupMap gm_reset(GroupMap gm, const std::vector<GroupId>& gs);

// A match result: the final input position plus the captured groups.
struct Leaf {
    Input final;
    GroupMap groups;
    bool operator==(const Leaf&) const = default;
};

enum class OutcomeKind { Success, NoMatch, OutOfFuel };

struct MatchOutcome {
    OutcomeKind kind = OutcomeKind::NoMatch;
    std::optional<Leaf> leaf;  // present iff Success

    static MatchOutcome success(Input final, GroupMap gm) {
        return MatchOutcome{OutcomeKind::Success, Leaf{std::move(final), std::move(gm)}};
    }
    static MatchOutcome no_match() { return MatchOutcome{OutcomeKind::NoMatch, std::nullopt}; }
    static MatchOutcome out_of_fuel() {
        return MatchOutcome{OutcomeKind::OutOfFuel, std::nullopt};
    }
    bool is_success() const { return kind == OutcomeKind::Success; }
};

// Left/Right branch decisions; Left is always the branch the backtracking
// engine tries first.
enum class Choice : uint8_t { Left, Right };

// --- actions ---

struct Action {
    enum class Kind { Reg, Close, Check };
    Kind kind = Kind::Reg;
    RegexPtr reg;   // Reg
    GroupId group = 0;  // Close
    Input check;    // Check

    // Non-capturing groups are transparent to the semantics; strip them here
    // so unwrapping never costs a matcher step.
    static Action make_reg(RegexPtr r) {
        while (r->kind() == RegexKind::NonCapGroup) r = r->body();
        Action a;
        a.kind = Kind::Reg;
        a.reg = std::move(r);
        return a;
    }
    static Action make_close(GroupId g) {
        Action a;
        a.kind = Kind::Close;
        a.group = g;
        return a;
    }
    static Action make_check(Input i) {
        Action a;
        a.kind = Kind::Check;
        a.check = std::move(i);
        return a;
    }

    // |Areg r| = expanded size, |Aclose g| = |Acheck i| = 1.
    uint64_t size() const { return kind == Kind::Reg ? reg->expanded_size() : 1; }
};

struct ActionNode;
using ActionList = std::shared_ptr<const ActionNode>;  // nullptr is the empty list

struct ActionNode {
    Action head;
    ActionList tail;
    uint64_t total_size;  // sum of action sizes over the whole list
    uint32_t length;
};

ActionList cons(Action head, ActionList tail);
ActionList actions_of(RegexPtr r);  // [Areg r]

inline uint64_t action_list_size(const ActionList& l) { return l ? l->total_size : 0; }
inline uint32_t action_list_length(const ActionList& l) { return l ? l->length : 0; }

std::string render_action(const Action& a);
std::string render_action_list(const ActionList& l);

// --- single-step reads ---

// Forward: succeeds when the character right of pos satisfies cd, moving to
// pos+1. Backward: the character left of pos, moving to pos-1.
std::optional<std::pair<Char, Input>> read_char(const MatchConfig& cfg, const CharDescriptor& cd,
                                                const Input& inp, Direction d);

// An absent or still-open group consumes nothing and succeeds.
std::optional<std::pair<Text, Input>> read_backref(const MatchConfig& cfg, const GroupMap& gm,
                                                   GroupId g, const Input& inp, Direction d);

// True iff inp is strictly further than check in direction d.
bool is_strict_progress(const Input& inp, const Input& check, Direction d);

bool anchor_satisfied(const MatchConfig& cfg, AnchorKind a, const Input& inp);

}  // namespace bregex
