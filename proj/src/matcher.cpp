#include "bregex/matcher.hpp"

#include <cassert>
#include <variant>

namespace bregex {

namespace {

struct EngineState {
    ActionList acts;
    Input inp;
    GroupMap gm;
    Direction dir;
    uint64_t fuel = 0;
};

// Snapshot of the parts of a state the hooks can see.
struct StateKey {
    ActionList acts;
    Input inp;
    Direction dir;
};

// On NoMatch of the current branch, resume with the stored alternative.
struct AltFrame {
    EngineState alt;
    StateKey parent;
    size_t trail_len = 0;
    Choice alt_choice = Choice::Right;
};

// Joins a lookaround sub-match with its continuation.
struct LookFrame {
    bool positive = true;
    ActionList cont;
    Input inp;      // lookarounds do not consume input
    GroupMap gm;    // kept for the negative-NoMatch path
    Direction dir;  // caller direction
    uint64_t fuel = 0;
    StateKey parent;
};

using Frame = std::variant<AltFrame, LookFrame>;

class Engine {
public:
    Engine(const MatchConfig& cfg, RunStats* stats, const EngineHooks* hooks,
           std::vector<Choice>* trail)
        : cfg_(cfg), stats_(stats), hooks_(hooks), trail_(trail) {}

    MatchOutcome run(EngineState st) {
        if (stats_) {
            stats_->initial_fuel = st.fuel;
            min_fuel_ = st.fuel;
        }
        note_enter(st);
        std::optional<MatchOutcome> pending;
        while (true) {
            if (!pending) {
                pending = step(st);
                continue;
            }
            if (frames_.empty()) return *pending;
            Frame frame = std::move(frames_.back());
            frames_.pop_back();
            if (auto* alt = std::get_if<AltFrame>(&frame)) {
                if (pending->kind == OutcomeKind::NoMatch) {
                    if (trail_) {
                        trail_->resize(alt->trail_len);
                        trail_->push_back(alt->alt_choice);
                    }
                    note_call(alt->parent, alt->alt);
                    st = std::move(alt->alt);
                    note_enter(st);
                    pending.reset();
                }
                // Success and OutOfFuel propagate past the alternative.
                continue;
            }
            auto& look = std::get<LookFrame>(frame);
            if (pending->kind == OutcomeKind::OutOfFuel) continue;
            bool sub_matched = pending->kind == OutcomeKind::Success;
            if (sub_matched != look.positive) {
                pending = MatchOutcome::no_match();
                continue;
            }
            // Positive lookarounds adopt the sub-match's group map; negative
            // ones discard everything the failed sub-match did.
            GroupMap next_gm =
                look.positive ? std::move(pending->leaf->groups) : std::move(look.gm);
            EngineState next{std::move(look.cont), std::move(look.inp), std::move(next_gm),
                             look.dir, look.fuel};
            if (trail_) trail_->push_back(Choice::Right);
            note_call(look.parent, next);
            st = std::move(next);
            note_enter(st);
            pending.reset();
        }
    }

private:
    const MatchConfig& cfg_;
    RunStats* stats_;
    const EngineHooks* hooks_;
    std::vector<Choice>* trail_;
    std::vector<Frame> frames_;
    uint64_t min_fuel_ = 0;

    void note_enter(const EngineState& st) {
        if (stats_) {
            if (st.fuel < min_fuel_) min_fuel_ = st.fuel;
            stats_->max_depth = stats_->initial_fuel - min_fuel_;
            uint64_t sz = action_list_size(st.acts);
            if (sz > stats_->peak_action_list_size) stats_->peak_action_list_size = sz;
        }
        if (hooks_ && hooks_->on_enter) hooks_->on_enter(st.acts, st.inp, st.dir, st.fuel);
    }

    void note_call(const StateKey& parent, const EngineState& child) {
        if (stats_) ++stats_->steps;
        if (hooks_ && hooks_->on_call)
            hooks_->on_call(parent.acts, parent.inp, parent.dir, child.acts, child.inp,
                            child.dir);
    }

    // Moves st to one of its child states (returning nullopt) or produces an
    // outcome for the current branch.
    std::optional<MatchOutcome> step(EngineState& st) {
        if (st.fuel == 0) return MatchOutcome::out_of_fuel();
        if (!st.acts) return MatchOutcome::success(st.inp, st.gm);
        const Action& head = st.acts->head;
        const ActionList& cont = st.acts->tail;
        switch (head.kind) {
            case Action::Kind::Check:
                if (!is_strict_progress(st.inp, head.check, st.dir))
                    return MatchOutcome::no_match();
                return advance(st, cont, st.inp, st.gm);
            case Action::Kind::Close:
                return advance(st, cont, st.inp, gm_close(st.gm, head.group, st.inp.pos));
            case Action::Kind::Reg:
                break;
        }
        const Regex& r = *head.reg;
        switch (r.kind()) {
            case RegexKind::Epsilon:
                return advance(st, cont, st.inp, st.gm);
            case RegexKind::Character: {
                auto rd = read_char(cfg_, r.cd(), st.inp, st.dir);
                if (!rd) return MatchOutcome::no_match();
                return advance(st, cont, rd->second, st.gm);
            }
            case RegexKind::Backreference: {
                auto rd = read_backref(cfg_, st.gm, r.group(), st.inp, st.dir);
                if (!rd) return MatchOutcome::no_match();
                return advance(st, cont, rd->second, st.gm);
            }
            case RegexKind::Anchor:
                if (!anchor_satisfied(cfg_, r.anchor_kind(), st.inp))
                    return MatchOutcome::no_match();
                return advance(st, cont, st.inp, st.gm);
            case RegexKind::Sequence: {
                ActionList next =
                    st.dir == Direction::Forward
                        ? cons(Action::make_reg(r.left()), cons(Action::make_reg(r.right()), cont))
                        : cons(Action::make_reg(r.right()), cons(Action::make_reg(r.left()), cont));
                return advance(st, next, st.inp, st.gm);
            }
            case RegexKind::NonCapGroup:
                // Stripped when actions are built; unreachable but harmless.
                return advance(st, cons(Action::make_reg(r.body()), cont), st.inp, st.gm);
            case RegexKind::Group: {
                ActionList next =
                    cons(Action::make_reg(r.body()), cons(Action::make_close(r.group()), cont));
                return advance(st, next, st.inp, gm_open(st.gm, r.group(), st.inp.pos));
            }
            case RegexKind::Disjunction: {
                EngineState alt{cons(Action::make_reg(r.right()), cont), st.inp, st.gm, st.dir,
                                st.fuel - 1};
                return branch(st, cons(Action::make_reg(r.left()), cont), st.inp, st.gm,
                              std::move(alt));
            }
            case RegexKind::Quantified: {
                if (r.min() > 0) {
                    ActionList next = cons(
                        Action::make_reg(r.body()),
                        cons(Action::make_reg(
                                 re::quant(r.greedy(), r.min() - 1, r.delta(), r.body())),
                             cont));
                    return advance(st, next, st.inp, gm_reset(st.gm, r.def_groups()));
                }
                if (r.delta().is_zero()) return advance(st, cont, st.inp, st.gm);
                ActionList iter = cons(
                    Action::make_reg(r.body()),
                    cons(Action::make_check(st.inp),
                         cons(Action::make_reg(
                                  re::quant(r.greedy(), 0, r.delta().pred(), r.body())),
                              cont)));
                GroupMap iter_gm = gm_reset(st.gm, r.def_groups());
                if (r.greedy()) {
                    EngineState alt{cont, st.inp, st.gm, st.dir, st.fuel - 1};
                    return branch(st, std::move(iter), st.inp, std::move(iter_gm),
                                  std::move(alt));
                }
                EngineState alt{std::move(iter), st.inp, std::move(iter_gm), st.dir,
                                st.fuel - 1};
                return branch(st, cont, st.inp, st.gm, std::move(alt));
            }
            case RegexKind::Lookaround: {
                LookFrame frame;
                frame.positive = r.look_positive();
                frame.cont = cont;
                frame.inp = st.inp;
                frame.gm = st.gm;
                frame.dir = st.dir;
                frame.fuel = st.fuel - 1;
                frame.parent = StateKey{st.acts, st.inp, st.dir};
                frames_.push_back(std::move(frame));
                EngineState sub{actions_of(r.body()), st.inp, st.gm,
                                look_direction(r.look_kind()), st.fuel - 1};
                if (trail_) trail_->push_back(Choice::Right);
                note_call(StateKey{st.acts, st.inp, st.dir}, sub);
                st = std::move(sub);
                note_enter(st);
                return std::nullopt;
            }
        }
        return MatchOutcome::no_match();
    }

    // Deterministic transition into (acts, inp, gm), same direction.
    std::optional<MatchOutcome> advance(EngineState& st, ActionList acts, Input inp,
                                        GroupMap gm) {
        EngineState child{std::move(acts), std::move(inp), std::move(gm), st.dir, st.fuel - 1};
        if (trail_) trail_->push_back(Choice::Right);
        note_call(StateKey{st.acts, st.inp, st.dir}, child);
        st = std::move(child);
        note_enter(st);
        return std::nullopt;
    }

    // Choice transition: try (acts, inp, gm) first, fall back to alt.
    std::optional<MatchOutcome> branch(EngineState& st, ActionList acts, Input inp, GroupMap gm,
                                       EngineState alt) {
        AltFrame frame;
        frame.parent = StateKey{st.acts, st.inp, st.dir};
        frame.trail_len = trail_ ? trail_->size() : 0;
        frame.alt_choice = Choice::Right;
        frame.alt = std::move(alt);
        frames_.push_back(std::move(frame));
        EngineState first{std::move(acts), std::move(inp), std::move(gm), st.dir, st.fuel - 1};
        if (trail_) trail_->push_back(Choice::Left);
        note_call(StateKey{st.acts, st.inp, st.dir}, first);
        st = std::move(first);
        note_enter(st);
        return std::nullopt;
    }
};

}  // namespace

MatchOutcome compute_result(const MatchConfig& cfg, ActionList l, Input inp, GroupMap gm,
                            Direction d, uint64_t fuel, RunStats* stats,
                            const EngineHooks* hooks, std::vector<Choice>* trail) {
    Engine engine(cfg, stats, hooks, trail);
    return engine.run(EngineState{std::move(l), std::move(inp), std::move(gm), d, fuel});
}

MatchOutcome match_at(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s, size_t pos,
                      RunStats* stats, const EngineHooks* hooks, std::vector<Choice>* trail) {
    assert(pos <= s->size());
    ActionList l = actions_of(r);
    Input inp = input_at(s, pos);
    uint64_t budget = fuel(l, inp, Direction::Forward) + 1;
    return compute_result(cfg, std::move(l), std::move(inp), GroupMap::empty(),
                          Direction::Forward, budget, stats, hooks, trail);
}

std::optional<MatchRecord> search(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s,
                                  RunStats* stats) {
    for (size_t pos = 0; pos <= s->size(); ++pos) {
        RunStats attempt;
        MatchOutcome out = match_at(cfg, r, s, pos, stats ? &attempt : nullptr);
        if (stats) {
            stats->initial_fuel = std::max(stats->initial_fuel, attempt.initial_fuel);
            stats->steps += attempt.steps;
            stats->max_depth = std::max(stats->max_depth, attempt.max_depth);
            stats->peak_action_list_size =
                std::max(stats->peak_action_list_size, attempt.peak_action_list_size);
        }
        if (out.is_success())
            return MatchRecord{pos, out.leaf->final.pos, std::move(out.leaf->groups)};
    }
    return std::nullopt;
}

}  // namespace bregex
