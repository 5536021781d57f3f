#include "bregex/optp.hpp"

#include <stdexcept>

#include "bregex/fuel.hpp"

namespace bregex {

MatchOutcome optp_result(const MatchConfig& cfg, ActionList l, Input inp, GroupMap gm,
                         Direction d, const std::vector<Choice>& choices) {
    size_t next = 0;
    while (true) {
        // An empty action list is a result even with no choices left; a state
        // with work pending and no choices is out of fuel.
        if (!l) return MatchOutcome::success(inp, gm);
        if (next >= choices.size()) return MatchOutcome::out_of_fuel();
        Choice c = choices[next++];
        const Action head = l->head;
        ActionList cont = l->tail;
        switch (head.kind) {
            case Action::Kind::Check:
                if (!is_strict_progress(inp, head.check, d)) return MatchOutcome::no_match();
                l = std::move(cont);
                continue;
            case Action::Kind::Close:
                gm = gm_close(std::move(gm), head.group, inp.pos);
                l = std::move(cont);
                continue;
            case Action::Kind::Reg:
                break;
        }
        const Regex& r = *head.reg;
        switch (r.kind()) {
            case RegexKind::Epsilon:
                l = std::move(cont);
                break;
            case RegexKind::Character: {
                auto rd = read_char(cfg, r.cd(), inp, d);
                if (!rd) return MatchOutcome::no_match();
                inp = rd->second;
                l = std::move(cont);
                break;
            }
            case RegexKind::Backreference: {
                auto rd = read_backref(cfg, gm, r.group(), inp, d);
                if (!rd) return MatchOutcome::no_match();
                inp = rd->second;
                l = std::move(cont);
                break;
            }
            case RegexKind::Anchor:
                if (!anchor_satisfied(cfg, r.anchor_kind(), inp)) return MatchOutcome::no_match();
                l = std::move(cont);
                break;
            case RegexKind::Sequence:
                l = d == Direction::Forward
                        ? cons(Action::make_reg(r.left()),
                               cons(Action::make_reg(r.right()), std::move(cont)))
                        : cons(Action::make_reg(r.right()),
                               cons(Action::make_reg(r.left()), std::move(cont)));
                break;
            case RegexKind::NonCapGroup:
                l = cons(Action::make_reg(r.body()), std::move(cont));
                break;
            case RegexKind::Group:
                gm = gm_open(std::move(gm), r.group(), inp.pos);
                l = cons(Action::make_reg(r.body()),
                         cons(Action::make_close(r.group()), std::move(cont)));
                break;
            case RegexKind::Disjunction:
                l = cons(Action::make_reg(c == Choice::Left ? r.left() : r.right()),
                         std::move(cont));
                break;
            case RegexKind::Quantified: {
                if (r.min() > 0) {
                    // Mandatory unroll; present in the reference listing even
                    // though the OptP theorem's scope excludes lower bounds.
                    gm = gm_reset(std::move(gm), r.def_groups());
                    l = cons(Action::make_reg(r.body()),
                             cons(Action::make_reg(re::quant(r.greedy(), r.min() - 1,
                                                             r.delta(), r.body())),
                                  std::move(cont)));
                    break;
                }
                if (r.delta().is_zero()) {
                    l = std::move(cont);
                    break;
                }
                // Greedy: Left iterates, Right skips. Lazy: mirrored.
                bool iterate = r.greedy() == (c == Choice::Left);
                if (!iterate) {
                    l = std::move(cont);
                    break;
                }
                gm = gm_reset(std::move(gm), r.def_groups());
                l = cons(Action::make_reg(r.body()),
                         cons(Action::make_check(inp),
                              cons(Action::make_reg(
                                       re::quant(r.greedy(), 0, r.delta().pred(), r.body())),
                                   std::move(cont))));
                break;
            }
            case RegexKind::Lookaround:
                throw std::invalid_argument("optp_result does not support lookarounds");
        }
    }
}

RankedOutcome optp_algo(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s,
                        std::vector<Choice> choices) {
    MatchOutcome out =
        optp_result(cfg, actions_of(r), input_at(s, 0), GroupMap::empty(), Direction::Forward,
                    choices);
    RankedOutcome ranked;
    ranked.outcome = std::move(out);
    if (ranked.outcome.is_success()) {
        ranked.rank = 0;
        ranked.key_choices = std::move(choices);
    } else {
        ranked.rank = 1;
        ranked.key_choices.assign(choices.size(), Choice::Right);
    }
    return ranked;
}

MatchOutcome minimize_over_choices(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s) {
    ActionList l = actions_of(r);
    Input inp = input_at(s, 0);
    uint64_t n = fuel(l, inp, Direction::Forward);
    if (n > kEnumerationFuelCap)
        throw EnumerationGuardError("fuel " + std::to_string(n) + " exceeds enumeration cap " +
                                    std::to_string(kEnumerationFuelCap));
    std::vector<Choice> choices(n, Choice::Left);
    std::optional<RankedOutcome> best;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
        for (uint64_t i = 0; i < n; ++i)
            choices[i] = (bits >> (n - 1 - i)) & 1 ? Choice::Right : Choice::Left;
        RankedOutcome ranked = optp_algo(cfg, r, s, choices);
        if (!best || ranked.key_less(*best)) best = std::move(ranked);
    }
    return best ? best->outcome : MatchOutcome::no_match();
}

std::vector<Choice> extract_choices(const std::vector<Choice>& trail, bool was_success,
                                    uint64_t fuel_len) {
    if (!was_success)
        throw std::invalid_argument("extract_choices requires a trace of a Success run");
    std::vector<Choice> out = trail;
    if (out.size() < fuel_len) out.resize(fuel_len, Choice::Right);
    return out;
}

std::string render_choices(const std::vector<Choice>& choices) {
    std::string s;
    for (size_t i = 0; i < choices.size(); ++i) {
        if (i) s += ',';
        s += choices[i] == Choice::Left ? 'L' : 'R';
    }
    return s;
}

std::optional<std::vector<Choice>> parse_choices(const std::string& text) {
    std::vector<Choice> out;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ',' || c == ' ') continue;
        if (c == 'L' || c == 'l')
            out.push_back(Choice::Left);
        else if (c == 'R' || c == 'r')
            out.push_back(Choice::Right);
        else
            return std::nullopt;
    }
    return out;
}

}  // namespace bregex
