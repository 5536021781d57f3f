#include "bregex/state.hpp"

#include <sstream>
#include <stdexcept>

#include "bregex/parser.hpp"

namespace bregex {

GroupMap gm_open(GroupMap gm, GroupId g, size_t pos) {
    gm.entries_[g] = GroupEntry::opened(pos);
    return gm;
}

GroupMap gm_close(GroupMap gm, GroupId g, size_t pos) {
    auto it = gm.entries_.find(g);
    if (it == gm.entries_.end() || !it->second.open)
        throw std::logic_error("gm_close: group " + std::to_string(g) + " is not open");
    size_t s = it->second.start;
    it->second = GroupEntry::closed(std::min(s, pos), std::max(s, pos));
    return gm;
}

GroupMap gm_reset(GroupMap gm, const std::vector<GroupId>& gs) {
    for (GroupId g : gs) gm.entries_.erase(g);
    return gm;
}

ActionList cons(Action head, ActionList tail) {
    uint64_t sz = head.size() + action_list_size(tail);
    uint32_t len = 1 + action_list_length(tail);
    return std::make_shared<const ActionNode>(ActionNode{std::move(head), std::move(tail), sz, len});
}

ActionList actions_of(RegexPtr r) { return cons(Action::make_reg(std::move(r)), nullptr); }

std::string render_action(const Action& a) {
    switch (a.kind) {
        case Action::Kind::Reg:
            return emit_regex(a.reg);
        case Action::Kind::Close:
            return "Close(" + std::to_string(a.group) + ")";
        case Action::Kind::Check:
            return "Check(@" + std::to_string(a.check.pos) + ")";
    }
    return {};
}

std::string render_action_list(const ActionList& l) {
    std::string out = "[";
    bool first = true;
    for (const ActionNode* n = l.get(); n; n = n->tail.get()) {
        if (!first) out += "; ";
        first = false;
        out += render_action(n->head);
    }
    out += "]";
    return out;
}

std::optional<std::pair<Char, Input>> read_char(const MatchConfig&, const CharDescriptor& cd,
                                                const Input& inp, Direction d) {
    const Text& s = *inp.text;
    if (d == Direction::Forward) {
        if (inp.pos >= s.size()) return std::nullopt;
        Char c = s[inp.pos];
        if (!cd.matches(c)) return std::nullopt;
        return std::make_pair(c, Input{inp.text, inp.pos + 1});
    }
    if (inp.pos == 0) return std::nullopt;
    Char c = s[inp.pos - 1];
    if (!cd.matches(c)) return std::nullopt;
    return std::make_pair(c, Input{inp.text, inp.pos - 1});
}

std::optional<std::pair<Text, Input>> read_backref(const MatchConfig&, const GroupMap& gm,
                                                   GroupId g, const Input& inp, Direction d) {
    auto entry = gm.get(g);
    if (!entry || entry->open) return std::make_pair(Text{}, inp);
    const Text& s = *inp.text;
    size_t len = entry->end - entry->start;
    if (len == 0) return std::make_pair(Text{}, inp);
    if (d == Direction::Forward) {
        if (inp.pos + len > s.size()) return std::nullopt;
        if (s.compare(inp.pos, len, s, entry->start, len) != 0) return std::nullopt;
        return std::make_pair(s.substr(entry->start, len), Input{inp.text, inp.pos + len});
    }
    if (inp.pos < len) return std::nullopt;
    if (s.compare(inp.pos - len, len, s, entry->start, len) != 0) return std::nullopt;
    return std::make_pair(s.substr(entry->start, len), Input{inp.text, inp.pos - len});
}

bool is_strict_progress(const Input& inp, const Input& check, Direction d) {
    return d == Direction::Forward ? inp.pos > check.pos : inp.pos < check.pos;
}

bool anchor_satisfied(const MatchConfig& cfg, AnchorKind a, const Input& inp) {
    const Text& s = *inp.text;
    switch (a) {
        case AnchorKind::Begin:
            return inp.pos == 0;
        case AnchorKind::End:
            return inp.pos == s.size();
        case AnchorKind::WordBoundary:
        case AnchorKind::NonWordBoundary: {
            bool left = inp.pos > 0 && cfg.word_char(s[inp.pos - 1]);
            bool right = inp.pos < s.size() && cfg.word_char(s[inp.pos]);
            bool boundary = left != right;
            return a == AnchorKind::WordBoundary ? boundary : !boundary;
        }
    }
    return false;
}

}  // namespace bregex
