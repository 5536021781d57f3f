#include "bregex/ast.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bregex {

CharDescriptor CharDescriptor::lit(Char c) {
    CharDescriptor cd;
    cd.kind = Kind::Literal;
    cd.literal = c;
    return cd;
}

CharDescriptor CharDescriptor::dot() {
    CharDescriptor cd;
    cd.kind = Kind::Dot;
    return cd;
}

CharDescriptor CharDescriptor::cls(std::vector<ClassItem> items, bool negated) {
    CharDescriptor cd;
    cd.kind = Kind::Class;
    cd.items = std::move(items);
    cd.negated = negated;
    return cd;
}

CharDescriptor CharDescriptor::builtin_class(BuiltinClass b) {
    CharDescriptor cd;
    cd.kind = Kind::Builtin;
    cd.builtin = b;
    return cd;
}

bool CharDescriptor::matches(Char c) const {
    switch (kind) {
        case Kind::Literal:
            return c == literal;
        case Kind::Dot:
            return !is_line_terminator(c);  // non-dotall
        case Kind::Class: {
            bool in = false;
            for (const ClassItem& it : items)
                if (c >= it.lo && c <= it.hi) {
                    in = true;
                    break;
                }
            return in != negated;
        }
        case Kind::Builtin:
            switch (builtin) {
                case BuiltinClass::Word: return is_word_char(c);
                case BuiltinClass::NonWord: return !is_word_char(c);
                case BuiltinClass::Digit: return is_ascii_digit(c);
                case BuiltinClass::NonDigit: return !is_ascii_digit(c);
                case BuiltinClass::Space: return is_space_char(c);
                case BuiltinClass::NonSpace: return !is_space_char(c);
            }
    }
    return false;
}

namespace {

std::vector<GroupId> merge_groups(const std::vector<GroupId>& a, const std::vector<GroupId>& b) {
    std::vector<GroupId> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

struct RegexFactory {
    static RegexPtr finish(Regex&& r) {
        switch (r.kind_) {
            case RegexKind::Epsilon:
                r.size_ = r.expanded_size_ = 1;
                break;
            case RegexKind::Character:
                r.size_ = r.expanded_size_ = 1;
                break;
            case RegexKind::Anchor:
            case RegexKind::Backreference:
                r.size_ = r.expanded_size_ = 1;
                break;
            case RegexKind::Disjunction:
            case RegexKind::Sequence:
                r.size_ = 1 + r.left_->size() + r.right_->size();
                r.expanded_size_ = 1 + r.left_->expanded_size() + r.right_->expanded_size();
                r.def_groups_ = merge_groups(r.left_->def_groups(), r.right_->def_groups());
                r.has_look_ = r.left_->has_lookaround() || r.right_->has_lookaround();
                r.has_neg_look_ =
                    r.left_->has_negative_lookaround() || r.right_->has_negative_lookaround();
                r.has_lower_bounded_ = r.left_->has_lower_bounded_quantifier() ||
                                       r.right_->has_lower_bounded_quantifier();
                break;
            case RegexKind::Group:
                r.size_ = 2 + r.left_->size();
                r.expanded_size_ = 2 + r.left_->expanded_size();
                r.def_groups_ = merge_groups({r.group_}, r.left_->def_groups());
                r.has_look_ = r.left_->has_lookaround();
                r.has_neg_look_ = r.left_->has_negative_lookaround();
                r.has_lower_bounded_ = r.left_->has_lower_bounded_quantifier();
                break;
            case RegexKind::NonCapGroup:
                // Transparent: measured as its body (the (?:r1|r2) row already
                // equals the disjunction's own measure).
                r.size_ = r.left_->size();
                r.expanded_size_ = r.left_->expanded_size();
                r.def_groups_ = r.left_->def_groups();
                r.has_look_ = r.left_->has_lookaround();
                r.has_neg_look_ = r.left_->has_negative_lookaround();
                r.has_lower_bounded_ = r.left_->has_lower_bounded_quantifier();
                break;
            case RegexKind::Quantified:
                r.size_ = 3 + r.left_->size();
                r.expanded_size_ = (1 + r.min_) * (3 + r.left_->expanded_size());
                r.def_groups_ = r.left_->def_groups();
                r.has_look_ = r.left_->has_lookaround();
                r.has_neg_look_ = r.left_->has_negative_lookaround();
                r.has_lower_bounded_ = r.min_ > 0 || r.left_->has_lower_bounded_quantifier();
                break;
            case RegexKind::Lookaround:
                r.size_ = 1 + r.left_->size();
                r.expanded_size_ = 1 + r.left_->expanded_size();
                r.def_groups_ = r.left_->def_groups();
                r.has_look_ = true;
                r.has_neg_look_ = !r.positive_ || r.left_->has_negative_lookaround();
                r.has_lower_bounded_ = r.left_->has_lower_bounded_quantifier();
                break;
        }
        return std::make_shared<const Regex>(std::move(r));
    }

    static Regex base(RegexKind k) {
        Regex r;
        r.kind_ = k;
        return r;
    }

    static RegexPtr character(CharDescriptor cd) {
        Regex r = base(RegexKind::Character);
        r.cd_ = std::move(cd);
        return finish(std::move(r));
    }
    static RegexPtr binary(RegexKind k, RegexPtr a, RegexPtr b) {
        Regex r = base(k);
        r.left_ = std::move(a);
        r.right_ = std::move(b);
        return finish(std::move(r));
    }
    static RegexPtr group(GroupId id, RegexPtr body, std::optional<std::string> name) {
        Regex r = base(RegexKind::Group);
        r.group_ = id;
        r.name_ = std::move(name);
        r.left_ = std::move(body);
        return finish(std::move(r));
    }
    static RegexPtr unary(RegexKind k, RegexPtr body) {
        Regex r = base(k);
        r.left_ = std::move(body);
        return finish(std::move(r));
    }
    static RegexPtr backref(GroupId id) {
        Regex r = base(RegexKind::Backreference);
        r.group_ = id;
        return finish(std::move(r));
    }
    static RegexPtr quant(bool greedy, uint64_t min, RepCount delta, RegexPtr body) {
        Regex r = base(RegexKind::Quantified);
        r.greedy_ = greedy;
        r.min_ = min;
        r.delta_ = delta;
        r.left_ = std::move(body);
        return finish(std::move(r));
    }
    static RegexPtr look(LookKind kind, bool positive, RegexPtr body) {
        Regex r = base(RegexKind::Lookaround);
        r.look_ = kind;
        r.positive_ = positive;
        r.left_ = std::move(body);
        return finish(std::move(r));
    }
    static RegexPtr anchor(AnchorKind a) {
        Regex r = base(RegexKind::Anchor);
        r.anchor_ = a;
        return finish(std::move(r));
    }
};

namespace re {

RegexPtr epsilon() {
    static const RegexPtr e = RegexFactory::finish(RegexFactory::base(RegexKind::Epsilon));
    return e;
}

RegexPtr chr(Char c) { return character(CharDescriptor::lit(c)); }

RegexPtr character(CharDescriptor cd) { return RegexFactory::character(std::move(cd)); }

RegexPtr disj(RegexPtr a, RegexPtr b) {
    return RegexFactory::binary(RegexKind::Disjunction, std::move(a), std::move(b));
}

RegexPtr seq(RegexPtr a, RegexPtr b) {
    return RegexFactory::binary(RegexKind::Sequence, std::move(a), std::move(b));
}

RegexPtr group(GroupId id, RegexPtr body, std::optional<std::string> name) {
    if (id == 0) throw std::invalid_argument("capture group indices start at 1");
    return RegexFactory::group(id, std::move(body), std::move(name));
}

RegexPtr noncap(RegexPtr body) {
    return RegexFactory::unary(RegexKind::NonCapGroup, std::move(body));
}

RegexPtr backref(GroupId id) {
    if (id == 0) throw std::invalid_argument("backreference indices start at 1");
    return RegexFactory::backref(id);
}

RegexPtr quant(bool greedy, uint64_t min, RepCount delta, RegexPtr body) {
    return RegexFactory::quant(greedy, min, delta, std::move(body));
}

RegexPtr look(LookKind kind, bool positive, RegexPtr body) {
    return RegexFactory::look(kind, positive, std::move(body));
}

RegexPtr anchor(AnchorKind a) { return RegexFactory::anchor(a); }

RegexPtr star(RegexPtr body) { return quant(true, 0, RepCount::inf(), std::move(body)); }
RegexPtr lazy_star(RegexPtr body) { return quant(false, 0, RepCount::inf(), std::move(body)); }
RegexPtr plus(RegexPtr body) { return quant(true, 1, RepCount::inf(), std::move(body)); }
RegexPtr opt(RegexPtr body) { return quant(true, 0, RepCount::of(1), std::move(body)); }

RegexPtr seq_all(const std::vector<RegexPtr>& parts) {
    if (parts.empty()) return epsilon();
    RegexPtr acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = seq(parts[i], acc);
    return acc;
}

RegexPtr disj_all(const std::vector<RegexPtr>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjunction of nothing");
    RegexPtr acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = disj(parts[i], acc);
    return acc;
}

}  // namespace re

uint64_t regex_size(const RegexPtr& r) { return r->size(); }
uint64_t regex_expanded_size(const RegexPtr& r) { return r->expanded_size(); }
std::vector<GroupId> def_groups(const RegexPtr& r) { return r->def_groups(); }

uint64_t ast_node_count(const RegexPtr& r) {
    switch (r->kind()) {
        case RegexKind::Epsilon:
        case RegexKind::Character:
        case RegexKind::Backreference:
        case RegexKind::Anchor:
            return 1;
        case RegexKind::Disjunction:
        case RegexKind::Sequence:
            return 1 + ast_node_count(r->left()) + ast_node_count(r->right());
        default:
            return 1 + ast_node_count(r->body());
    }
}

namespace {

bool equal_impl(const Regex& a, const Regex& b, std::map<GroupId, GroupId>* renumber,
                bool compare_names) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case RegexKind::Epsilon:
            return true;
        case RegexKind::Character:
            return a.cd() == b.cd();
        case RegexKind::Anchor:
            return a.anchor_kind() == b.anchor_kind();
        case RegexKind::Backreference:
        case RegexKind::Group: {
            if (renumber) {
                auto [it, inserted] = renumber->try_emplace(a.group(), b.group());
                if (!inserted && it->second != b.group()) return false;
            } else if (a.group() != b.group()) {
                return false;
            }
            if (a.kind() == RegexKind::Backreference) return true;
            if (compare_names && a.group_name() != b.group_name()) return false;
            return equal_impl(*a.body(), *b.body(), renumber, compare_names);
        }
        case RegexKind::Disjunction:
        case RegexKind::Sequence:
            return equal_impl(*a.left(), *b.left(), renumber, compare_names) &&
                   equal_impl(*a.right(), *b.right(), renumber, compare_names);
        case RegexKind::NonCapGroup:
            return equal_impl(*a.body(), *b.body(), renumber, compare_names);
        case RegexKind::Quantified:
            return a.greedy() == b.greedy() && a.min() == b.min() && a.delta() == b.delta() &&
                   equal_impl(*a.body(), *b.body(), renumber, compare_names);
        case RegexKind::Lookaround:
            return a.look_kind() == b.look_kind() && a.look_positive() == b.look_positive() &&
                   equal_impl(*a.body(), *b.body(), renumber, compare_names);
    }
    return false;
}

}  // namespace

bool ast_equal(const RegexPtr& a, const RegexPtr& b) {
    return equal_impl(*a, *b, nullptr, true);
}

bool ast_equal_renumbered(const RegexPtr& a, const RegexPtr& b) {
    std::map<GroupId, GroupId> fwd;
    if (!equal_impl(*a, *b, &fwd, false)) return false;
    std::set<GroupId> images;
    for (auto& [from, to] : fwd)
        if (!images.insert(to).second) return false;  // must be a bijection
    return true;
}

namespace {

void collect_validate(const Regex& r, std::vector<GroupId>& groups,
                      std::vector<GroupId>& backrefs, std::vector<std::string>& names,
                      std::vector<Violation>& out) {
    switch (r.kind()) {
        case RegexKind::Character:
            if (r.cd().kind == CharDescriptor::Kind::Class) {
                if (r.cd().items.empty())
                    out.push_back({Violation::Kind::EmptyClass, "character class is empty"});
                for (const ClassItem& it : r.cd().items)
                    if (it.lo > it.hi)
                        out.push_back({Violation::Kind::BadClassRange,
                                       "class range out of order: " + to_utf8(it.lo) + "-" +
                                           to_utf8(it.hi)});
            }
            return;
        case RegexKind::Group:
            groups.push_back(r.group());
            if (r.group_name()) names.push_back(*r.group_name());
            collect_validate(*r.body(), groups, backrefs, names, out);
            return;
        case RegexKind::Backreference:
            backrefs.push_back(r.group());
            return;
        case RegexKind::Disjunction:
        case RegexKind::Sequence:
            collect_validate(*r.left(), groups, backrefs, names, out);
            collect_validate(*r.right(), groups, backrefs, names, out);
            return;
        case RegexKind::NonCapGroup:
        case RegexKind::Quantified:
        case RegexKind::Lookaround:
            collect_validate(*r.body(), groups, backrefs, names, out);
            return;
        case RegexKind::Epsilon:
        case RegexKind::Anchor:
            return;
    }
}

}  // namespace

ValidationResult validate(const RegexPtr& r) {
    ValidationResult res;
    std::vector<GroupId> groups, backrefs;
    std::vector<std::string> names;
    collect_validate(*r, groups, backrefs, names, res.violations);

    std::set<GroupId> seen;
    for (GroupId g : groups)
        if (!seen.insert(g).second)
            res.violations.push_back(
                {Violation::Kind::DuplicateGroup, "duplicate group " + std::to_string(g)});
    // Indices must be exactly 1..n, each once.
    for (GroupId g = 1; g <= groups.size(); ++g)
        if (!seen.count(g)) {
            res.violations.push_back({Violation::Kind::NonContiguousGroups,
                                      "group indices are not 1.." +
                                          std::to_string(groups.size()) + ": missing " +
                                          std::to_string(g)});
            break;
        }
    for (GroupId b : backrefs)
        if (!seen.count(b))
            res.violations.push_back({Violation::Kind::UnresolvedBackreference,
                                      "unresolved backreference " + std::to_string(b)});
    std::set<std::string> seen_names;
    for (const std::string& n : names)
        if (!seen_names.insert(n).second)
            res.violations.push_back(
                {Violation::Kind::DuplicateGroupName, "duplicate group name " + n});
    return res;
}

}  // namespace bregex
