#include "bregex/parser.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bregex {

namespace {

constexpr int kMaxNesting = 512;

class Parser {
public:
    explicit Parser(Text pat) : pat_(std::move(pat)) {}

    RegexPtr run() {
        RegexPtr r = parse_alternatives();
        if (pos_ != pat_.size()) fail("unexpected '" + to_utf8(peek()) + "'");
        resolve_named_backrefs(r);
        auto v = validate(r);
        if (!v.ok()) throw ParseError(v.violations.front().detail, pat_.size());
        return r;
    }

private:
    Text pat_;
    size_t pos_ = 0;
    int depth_ = 0;
    GroupId next_group_ = 1;
    std::map<std::string, GroupId> group_names_;
    // \k<name> may appear before its group; patched after the full parse.
    std::vector<std::pair<std::string, size_t>> pending_names_;
    std::vector<RegexPtr*> named_backref_slots_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool eof() const { return pos_ >= pat_.size(); }
    Char peek() const { return pos_ < pat_.size() ? pat_[pos_] : 0; }
    Char peek_at(size_t off) const { return pos_ + off < pat_.size() ? pat_[pos_ + off] : 0; }
    Char next() { return pat_[pos_++]; }
    bool eat(Char c) {
        if (!eof() && pat_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Char c) {
        if (!eat(c)) fail("expected '" + to_utf8(c) + "'");
    }

    RegexPtr parse_alternatives() {
        if (++depth_ > kMaxNesting) fail("pattern nested too deeply");
        std::vector<RegexPtr> alts;
        alts.push_back(parse_sequence());
        while (eat(U'|')) alts.push_back(parse_sequence());
        --depth_;
        return re::disj_all(alts);
    }

    RegexPtr parse_sequence() {
        std::vector<RegexPtr> terms;
        while (!eof() && peek() != U'|' && peek() != U')') terms.push_back(parse_term());
        return re::seq_all(terms);
    }

    RegexPtr parse_term() {
        Char c = peek();
        bool quantifiable = true;
        RegexPtr atom;
        switch (c) {
            case U'^':
                next();
                atom = re::anchor(AnchorKind::Begin);
                quantifiable = false;
                break;
            case U'$':
                next();
                atom = re::anchor(AnchorKind::End);
                quantifiable = false;
                break;
            case U'(':
                atom = parse_group(&quantifiable);
                break;
            case U'[':
                atom = parse_class();
                break;
            case U'.':
                next();
                atom = re::character(CharDescriptor::dot());
                break;
            case U'\\':
                atom = parse_escape(&quantifiable);
                break;
            case U'*':
            case U'+':
            case U'?':
                fail("quantifier with nothing to repeat");
            case U'{':
            case U'}':
            case U']':
                fail("unescaped '" + to_utf8(c) + "'");
            default:
                next();
                atom = re::chr(c);
                break;
        }
        if (!quantifiable) {
            if (!eof() && (peek() == U'*' || peek() == U'+' || peek() == U'?' || peek() == U'{'))
                fail("quantifier on an assertion");
            return atom;
        }
        return parse_quantifier(std::move(atom));
    }

    RegexPtr parse_quantifier(RegexPtr atom) {
        uint64_t min = 0;
        RepCount delta;
        if (eat(U'*')) {
            min = 0;
            delta = RepCount::inf();
        } else if (eat(U'+')) {
            min = 1;
            delta = RepCount::inf();
        } else if (eat(U'?')) {
            min = 0;
            delta = RepCount::of(1);
        } else if (peek() == U'{') {
            next();
            uint64_t lo = parse_number();
            if (eat(U'}')) {
                min = lo;
                delta = RepCount::of(0);
            } else if (eat(U',')) {
                if (eat(U'}')) {
                    min = lo;
                    delta = RepCount::inf();
                } else {
                    uint64_t hi = parse_number();
                    expect(U'}');
                    if (hi < lo) fail("quantifier range {m,n} with n < m");
                    min = lo;
                    delta = RepCount::of(hi - lo);
                }
            } else {
                fail("malformed counted quantifier");
            }
        } else {
            return atom;
        }
        bool greedy = !eat(U'?');
        return re::quant(greedy, min, delta, std::move(atom));
    }

    uint64_t parse_number() {
        if (eof() || !is_ascii_digit(peek())) fail("expected a number");
        uint64_t v = 0;
        while (!eof() && is_ascii_digit(peek())) {
            v = v * 10 + (next() - U'0');
            if (v > 1'000'000'000) fail("repetition count too large");
        }
        return v;
    }

    std::string parse_name() {
        std::string name;
        while (!eof() && peek() != U'>') {
            Char c = next();
            if (!is_word_char(c)) fail("invalid character in group name");
            name += to_utf8(c);
        }
        expect(U'>');
        if (name.empty()) fail("empty group name");
        return name;
    }

    RegexPtr parse_group(bool* quantifiable) {
        expect(U'(');
        if (eat(U'?')) {
            if (eat(U':')) {
                RegexPtr body = parse_alternatives();
                expect(U')');
                return re::noncap(std::move(body));
            }
            if (eat(U'=')) {
                RegexPtr body = parse_alternatives();
                expect(U')');
                *quantifiable = false;
                return re::look(LookKind::Ahead, true, std::move(body));
            }
            if (eat(U'!')) {
                RegexPtr body = parse_alternatives();
                expect(U')');
                *quantifiable = false;
                return re::look(LookKind::Ahead, false, std::move(body));
            }
            if (peek() == U'<' && (peek_at(1) == U'=' || peek_at(1) == U'!')) {
                next();
                bool positive = next() == U'=';
                RegexPtr body = parse_alternatives();
                expect(U')');
                *quantifiable = false;
                return re::look(LookKind::Behind, positive, std::move(body));
            }
            if (eat(U'<')) {
                std::string name = parse_name();
                GroupId id = next_group_++;
                if (!group_names_.emplace(name, id).second)
                    fail("duplicate group name " + name);
                RegexPtr body = parse_alternatives();
                expect(U')');
                return re::group(id, std::move(body), name);
            }
            fail("unrecognized group modifier");
        }
        GroupId id = next_group_++;
        RegexPtr body = parse_alternatives();
        expect(U')');
        return re::group(id, std::move(body));
    }

    RegexPtr parse_class() {
        expect(U'[');
        bool negated = eat(U'^');
        std::vector<ClassItem> items;
        while (!eof() && peek() != U']') {
            Char lo = parse_class_char();
            if (peek() == U'-' && peek_at(1) != U']' && pos_ + 1 < pat_.size()) {
                next();
                Char hi = parse_class_char();
                if (lo > hi) fail("class range out of order");
                items.push_back({lo, hi});
            } else {
                items.push_back({lo, lo});
            }
        }
        expect(U']');
        if (items.empty()) fail("empty character class");
        return re::character(CharDescriptor::cls(std::move(items), negated));
    }

    Char parse_class_char() {
        Char c = next();
        if (c != U'\\') return c;
        if (eof()) fail("dangling backslash in class");
        Char e = next();
        if (is_word_char(e)) fail("unsupported class escape \\" + to_utf8(e));
        return e;
    }

    RegexPtr parse_escape(bool* quantifiable) {
        expect(U'\\');
        if (eof()) fail("dangling backslash");
        Char c = peek();
        if (is_ascii_digit(c)) {
            if (c == U'0') fail("\\0 is not a backreference");
            uint64_t v = 0;
            int digits = 0;
            while (!eof() && is_ascii_digit(peek()) && digits < 2) {
                v = v * 10 + (next() - U'0');
                ++digits;
            }
            return re::backref(static_cast<GroupId>(v));
        }
        next();
        switch (c) {
            case U'b':
                *quantifiable = false;
                return re::anchor(AnchorKind::WordBoundary);
            case U'B':
                *quantifiable = false;
                return re::anchor(AnchorKind::NonWordBoundary);
            case U'w': return re::character(CharDescriptor::builtin_class(BuiltinClass::Word));
            case U'W': return re::character(CharDescriptor::builtin_class(BuiltinClass::NonWord));
            case U'd': return re::character(CharDescriptor::builtin_class(BuiltinClass::Digit));
            case U'D': return re::character(CharDescriptor::builtin_class(BuiltinClass::NonDigit));
            case U's': return re::character(CharDescriptor::builtin_class(BuiltinClass::Space));
            case U'S': return re::character(CharDescriptor::builtin_class(BuiltinClass::NonSpace));
            case U'k': {
                expect(U'<');
                std::string name = parse_name();
                // Placeholder; patched once all groups are known.
                pending_names_.push_back({name, pos_});
                return re::backref(kNamePlaceholder);
            }
            default:
                if (is_word_char(c)) fail("unsupported escape \\" + to_utf8(c));
                return re::chr(c);
        }
    }

    static constexpr GroupId kNamePlaceholder = 0xFFFFFFFF;

    void resolve_named_backrefs(RegexPtr& r) {
        if (pending_names_.empty()) return;
        size_t next_pending = 0;
        r = rewrite_named(r, next_pending);
    }

    RegexPtr rewrite_named(const RegexPtr& r, size_t& idx) {
        switch (r->kind()) {
            case RegexKind::Backreference:
                if (r->group() == kNamePlaceholder) {
                    auto& [name, at] = pending_names_[idx++];
                    auto it = group_names_.find(name);
                    if (it == group_names_.end())
                        throw ParseError("unknown group name " + name, at);
                    return re::backref(it->second);
                }
                return r;
            case RegexKind::Disjunction: {
                RegexPtr l = rewrite_named(r->left(), idx);
                RegexPtr rr = rewrite_named(r->right(), idx);
                return (l == r->left() && rr == r->right()) ? r : re::disj(l, rr);
            }
            case RegexKind::Sequence: {
                RegexPtr l = rewrite_named(r->left(), idx);
                RegexPtr rr = rewrite_named(r->right(), idx);
                return (l == r->left() && rr == r->right()) ? r : re::seq(l, rr);
            }
            case RegexKind::Group: {
                RegexPtr b = rewrite_named(r->body(), idx);
                return b == r->body() ? r : re::group(r->group(), b, r->group_name());
            }
            case RegexKind::NonCapGroup: {
                RegexPtr b = rewrite_named(r->body(), idx);
                return b == r->body() ? r : re::noncap(b);
            }
            case RegexKind::Quantified: {
                RegexPtr b = rewrite_named(r->body(), idx);
                return b == r->body() ? r
                                      : re::quant(r->greedy(), r->min(), r->delta(), b);
            }
            case RegexKind::Lookaround: {
                RegexPtr b = rewrite_named(r->body(), idx);
                return b == r->body() ? r : re::look(r->look_kind(), r->look_positive(), b);
            }
            default:
                return r;
        }
    }
};

// --- emission ---

const char kMetaChars[] = ".*+?()[]{}|^$\\";

bool needs_escape(Char c) {
    if (c > 0x7F) return false;
    for (const char* p = kMetaChars; *p; ++p)
        if (static_cast<Char>(*p) == c) return true;
    return false;
}

void emit_char(std::string& out, Char c) {
    if (needs_escape(c)) out += '\\';
    out += to_utf8(c);
}

void emit_class_char(std::string& out, Char c) {
    if (c == U']' || c == U'\\' || c == U'-' || c == U'^') out += '\\';
    out += to_utf8(c);
}

struct Emitter {
    // JS left-to-right position of each group index, to decide named emission.
    std::map<GroupId, GroupId> js_position;
    std::map<GroupId, std::string> names;

    void assign_positions(const Regex& r, GroupId& next) {
        switch (r.kind()) {
            case RegexKind::Group: {
                GroupId pos = next++;
                js_position[r.group()] = pos;
                if (r.group_name())
                    names[r.group()] = *r.group_name();
                else if (r.group() != pos)
                    names[r.group()] = "g" + std::to_string(r.group());
                assign_positions(*r.body(), next);
                return;
            }
            case RegexKind::Disjunction:
            case RegexKind::Sequence:
                assign_positions(*r.left(), next);
                assign_positions(*r.right(), next);
                return;
            case RegexKind::NonCapGroup:
            case RegexKind::Quantified:
            case RegexKind::Lookaround:
                assign_positions(*r.body(), next);
                return;
            default:
                return;
        }
    }

    enum Level { Alt, Seq, Term };

    void emit(std::string& out, const Regex& r, Level level) {
        switch (r.kind()) {
            case RegexKind::Epsilon:
                if (level >= Term) out += "(?:)";
                return;
            case RegexKind::Character:
                emit_cd(out, r.cd());
                return;
            case RegexKind::Anchor:
                switch (r.anchor_kind()) {
                    case AnchorKind::Begin: out += '^'; return;
                    case AnchorKind::End: out += '$'; return;
                    case AnchorKind::WordBoundary: out += "\\b"; return;
                    case AnchorKind::NonWordBoundary: out += "\\B"; return;
                }
                return;
            case RegexKind::Backreference: {
                auto it = names.find(r.group());
                if (it != names.end()) {
                    out += "\\k<" + it->second + ">";
                } else {
                    out += '\\';
                    out += std::to_string(r.group());
                }
                return;
            }
            case RegexKind::Disjunction:
                if (level > Alt) {
                    out += "(?:";
                    emit(out, r, Alt);
                    out += ')';
                    return;
                }
                emit(out, *r.left(), Seq);
                out += '|';
                emit(out, *r.right(), Alt);
                return;
            case RegexKind::Sequence:
                if (level > Seq) {
                    out += "(?:";
                    emit(out, r, Seq);
                    out += ')';
                    return;
                }
                emit(out, *r.left(), Term);
                emit(out, *r.right(), Seq);
                return;
            case RegexKind::Group: {
                auto it = names.find(r.group());
                if (it != names.end())
                    out += "(?<" + it->second + ">";
                else
                    out += '(';
                emit(out, *r.body(), Alt);
                out += ')';
                return;
            }
            case RegexKind::NonCapGroup:
                out += "(?:";
                emit(out, *r.body(), Alt);
                out += ')';
                return;
            case RegexKind::Lookaround:
                out += (r.look_kind() == LookKind::Ahead)
                           ? (r.look_positive() ? "(?=" : "(?!")
                           : (r.look_positive() ? "(?<=" : "(?<!");
                emit(out, *r.body(), Alt);
                out += ')';
                return;
            case RegexKind::Quantified: {
                const Regex& b = *r.body();
                bool atomic = b.kind() == RegexKind::Character ||
                              b.kind() == RegexKind::Group ||
                              b.kind() == RegexKind::NonCapGroup ||
                              b.kind() == RegexKind::Backreference;
                if (atomic) {
                    emit(out, b, Term);
                } else {
                    out += "(?:";
                    emit(out, b, Alt);
                    out += ')';
                }
                uint64_t min = r.min();
                RepCount delta = r.delta();
                if (min == 0 && delta.infinite)
                    out += '*';
                else if (min == 1 && delta.infinite)
                    out += '+';
                else if (min == 0 && delta == RepCount::of(1))
                    out += '?';
                else if (delta.infinite)
                    out += '{' + std::to_string(min) + ",}";
                else if (delta.value == 0)
                    out += '{' + std::to_string(min) + '}';
                else
                    out += '{' + std::to_string(min) + ',' +
                           std::to_string(min + delta.value) + '}';
                if (!r.greedy()) out += '?';
                return;
            }
        }
    }

    void emit_cd(std::string& out, const CharDescriptor& cd) {
        switch (cd.kind) {
            case CharDescriptor::Kind::Literal:
                emit_char(out, cd.literal);
                return;
            case CharDescriptor::Kind::Dot:
                out += '.';
                return;
            case CharDescriptor::Kind::Class:
                out += '[';
                if (cd.negated) out += '^';
                for (const ClassItem& it : cd.items) {
                    emit_class_char(out, it.lo);
                    if (it.hi != it.lo) {
                        out += '-';
                        emit_class_char(out, it.hi);
                    }
                }
                out += ']';
                return;
            case CharDescriptor::Kind::Builtin:
                switch (cd.builtin) {
                    case BuiltinClass::Word: out += "\\w"; return;
                    case BuiltinClass::NonWord: out += "\\W"; return;
                    case BuiltinClass::Digit: out += "\\d"; return;
                    case BuiltinClass::NonDigit: out += "\\D"; return;
                    case BuiltinClass::Space: out += "\\s"; return;
                    case BuiltinClass::NonSpace: out += "\\S"; return;
                }
        }
    }
};

}  // namespace

RegexPtr parse_regex(const std::string& pattern) {
    return Parser(from_utf8(pattern)).run();
}

std::string emit_regex(const RegexPtr& r) {
    Emitter em;
    GroupId next = 1;
    em.assign_positions(*r, next);
    std::string out;
    em.emit(out, *r, Emitter::Alt);
    return out;
}

}  // namespace bregex
