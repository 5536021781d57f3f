#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bregex/chars.hpp"

namespace bregex {

using GroupId = uint32_t;  // capture group index, >= 1

// Quantifier repetition headroom: a natural number or infinity.
struct RepCount {
    bool infinite = false;
    uint64_t value = 0;

    static RepCount inf() { return RepCount{true, 0}; }
    static RepCount of(uint64_t n) { return RepCount{false, n}; }
    bool is_zero() const { return !infinite && value == 0; }
    // Predecessor; infinity is its own predecessor.
    RepCount pred() const { return infinite ? *this : RepCount{false, value - 1}; }
    bool operator==(const RepCount&) const = default;
};

enum class BuiltinClass { Word, NonWord, Digit, NonDigit, Space, NonSpace };

struct ClassItem {
    Char lo = 0;
    Char hi = 0;  // single char when lo == hi
    bool operator==(const ClassItem&) const = default;
};

struct CharDescriptor {
    enum class Kind { Literal, Dot, Class, Builtin };
    Kind kind = Kind::Literal;
    Char literal = 0;                // Literal
    std::vector<ClassItem> items;    // Class
    bool negated = false;            // Class
    BuiltinClass builtin = BuiltinClass::Word;

    static CharDescriptor lit(Char c);
    static CharDescriptor dot();
    static CharDescriptor cls(std::vector<ClassItem> items, bool negated);
    static CharDescriptor builtin_class(BuiltinClass b);

    bool matches(Char c) const;
    bool operator==(const CharDescriptor&) const = default;
};

enum class AnchorKind { Begin, End, WordBoundary, NonWordBoundary };
enum class LookKind { Ahead, Behind };

enum class RegexKind {
    Epsilon,
    Character,
    Disjunction,
    Sequence,
    Group,
    NonCapGroup,
    Backreference,
    Quantified,
    Lookaround,
    Anchor,
};

class Regex;
using RegexPtr = std::shared_ptr<const Regex>;

// Immutable regex node. Size measures and defined-group sets are computed at
// construction so the matcher and fuel function read them in O(1).
class Regex {
public:
    RegexKind kind() const { return kind_; }

    const CharDescriptor& cd() const { return cd_; }
    const RegexPtr& left() const { return left_; }    // Disjunction/Sequence
    const RegexPtr& right() const { return right_; }  // Disjunction/Sequence
    const RegexPtr& body() const { return left_; }    // unary kinds
    GroupId group() const { return group_; }          // Group/Backreference
    const std::optional<std::string>& group_name() const { return name_; }
    bool greedy() const { return greedy_; }
    uint64_t min() const { return min_; }
    RepCount delta() const { return delta_; }
    LookKind look_kind() const { return look_; }
    bool look_positive() const { return positive_; }
    AnchorKind anchor_kind() const { return anchor_; }

    uint64_t size() const { return size_; }
    uint64_t expanded_size() const { return expanded_size_; }
    // Sorted indices of all capture groups defined inside this regex.
    const std::vector<GroupId>& def_groups() const { return def_groups_; }
    bool has_lookaround() const { return has_look_; }
    bool has_negative_lookaround() const { return has_neg_look_; }
    bool has_lower_bounded_quantifier() const { return has_lower_bounded_; }

private:
    Regex() = default;
    friend struct RegexFactory;

    RegexKind kind_ = RegexKind::Epsilon;
    CharDescriptor cd_;
    RegexPtr left_, right_;
    GroupId group_ = 0;
    std::optional<std::string> name_;
    bool greedy_ = true;
    uint64_t min_ = 0;
    RepCount delta_;
    LookKind look_ = LookKind::Ahead;
    bool positive_ = true;
    AnchorKind anchor_ = AnchorKind::Begin;

    uint64_t size_ = 1;
    uint64_t expanded_size_ = 1;
    std::vector<GroupId> def_groups_;
    bool has_look_ = false;
    bool has_neg_look_ = false;
    bool has_lower_bounded_ = false;
};

namespace re {

RegexPtr epsilon();
RegexPtr chr(Char c);
RegexPtr character(CharDescriptor cd);
RegexPtr disj(RegexPtr a, RegexPtr b);
RegexPtr seq(RegexPtr a, RegexPtr b);
RegexPtr group(GroupId id, RegexPtr body, std::optional<std::string> name = std::nullopt);
RegexPtr noncap(RegexPtr body);
RegexPtr backref(GroupId id);
RegexPtr quant(bool greedy, uint64_t min, RepCount delta, RegexPtr body);
RegexPtr look(LookKind kind, bool positive, RegexPtr body);
RegexPtr anchor(AnchorKind a);

// a* is sugar for quant(greedy, 0, inf, a); never a distinct node.
RegexPtr star(RegexPtr body);
RegexPtr lazy_star(RegexPtr body);
RegexPtr plus(RegexPtr body);
RegexPtr opt(RegexPtr body);

// Right-nested folds; the canonical nesting for sequences and disjunctions.
RegexPtr seq_all(const std::vector<RegexPtr>& parts);
RegexPtr disj_all(const std::vector<RegexPtr>& parts);

}  // namespace re

bool ast_equal(const RegexPtr& a, const RegexPtr& b);
// Equality up to a consistent renumbering of capture-group indices
// (group names are ignored).
bool ast_equal_renumbered(const RegexPtr& a, const RegexPtr& b);

struct Violation {
    enum class Kind {
        DuplicateGroup,
        NonContiguousGroups,
        UnresolvedBackreference,
        BadClassRange,
        EmptyClass,
        DuplicateGroupName,
    };
    Kind kind;
    std::string detail;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationResult validate(const RegexPtr& r);

uint64_t regex_size(const RegexPtr& r);
uint64_t regex_expanded_size(const RegexPtr& r);
std::vector<GroupId> def_groups(const RegexPtr& r);
uint64_t ast_node_count(const RegexPtr& r);

}  // namespace bregex
