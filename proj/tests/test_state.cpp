#include "doctest.h"

#include "bregex/state.hpp"

using namespace bregex;

namespace {
const MatchConfig cfg;
}

TEST_CASE("read_char moves one position in the given direction") {
    TextPtr s = make_text("abc");
    CharDescriptor a = CharDescriptor::lit(U'a');
    CharDescriptor b = CharDescriptor::lit(U'b');
    auto fwd = read_char(cfg, a, input_at(s, 0), Direction::Forward);
    REQUIRE(fwd);
    CHECK(fwd->first == U'a');
    CHECK(fwd->second.pos == 1);
    CHECK_FALSE(read_char(cfg, a, input_at(s, 3), Direction::Forward));
    auto bwd = read_char(cfg, b, input_at(s, 2), Direction::Backward);
    REQUIRE(bwd);
    CHECK(bwd->first == U'b');
    CHECK(bwd->second.pos == 1);
    CHECK_FALSE(read_char(cfg, b, input_at(s, 0), Direction::Backward));
}

TEST_CASE("descriptor matching is flagless") {
    CHECK(CharDescriptor::dot().matches(U'a'));
    CHECK_FALSE(CharDescriptor::dot().matches(U'\n'));
    CharDescriptor cls = CharDescriptor::cls({{U'a', U'c'}, {U'x', U'x'}}, false);
    CHECK(cls.matches(U'b'));
    CHECK(cls.matches(U'x'));
    CHECK_FALSE(cls.matches(U'd'));
    CharDescriptor neg = CharDescriptor::cls({{U'a', U'c'}}, true);
    CHECK(neg.matches(U'd'));
    CHECK_FALSE(neg.matches(U'b'));
    CHECK(CharDescriptor::builtin_class(BuiltinClass::Word).matches(U'_'));
    CHECK_FALSE(CharDescriptor::builtin_class(BuiltinClass::Word).matches(U';'));
}

TEST_CASE("read_backref consumes the captured span") {
    TextPtr s = make_text("abab");
    GroupMap gm = gm_close(gm_open(GroupMap::empty(), 1, 0), 1, 2);  // "ab"
    auto ok = read_backref(cfg, gm, 1, input_at(s, 2), Direction::Forward);
    REQUIRE(ok);
    CHECK(to_utf8(ok->first) == "ab");
    CHECK(ok->second.pos == 4);

    TextPtr s2 = make_text("abcd");
    GroupMap gm2 = gm_close(gm_open(GroupMap::empty(), 1, 0), 1, 2);
    CHECK_FALSE(read_backref(cfg, gm2, 1, input_at(s2, 2), Direction::Forward));

    // Undefined (or still-open) groups consume nothing and succeed.
    TextPtr x = make_text("x");
    auto empty = read_backref(cfg, GroupMap::empty(), 1, input_at(x, 0), Direction::Forward);
    REQUIRE(empty);
    CHECK(empty->first.empty());
    CHECK(empty->second.pos == 0);
    GroupMap open_gm = gm_open(GroupMap::empty(), 1, 0);
    auto open_read = read_backref(cfg, open_gm, 1, input_at(x, 0), Direction::Forward);
    REQUIRE(open_read);
    CHECK(open_read->second.pos == 0);

    // Backward comparison against the span ending at pos.
    GroupMap gm3 = gm_close(gm_open(GroupMap::empty(), 1, 0), 1, 2);
    auto bwd = read_backref(cfg, gm3, 1, input_at(s, 4), Direction::Backward);
    REQUIRE(bwd);
    CHECK(bwd->second.pos == 2);
}

TEST_CASE("strict progress compares positions directionally") {
    TextPtr s = make_text("aa");
    CHECK(is_strict_progress(input_at(s, 1), input_at(s, 0), Direction::Forward));
    CHECK_FALSE(is_strict_progress(input_at(s, 0), input_at(s, 0), Direction::Forward));
    CHECK(is_strict_progress(input_at(s, 0), input_at(s, 1), Direction::Backward));
    for (size_t p = 0; p <= 2; ++p) {
        CHECK_FALSE(is_strict_progress(input_at(s, p), input_at(s, p), Direction::Forward));
        CHECK_FALSE(is_strict_progress(input_at(s, p), input_at(s, p), Direction::Backward));
    }
}

TEST_CASE("group map open/close/reset") {
    GroupMap gm = gm_open(GroupMap::empty(), 1, 0);
    CHECK(gm.get(1)->open);
    gm = gm_close(std::move(gm), 1, 2);
    CHECK(*gm.get(1) == GroupEntry::closed(0, 2));

    // Overwrite and multiple entries.
    GroupMap gm2 = gm_close(gm_open(GroupMap::empty(), 1, 0), 1, 1);
    gm2 = gm_open(std::move(gm2), 1, 2);
    CHECK(gm2.get(1)->open);
    gm2 = gm_open(std::move(gm2), 2, 3);
    CHECK(gm2.entries().size() == 2);

    // Backward closing normalizes to (min, max).
    GroupMap bwd = gm_close(gm_open(GroupMap::empty(), 1, 3), 1, 1);
    CHECK(*bwd.get(1) == GroupEntry::closed(1, 3));
    GroupMap empty_span = gm_close(gm_open(GroupMap::empty(), 1, 2), 1, 2);
    CHECK(*empty_span.get(1) == GroupEntry::closed(2, 2));

    GroupMap reset_me = gm_close(gm_open(GroupMap::empty(), 1, 0), 1, 1);
    reset_me = gm_close(gm_open(std::move(reset_me), 2, 1), 2, 2);
    reset_me = gm_reset(std::move(reset_me), {1});
    CHECK_FALSE(reset_me.get(1));
    CHECK(reset_me.get(2));
    CHECK(gm_reset(GroupMap::empty(), {1, 2}).entries().empty());

    CHECK_THROWS_AS(gm_close(GroupMap::empty(), 1, 0), std::logic_error);
}

TEST_CASE("close after open normalizes every position pair") {
    for (size_t a = 0; a <= 6; ++a)
        for (size_t b = 0; b <= 6; ++b) {
            GroupMap gm = gm_close(gm_open(GroupMap::empty(), 1, a), 1, b);
            auto e = gm.get(1);
            REQUIRE(e);
            CHECK_FALSE(e->open);
            CHECK(e->start <= e->end);
            CHECK(e->start == std::min(a, b));
            CHECK(e->end == std::max(a, b));
        }
}

TEST_CASE("anchors") {
    TextPtr s = make_text("x;z");
    CHECK(anchor_satisfied(cfg, AnchorKind::Begin, input_at(s, 0)));
    CHECK_FALSE(anchor_satisfied(cfg, AnchorKind::Begin, input_at(s, 1)));
    CHECK(anchor_satisfied(cfg, AnchorKind::End, input_at(s, 3)));
    CHECK_FALSE(anchor_satisfied(cfg, AnchorKind::End, input_at(s, 2)));
    TextPtr ab = make_text("ab;");
    CHECK(anchor_satisfied(cfg, AnchorKind::WordBoundary, input_at(ab, 2)));
    CHECK_FALSE(anchor_satisfied(cfg, AnchorKind::NonWordBoundary, input_at(ab, 2)));
    CHECK(anchor_satisfied(cfg, AnchorKind::WordBoundary, input_at(ab, 0)));
    CHECK(anchor_satisfied(cfg, AnchorKind::NonWordBoundary, input_at(ab, 1)));
}

TEST_CASE("action lists cache their measure") {
    RegexPtr a = re::chr(U'a');
    RegexPtr astar = re::star(a);
    TextPtr s = make_text("aa");
    ActionList l = cons(Action::make_reg(a),
                        cons(Action::make_check(input_at(s, 0)),
                             cons(Action::make_reg(astar), nullptr)));
    CHECK(action_list_size(l) == 6);
    CHECK(action_list_length(l) == 3);
    CHECK(action_list_size(nullptr) == 0);
    CHECK(action_list_size(cons(Action::make_close(1), nullptr)) == 1);
    // Non-capturing wrappers are stripped when the action is built.
    ActionList stripped = actions_of(re::noncap(re::noncap(a)));
    CHECK(stripped->head.reg->kind() == RegexKind::Character);
}
