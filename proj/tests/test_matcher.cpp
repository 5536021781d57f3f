#include "doctest.h"

#include "bregex/matcher.hpp"
#include "bregex/parser.hpp"

using namespace bregex;

namespace {

const MatchConfig cfg;

MatchOutcome run(const std::string& pat, const std::string& str, size_t pos = 0) {
    return match_at(cfg, parse_regex(pat), make_text(str), pos);
}

}  // namespace

TEST_CASE("(a|ab)c on abc matches with group (0,2)") {
    RegexPtr r = parse_regex("(a|ab)c");
    TextPtr s = make_text("abc");
    MatchOutcome out = compute_result(cfg, actions_of(r), input_at(s, 0), GroupMap::empty(),
                                      Direction::Forward, 11);
    REQUIRE(out.is_success());
    CHECK(out.leaf->final.pos == 3);
    CHECK(*out.leaf->groups.get(1) == GroupEntry::closed(0, 2));
    CHECK(compute_result(cfg, actions_of(r), input_at(s, 0), GroupMap::empty(),
                         Direction::Forward, 0)
              .kind == OutcomeKind::OutOfFuel);
}

TEST_CASE("lookahead fixtures from the walkthrough") {
    CHECK(run("a(?=bc)b", "abc").leaf->final.pos == 2);
    CHECK(run("a(?!bc)b", "ab").leaf->final.pos == 2);
    CHECK(run("a(?!bc)b", "abd").leaf->final.pos == 2);
    CHECK(run("a(?!bc)b", "abc").kind == OutcomeKind::NoMatch);
}

TEST_CASE("backreference fixtures") {
    MatchOutcome out = run("(ab*c)\\1", "abbcabbc");
    REQUIRE(out.is_success());
    CHECK(out.leaf->final.pos == 8);
    CHECK(*out.leaf->groups.get(1) == GroupEntry::closed(0, 4));
    CHECK(run("(ab*c)\\1", "abbcabc").kind == OutcomeKind::NoMatch);
}

TEST_CASE("atomic lookahead cannot be re-entered") {
    CHECK(run("(?=x|(?:x;)*(z))(?:x;)*\\1$", "x;z").kind == OutcomeKind::NoMatch);
    CHECK(run("(?=y|(?:x;)*(z))(?:x;)*\\1$", "x;z").is_success());
}

TEST_CASE("match_at basics") {
    CHECK(run("a", "a").is_success());
    CHECK(run("a", "b").kind == OutcomeKind::NoMatch);
    CHECK(run("", "").is_success());
    MatchOutcome grouped = run("(a|ab)c", "abc");
    REQUIRE(grouped.is_success());
    CHECK(*grouped.leaf->groups.get(1) == GroupEntry::closed(0, 2));
}

TEST_CASE("search scans starting positions left to right") {
    auto rec = search(cfg, parse_regex("b"), make_text("ab"));
    REQUIRE(rec);
    CHECK(rec->start == 1);
    CHECK(rec->end == 2);
    CHECK_FALSE(search(cfg, parse_regex("z"), make_text("x;x;")));
    // An unresolved backreference consumes nothing (engine-level behavior;
    // such regexes fail validate and are built directly here).
    RegexPtr r = re::seq(re::backref(1), re::chr(U'x'));
    auto loose = search(cfg, r, make_text("x"));
    REQUIRE(loose);
    CHECK(loose->start == 0);
    CHECK(loose->end == 1);
}

TEST_CASE("quantifiers respect greediness and progress checks") {
    CHECK(run("a*", "aaa").leaf->final.pos == 3);
    CHECK(run("a*?", "aaa").leaf->final.pos == 0);
    CHECK(run("(?:a*)*", "aa").leaf->final.pos == 2);
    CHECK(run("(?:)*", "a").leaf->final.pos == 0);  // empty iterations are cut off
    CHECK(run("a{2,}", "aaa").leaf->final.pos == 3);
    CHECK(run("a{2,}", "a").kind == OutcomeKind::NoMatch);
    CHECK(run("a{2,3}?", "aaaa").leaf->final.pos == 2);
    CHECK(run("a{3}", "aaaa").leaf->final.pos == 3);
}

TEST_CASE("quantifier iterations reset body captures") {
    MatchOutcome out = run("(?:(a)|b)*", "ab");
    REQUIRE(out.is_success());
    CHECK(out.leaf->final.pos == 2);
    CHECK_FALSE(out.leaf->groups.get(1));  // cleared by the second iteration
    MatchOutcome kept = run("(?:(a)|b)*", "ba");
    REQUIRE(kept.is_success());
    CHECK(*kept.leaf->groups.get(1) == GroupEntry::closed(1, 2));
}

TEST_CASE("lookbehind matches backward and captures normalize") {
    MatchOutcome out = run("(?<=(a)b)c", "abc", 2);
    REQUIRE(out.is_success());
    CHECK(out.leaf->final.pos == 3);
    CHECK(*out.leaf->groups.get(1) == GroupEntry::closed(0, 1));
    CHECK(run("(?<!a)b", "ab", 1).kind == OutcomeKind::NoMatch);
    CHECK(run("(?<!c)b", "ab", 1).is_success());
}

TEST_CASE("negative lookarounds discard group effects") {
    // The failed sub-match must not leak group 1.
    MatchOutcome out = run("(?!(a)b)a\\1x", "ax");
    REQUIRE(out.is_success());
    CHECK(out.leaf->final.pos == 2);  // \1 is undefined, consumes nothing
    CHECK_FALSE(out.leaf->groups.get(1));
    // A positive lookahead keeps its captures.
    MatchOutcome pos = run("(?=(a))a", "a");
    REQUIRE(pos.is_success());
    CHECK(*pos.leaf->groups.get(1) == GroupEntry::closed(0, 1));
}

TEST_CASE("anchors inside matches") {
    CHECK(run("^a$", "a").is_success());
    CHECK(run("^a$", "ab").kind == OutcomeKind::NoMatch);
    CHECK(run("a\\b;", "a;").is_success());
    CHECK(run("a\\B;", "a;").kind == OutcomeKind::NoMatch);
}

TEST_CASE("depth stays within the fuel budget") {
    RunStats stats;
    RegexPtr r = parse_regex("(?:a|aa)*b");
    TextPtr s = make_text("aaaaaaab");
    MatchOutcome out = match_at(cfg, r, s, 0, &stats);
    CHECK(out.is_success());
    CHECK(stats.max_depth <= stats.initial_fuel);
    CHECK(stats.peak_action_list_size <=
          r->size() + r->size() * (r->size() + 1) / 2);
}
