#include "doctest.h"

#include "bregex/fuel.hpp"
#include "bregex/optp.hpp"
#include "bregex/parser.hpp"
#include "bregex/testgen.hpp"

using namespace bregex;

namespace {

const MatchConfig cfg;

std::vector<Choice> choices_of(const std::string& text) {
    auto c = parse_choices(text);
    REQUIRE(c);
    return *c;
}

}  // namespace

TEST_CASE("optp_result follows the choice list") {
    RegexPtr r = parse_regex("(?:a|b)");
    TextPtr s = make_text("a");
    MatchOutcome left = optp_result(cfg, actions_of(r), input_at(s, 0), GroupMap::empty(),
                                    Direction::Forward, choices_of("L,R,R,R,R,R"));
    REQUIRE(left.is_success());
    CHECK(left.leaf->final.pos == 1);
    MatchOutcome right = optp_result(cfg, actions_of(r), input_at(s, 0), GroupMap::empty(),
                                     Direction::Forward, choices_of("R,R,R,R,R,R"));
    CHECK(right.kind == OutcomeKind::NoMatch);
    // Pending work with no choices left is out of fuel.
    MatchOutcome starved = optp_result(cfg, actions_of(r), input_at(s, 0), GroupMap::empty(),
                                       Direction::Forward, {});
    CHECK(starved.kind == OutcomeKind::OutOfFuel);
}

TEST_CASE("optp_result rejects lookarounds but unrolls lower bounds") {
    TextPtr s = make_text("a");
    CHECK_THROWS_AS(optp_result(cfg, actions_of(parse_regex("(?=a)a")), input_at(s, 0),
                                GroupMap::empty(), Direction::Forward, choices_of("L,L,L,L")),
                    std::invalid_argument);
    TextPtr aa = make_text("aa");
    MatchOutcome out =
        optp_result(cfg, actions_of(parse_regex("a{2}")), input_at(aa, 0), GroupMap::empty(),
                    Direction::Forward, choices_of("L,L,L,L,L,L,L,L"));
    REQUIRE(out.is_success());
    CHECK(out.leaf->final.pos == 2);
}

TEST_CASE("optp_algo keys successful runs by their choices") {
    RegexPtr r = parse_regex("(?:a|b)");
    TextPtr s = make_text("a");
    CHECK(fuel(actions_of(r), input_at(s, 0), Direction::Forward) == 6);
    std::vector<Choice> all_left(6, Choice::Left);
    RankedOutcome ok = optp_algo(cfg, r, s, all_left);
    CHECK(ok.rank == 0);
    CHECK(ok.key_choices == all_left);
    CHECK(ok.outcome.is_success());
    RankedOutcome miss = optp_algo(cfg, r, make_text("c"), all_left);
    CHECK(miss.rank == 1);
    CHECK(miss.key_choices == std::vector<Choice>(6, Choice::Right));
    // The empty regex on the empty string has fuel 1 and accepts.
    RegexPtr eps = re::epsilon();
    TextPtr empty = make_text("");
    CHECK(fuel(actions_of(eps), input_at(empty, 0), Direction::Forward) == 1);
    RankedOutcome eps_out = optp_algo(cfg, eps, empty, {Choice::Left});
    CHECK(eps_out.outcome.is_success());
    CHECK(eps_out.key_choices == std::vector<Choice>{Choice::Left});
}

TEST_CASE("minimize_over_choices reproduces the backtracking result") {
    auto same = [&](const std::string& pat, const std::string& str) {
        RegexPtr r = parse_regex(pat);
        TextPtr s = make_text(str);
        MatchOutcome direct = match_at(cfg, r, s, 0);
        MatchOutcome minimized = minimize_over_choices(cfg, r, s);
        CHECK(direct.kind == minimized.kind);
        if (direct.is_success()) {
            CHECK(direct.leaf->final.pos == minimized.leaf->final.pos);
            CHECK(direct.leaf->groups == minimized.leaf->groups);
        }
    };
    same("(?:a|b)", "a");
    same("a*", "a");
    same("c", "a");
    same("(?:a|ab)", "ab");
    same("a*?b", "b");
    CHECK_THROWS_AS(minimize_over_choices(cfg, parse_regex("(?:aaaa)*"), make_text("aaaaaaaa")),
                    EnumerationGuardError);
}

TEST_CASE("extract_choices replays the winning branch") {
    auto replay = [&](const std::string& pat, const std::string& str) {
        RegexPtr r = parse_regex(pat);
        TextPtr s = make_text(str);
        ActionList l = actions_of(r);
        Input inp = input_at(s, 0);
        uint64_t f = fuel(l, inp, Direction::Forward);
        std::vector<Choice> trail;
        MatchOutcome out = compute_result(cfg, l, inp, GroupMap::empty(), Direction::Forward,
                                          f + 1, nullptr, nullptr, &trail);
        REQUIRE(out.is_success());
        std::vector<Choice> choices = extract_choices(trail, true, f);
        CHECK(choices.size() == f);
        MatchOutcome replayed =
            optp_result(cfg, l, inp, GroupMap::empty(), Direction::Forward, choices);
        REQUIRE(replayed.is_success());
        CHECK(replayed.leaf->final.pos == out.leaf->final.pos);
        CHECK(replayed.leaf->groups == out.leaf->groups);
    };
    replay("(a|ab)c", "abc");
    replay("", "");
    replay("a*", "aa");
    replay("(?:(a)|b)*", "ab");
    CHECK_THROWS_AS(extract_choices({}, false, 4), std::invalid_argument);
}

TEST_CASE("full-length choice lists never run dry") {
    testgen::RegexGenOptions opts;
    opts.lookarounds = false;
    opts.max_size = 8;
    opts.letters = {U'a', U'b'};
    testgen::RegexGen gen(17, opts);
    int checked = 0;
    while (checked < 50) {
        RegexPtr r = gen.next();
        TextPtr s = make_text(gen.next_string(3));
        uint64_t f = fuel(actions_of(r), input_at(s, 0), Direction::Forward);
        if (f > 14) continue;
        ++checked;
        std::vector<Choice> choices(f, Choice::Left);
        for (uint64_t bits = 0; bits < (uint64_t{1} << f); ++bits) {
            for (uint64_t i = 0; i < f; ++i)
                choices[i] = (bits >> i) & 1 ? Choice::Right : Choice::Left;
            MatchOutcome out = optp_result(cfg, actions_of(r), input_at(s, 0),
                                           GroupMap::empty(), Direction::Forward, choices);
            CHECK(out.kind != OutcomeKind::OutOfFuel);
            if (out.kind == OutcomeKind::OutOfFuel) {
                CAPTURE(emit_regex(r));
                return;
            }
        }
    }
}
