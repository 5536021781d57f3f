#include "doctest.h"

#include "bregex/fuel.hpp"
#include "bregex/matcher.hpp"
#include "bregex/parser.hpp"
#include "bregex/testgen.hpp"

using namespace bregex;

namespace {

ActionList list_of(std::vector<Action> actions) {
    ActionList l;
    for (size_t i = actions.size(); i-- > 0;) l = cons(std::move(actions[i]), l);
    return l;
}

const RegexPtr kA = re::chr(U'a');
const RegexPtr kAStar = re::star(kA);

}  // namespace

TEST_CASE("split_chunks separates on checks") {
    TextPtr s = make_text("aa");
    Input i0 = input_at(s, 0);
    ChunkSplit sp = split_chunks(list_of(
        {Action::make_reg(kA), Action::make_check(i0), Action::make_reg(kAStar)}));
    REQUIRE(sp.chunks.size() == 2);
    CHECK(sp.chunks[0].size() == 1);
    CHECK(sp.chunks[1].size() == 1);
    REQUIRE(sp.check_inputs.size() == 1);
    CHECK(sp.check_inputs[0].pos == 0);

    ChunkSplit single = split_chunks(list_of({Action::make_reg(kAStar)}));
    CHECK(single.chunks.size() == 1);
    CHECK(single.check_inputs.empty());

    ChunkSplit leading = split_chunks(
        list_of({Action::make_check(i0), Action::make_reg(kAStar)}));
    REQUIRE(leading.chunks.size() == 2);
    CHECK(leading.chunks[0].empty());
}

TEST_CASE("prog requires strict progress past every check") {
    TextPtr s = make_text("aa");
    ActionList l1 = list_of({Action::make_reg(kA), Action::make_check(input_at(s, 0)),
                             Action::make_reg(kAStar)});
    CHECK(prog(l1, input_at(s, 0), Direction::Forward) == 0);
    ActionList l2 = list_of({Action::make_check(input_at(s, 0)), Action::make_reg(kAStar)});
    CHECK(prog(l2, input_at(s, 1), Direction::Forward) == 1);
    CHECK(prog(list_of({Action::make_reg(kAStar)}), input_at(s, 0), Direction::Forward) == 1);
}

TEST_CASE("per-chunk fuel components") {
    TextPtr s = make_text("aa");
    std::vector<Action> just_a = {Action::make_reg(kA)};
    std::vector<Action> just_star = {Action::make_reg(kAStar)};
    CHECK(fuel_first(just_a, 0) == 1);
    CHECK(fuel_first(just_star, 1) == 1);  // skippable quantifier head
    CHECK(fuel_first(just_star, 0) == 4);
    CHECK(fuel_first({}, 1) == 0);
    CHECK(fuel_middle(just_star) == 1);
    CHECK(fuel_middle({Action::make_reg(kAStar), Action::make_close(1)}) == 2);
    CHECK(fuel_middle({}) == 1);
    CHECK(fuel_last(just_star, input_at(s, 0), Direction::Forward, 0) == 8);
    CHECK(fuel_last(just_star, input_at(s, 1), Direction::Forward, 1) == 8);
    CHECK(fuel_last({}, input_at(s, 0), Direction::Forward, 1) == 0);
}

TEST_CASE("lookaround fuel reserve") {
    CHECK(reg_lk_fuel(2, kAStar) == 0);
    RegexPtr look_a = parse_regex("(?=a)");
    CHECK(reg_lk_fuel(3, look_a) == 4);  // (1+3) x 1
    RegexPtr nested = parse_regex("(?=(?=a))");
    CHECK(reg_lk_fuel(1, nested) == 6);  // (1+1) x 2 + (1+1) x 1
    CHECK(act_lk_fuel(1, nullptr) == 0);
    CHECK(act_lk_fuel(2, list_of({Action::make_reg(kAStar), Action::make_close(1)})) == 0);
    CHECK(act_lk_fuel(1, list_of({Action::make_reg(look_a), Action::make_reg(nested)})) == 6);
}

TEST_CASE("fuel reproduces the worked example") {
    TextPtr s = make_text("aa");
    auto f = [&](std::vector<Action> actions, size_t pos) {
        return fuel(list_of(std::move(actions)), input_at(s, pos), Direction::Forward);
    };
    CHECK(f({Action::make_reg(kA), Action::make_check(input_at(s, 0)),
             Action::make_reg(kAStar)},
            0) == 10);
    CHECK(f({Action::make_check(input_at(s, 0)), Action::make_reg(kAStar)}, 1) == 9);
    CHECK(f({Action::make_reg(kAStar)}, 1) == 8);
    CHECK(f({Action::make_reg(kA), Action::make_check(input_at(s, 1)),
             Action::make_reg(kAStar)},
            1) == 6);
    TextPtr empty = make_text("");
    CHECK(fuel(actions_of(re::epsilon()), input_at(empty, 0), Direction::Forward) == 1);
}

TEST_CASE("breakdown matches the one-pass total") {
    TextPtr s = make_text("aa");
    ActionList l = list_of({Action::make_reg(kA), Action::make_check(input_at(s, 0)),
                            Action::make_reg(kAStar)});
    FuelBreakdown b = fuel_breakdown(l, input_at(s, 0), Direction::Forward);
    CHECK(b.total == 10);
    CHECK(b.first == 1);
    CHECK(b.check_bonus == 1);
    CHECK(b.last == 8);
    CHECK(b.middles.empty());
    CHECK(b.split.check_inputs.size() == b.split.chunks.size() - 1);
    uint64_t sum = b.first + b.check_bonus + b.last + b.lk;
    for (uint64_t m : b.middles) sum += m;
    CHECK(sum == b.total);

    testgen::RegexGen gen(7, {});
    for (int i = 0; i < 200; ++i) {
        RegexPtr r = gen.next();
        TextPtr str = make_text(gen.next_string(8));
        ActionList init = actions_of(r);
        Input inp = input_at(str, 0);
        CHECK(fuel_breakdown(init, inp, Direction::Forward).total ==
              fuel(init, inp, Direction::Forward));
    }
}

TEST_CASE("one-pass fuel equals the breakdown on every visited state") {
    testgen::RegexGen gen(55, {});
    MatchConfig cfg;
    for (int i = 0; i < 60; ++i) {
        RegexPtr r = gen.next();
        TextPtr s = make_text(gen.sample_for(r, 10));
        ActionList l = actions_of(r);
        Input inp = input_at(s, 0);
        EngineHooks hooks;
        uint64_t mismatches = 0;
        hooks.on_enter = [&](const ActionList& acts, const Input& in, Direction d, uint64_t) {
            if (fuel(acts, in, d) != fuel_breakdown(acts, in, d).total) ++mismatches;
        };
        RunStats stats;
        compute_result(cfg, l, inp, GroupMap::empty(), Direction::Forward,
                       fuel(l, inp, Direction::Forward) + 1, &stats, &hooks);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("action_list_size sums action sizes") {
    TextPtr s = make_text("aa");
    CHECK(action_list_size(list_of({Action::make_reg(kA), Action::make_check(input_at(s, 0)),
                                    Action::make_reg(kAStar)})) == 6);
    CHECK(action_list_size(nullptr) == 0);
    CHECK(action_list_size(list_of({Action::make_close(1)})) == 1);
}

TEST_CASE("reachable-state invariants on constructed lists") {
    TextPtr s = make_text("aa");
    Input i0 = input_at(s, 0);
    InvariantReport good = check_reachable_invariants(
        list_of({Action::make_reg(kA), Action::make_check(i0), Action::make_reg(kAStar)}), i0,
        Direction::Forward);
    CHECK(good.ok());
    InvariantReport bad = check_reachable_invariants(
        list_of({Action::make_check(i0), Action::make_reg(kA)}), i0, Direction::Forward);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.violations.front().invariant == 1);
    CHECK(check_reachable_invariants(list_of({Action::make_reg(kAStar)}), i0,
                                     Direction::Forward)
              .ok());
    // Chunk as large as the following quantifier violates invariant 2.
    RegexPtr big = parse_regex("aaaa");
    InvariantReport inv2 = check_reachable_invariants(
        list_of({Action::make_reg(big), Action::make_check(i0), Action::make_reg(kAStar)}), i0,
        Direction::Forward);
    REQUIRE_FALSE(inv2.ok());
    CHECK(inv2.violations.front().invariant == 2);
    // Checks in the wrong restrictiveness order violate invariant 3.
    RegexPtr wide_star = parse_regex("(?:aaa)*");
    InvariantReport inv3 = check_reachable_invariants(
        list_of({Action::make_reg(kA), Action::make_check(input_at(s, 0)),
                 Action::make_reg(kAStar), Action::make_check(input_at(s, 1)),
                 Action::make_reg(wide_star)}),
        i0, Direction::Forward);
    REQUIRE_FALSE(inv3.ok());
    REQUIRE(inv3.violations.size() == 1);
    CHECK(inv3.violations.front().invariant == 3);
}

TEST_CASE("fuel strictly decreases along matcher calls") {
    testgen::RegexGen gen(99, {});
    MatchConfig cfg;
    for (int i = 0; i < 300; ++i) {
        RegexPtr r = gen.next();
        TextPtr s = make_text(gen.next_string(8));
        ActionList l = actions_of(r);
        Input inp = input_at(s, 0);
        uint64_t budget = fuel(l, inp, Direction::Forward) + 1;
        uint64_t violations = 0;
        EngineHooks hooks;
        std::vector<uint64_t> fuel_at_depth;
        hooks.on_enter = [&](const ActionList& acts, const Input& in, Direction d,
                             uint64_t left) {
            uint64_t f = fuel(acts, in, d);
            uint64_t depth = budget - left;
            if (fuel_at_depth.size() <= depth) fuel_at_depth.resize(depth + 1, 0);
            fuel_at_depth[depth] = f;
            if (depth > 0 && f >= fuel_at_depth[depth - 1]) ++violations;
        };
        RunStats stats;
        MatchOutcome out = compute_result(cfg, l, inp, GroupMap::empty(), Direction::Forward,
                                          budget, &stats, &hooks);
        CHECK(out.kind != OutcomeKind::OutOfFuel);
        CHECK(violations == 0);
        if (violations) {
            CAPTURE(emit_regex(r));
            break;
        }
    }
}
