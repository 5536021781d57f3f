#include "doctest.h"

#include "bregex/matcher.hpp"
#include "bregex/parser.hpp"
#include "bregex/testgen.hpp"
#include "bregex/tree.hpp"

using namespace bregex;

namespace {
const MatchConfig cfg;
}

TEST_CASE("(a|ab)c on abc has the exact node sequence") {
    TreeResult tr = build_tree_for(cfg, parse_regex("(a|ab)c"), make_text("abc"), 0);
    REQUIRE(tr.ok());
    CHECK(render_tree(tr.tree) ==
          "Open 1\n"
          "Choice\n"
          "  hi:\n"
          "    Read a\n"
          "    Close 1\n"
          "    Mismatch\n"
          "  lo:\n"
          "    Read a\n"
          "    Read b\n"
          "    Close 1\n"
          "    Read c\n"
          "    Match\n");
    TextPtr s = make_text("abc");
    auto leaves = tree_leaves(tr.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].final.pos == 3);
    CHECK(*leaves[0].groups.get(1) == GroupEntry::closed(0, 2));
    auto first = first_leaf(tr.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
    REQUIRE(first);
    CHECK(first->final.pos == 3);
}

TEST_CASE("empty action list yields the Match leaf at the initial input") {
    TextPtr s = make_text("xy");
    TreeResult tr = build_tree(cfg, nullptr, input_at(s, 1), GroupMap::empty(),
                               Direction::Forward, 1);
    REQUIRE(tr.ok());
    auto leaf = first_leaf(tr.tree, input_at(s, 1), GroupMap::empty(), Direction::Forward);
    REQUIRE(leaf);
    CHECK(leaf->final.pos == 1);
}

TEST_CASE("greedy and lazy stars order their leaves oppositely") {
    TextPtr s = make_text("aa");
    TreeResult greedy = build_tree_for(cfg, parse_regex("a*"), s, 0);
    REQUIRE(greedy.ok());
    auto g = tree_leaves(greedy.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
    REQUIRE(g.size() == 3);
    CHECK(g[0].final.pos == 2);
    CHECK(g[1].final.pos == 1);
    CHECK(g[2].final.pos == 0);
    TreeResult lazy = build_tree_for(cfg, parse_regex("a*?"), s, 0);
    auto l = tree_leaves(lazy.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
    REQUIRE(l.size() == 3);
    CHECK(l[0].final.pos == 0);
    CHECK(l[1].final.pos == 1);
    CHECK(l[2].final.pos == 2);
    // Mirrored at the top choice only.
    const TreeNode& g_root = greedy.tree.at(greedy.tree.root);
    const TreeNode& l_root = lazy.tree.at(lazy.tree.root);
    REQUIRE(g_root.kind == TreeKind::Choice);
    REQUIRE(l_root.kind == TreeKind::Choice);
    CHECK(greedy.tree.at(g_root.a).kind == TreeKind::ResetGroups);
    CHECK(lazy.tree.at(l_root.b).kind == TreeKind::ResetGroups);
}

TEST_CASE("no-leaf trees have no first leaf") {
    TextPtr s = make_text("a");
    TreeResult tr = build_tree_for(cfg, parse_regex("b"), s, 0);
    REQUIRE(tr.ok());
    CHECK_FALSE(first_leaf(tr.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward));
}

TEST_CASE("star iteration blocked by the progress check") {
    // At the end of the string the iterate arm dies at Read, and an
    // empty-body iteration dies at Progress.
    TextPtr s = make_text("a");
    TreeResult at_end = build_tree_for(cfg, parse_regex("a*"), s, 1);
    REQUIRE(at_end.ok());
    auto leaves = tree_leaves(at_end.tree, input_at(s, 1), GroupMap::empty(),
                              Direction::Forward);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].final.pos == 1);
    TreeResult empty_iter = build_tree_for(cfg, parse_regex("(?:)*"), s, 0);
    REQUIRE(empty_iter.ok());
    auto l2 = tree_leaves(empty_iter.tree, input_at(s, 0), GroupMap::empty(),
                          Direction::Forward);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].final.pos == 0);
}

TEST_CASE("out-of-fuel and budget are reported") {
    TextPtr s = make_text("aa");
    CHECK(build_tree(cfg, actions_of(parse_regex("a*")), input_at(s, 0), GroupMap::empty(),
                     Direction::Forward, 1)
              .status == TreeStatus::OutOfFuel);
    CHECK(build_tree_for(cfg, parse_regex("(?:a|a)*"), make_text("aaaaaaaaaa"), 0, 16).status ==
          TreeStatus::BudgetExceeded);
}

TEST_CASE("lookaround nodes replay atomically") {
    TextPtr s = make_text("x;z");
    TreeResult tr = build_tree_for(cfg, parse_regex("(?=x|(?:x;)*(z))(?:x;)*\\1$"), s, 0);
    REQUIRE(tr.ok());
    CHECK_FALSE(first_leaf(tr.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward));
    TreeResult ok = build_tree_for(cfg, parse_regex("(?=y|(?:x;)*(z))(?:x;)*\\1$"), s, 0);
    REQUIRE(ok.ok());
    auto leaf = first_leaf(ok.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
    REQUIRE(leaf);
    CHECK(leaf->final.pos == 3);
    CHECK(*leaf->groups.get(1) == GroupEntry::closed(2, 3));
}

TEST_CASE("first leaf agrees with the matcher on random instances") {
    testgen::RegexGen gen(321, {});
    for (int i = 0; i < 500; ++i) {
        RegexPtr r = gen.next();
        TextPtr s = make_text(gen.next_string(8));
        RunStats stats;
        MatchOutcome direct = match_at(cfg, r, s, 0, &stats);
        if (stats.steps > 20000) continue;
        TreeResult tr = build_tree_for(cfg, r, s, 0, 500000);
        if (tr.status == TreeStatus::BudgetExceeded) continue;
        REQUIRE(tr.ok());
        auto leaf = first_leaf(tr.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
        CHECK(leaf.has_value() == direct.is_success());
        if (leaf && direct.is_success()) {
            CHECK(leaf->final.pos == direct.leaf->final.pos);
            CHECK(leaf->groups == direct.leaf->groups);
        }
    }
}
