#include "bregex/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "bregex/formats.hpp"
#include "bregex/matcher.hpp"
#include "bregex/optp.hpp"
#include "bregex/oracles.hpp"
#include "bregex/parser.hpp"
#include "bregex/reductions.hpp"
#include "bregex/testgen.hpp"
#include "bregex/tree.hpp"

namespace bregex::acceptance {

namespace {

using testgen::CnfGenOptions;
using testgen::RegexGen;
using testgen::RegexGenOptions;

constexpr uint64_t kStepCap = 50'000;       // per-instance matcher work cap
constexpr uint64_t kTreeBudget = 2'000'000;  // node cap for tree instances

struct Checker {
    std::ostringstream detail;
    uint64_t failures = 0;

    void fail(const std::string& msg) {
        if (failures < 5) detail << "  ! " << msg << "\n";
        ++failures;
    }
    void expect(bool ok, const std::function<std::string()>& msg) {
        if (!ok) fail(msg());
    }
};

std::string describe(const RegexPtr& r, const Text& s) {
    return "/" + emit_regex(r) + "/ on \"" + to_utf8(s) + "\"";
}

struct SuiteInstance {
    RegexPtr r;
    TextPtr s;
};

// Random (regex, string) pairs kept under the per-instance work cap so the
// instrumented passes stay inside the stated time budgets.
std::vector<SuiteInstance> make_suite(uint64_t seed, size_t count, RegexGenOptions opts,
                                      size_t max_str, uint64_t* skipped) {
    MatchConfig cfg;
    RegexGen gen(seed, opts);
    std::vector<SuiteInstance> out;
    out.reserve(count);
    while (out.size() < count) {
        RegexPtr r;
        TextPtr s;
        if (opts.lookarounds && out.size() % 10 == 9) {
            r = testgen::adversarial_regex(gen.rng());
            s = make_text(testgen::adversarial_string(gen.rng(), max_str));
        } else {
            r = gen.next();
            bool guided = (out.size() % 2) == 0;
            s = make_text(guided ? gen.sample_for(r, max_str) : gen.next_string(max_str));
        }
        RunStats stats;
        match_at(cfg, r, s, 0, &stats);
        if (stats.steps > kStepCap) {
            if (skipped) ++(*skipped);
            continue;
        }
        out.push_back({std::move(r), std::move(s)});
    }
    return out;
}

// Walks an action list once, checking reachability invariants 1-3 without
// allocating. Returns the number of violated invariants.
int fast_invariant_violations(const ActionList& l, Direction d) {
    int bad = 0;
    uint64_t chunk_sum = 0;
    bool pending_check = false;      // previous action was a check
    bool have_prev_check = false;
    size_t prev_check_pos = 0;
    uint64_t prev_chunk_sum = 0;
    for (const ActionNode* n = l.get(); n; n = n->tail.get()) {
        const Action& a = n->head;
        if (a.kind == Action::Kind::Check) {
            if (pending_check) bad |= 1;  // empty chunk between checks
            if (have_prev_check) {
                bool more_restrictive_later =
                    d == Direction::Forward ? a.check.pos > prev_check_pos
                                            : a.check.pos < prev_check_pos;
                if (more_restrictive_later) bad |= 4;  // invariant 3
            }
            have_prev_check = true;
            prev_check_pos = a.check.pos;
            prev_chunk_sum = chunk_sum;
            chunk_sum = 0;
            pending_check = true;
            continue;
        }
        if (pending_check) {
            bool quant = a.kind == Action::Kind::Reg &&
                         a.reg->kind() == RegexKind::Quantified && a.reg->min() == 0;
            if (!quant) bad |= 1;                        // invariant 1
            else if (prev_chunk_sum >= a.size()) bad |= 2;  // invariant 2
            pending_check = false;
        }
        chunk_sum += a.size();
    }
    if (pending_check) bad |= 1;  // trailing check
    return (bad & 1 ? 1 : 0) + (bad & 2 ? 1 : 0) + (bad & 4 ? 1 : 0);
}

ActionList list_of(std::vector<Action> actions) {
    ActionList l;
    for (size_t i = actions.size(); i-- > 0;) l = cons(std::move(actions[i]), l);
    return l;
}

bool leaf_equal(const Leaf& a, const Leaf& b) {
    return a.final.pos == b.final.pos && a.groups == b.groups;
}

// --- criterion bodies ---

void criterion_walkthrough(Checker& ck) {
    MatchConfig cfg;
    RegexPtr r = parse_regex("(a|ab)c");
    TextPtr s = make_text("abc");
    MatchOutcome out = match_at(cfg, r, s, 0);
    ck.expect(out.is_success(), [] { return std::string("no match"); });
    if (out.is_success()) {
        ck.expect(out.leaf->final.pos == 3,
                  [&] { return "end " + std::to_string(out.leaf->final.pos) + " != 3"; });
        auto g1 = out.leaf->groups.get(1);
        ck.expect(g1 && !g1->open && g1->start == 0 && g1->end == 2,
                  [] { return std::string("group 1 != (0,2)"); });
    }
    TreeResult tr = build_tree_for(cfg, r, s, 0);
    ck.expect(tr.ok(), [] { return std::string("tree build failed"); });
    std::string expected =
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
        "    Match\n";
    std::string got = render_tree(tr.tree);
    ck.expect(got == expected, [&] { return "tree render mismatch:\n" + got; });
}

void criterion_lookaround_fixtures(Checker& ck) {
    MatchConfig cfg;
    auto expect_match = [&](const std::string& pat, const std::string& str, size_t end) {
        RegexPtr r = parse_regex(pat);
        TextPtr s = make_text(str);
        auto rec = search(cfg, r, s);
        ck.expect(rec.has_value(),
                  [&] { return "/" + pat + "/ on \"" + str + "\": expected a match"; });
        if (rec)
            ck.expect(rec->start == 0 && rec->end == end, [&] {
                return "/" + pat + "/ on \"" + str + "\": match " +
                       std::to_string(rec->start) + ".." + std::to_string(rec->end) +
                       " != 0.." + std::to_string(end);
            });
        return rec;
    };
    auto expect_none = [&](const std::string& pat, const std::string& str) {
        RegexPtr r = parse_regex(pat);
        TextPtr s = make_text(str);
        ck.expect(!search(cfg, r, s).has_value(),
                  [&] { return "/" + pat + "/ on \"" + str + "\": expected no match"; });
    };
    expect_match("a(?=bc)b", "abc", 2);
    expect_match("a(?!bc)b", "ab", 2);
    expect_match("a(?!bc)b", "abd", 2);
    expect_none("a(?!bc)b", "abc");
    auto rec = expect_match("(ab*c)\\1", "abbcabbc", 8);
    if (rec) {
        auto g1 = rec->groups.get(1);
        ck.expect(g1 && g1->start == 0 && g1->end == 4,
                  [] { return std::string("(ab*c)\\1 group 1 != (0,4)"); });
    }
    expect_none("(ab*c)\\1", "abbcabc");
}

void criterion_fuel_worked_example(Checker& ck) {
    RegexPtr a = re::chr(U'a');
    RegexPtr astar = re::star(a);
    TextPtr s = make_text("aa");
    auto state_fuel = [&](std::vector<Action> actions, size_t pos) {
        return fuel(list_of(std::move(actions)), input_at(s, pos), Direction::Forward);
    };
    uint64_t f1 = state_fuel({Action::make_reg(a), Action::make_check(input_at(s, 0)),
                              Action::make_reg(astar)},
                             0);
    uint64_t f2 = state_fuel({Action::make_check(input_at(s, 0)), Action::make_reg(astar)}, 1);
    uint64_t f3 = state_fuel({Action::make_reg(astar)}, 1);
    uint64_t f4 = state_fuel({Action::make_reg(a), Action::make_check(input_at(s, 1)),
                              Action::make_reg(astar)},
                             1);
    auto want = [&](uint64_t got, uint64_t expect, const char* which) {
        ck.expect(got == expect, [&] {
            return std::string(which) + " = " + std::to_string(got) +
                   " != " + std::to_string(expect);
        });
    };
    want(f1, 10, "fuel(l1)");
    want(f2, 9, "fuel(l2)");
    want(f3, 8, "fuel(l3)");
    want(f4, 6, "fuel(l4)");
}

struct InstrumentedCounters {
    uint64_t checker_disagreements = 0;
    uint64_t decrease_violations = 0;
    uint64_t out_of_fuel = 0;
    uint64_t depth_violations = 0;
    uint64_t size_bound_violations = 0;
    uint64_t invariant_violations = 0;
    uint64_t runs = 0;
    uint64_t states = 0;
};

void run_instrumented_suite(const std::vector<SuiteInstance>& suite,
                            InstrumentedCounters& counters) {
    MatchConfig cfg;
    for (const SuiteInstance& inst : suite) {
        std::vector<uint64_t> fuel_at_depth;
        uint64_t init_fuel_holder = 0;
        EngineHooks hooks;
        hooks.on_enter = [&](const ActionList& l, const Input& inp, Direction d,
                             uint64_t fuel_left) {
            ++counters.states;
            uint64_t f = fuel(l, inp, d);
            uint64_t depth = init_fuel_holder - fuel_left;
            if (fuel_at_depth.size() <= depth) fuel_at_depth.resize(depth + 1, 0);
            fuel_at_depth[depth] = f;
            if (depth > 0 && f >= fuel_at_depth[depth - 1]) ++counters.decrease_violations;
            int fast = fast_invariant_violations(l, d);
            counters.invariant_violations += static_cast<uint64_t>(fast);
            // Cross-check the allocation-free checker against the module one
            // on a sample of states.
            if (counters.states % 64 == 0 &&
                (fast == 0) != check_reachable_invariants(l, inp, d).ok())
                ++counters.checker_disagreements;
        };
        ActionList l = actions_of(inst.r);
        Input inp = input_at(inst.s, 0);
        uint64_t budget = fuel(l, inp, Direction::Forward) + 1;
        init_fuel_holder = budget;
        RunStats stats;
        MatchOutcome out = compute_result(cfg, l, inp, GroupMap::empty(), Direction::Forward,
                                          budget, &stats, &hooks);
        ++counters.runs;
        if (out.kind == OutcomeKind::OutOfFuel) ++counters.out_of_fuel;
        if (stats.max_depth > stats.initial_fuel) ++counters.depth_violations;
        uint64_t sz = inst.r->size();
        if (stats.peak_action_list_size > sz + sz * (sz + 1) / 2)
            ++counters.size_bound_violations;
    }
}

void criterion_poly_bound(Checker& ck, const std::vector<SuiteInstance>& base_suite,
                          uint64_t seed, size_t extended_count) {
    auto check_instance = [&](const RegexPtr& r, const TextPtr& s) {
        uint64_t e = r->expanded_size();
        uint64_t bound = (1 + static_cast<uint64_t>(s->size())) * (e + e * e);
        uint64_t f = fuel(actions_of(r), input_at(s, 0), Direction::Forward);
        ck.expect(f <= bound, [&] {
            return describe(r, *s) + ": fuel " + std::to_string(f) + " > bound " +
                   std::to_string(bound);
        });
    };
    for (const SuiteInstance& inst : base_suite) check_instance(inst.r, inst.s);
    RegexGenOptions opts;
    opts.lower_bounded = true;
    opts.max_min = 3;
    RegexGen gen(seed, opts);
    for (size_t i = 0; i < extended_count; ++i) {
        RegexPtr r = gen.next();
        TextPtr s = make_text(gen.next_string(12));
        check_instance(r, s);
    }
}

void criterion_tree_oracle(Checker& ck, uint64_t seed, size_t count, uint64_t* skipped) {
    MatchConfig cfg;
    RegexGenOptions opts;
    RegexGen gen(seed, opts);
    size_t done = 0;
    while (done < count) {
        RegexPtr r;
        TextPtr s;
        if (done % 10 == 9) {
            r = testgen::adversarial_regex(gen.rng());
            s = make_text(testgen::adversarial_string(gen.rng(), 12));
        } else {
            r = gen.next();
            bool guided = (done % 2) == 0;
            s = make_text(guided ? gen.sample_for(r, 12) : gen.next_string(12));
        }
        RunStats stats;
        MatchOutcome out = match_at(cfg, r, s, 0, &stats);
        if (stats.steps > kStepCap) {
            ++*skipped;
            continue;
        }
        TreeResult tr = build_tree_for(cfg, r, s, 0, kTreeBudget);
        if (tr.status == TreeStatus::BudgetExceeded) {
            ++*skipped;
            continue;
        }
        ++done;
        if (!tr.ok()) {
            ck.fail(describe(r, *s) + ": tree build failed");
            continue;
        }
        auto leaf = first_leaf(tr.tree, input_at(s, 0), GroupMap::empty(), Direction::Forward);
        if (out.is_success() != leaf.has_value()) {
            ck.fail(describe(r, *s) + ": matcher/tree outcome divergence");
            continue;
        }
        if (out.is_success() && !leaf_equal(*out.leaf, *leaf))
            ck.fail(describe(r, *s) + ": matcher/tree leaf divergence");
    }
}

void check_qbf_instance(Checker& ck, const QbfPrime& q) {
    MatchConfig cfg;
    bool truth = eval_qbf(q);
    ReductionOutput neg = reduce_qbf_neg(q);
    ReductionOutput pos = reduce_qbf_posonly(q);
    bool via_neg = match_at(cfg, neg.regex, neg.target_text(), 0).is_success();
    bool via_pos = match_at(cfg, pos.regex, pos.target_text(), 0).is_success();
    ck.expect(via_neg == truth, [&] {
        return "neg reduction of " + write_qbfp(q) + "decides " + std::to_string(via_neg);
    });
    ck.expect(via_pos == truth, [&] {
        return "posonly reduction of " + write_qbfp(q) + "decides " + std::to_string(via_pos);
    });
}

QbfPrime fixture_qa() {
    QbfPrime q;
    q.matrix.var_count = 3;
    q.matrix.clauses = {{{1, false}, {2, false}}, {{2, true}, {3, false}}};
    q.prefix = {Quantifier::NotExists, Quantifier::Exists, Quantifier::NotExists};
    q.matrix_negated = false;
    return q;
}

QbfPrime fixture_qb() {
    QbfPrime q;
    q.matrix.var_count = 2;
    q.matrix.clauses = {{{1, false}, {2, false}}};
    q.prefix = {Quantifier::Exists, Quantifier::NotExists};
    q.matrix_negated = false;
    return q;
}

void criterion_qbf_end_to_end(Checker& ck, uint64_t seed, size_t random_count) {
    MatchConfig cfg;
    // Hand-pinned fixtures that decide false.
    for (const QbfPrime& q : {fixture_qa(), fixture_qb()}) {
        ck.expect(!eval_qbf(q), [] { return std::string("fixture oracle expected false"); });
        ReductionOutput neg = reduce_qbf_neg(q);
        ReductionOutput pos = reduce_qbf_posonly(q);
        ck.expect(!match_at(cfg, neg.regex, neg.target_text(), 0).is_success(),
                  [] { return std::string("fixture neg reduction decided true"); });
        ck.expect(!match_at(cfg, pos.regex, pos.target_text(), 0).is_success(),
                  [] { return std::string("fixture posonly reduction decided true"); });
    }
    // Exhaustive sweep at n <= 2, m <= 2.
    for (uint32_t n = 1; n <= 2; ++n) {
        std::vector<Clause> pool = testgen::all_clauses(n, std::min<uint32_t>(2, n));
        std::vector<CnfFormula> matrices;
        for (const Clause& c : pool) matrices.push_back(CnfFormula{n, {c}});
        for (const Clause& c1 : pool)
            for (const Clause& c2 : pool) matrices.push_back(CnfFormula{n, {c1, c2}});
        for (const CnfFormula& f : matrices)
            for (uint32_t prefix_bits = 0; prefix_bits < (1u << n); ++prefix_bits)
                for (int negated = 0; negated <= 1; ++negated) {
                    QbfPrime q;
                    q.matrix = f;
                    q.matrix_negated = negated == 1;
                    for (uint32_t i = 0; i < n; ++i)
                        q.prefix.push_back((prefix_bits >> i) & 1 ? Quantifier::NotExists
                                                                  : Quantifier::Exists);
                    check_qbf_instance(ck, q);
                }
    }
    std::mt19937_64 rng(seed);
    CnfGenOptions opts{4, 4, 3};
    for (size_t i = 0; i < random_count; ++i) check_qbf_instance(ck, testgen::random_qbf(rng, opts));
}

void criterion_structural_purity(Checker& ck, uint64_t seed) {
    std::mt19937_64 rng(seed);
    CnfGenOptions opts{4, 4, 3};
    for (size_t i = 0; i < 200; ++i) {
        QbfPrime q = testgen::random_qbf(rng, opts);
        ReductionOutput neg = reduce_qbf_neg(q);
        ReductionOutput pos = reduce_qbf_posonly(q);
        ReductionOutput lex = reduce_lexsat(q.matrix);
        ck.expect(!pos.regex->has_negative_lookaround(),
                  [] { return std::string("posonly output has a negative lookaround"); });
        ck.expect(!lex.regex->has_lookaround(),
                  [] { return std::string("lexsat output has a lookaround"); });
        for (const ReductionOutput* out : {&neg, &pos, &lex})
            ck.expect(validate(out->regex).ok(),
                      [&] { return "reduction output fails validate: " + emit_regex(out->regex); });
        // Output stays linear in the instance size.
        uint64_t weight = q.matrix.var_count + q.matrix.clauses.size() + 1;
        for (const Clause& c : q.matrix.clauses) weight += c.size();
        for (const ReductionOutput* out : {&neg, &pos, &lex})
            ck.expect(ast_node_count(out->regex) <= 32 * weight, [&] {
                return "reduction output superlinear: " + std::to_string(ast_node_count(out->regex)) +
                       " nodes for weight " + std::to_string(weight);
            });
    }
}

void criterion_atomicity(Checker& ck, uint64_t seed, size_t count) {
    MatchConfig cfg;
    RegexGenOptions opts;
    opts.letters = {U'x', U';', U'z'};
    opts.max_size = 14;
    RegexGen gen(seed, opts);
    size_t done = 0;
    while (done < count) {
        RegexPtr r = gen.next();
        GroupId g = static_cast<GroupId>(r->def_groups().size()) + 1;
        RegexPtr gadget = negation_gadget(r, g);
        for (uint32_t pairs = 0; pairs <= 3; ++pairs) {
            std::string str;
            for (uint32_t k = 0; k < pairs; ++k) str += "x;";
            str += 'z';
            TextPtr s = make_text(str);
            RunStats stats;
            bool plain = match_at(cfg, r, s, 0, &stats).is_success();
            if (stats.steps > kStepCap) continue;
            bool gadgeted = match_at(cfg, gadget, s, 0).is_success();
            ck.expect(gadgeted == !plain, [&] {
                return describe(r, *s) + ": gadget " + std::to_string(gadgeted) +
                       ", direct " + std::to_string(plain);
            });
        }
        ++done;
    }
}

GroupMap well_formed_map(uint32_t n, uint32_t defined_bits) {
    GroupMap gm;
    for (uint32_t i = 1; i <= n; ++i)
        if ((defined_bits >> (i - 1)) & 1) {
            size_t slot = 2 * (static_cast<size_t>(i) - 1);
            gm = gm_close(gm_open(std::move(gm), i, slot), i, slot + 1);
        }
    return gm;
}

void check_lexsat_instance(Checker& ck, const CnfFormula& f) {
    MatchConfig cfg;
    ReductionOutput out = reduce_lexsat(f);
    auto rec = search(cfg, out.regex, out.target_text());
    auto expected = brute_lexsat(f);
    if (rec.has_value() != expected.has_value()) {
        ck.fail("lexsat " + write_dimacs_cnf(f) + ": sat/unsat divergence");
        return;
    }
    if (!rec) return;
    Assignment got = decode_assignment(rec->groups, f.var_count);
    ck.expect(got == *expected, [&] {
        return "lexsat " + write_dimacs_cnf(f) + ": decoded " + got.to_string() + " != " +
               expected->to_string();
    });
    ck.expect(well_formed(rec->groups, f.var_count),
              [&] { return "lexsat " + write_dimacs_cnf(f) + ": match groups not well-formed"; });
    // Dominance: no lexicographically greater well-formed map satisfies f.
    for (uint32_t bits = 0; bits < (1u << f.var_count); ++bits) {
        GroupMap gm2 = well_formed_map(f.var_count, bits);
        if (lex_gt(gm2, rec->groups, f.var_count))
            ck.expect(!eval_cnf(decode_assignment(gm2, f.var_count), f), [&] {
                return "lexsat " + write_dimacs_cnf(f) + ": dominated map satisfies formula";
            });
    }
}

void criterion_lexsat_end_to_end(Checker& ck, uint64_t seed, size_t random_count) {
    for (uint32_t n = 1; n <= 3; ++n) {
        std::vector<Clause> pool = testgen::all_clauses(n, 3);
        for (const Clause& c : pool) check_lexsat_instance(ck, CnfFormula{n, {c}});
        for (const Clause& c1 : pool)
            for (const Clause& c2 : pool) check_lexsat_instance(ck, CnfFormula{n, {c1, c2}});
    }
    std::mt19937_64 rng(seed);
    CnfGenOptions opts{4, 4, 3};
    for (size_t i = 0; i < random_count; ++i) {
        CnfFormula f = testgen::random_cnf(rng, opts);
        f.var_count = 4;
        check_lexsat_instance(ck, f);
    }
}

void criterion_optp(Checker& ck, uint64_t seed, size_t minimize_count, size_t replay_count) {
    MatchConfig cfg;
    RegexGenOptions small;
    small.max_size = 8;
    small.lookarounds = false;
    small.letters = {U'a', U'b'};
    RegexGen small_gen(seed, small);
    size_t done = 0;
    while (done < minimize_count) {
        RegexPtr r = small_gen.next();
        TextPtr s = make_text(small_gen.next_string(4));
        uint64_t f = fuel(actions_of(r), input_at(s, 0), Direction::Forward);
        if (f > 16) continue;
        ++done;
        MatchOutcome direct = match_at(cfg, r, s, 0);
        MatchOutcome minimized = minimize_over_choices(cfg, r, s);
        bool same = direct.kind == minimized.kind &&
                    (!direct.is_success() || leaf_equal(*direct.leaf, *minimized.leaf));
        ck.expect(same, [&] { return describe(r, *s) + ": minimize != match_at"; });
        ck.expect(minimized.kind != OutcomeKind::OutOfFuel,
                  [&] { return describe(r, *s) + ": minimize saw OutOfFuel"; });
    }
    RegexGenOptions wider;
    wider.lookarounds = false;
    RegexGen wide_gen(seed + 1, wider);
    size_t replays = 0;
    while (replays < replay_count) {
        RegexPtr r = wide_gen.next();
        TextPtr s = make_text(replays % 2 ? wide_gen.next_string(12)
                                          : wide_gen.sample_for(r, 12));
        ActionList l = actions_of(r);
        Input inp = input_at(s, 0);
        uint64_t f = fuel(l, inp, Direction::Forward);
        RunStats stats;
        std::vector<Choice> trail;
        MatchOutcome out = compute_result(cfg, l, inp, GroupMap::empty(), Direction::Forward,
                                          f + 1, &stats, nullptr, &trail);
        if (stats.steps > kStepCap) continue;
        if (!out.is_success()) continue;
        ++replays;
        std::vector<Choice> choices = extract_choices(trail, true, f);
        MatchOutcome replayed =
            optp_result(cfg, l, inp, GroupMap::empty(), Direction::Forward, choices);
        ck.expect(replayed.kind != OutcomeKind::OutOfFuel,
                  [&] { return describe(r, *s) + ": replay ran out of choices"; });
        ck.expect(replayed.is_success() && leaf_equal(*replayed.leaf, *out.leaf),
                  [&] { return describe(r, *s) + ": replay leaf differs"; });
    }
}

// Direct recursive evaluation of a prenex ∀/∃ CNF formula, used as the
// conversion oracle.
bool eval_pcnf(const PcnfQbf& p, size_t i, std::map<uint32_t, bool>& env) {
    if (i == p.prefix.size()) {
        for (const Clause& c : p.matrix.clauses) {
            bool any = false;
            for (const Literal& l : c)
                if (env.at(l.var) != l.negated) {
                    any = true;
                    break;
                }
            if (!any) return false;
        }
        return true;
    }
    auto [universal, var] = p.prefix[i];
    env[var] = true;
    bool with_true = eval_pcnf(p, i + 1, env);
    env[var] = false;
    bool with_false = eval_pcnf(p, i + 1, env);
    return universal ? (with_true && with_false) : (with_true || with_false);
}

void criterion_qdimacs(Checker& ck, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](uint32_t lo, uint32_t hi) {
        return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
    };
    for (uint32_t n = 1; n <= 4; ++n) {
        for (uint32_t prefix_bits = 0; prefix_bits < (1u << n); ++prefix_bits) {
            for (int variant = 0; variant < 3; ++variant) {
                PcnfQbf p;
                std::vector<uint32_t> order(n);
                for (uint32_t i = 0; i < n; ++i) order[i] = i + 1;
                if (variant == 2) std::shuffle(order.begin(), order.end(), rng);
                for (uint32_t i = 0; i < n; ++i)
                    p.prefix.push_back({((prefix_bits >> i) & 1) == 1, order[i]});
                p.matrix.var_count = n;
                uint32_t m = pick(1, 3);
                for (uint32_t j = 0; j < m; ++j) {
                    Clause c;
                    uint32_t width = pick(1, std::min(3u, n));
                    std::vector<uint32_t> vars(order);
                    std::shuffle(vars.begin(), vars.end(), rng);
                    for (uint32_t k = 0; k < width; ++k)
                        c.push_back(Literal{vars[k], pick(0, 1) == 1});
                    p.matrix.clauses.push_back(std::move(c));
                }
                // Through the text format to exercise the parser too.
                std::ostringstream text;
                text << "p cnf " << n << ' ' << m << '\n';
                for (auto [universal, var] : p.prefix)
                    text << (universal ? 'a' : 'e') << ' ' << var << " 0\n";
                for (const Clause& c : p.matrix.clauses) {
                    for (const Literal& l : c) text << (l.negated ? "-" : "") << l.var << ' ';
                    text << "0\n";
                }
                QbfPrime q = qdimacs_to_qbfprime(text.str());
                std::map<uint32_t, bool> env;
                bool direct = eval_pcnf(p, 0, env);
                bool converted = eval_qbf(q);
                ck.expect(direct == converted,
                          [&] { return "qdimacs divergence on:\n" + text.str(); });
            }
        }
    }
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& log) {
    std::vector<CriterionResult> results;
    auto run = [&](int id, const std::string& name, const std::function<void(Checker&)>& body) {
        Checker ck;
        auto start = std::chrono::steady_clock::now();
        body(ck);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CriterionResult res{id, name, ck.failures == 0, ck.detail.str()};
        std::ostringstream line;
        line << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
        if (!res.pass) line << " (" << ck.failures << " violations)";
        line.setf(std::ios::fixed);
        line.precision(1);
        line << " [" << secs << "s]";
        log << line.str() << "\n";
        if (!res.pass) log << res.detail;
        results.push_back(std::move(res));
    };

    log << "building the shared random suite and instrumented pass...\n";
    uint64_t skipped_suite = 0;
    RegexGenOptions suite_opts;  // min-0, lookarounds on, size <= 25, alphabet 3
    std::vector<SuiteInstance> suite = make_suite(20250801, 10000, suite_opts, 12, &skipped_suite);
    InstrumentedCounters counters;
    run_instrumented_suite(suite, counters);

    run(1, "(a|ab)c walkthrough fixture (match + exact tree)", criterion_walkthrough);
    run(2, "lookaround and backreference fixtures", criterion_lookaround_fixtures);
    run(3, "fuel worked example 10/9/8/6", criterion_fuel_worked_example);
    run(4, "fuel strict decrease on " + std::to_string(counters.runs) + " random runs (" +
            std::to_string(skipped_suite) + " over work cap redrawn)",
        [&](Checker& ck) {
            ck.expect(counters.decrease_violations == 0, [&] {
                return std::to_string(counters.decrease_violations) + " non-decreasing calls";
            });
        });
    run(5, "termination: no OutOfFuel, depth <= initial fuel", [&](Checker& ck) {
        ck.expect(counters.out_of_fuel == 0,
                  [&] { return std::to_string(counters.out_of_fuel) + " OutOfFuel runs"; });
        ck.expect(counters.depth_violations == 0,
                  [&] { return std::to_string(counters.depth_violations) + " depth violations"; });
    });
    run(6, "polynomial fuel bound (1+|s|)(E+E^2)",
        [&](Checker& ck) { criterion_poly_bound(ck, suite, 20250806, 10000); });
    run(7, "action-list size bound", [&](Checker& ck) {
        ck.expect(counters.size_bound_violations == 0, [&] {
            return std::to_string(counters.size_bound_violations) + " size-bound violations";
        });
    });
    run(8, "reachable-state invariants 1-3 over " + std::to_string(counters.states) + " states",
        [&](Checker& ck) {
            ck.expect(counters.invariant_violations == 0, [&] {
                return std::to_string(counters.invariant_violations) + " invariant violations";
            });
            ck.expect(counters.checker_disagreements == 0, [&] {
                return std::to_string(counters.checker_disagreements) +
                       " checker disagreements";
            });
        });
    uint64_t skipped_tree = 0;
    run(9, "tree-vs-matcher oracle on 10000 instances", [&](Checker& ck) {
        criterion_tree_oracle(ck, 20250809, 10000, &skipped_tree);
        if (skipped_tree) ck.detail << "  (" << skipped_tree << " over budget redrawn)\n";
    });
    run(10, "QBF end-to-end (both reductions vs oracle)",
        [&](Checker& ck) { criterion_qbf_end_to_end(ck, 20250810, 500); });
    run(11, "structural purity and validity of reduction outputs",
        [&](Checker& ck) { criterion_structural_purity(ck, 20250811); });
    run(12, "atomicity gadget on 1000 random regexes",
        [&](Checker& ck) { criterion_atomicity(ck, 20250812, 1000); });
    run(13, "LexSAT end-to-end with dominance",
        [&](Checker& ck) { criterion_lexsat_end_to_end(ck, 20250813, 500); });
    run(14, "OptP characterization (minimize, replay, no OutOfFuel)",
        [&](Checker& ck) { criterion_optp(ck, 20250814, 200, 1000); });
    run(15, "QDIMACS conversion vs direct PCNF evaluation",
        [&](Checker& ck) { criterion_qdimacs(ck, 20250815); });
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace bregex::acceptance
