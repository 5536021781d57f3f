#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bregex/acceptance.hpp"
#include "bregex/formats.hpp"
#include "bregex/fuel.hpp"
#include "bregex/matcher.hpp"
#include "bregex/optp.hpp"
#include "bregex/oracles.hpp"
#include "bregex/parser.hpp"
#include "bregex/reductions.hpp"
#include "bregex/tree.hpp"

namespace {

using namespace bregex;
using nlohmann::json;

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string decode_hex(const std::string& hex) {
    if (hex.size() % 2) throw std::runtime_error("--hex expects an even number of digits");
    std::string out;
    for (size_t i = 0; i < hex.size(); i += 2)
        out += static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16));
    return out;
}

json groups_json(const GroupMap& gm) {
    json obj = json::object();
    for (const auto& [g, entry] : gm.entries())
        if (!entry.open) obj[std::to_string(g)] = {entry.start, entry.end};
    return obj;
}

void print_groups(const GroupMap& gm) {
    for (const auto& [g, entry] : gm.entries())
        if (!entry.open)
            std::cout << g << ":" << entry.start << "-" << entry.end << "\n";
}

struct MatchArgs {
    std::string regex;
    std::string input;
    std::string hex_input;
    int64_t at = -1;
    bool trace = false;
    bool with_json = false;
};

int run_match(const MatchArgs& args) {
    MatchConfig cfg;
    RegexPtr r = parse_regex(args.regex);
    TextPtr s = make_text(args.hex_input.empty() ? args.input : decode_hex(args.hex_input));
    if (args.at < -1 || args.at > static_cast<int64_t>(s->size())) {
        std::cerr << "position " << args.at << " is outside the input\n";
        return kExitUsage;
    }

    RunStats stats;
    uint64_t invariant_violations = 0;
    EngineHooks hooks;
    hooks.on_enter = [&](const ActionList& l, const Input& inp, Direction d, uint64_t left) {
        if (!check_reachable_invariants(l, inp, d).ok()) ++invariant_violations;
        if (args.trace)
            std::cerr << "fuel=" << fuel(l, inp, d) << " left=" << left << " "
                      << render_action_list(l) << " @" << inp.pos << "\n";
    };

    std::optional<MatchRecord> rec;
    if (args.at >= 0) {
        MatchOutcome out = match_at(cfg, r, s, static_cast<size_t>(args.at), &stats, &hooks);
        if (out.is_success())
            rec = MatchRecord{static_cast<size_t>(args.at), out.leaf->final.pos,
                              out.leaf->groups};
    } else {
        for (size_t pos = 0; pos <= s->size() && !rec; ++pos) {
            RunStats attempt;
            MatchOutcome out = match_at(cfg, r, s, pos, &attempt, &hooks);
            stats.initial_fuel = std::max(stats.initial_fuel, attempt.initial_fuel);
            stats.steps += attempt.steps;
            stats.max_depth = std::max(stats.max_depth, attempt.max_depth);
            stats.peak_action_list_size =
                std::max(stats.peak_action_list_size, attempt.peak_action_list_size);
            if (out.is_success())
                rec = MatchRecord{pos, out.leaf->final.pos, out.leaf->groups};
        }
    }

    if (args.with_json) {
        json line = {{"outcome", rec ? "success" : "nomatch"},
                     {"end", rec ? json(rec->end) : json(nullptr)},
                     {"groups", rec ? groups_json(rec->groups) : json::object()},
                     {"fuel", stats.initial_fuel},
                     {"depth", stats.max_depth},
                     {"size_peak", stats.peak_action_list_size},
                     {"invariant_violations", invariant_violations}};
        if (rec) line["start"] = rec->start;
        std::cout << line.dump() << "\n";
    } else if (rec) {
        std::cout << "match " << rec->start << "-" << rec->end << "\n";
        print_groups(rec->groups);
    } else {
        std::cout << "no match\n";
    }
    return rec ? kExitMatch : kExitNoMatch;
}

int run_tree(const std::string& regex, const std::string& input, int64_t at,
             uint64_t budget) {
    MatchConfig cfg;
    RegexPtr r = parse_regex(regex);
    TextPtr s = make_text(input);
    size_t pos = at < 0 ? 0 : static_cast<size_t>(at);
    TreeResult tr = build_tree_for(cfg, r, s, pos, budget);
    if (tr.status == TreeStatus::BudgetExceeded) {
        std::cerr << "tree exceeds " << budget << " nodes; raise --budget\n";
        return kExitUsage;
    }
    if (!tr.ok()) {
        std::cerr << "tree construction ran out of fuel\n";
        return kExitUsage;
    }
    std::cout << render_tree(tr.tree);
    return kExitMatch;
}

int run_fuel(const std::string& regex, const std::string& input, int64_t at, bool trace,
             bool with_json) {
    MatchConfig cfg;
    RegexPtr r = parse_regex(regex);
    TextPtr s = make_text(input);
    size_t pos = at < 0 ? 0 : static_cast<size_t>(at);
    ActionList l = actions_of(r);
    Input inp = input_at(s, pos);
    FuelBreakdown b = fuel_breakdown(l, inp, Direction::Forward);
    if (with_json) {
        json middles = json::array();
        for (uint64_t m : b.middles) middles.push_back(m);
        std::cout << json{{"chunks", b.split.chunks.size()},
                          {"prog", b.prog},
                          {"first", b.first},
                          {"middles", middles},
                          {"check_bonus", b.check_bonus},
                          {"last", b.last},
                          {"lk", b.lk},
                          {"total", b.total}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "chunks: " << b.split.chunks.size() << "\n";
        for (size_t i = 0; i < b.split.chunks.size(); ++i) {
            std::cout << "  chunk " << i << ":";
            for (const Action& a : b.split.chunks[i])
                std::cout << " " << render_action(a) << " |" << a.size() << "|";
            std::cout << "\n";
        }
        std::cout << "checks:";
        for (const Input& c : b.split.check_inputs) std::cout << " @" << c.pos;
        std::cout << "\nprog: " << b.prog << "\nfirst: " << b.first << "\nmiddles:";
        for (uint64_t m : b.middles) std::cout << " " << m;
        std::cout << "\ncheck_bonus: " << b.check_bonus << "\nlast: " << b.last
                  << "\nlk: " << b.lk << "\ntotal: " << b.total << "\n";
    }
    if (trace) {
        EngineHooks hooks;
        hooks.on_enter = [&](const ActionList& acts, const Input& in, Direction d, uint64_t) {
            std::cout << "fuel=" << fuel(acts, in, d) << " " << render_action_list(acts)
                      << " @" << in.pos << "\n";
        };
        compute_result(cfg, l, inp, GroupMap::empty(), Direction::Forward, b.total + 1,
                       nullptr, &hooks);
    }
    return kExitMatch;
}

int run_optp(const std::string& regex, const std::string& input, bool enumerate,
             const std::string& choices_text) {
    MatchConfig cfg;
    RegexPtr r = parse_regex(regex);
    TextPtr s = make_text(input);
    if (enumerate) {
        MatchOutcome out = minimize_over_choices(cfg, r, s);
        if (out.is_success()) {
            std::cout << "success end=" << out.leaf->final.pos << "\n";
            print_groups(out.leaf->groups);
            return kExitMatch;
        }
        std::cout << "nomatch\n";
        return kExitNoMatch;
    }
    if (choices_text.empty()) {
        std::cerr << "optp needs --enumerate or --choices\n";
        return kExitUsage;
    }
    auto choices = parse_choices(choices_text);
    if (!choices) {
        std::cerr << "bad --choices; expected e.g. L,R,L\n";
        return kExitUsage;
    }
    RankedOutcome ranked = optp_algo(cfg, r, s, *choices);
    std::cout << (ranked.outcome.kind == OutcomeKind::Success    ? "success"
                  : ranked.outcome.kind == OutcomeKind::NoMatch ? "nomatch"
                                                                : "outoffuel")
              << " key=" << render_choices(ranked.key_choices) << " rank=" << ranked.rank
              << "\n";
    if (ranked.outcome.is_success()) {
        std::cout << "end=" << ranked.outcome.leaf->final.pos << "\n";
        print_groups(ranked.outcome.leaf->groups);
        return kExitMatch;
    }
    return kExitNoMatch;
}

int run_solve_qbf(const std::string& file, const std::string& reduction, bool emit_regex_flag,
                  const std::string& emit_js_path) {
    MatchConfig cfg;
    QbfPrime q = parse_qbfp(read_file(file));
    ReductionOutput out =
        reduction == "pos" ? reduce_qbf_posonly(q) : reduce_qbf_neg(q);
    if (emit_regex_flag)
        std::cout << "regex: " << emit_regex(out.regex) << "\ntarget: " << out.target << "\n";
    if (!emit_js_path.empty()) {
        std::ofstream js(emit_js_path);
        js << emit_js_snippet(out);
    }
    bool truth = match_at(cfg, out.regex, out.target_text(), 0).is_success();
    std::cout << (truth ? "true" : "false") << "\n";
    return truth ? kExitMatch : kExitNoMatch;
}

int run_solve_lexsat(const std::string& file, bool emit_regex_flag,
                     const std::string& emit_js_path) {
    MatchConfig cfg;
    CnfFormula f = parse_dimacs_cnf(read_file(file));
    ReductionOutput out = reduce_lexsat(f);
    if (emit_regex_flag)
        std::cout << "regex: " << emit_regex(out.regex) << "\ntarget: " << out.target << "\n";
    if (!emit_js_path.empty()) {
        std::ofstream js(emit_js_path);
        js << emit_js_snippet(out);
    }
    auto rec = search(cfg, out.regex, out.target_text());
    if (!rec) {
        std::cout << "unsat\n";
        return kExitNoMatch;
    }
    std::cout << "assignment: " << decode_assignment(rec->groups, f.var_count).to_string()
              << "\n";
    return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Backtracking regex semantics, fuel bounds, and logic reductions"};
    app.require_subcommand(1);

    MatchArgs match_args;
    CLI::App* match_cmd = app.add_subcommand("match", "Match a regex against a string");
    match_cmd->add_option("--regex", match_args.regex, "Pattern")->required();
    match_cmd->add_option("--input", match_args.input, "Subject string");
    match_cmd->add_option("--hex", match_args.hex_input, "Subject string as hex bytes");
    match_cmd->add_option("--at", match_args.at, "Match only at this position");
    match_cmd->add_flag("--trace", match_args.trace, "Log every visited state to stderr");
    match_cmd->add_flag("--json", match_args.with_json, "Line-delimited JSON output");

    std::string tree_regex, tree_input;
    int64_t tree_at = -1;
    uint64_t tree_budget = 10'000'000;
    CLI::App* tree_cmd = app.add_subcommand("tree", "Print the full backtracking tree");
    tree_cmd->add_option("--regex", tree_regex)->required();
    tree_cmd->add_option("--input", tree_input);
    tree_cmd->add_option("--at", tree_at);
    tree_cmd->add_option("--budget", tree_budget, "Node cap");

    std::string fuel_regex, fuel_input;
    int64_t fuel_at = -1;
    bool fuel_trace = false, fuel_json = false;
    CLI::App* fuel_cmd = app.add_subcommand("fuel", "Show the fuel breakdown");
    fuel_cmd->add_option("--regex", fuel_regex)->required();
    fuel_cmd->add_option("--input", fuel_input);
    fuel_cmd->add_option("--at", fuel_at);
    fuel_cmd->add_flag("--trace", fuel_trace, "Print per-state fuel during a match run");
    fuel_cmd->add_flag("--json", fuel_json);

    std::string optp_regex, optp_input, optp_choices;
    bool optp_enumerate = false;
    CLI::App* optp_cmd = app.add_subcommand("optp", "Choice-list matcher");
    optp_cmd->add_option("--regex", optp_regex)->required();
    optp_cmd->add_option("--input", optp_input);
    optp_cmd->add_flag("--enumerate", optp_enumerate, "Minimize over all choice lists");
    optp_cmd->add_option("--choices", optp_choices, "Comma-separated L/R list");

    std::string qbf_file, qbf_reduction = "neg", qbf_js;
    bool qbf_emit = false;
    CLI::App* qbf_cmd = app.add_subcommand("solve-qbf", "Decide a QBF' instance via regexes");
    qbf_cmd->add_option("file", qbf_file)->required();
    qbf_cmd->add_option("--reduction", qbf_reduction)
        ->check(CLI::IsMember({"neg", "pos"}));
    qbf_cmd->add_flag("--emit-regex", qbf_emit);
    qbf_cmd->add_option("--emit-js", qbf_js, "Write a JavaScript cross-check snippet");

    std::string lexsat_file, lexsat_js;
    bool lexsat_emit = false;
    CLI::App* lexsat_cmd =
        app.add_subcommand("solve-lexsat", "Lexicographically maximum satisfying assignment");
    lexsat_cmd->add_option("file", lexsat_file)->required();
    lexsat_cmd->add_flag("--emit-regex", lexsat_emit);
    lexsat_cmd->add_option("--emit-js", lexsat_js);

    std::string oq_file;
    CLI::App* oq_cmd = app.add_subcommand("oracle-qbf", "Brute-force QBF' evaluation");
    oq_cmd->add_option("file", oq_file)->required();

    std::string ol_file;
    CLI::App* ol_cmd = app.add_subcommand("oracle-lexsat", "Brute-force lexicographic SAT");
    ol_cmd->add_option("file", ol_file)->required();

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (match_cmd->parsed()) return run_match(match_args);
        if (tree_cmd->parsed()) return run_tree(tree_regex, tree_input, tree_at, tree_budget);
        if (fuel_cmd->parsed())
            return run_fuel(fuel_regex, fuel_input, fuel_at, fuel_trace, fuel_json);
        if (optp_cmd->parsed())
            return run_optp(optp_regex, optp_input, optp_enumerate, optp_choices);
        if (qbf_cmd->parsed())
            return run_solve_qbf(qbf_file, qbf_reduction, qbf_emit, qbf_js);
        if (lexsat_cmd->parsed()) return run_solve_lexsat(lexsat_file, lexsat_emit, lexsat_js);
        if (oq_cmd->parsed()) {
            bool truth = eval_qbf(parse_qbfp(read_file(oq_file)));
            std::cout << (truth ? "true" : "false") << "\n";
            return truth ? kExitMatch : kExitNoMatch;
        }
        if (ol_cmd->parsed()) {
            auto best = brute_lexsat(parse_dimacs_cnf(read_file(ol_file)));
            if (!best) {
                std::cout << "unsat\n";
                return kExitNoMatch;
            }
            std::cout << "assignment: " << best->to_string() << "\n";
            return kExitMatch;
        }
        if (selftest_cmd->parsed()) {
            auto results = acceptance::run_all(std::cout);
            return acceptance::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
