#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bregex/formats.hpp"
#include "bregex/fuel.hpp"
#include "bregex/matcher.hpp"
#include "bregex/optp.hpp"
#include "bregex/oracles.hpp"
#include "bregex/parser.hpp"
#include "bregex/reductions.hpp"
#include "bregex/tree.hpp"

namespace py = pybind11;
using namespace bregex;

namespace {

py::dict groups_dict(const GroupMap& gm) {
    py::dict d;
    for (const auto& [g, entry] : gm.entries())
        if (!entry.open) d[py::int_(g)] = py::make_tuple(entry.start, entry.end);
    return d;
}

py::object leaf_dict(const MatchOutcome& out, std::optional<size_t> start) {
    if (!out.is_success()) return py::none();
    py::dict d;
    if (start) d["start"] = *start;
    d["end"] = out.leaf->final.pos;
    d["groups"] = groups_dict(out.leaf->groups);
    return d;
}

CnfFormula cnf_from(uint32_t n, const std::vector<std::vector<int64_t>>& clauses) {
    CnfFormula f;
    f.var_count = n;
    for (const auto& c : clauses) {
        Clause cl;
        for (int64_t v : c) {
            if (v == 0) throw std::invalid_argument("literal 0 is not allowed");
            cl.push_back(Literal{static_cast<uint32_t>(v < 0 ? -v : v), v < 0});
        }
        f.clauses.push_back(std::move(cl));
    }
    if (!f.valid()) throw std::invalid_argument("invalid CNF instance");
    return f;
}

QbfPrime qbf_from(const std::vector<std::string>& prefix, bool negated,
                  const std::vector<std::vector<int64_t>>& clauses) {
    QbfPrime q;
    q.matrix = cnf_from(static_cast<uint32_t>(prefix.size()), clauses);
    q.matrix_negated = negated;
    for (const std::string& p : prefix) {
        if (p == "E")
            q.prefix.push_back(Quantifier::Exists);
        else if (p == "NE")
            q.prefix.push_back(Quantifier::NotExists);
        else
            throw std::invalid_argument("prefix entries must be 'E' or 'NE'");
    }
    if (!q.valid()) throw std::invalid_argument("invalid QBF' instance");
    return q;
}

std::vector<bool> assignment_list(const Assignment& a) {
    std::vector<bool> out;
    for (uint32_t v = 1; v <= a.var_count(); ++v) out.push_back(a.get(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_bregex, m) {
    m.doc() = "Backtracking JavaScript-regex semantics, fuel bounds, and logic reductions";

    struct RegexHandle {
        RegexPtr ptr;
    };
    py::class_<RegexHandle>(m, "Regex")
        .def_property_readonly("size", [](const RegexHandle& h) { return h.ptr->size(); })
        .def_property_readonly("expanded_size",
                               [](const RegexHandle& h) { return h.ptr->expanded_size(); })
        .def_property_readonly(
            "group_count", [](const RegexHandle& h) { return h.ptr->def_groups().size(); })
        .def_property_readonly(
            "has_lookaround", [](const RegexHandle& h) { return h.ptr->has_lookaround(); })
        .def_property_readonly(
            "has_negative_lookaround",
            [](const RegexHandle& h) { return h.ptr->has_negative_lookaround(); })
        .def_property_readonly(
            "has_lower_bounded_quantifier",
            [](const RegexHandle& h) { return h.ptr->has_lower_bounded_quantifier(); })
        .def("__str__", [](const RegexHandle& h) { return emit_regex(h.ptr); });

    m.def(
        "parse", [](const std::string& pattern) { return RegexHandle{parse_regex(pattern)}; },
        py::arg("pattern"), "Parse a pattern; groups are numbered left to right.");
    m.def(
        "emit", [](const RegexHandle& h) { return emit_regex(h.ptr); }, py::arg("regex"));
    m.def(
        "validate",
        [](const RegexHandle& h) {
            std::vector<std::string> out;
            for (const Violation& v : validate(h.ptr).violations) out.push_back(v.detail);
            return out;
        },
        py::arg("regex"));

    m.def(
        "match_at",
        [](const std::string& pattern, const std::string& subject, size_t pos) {
            MatchConfig cfg;
            RegexPtr r = parse_regex(pattern);
            TextPtr s = make_text(subject);
            if (pos > s->size()) throw std::out_of_range("position past end of input");
            return leaf_dict(match_at(cfg, r, s, pos), pos);
        },
        py::arg("pattern"), py::arg("subject"), py::arg("pos") = 0,
        "Match at one position; returns {'start','end','groups'} or None.");

    m.def(
        "search",
        [](const std::string& pattern, const std::string& subject) -> py::object {
            MatchConfig cfg;
            auto rec = search(cfg, parse_regex(pattern), make_text(subject));
            if (!rec) return py::none();
            py::dict d;
            d["start"] = rec->start;
            d["end"] = rec->end;
            d["groups"] = groups_dict(rec->groups);
            return d;
        },
        py::arg("pattern"), py::arg("subject"),
        "First matching start position, left to right.");

    m.def(
        "fuel",
        [](const std::string& pattern, const std::string& subject, size_t pos) {
            return fuel(actions_of(parse_regex(pattern)), input_at(make_text(subject), pos),
                        Direction::Forward);
        },
        py::arg("pattern"), py::arg("subject"), py::arg("pos") = 0,
        "Polynomial fuel of the initial matcher state.");

    m.def(
        "fuel_breakdown",
        [](const std::string& pattern, const std::string& subject, size_t pos) {
            FuelBreakdown b = fuel_breakdown(actions_of(parse_regex(pattern)),
                                             input_at(make_text(subject), pos),
                                             Direction::Forward);
            py::dict d;
            d["chunks"] = b.split.chunks.size();
            d["prog"] = b.prog;
            d["first"] = b.first;
            d["middles"] = b.middles;
            d["check_bonus"] = b.check_bonus;
            d["last"] = b.last;
            d["lk"] = b.lk;
            d["total"] = b.total;
            return d;
        },
        py::arg("pattern"), py::arg("subject"), py::arg("pos") = 0);

    m.def(
        "match_stats",
        [](const std::string& pattern, const std::string& subject, size_t pos) {
            MatchConfig cfg;
            RunStats stats;
            MatchOutcome out = match_at(cfg, parse_regex(pattern), make_text(subject), pos,
                                        &stats);
            py::dict d;
            d["matched"] = out.is_success();
            d["initial_fuel"] = stats.initial_fuel;
            d["steps"] = stats.steps;
            d["max_depth"] = stats.max_depth;
            d["peak_action_list_size"] = stats.peak_action_list_size;
            return d;
        },
        py::arg("pattern"), py::arg("subject"), py::arg("pos") = 0,
        "Run the fuel-bounded matcher and report its instrumentation.");

    m.def(
        "tree",
        [](const std::string& pattern, const std::string& subject, size_t pos,
           uint64_t budget) {
            MatchConfig cfg;
            TreeResult tr = build_tree_for(cfg, parse_regex(pattern), make_text(subject), pos,
                                           budget);
            if (tr.status == TreeStatus::BudgetExceeded)
                throw std::runtime_error("tree exceeds the node budget");
            if (!tr.ok()) throw std::runtime_error("tree construction ran out of fuel");
            return render_tree(tr.tree);
        },
        py::arg("pattern"), py::arg("subject"), py::arg("pos") = 0,
        py::arg("budget") = uint64_t{10'000'000},
        "Render the full backtracking tree, one node per line.");

    m.def(
        "minimize_over_choices",
        [](const std::string& pattern, const std::string& subject) {
            MatchConfig cfg;
            return leaf_dict(minimize_over_choices(cfg, parse_regex(pattern),
                                                   make_text(subject)),
                             std::nullopt);
        },
        py::arg("pattern"), py::arg("subject"),
        "Enumerate all choice lists (fuel <= 20) and return the minimal result.");

    m.def(
        "solve_qbf",
        [](const std::vector<std::string>& prefix, const std::vector<std::vector<int64_t>>& clauses,
           bool negated, const std::string& reduction) {
            QbfPrime q = qbf_from(prefix, negated, clauses);
            ReductionOutput out =
                reduction == "pos" ? reduce_qbf_posonly(q) : reduce_qbf_neg(q);
            MatchConfig cfg;
            return match_at(cfg, out.regex, out.target_text(), 0).is_success();
        },
        py::arg("prefix"), py::arg("clauses"), py::arg("negated") = false,
        py::arg("reduction") = "neg",
        "Decide a QBF' instance by matching its reduction regex.");

    m.def(
        "qbf_reduction",
        [](const std::vector<std::string>& prefix, const std::vector<std::vector<int64_t>>& clauses,
           bool negated, const std::string& reduction) {
            QbfPrime q = qbf_from(prefix, negated, clauses);
            ReductionOutput out =
                reduction == "pos" ? reduce_qbf_posonly(q) : reduce_qbf_neg(q);
            return py::make_tuple(emit_regex(out.regex), out.target);
        },
        py::arg("prefix"), py::arg("clauses"), py::arg("negated") = false,
        py::arg("reduction") = "neg", "The (regex, string) pair of the reduction.");

    m.def(
        "solve_lexsat",
        [](uint32_t n, const std::vector<std::vector<int64_t>>& clauses) -> py::object {
            CnfFormula f = cnf_from(n, clauses);
            ReductionOutput out = reduce_lexsat(f);
            MatchConfig cfg;
            auto rec = search(cfg, out.regex, out.target_text());
            if (!rec) return py::none();
            return py::cast(assignment_list(decode_assignment(rec->groups, n)));
        },
        py::arg("n"), py::arg("clauses"),
        "Lexicographically maximum satisfying assignment via the regex reduction.");

    m.def(
        "lexsat_reduction",
        [](uint32_t n, const std::vector<std::vector<int64_t>>& clauses) {
            ReductionOutput out = reduce_lexsat(cnf_from(n, clauses));
            return py::make_tuple(emit_regex(out.regex), out.target);
        },
        py::arg("n"), py::arg("clauses"));

    m.def(
        "oracle_qbf",
        [](const std::vector<std::string>& prefix, const std::vector<std::vector<int64_t>>& clauses,
           bool negated) { return eval_qbf(qbf_from(prefix, negated, clauses)); },
        py::arg("prefix"), py::arg("clauses"), py::arg("negated") = false,
        "Brute-force QBF' evaluation.");

    m.def(
        "oracle_lexsat",
        [](uint32_t n, const std::vector<std::vector<int64_t>>& clauses) -> py::object {
            auto best = brute_lexsat(cnf_from(n, clauses));
            if (!best) return py::none();
            return py::cast(assignment_list(*best));
        },
        py::arg("n"), py::arg("clauses"), "Brute-force lexicographic SAT.");
}
