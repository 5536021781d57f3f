#include "bregex/formats.hpp"

#include <map>
#include <set>
#include <sstream>

#include "bregex/parser.hpp"

namespace bregex {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos) continue;
        if (line[i] == 'c' && (i + 1 == line.size() || line[i + 1] == ' ')) continue;
        out.push_back(line);
    }
    return out;
}

int64_t parse_int(std::istringstream& in, const std::string& what) {
    int64_t v;
    if (!(in >> v)) throw FormatError("expected " + what);
    return v;
}

// Clause lines may wrap; reads literals until the 0 terminator.
std::vector<Clause> read_clauses(const std::vector<std::string>& lines, size_t start,
                                 uint32_t n, uint32_t m) {
    std::vector<Clause> clauses;
    Clause cur;
    for (size_t k = start; k < lines.size(); ++k) {
        std::istringstream in(lines[k]);
        int64_t v;
        while (in >> v) {
            if (v == 0) {
                if (cur.empty()) throw FormatError("empty clause");
                clauses.push_back(std::move(cur));
                cur.clear();
                continue;
            }
            uint64_t var = static_cast<uint64_t>(v < 0 ? -v : v);
            if (var > n) throw FormatError("literal " + std::to_string(v) + " out of range");
            cur.push_back(Literal{static_cast<uint32_t>(var), v < 0});
        }
    }
    if (!cur.empty()) throw FormatError("clause not terminated by 0");
    if (clauses.size() != m)
        throw FormatError("expected " + std::to_string(m) + " clauses, found " +
                          std::to_string(clauses.size()));
    return clauses;
}

}  // namespace

QbfPrime parse_qbfp(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw FormatError("empty QBF' file");
    std::istringstream header(lines[0]);
    std::string p, fmt;
    header >> p >> fmt;
    if (p != "p" || fmt != "qbfp") throw FormatError("expected header 'p qbfp <n> <m>'");
    int64_t n = parse_int(header, "variable count");
    int64_t m = parse_int(header, "clause count");
    if (n < 0 || m < 1) throw FormatError("bad instance dimensions");
    QbfPrime q;
    q.matrix.var_count = static_cast<uint32_t>(n);
    size_t at = 1;
    for (int64_t i = 1; i <= n; ++i, ++at) {
        if (at >= lines.size()) throw FormatError("missing quantifier line for x" +
                                                  std::to_string(i));
        std::istringstream in(lines[at]);
        std::string tag, kind;
        in >> tag >> kind;
        int64_t idx = parse_int(in, "variable index");
        if (tag != "q" || (kind != "E" && kind != "NE") || idx != i)
            throw FormatError("expected 'q E " + std::to_string(i) + "' or 'q NE " +
                              std::to_string(i) + "'");
        q.prefix.push_back(kind == "E" ? Quantifier::Exists : Quantifier::NotExists);
    }
    if (at >= lines.size()) throw FormatError("missing 'neg' line");
    {
        std::istringstream in(lines[at++]);
        std::string tag;
        in >> tag;
        int64_t v = parse_int(in, "negation flag");
        if (tag != "neg" || (v != 0 && v != 1)) throw FormatError("expected 'neg 0|1'");
        q.matrix_negated = v == 1;
    }
    q.matrix.clauses = read_clauses(lines, at, q.matrix.var_count,
                                    static_cast<uint32_t>(m));
    return q;
}

std::string write_qbfp(const QbfPrime& q) {
    std::ostringstream out;
    out << "p qbfp " << q.matrix.var_count << ' ' << q.matrix.clauses.size() << '\n';
    for (size_t i = 0; i < q.prefix.size(); ++i)
        out << "q " << (q.prefix[i] == Quantifier::Exists ? "E" : "NE") << ' ' << (i + 1)
            << '\n';
    out << "neg " << (q.matrix_negated ? 1 : 0) << '\n';
    for (const Clause& c : q.matrix.clauses) {
        for (const Literal& l : c) out << (l.negated ? "-" : "") << l.var << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw FormatError("empty CNF file");
    std::istringstream header(lines[0]);
    std::string p, fmt;
    header >> p >> fmt;
    if (p != "p" || fmt != "cnf") throw FormatError("expected header 'p cnf <n> <m>'");
    int64_t n = parse_int(header, "variable count");
    int64_t m = parse_int(header, "clause count");
    if (n < 0 || m < 1) throw FormatError("bad instance dimensions");
    CnfFormula f;
    f.var_count = static_cast<uint32_t>(n);
    f.clauses = read_clauses(lines, 1, f.var_count, static_cast<uint32_t>(m));
    return f;
}

std::string write_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c) out << (l.negated ? "-" : "") << l.var << ' ';
        out << "0\n";
    }
    return out.str();
}

PcnfQbf parse_qdimacs(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw FormatError("empty QDIMACS file");
    std::istringstream header(lines[0]);
    std::string p, fmt;
    header >> p >> fmt;
    if (p != "p" || fmt != "cnf") throw FormatError("expected header 'p cnf <n> <m>'");
    int64_t n = parse_int(header, "variable count");
    int64_t m = parse_int(header, "clause count");
    if (n < 0 || m < 1) throw FormatError("bad instance dimensions");
    PcnfQbf out;
    out.matrix.var_count = static_cast<uint32_t>(n);
    size_t at = 1;
    std::set<uint32_t> quantified;
    while (at < lines.size()) {
        std::istringstream in(lines[at]);
        std::string tag;
        in >> tag;
        if (tag != "a" && tag != "e") break;
        int64_t v;
        while (in >> v && v != 0) {
            if (v < 0 || v > n) throw FormatError("bad prefix variable " + std::to_string(v));
            uint32_t var = static_cast<uint32_t>(v);
            if (!quantified.insert(var).second)
                throw FormatError("variable " + std::to_string(var) + " quantified twice");
            out.prefix.push_back({tag == "a", var});
        }
        ++at;
    }
    out.matrix.clauses = read_clauses(lines, at, out.matrix.var_count,
                                      static_cast<uint32_t>(m));
    for (const Clause& c : out.matrix.clauses)
        for (const Literal& l : c)
            if (!quantified.count(l.var))
                throw FormatError("free variable " + std::to_string(l.var) +
                                  " (QBF must be closed)");
    return out;
}

QbfPrime qdimacs_to_qbfprime(const PcnfQbf& p) {
    // Renumber variables by prefix position, then rewrite each ∀ as ¬∃·¬ with
    // the pending negation pushed inward.
    std::map<uint32_t, uint32_t> renumber;
    for (size_t i = 0; i < p.prefix.size(); ++i)
        renumber[p.prefix[i].second] = static_cast<uint32_t>(i + 1);
    QbfPrime q;
    q.matrix.var_count = static_cast<uint32_t>(p.prefix.size());
    bool pending_neg = false;
    for (const auto& [universal, var] : p.prefix) {
        if (universal) {
            q.prefix.push_back(pending_neg ? Quantifier::Exists : Quantifier::NotExists);
            pending_neg = true;
        } else {
            q.prefix.push_back(pending_neg ? Quantifier::NotExists : Quantifier::Exists);
            pending_neg = false;
        }
    }
    q.matrix_negated = pending_neg;
    for (const Clause& c : p.matrix.clauses) {
        Clause mapped;
        for (const Literal& l : c) mapped.push_back(Literal{renumber.at(l.var), l.negated});
        q.matrix.clauses.push_back(std::move(mapped));
    }
    return q;
}

QbfPrime qdimacs_to_qbfprime(const std::string& text) {
    return qdimacs_to_qbfprime(parse_qdimacs(text));
}

namespace {

std::string js_string_literal(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\\' || c == '"') {
            out += '\\';
            out += c;
        } else {
            out += c;
        }
    }
    return out + "\"";
}

}  // namespace

std::string emit_js_snippet(const ReductionOutput& out) {
    std::ostringstream js;
    js << "// Decision check: does the regex match the target from position 0?\n";
    js << "const source = " << js_string_literal(emit_regex(out.regex)) << ";\n";
    js << "const subject = " << js_string_literal(out.target) << ";\n";
    js << "const re = new RegExp(source);\n";
    js << "const m = re.exec(subject);\n";
    js << "const matched = m !== null && m.index === 0;\n";
    js << "const groups = [];\n";
    js << "if (matched) {\n";
    js << "  for (let i = 1; i < m.length; i++) {\n";
    js << "    groups.push(m[i] === undefined ? null : m[i]);\n";
    js << "  }\n";
    js << "}\n";
    js << "console.log(JSON.stringify({ matched, groups }));\n";
    return js.str();
}

}  // namespace bregex
