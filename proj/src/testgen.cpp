#include "bregex/testgen.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bregex/parser.hpp"

namespace bregex::testgen {

uint64_t RegexGen::pick(uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng_);
}

Text RegexGen::next_string(size_t max_len) {
    size_t len = pick(0, max_len);
    Text s;
    for (size_t i = 0; i < len; ++i) s += opts_.letters[pick(0, opts_.letters.size() - 1)];
    return s;
}

// Placeholder index for backreferences; replaced by a real target after the
// whole structure is known.
static constexpr GroupId kBackrefHole = 0xFFFFFFF0;

RegexPtr RegexGen::next() {
    RegexPtr r = gen_pattern(opts_.max_size, 0);
    return renumber_and_patch(r);
}

RegexPtr RegexGen::gen_pattern(uint64_t budget, int depth) {
    uint64_t alts = 1;
    if (budget >= 6 && pick(0, 9) < 4) alts = pick(2, 3);
    std::vector<RegexPtr> parts;
    uint64_t share = std::max<uint64_t>(1, budget / alts);
    for (uint64_t i = 0; i < alts; ++i) {
        std::vector<RegexPtr> terms;
        uint64_t left = share;
        while (left > 0 && terms.size() < 8 &&
               (terms.empty() ? pick(0, 19) < 19 : pick(0, 9) < 7)) {
            RegexPtr term = gen_term(left, depth + 1);
            uint64_t used = term->size() + (terms.empty() ? 0 : 1);  // sequence glue
            left -= std::min(left, used);
            terms.push_back(std::move(term));
        }
        parts.push_back(re::seq_all(terms));
    }
    return re::disj_all(parts);
}

RegexPtr RegexGen::gen_term(uint64_t budget, int depth) {
    bool quantifiable = true;
    RegexPtr atom = gen_atom(budget, depth, &quantifiable);
    if (!quantifiable || budget < atom->size() + 3 || pick(0, 9) >= 5) return atom;
    bool greedy = pick(0, 3) > 0;
    uint64_t roll = pick(0, 9);
    uint64_t min = 0;
    RepCount delta = RepCount::inf();
    if (opts_.lower_bounded && roll < 3) {
        min = pick(1, opts_.max_min);
        delta = roll == 0 ? RepCount::inf() : RepCount::of(pick(0, 2));
    } else if (roll < 6) {
        delta = RepCount::of(pick(1, 3));
    }
    return re::quant(greedy, min, delta, std::move(atom));
}

RegexPtr RegexGen::gen_atom(uint64_t budget, int depth, bool* quantifiable) {
    auto letter = [&] { return opts_.letters[pick(0, opts_.letters.size() - 1)]; };
    uint64_t roll = pick(0, 99);
    bool small = budget < 6 || depth > 6;
    if (small || roll < 35) {  // plain character
        return re::chr(letter());
    }
    if (roll < 45) {  // character class over the alphabet
        std::vector<ClassItem> items;
        uint64_t k = pick(1, 2);
        for (uint64_t i = 0; i < k; ++i) {
            Char a = letter(), b = letter();
            items.push_back({std::min(a, b), std::max(a, b)});
        }
        return re::character(CharDescriptor::cls(std::move(items), pick(0, 3) == 0));
    }
    if (roll < 50) return re::character(CharDescriptor::dot());
    if (roll < 55 && opts_.anchors) {
        *quantifiable = false;
        switch (pick(0, 3)) {
            case 0: return re::anchor(AnchorKind::Begin);
            case 1: return re::anchor(AnchorKind::End);
            case 2: return re::anchor(AnchorKind::WordBoundary);
            default: return re::anchor(AnchorKind::NonWordBoundary);
        }
    }
    if (roll < 63 && opts_.groups) return re::backref(kBackrefHole);
    if (roll < 78 && opts_.groups)
        return re::group(1 /* renumbered later */, gen_pattern(budget - 2, depth + 1));
    if (roll < 88 && opts_.lookarounds) {
        *quantifiable = false;
        LookKind kind = pick(0, 1) ? LookKind::Ahead : LookKind::Behind;
        return re::look(kind, pick(0, 2) > 0, gen_pattern(budget - 1, depth + 1));
    }
    return re::noncap(gen_pattern(budget, depth + 1));
}

RegexPtr RegexGen::renumber_and_patch(const RegexPtr& r) {
    GroupId count = 0;
    std::function<void(const RegexPtr&)> number_count = [&](const RegexPtr& n) {
        switch (n->kind()) {
            case RegexKind::Group:
                ++count;
                number_count(n->body());
                return;
            case RegexKind::Disjunction:
            case RegexKind::Sequence:
                number_count(n->left());
                number_count(n->right());
                return;
            case RegexKind::NonCapGroup:
            case RegexKind::Quantified:
            case RegexKind::Lookaround:
                number_count(n->body());
                return;
            default:
                return;
        }
    };
    number_count(r);
    GroupId next = 1;
    std::function<RegexPtr(const RegexPtr&)> rebuild = [&](const RegexPtr& n) -> RegexPtr {
        switch (n->kind()) {
            case RegexKind::Group: {
                GroupId id = next++;
                return re::group(id, rebuild(n->body()));
            }
            case RegexKind::Backreference:
                if (n->group() == kBackrefHole) {
                    if (count == 0) return re::chr(opts_.letters[0]);
                    return re::backref(static_cast<GroupId>(pick(1, count)));
                }
                return n;
            case RegexKind::Disjunction: {
                RegexPtr l = rebuild(n->left());
                return re::disj(std::move(l), rebuild(n->right()));
            }
            case RegexKind::Sequence: {
                RegexPtr l = rebuild(n->left());
                return re::seq(std::move(l), rebuild(n->right()));
            }
            case RegexKind::NonCapGroup:
                return re::noncap(rebuild(n->body()));
            case RegexKind::Quantified:
                return re::quant(n->greedy(), n->min(), n->delta(), rebuild(n->body()));
            case RegexKind::Lookaround:
                return re::look(n->look_kind(), n->look_positive(), rebuild(n->body()));
            default:
                return n;
        }
    };
    return rebuild(r);
}

namespace {

void walk_sample(std::mt19937_64& rng, const std::vector<Char>& letters, const Regex& r,
                 Text& out, std::map<GroupId, Text>& captured) {
    auto pick = [&](uint64_t lo, uint64_t hi) {
        return std::uniform_int_distribution<uint64_t>(lo, hi)(rng);
    };
    switch (r.kind()) {
        case RegexKind::Epsilon:
        case RegexKind::Anchor:
            return;
        case RegexKind::Character: {
            // Prefer a character the descriptor accepts.
            for (int tries = 0; tries < 8; ++tries) {
                Char c = letters[pick(0, letters.size() - 1)];
                if (r.cd().matches(c)) {
                    out += c;
                    return;
                }
            }
            if (r.cd().kind == CharDescriptor::Kind::Literal) out += r.cd().literal;
            return;
        }
        case RegexKind::Backreference: {
            auto it = captured.find(r.group());
            if (it != captured.end()) out += it->second;
            return;
        }
        case RegexKind::Disjunction:
            walk_sample(rng, letters, pick(0, 1) ? *r.right() : *r.left(), out, captured);
            return;
        case RegexKind::Sequence:
            walk_sample(rng, letters, *r.left(), out, captured);
            walk_sample(rng, letters, *r.right(), out, captured);
            return;
        case RegexKind::Group: {
            size_t start = out.size();
            walk_sample(rng, letters, *r.body(), out, captured);
            captured[r.group()] = out.substr(start);
            return;
        }
        case RegexKind::NonCapGroup:
            walk_sample(rng, letters, *r.body(), out, captured);
            return;
        case RegexKind::Quantified: {
            uint64_t reps = r.min() + pick(0, 5);
            if (!r.delta().infinite)
                reps = std::min<uint64_t>(reps, r.min() + r.delta().value);
            for (uint64_t i = 0; i < reps && out.size() < 64; ++i)
                walk_sample(rng, letters, *r.body(), out, captured);
            return;
        }
        case RegexKind::Lookaround:
            return;  // assertions consume nothing
    }
}

}  // namespace

Text RegexGen::sample_for(const RegexPtr& r, size_t max_len) {
    Text out;
    std::map<GroupId, Text> captured;
    walk_sample(rng_, opts_.letters, *r, out, captured);
    // Mutations keep the string near the language without staying inside it;
    // damaged tails are what force deep backtracking.
    uint64_t mutate_count = pick(0, 3);
    for (uint64_t i = 0; i < mutate_count; ++i) {
        uint64_t kind = pick(0, 4);
        if (kind == 0 && !out.empty()) {
            out.erase(pick(0, out.size() - 1), 1);
        } else if (kind == 1) {
            out.insert(out.begin() + pick(0, out.size()),
                       opts_.letters[pick(0, opts_.letters.size() - 1)]);
        } else if (kind == 2 && !out.empty()) {
            out[pick(0, out.size() - 1)] = opts_.letters[pick(0, opts_.letters.size() - 1)];
        } else if (kind == 3 && !out.empty()) {
            out.erase(out.size() - 1);
        } else if (kind == 4) {
            out += opts_.letters[pick(0, opts_.letters.size() - 1)];
        }
    }
    if (out.size() > max_len) out.erase(max_len);
    return out;
}

CnfFormula random_cnf(std::mt19937_64& rng, const CnfGenOptions& opts) {
    auto pick = [&](uint32_t lo, uint32_t hi) {
        return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
    };
    CnfFormula f;
    f.var_count = pick(1, opts.max_vars);
    uint32_t m = pick(1, opts.max_clauses);
    for (uint32_t j = 0; j < m; ++j) {
        Clause c;
        uint32_t width = pick(1, std::min(opts.max_width, f.var_count));
        std::vector<uint32_t> vars(f.var_count);
        for (uint32_t v = 0; v < f.var_count; ++v) vars[v] = v + 1;
        std::shuffle(vars.begin(), vars.end(), rng);
        for (uint32_t k = 0; k < width; ++k) c.push_back(Literal{vars[k], pick(0, 1) == 1});
        f.clauses.push_back(std::move(c));
    }
    return f;
}

QbfPrime random_qbf(std::mt19937_64& rng, const CnfGenOptions& opts) {
    auto pick = [&](uint32_t lo, uint32_t hi) {
        return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
    };
    QbfPrime q;
    q.matrix = random_cnf(rng, opts);
    q.matrix_negated = pick(0, 1) == 1;
    for (uint32_t i = 0; i < q.matrix.var_count; ++i)
        q.prefix.push_back(pick(0, 1) ? Quantifier::Exists : Quantifier::NotExists);
    return q;
}

RegexPtr adversarial_regex(std::mt19937_64& rng) {
    static const std::vector<std::string> shapes = {
        "(?:a|a)*b",       "(?:a*)*b",        "(?:aa|a)*b",     "(a|ab)*c",
        "(?:a|b|ab)*c",    "(?:(a)|a)*b",     "(?:a*b?)*c",     "a*a*a*b",
        "(?:aa|aab?)*c",   "(?:(?:a|a)b?)*c", "(a*)(?:\\1a)*b", "(?:a|a){0,3}(?:b|b)*c",
    };
    std::uniform_int_distribution<size_t> d(0, shapes.size() - 1);
    return parse_regex(shapes[d(rng)]);
}

Text adversarial_string(std::mt19937_64& rng, size_t max_len) {
    std::uniform_int_distribution<size_t> len(1, max_len);
    std::uniform_int_distribution<int> tail(0, 3);
    size_t n = len(rng);
    Text out(n, U'a');
    int t = tail(rng);
    if (t == 1 && n > 0) out[n - 1] = U'b';
    if (t == 2 && n > 0) out[n - 1] = U'c';
    return out;
}

std::vector<Clause> all_clauses(uint32_t n, uint32_t max_width) {
    std::vector<Clause> out;
    // Variable subsets of each width, expanded with every sign combination.
    std::vector<uint32_t> vars;
    std::function<void(uint32_t, uint32_t)> build = [&](uint32_t start, uint32_t want) {
        if (want == 0) {
            size_t combos = size_t{1} << vars.size();
            for (size_t bits = 0; bits < combos; ++bits) {
                Clause c;
                for (size_t k = 0; k < vars.size(); ++k)
                    c.push_back(Literal{vars[k], ((bits >> k) & 1) == 1});
                out.push_back(std::move(c));
            }
            return;
        }
        for (uint32_t v = start; v + (want - 1) <= n; ++v) {
            vars.push_back(v);
            build(v + 1, want - 1);
            vars.pop_back();
        }
    };
    for (uint32_t w = 1; w <= max_width && w <= n; ++w) build(1, w);
    return out;
}

}  // namespace bregex::testgen
