#include "bregex/fuel.hpp"

#include <algorithm>

namespace bregex {

namespace {

bool is_skippable_quant(const Action& a) {
    return a.kind == Action::Kind::Reg && a.reg->kind() == RegexKind::Quantified &&
           a.reg->min() == 0;
}

uint64_t chunk_sum(const std::vector<Action>& chunk) {
    uint64_t s = 0;
    for (const Action& a : chunk) s += a.size();
    return s;
}

}  // namespace

ChunkSplit split_chunks(const ActionList& l) {
    ChunkSplit out;
    out.chunks.emplace_back();
    for (const ActionNode* n = l.get(); n; n = n->tail.get()) {
        if (n->head.kind == Action::Kind::Check) {
            out.check_inputs.push_back(n->head.check);
            out.chunks.emplace_back();
        } else {
            out.chunks.back().push_back(n->head);
        }
    }
    return out;
}

int prog(const ActionList& l, const Input& inp, Direction d) {
    for (const ActionNode* n = l.get(); n; n = n->tail.get())
        if (n->head.kind == Action::Kind::Check &&
            !is_strict_progress(inp, n->head.check, d))
            return 0;
    return 1;
}

uint64_t fuel_first(const std::vector<Action>& chunk, int p) {
    if (chunk.empty()) return 0;
    uint64_t sum = chunk_sum(chunk);
    if (p == 1 && is_skippable_quant(chunk.front())) return 1 + (sum - chunk.front().size());
    return sum;
}

uint64_t fuel_middle(const std::vector<Action>& chunk) {
    if (chunk.empty()) return 1;
    return 1 + (chunk_sum(chunk) - chunk.front().size());
}

uint64_t fuel_last(const std::vector<Action>& chunk, const Input& inp, Direction d, int p) {
    return chunk_sum(chunk) * (inp.remaining(d) + static_cast<uint64_t>(p));
}

uint64_t reg_lk_fuel(size_t subject_len, const RegexPtr& r) {
    if (!r->has_lookaround()) return 0;
    switch (r->kind()) {
        case RegexKind::Disjunction:
        case RegexKind::Sequence:
            return std::max(reg_lk_fuel(subject_len, r->left()),
                            reg_lk_fuel(subject_len, r->right()));
        case RegexKind::Group:
        case RegexKind::NonCapGroup:
        case RegexKind::Quantified:
            return reg_lk_fuel(subject_len, r->body());
        case RegexKind::Lookaround:
            return (1 + static_cast<uint64_t>(subject_len)) * r->body()->expanded_size() +
                   reg_lk_fuel(subject_len, r->body());
        default:
            return 0;
    }
}

uint64_t act_lk_fuel(size_t subject_len, const ActionList& l) {
    uint64_t best = 0;
    for (const ActionNode* n = l.get(); n; n = n->tail.get())
        if (n->head.kind == Action::Kind::Reg)
            best = std::max(best, reg_lk_fuel(subject_len, n->head.reg));
    return best;
}

FuelBreakdown fuel_breakdown(const ActionList& l, const Input& inp, Direction d) {
    FuelBreakdown b;
    b.split = split_chunks(l);
    b.prog = prog(l, inp, d);
    const auto& chunks = b.split.chunks;
    size_t n = chunks.size();
    if (n == 1) {
        b.last = fuel_last(chunks[0], inp, d, b.prog);
    } else {
        b.first = fuel_first(chunks[0], b.prog);
        for (size_t k = 1; k + 1 < n; ++k) b.middles.push_back(fuel_middle(chunks[k]));
        b.check_bonus = n - 1;  // one unit per check separator
        b.last = fuel_last(chunks[n - 1], inp, d, b.prog);
    }
    b.lk = act_lk_fuel(inp.length(), l);
    b.total = b.first + b.check_bonus + b.last + b.lk;
    for (uint64_t m : b.middles) b.total += m;
    return b;
}

uint64_t fuel(const ActionList& l, const Input& inp, Direction d) {
    // One pass over the list; equivalent to fuel_breakdown().total.
    int p = prog(l, inp, d);
    uint64_t total = 0;
    uint64_t cur_sum = 0, cur_head = 0;
    bool cur_head_skippable = false, cur_empty = true;
    bool first_chunk = true;
    uint64_t lk = 0;

    auto flush_nonlast = [&] {
        if (first_chunk) {
            if (!cur_empty) {
                total += (p == 1 && cur_head_skippable) ? 1 + (cur_sum - cur_head) : cur_sum;
            }
            first_chunk = false;
        } else {
            total += 1 + (cur_empty ? 0 : cur_sum - cur_head);  // fuel_middle
        }
        total += 1;  // the separator itself
        cur_sum = cur_head = 0;
        cur_head_skippable = false;
        cur_empty = true;
    };

    for (const ActionNode* node = l.get(); node; node = node->tail.get()) {
        const Action& a = node->head;
        if (a.kind == Action::Kind::Check) {
            flush_nonlast();
            continue;
        }
        if (a.kind == Action::Kind::Reg) lk = std::max(lk, reg_lk_fuel(inp.length(), a.reg));
        uint64_t sz = a.size();
        if (cur_empty) {
            cur_head = sz;
            cur_head_skippable = is_skippable_quant(a);
            cur_empty = false;
        }
        cur_sum += sz;
    }
    total += cur_sum * (inp.remaining(d) + static_cast<uint64_t>(p));  // fuel_last
    return total + lk;
}

InvariantReport check_reachable_invariants(const ActionList& l, const Input&, Direction d) {
    InvariantReport rep;
    ChunkSplit split = split_chunks(l);
    size_t n = split.chunks.size();
    for (size_t k = 0; k + 1 < n; ++k) {
        const std::vector<Action>& next = split.chunks[k + 1];
        if (next.empty() || !is_skippable_quant(next.front())) {
            rep.violations.push_back(
                {1, "check " + std::to_string(k) + " not followed by a min-0 quantifier"});
            continue;
        }
        uint64_t here = chunk_sum(split.chunks[k]);
        uint64_t quant = next.front().size();
        if (here >= quant)
            rep.violations.push_back(
                {2, "chunk " + std::to_string(k) + " has size " + std::to_string(here) +
                        " >= following quantifier size " + std::to_string(quant)});
    }
    for (size_t k = 0; k + 1 < split.check_inputs.size(); ++k) {
        // Earlier checks must be at least as restrictive (as far along in d).
        if (is_strict_progress(split.check_inputs[k + 1], split.check_inputs[k], d))
            rep.violations.push_back(
                {3, "check inputs " + std::to_string(k) + ".." + std::to_string(k + 1) +
                        " out of restrictiveness order"});
    }
    return rep;
}

}  // namespace bregex
