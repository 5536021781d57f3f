#include "bregex/tree.hpp"

#include <variant>

#include "bregex/fuel.hpp"

namespace bregex {

namespace {

struct Expand {
    ActionList acts;
    Input inp;
    GroupMap gm;
    Direction dir;
    uint64_t fuel = 0;
};

struct MakeUnary {
    TreeKind kind;
    Char ch = 0;
    GroupId group = 0;
    uint32_t len = 0;
    std::vector<GroupId> reset;
};

struct MakeChoice {};

// Phase 1 after the sub-tree is built: decide the continuation from the
// sub-tree's first leaf (lookaround atomicity).
struct LookJoin {
    LookKind kind;
    bool positive = true;
    ActionList cont;
    Input inp;
    GroupMap gm;
    Direction dir;
    uint64_t fuel = 0;
};

// Phase 2: assemble the Look node once the continuation is built.
struct LookFinish {
    int32_t sub = -1;
    LookKind kind;
    bool positive = true;
};

using Task = std::variant<Expand, MakeUnary, MakeChoice, LookJoin, LookFinish>;

std::optional<Leaf> replay_first(const BacktrackTree& t, int32_t root, Input inp, GroupMap gm,
                                 Direction d);

class Builder {
public:
    Builder(const MatchConfig& cfg, uint64_t budget) : cfg_(cfg), budget_(budget) {}

    TreeResult run(Expand initial) {
        tasks_.push_back(std::move(initial));
        while (!tasks_.empty()) {
            Task task = std::move(tasks_.back());
            tasks_.pop_back();
            bool ok = std::visit([&](auto& t) { return handle(t); }, task);
            if (!ok) return TreeResult{status_, {}};
        }
        TreeResult res;
        res.status = TreeStatus::Ok;
        res.tree.nodes = std::move(nodes_);
        res.tree.root = values_.back();
        return res;
    }

private:
    const MatchConfig& cfg_;
    uint64_t budget_;
    std::vector<Task> tasks_;
    std::vector<int32_t> values_;
    std::vector<TreeNode> nodes_;
    TreeStatus status_ = TreeStatus::Ok;

    bool emit(TreeNode node) {
        if (budget_ && nodes_.size() >= budget_) {
            status_ = TreeStatus::BudgetExceeded;
            return false;
        }
        nodes_.push_back(std::move(node));
        values_.push_back(static_cast<int32_t>(nodes_.size() - 1));
        return true;
    }

    bool emit_leafless(TreeKind kind) {
        TreeNode n;
        n.kind = kind;
        return emit(std::move(n));
    }

    bool handle(MakeUnary& m) {
        TreeNode n;
        n.kind = m.kind;
        n.ch = m.ch;
        n.group = m.group;
        n.len = m.len;
        n.reset = std::move(m.reset);
        n.a = values_.back();
        values_.pop_back();
        return emit(std::move(n));
    }

    bool handle(MakeChoice&) {
        TreeNode n;
        n.kind = TreeKind::Choice;
        n.b = values_.back();  // low arm finished last
        values_.pop_back();
        n.a = values_.back();
        values_.pop_back();
        return emit(std::move(n));
    }

    bool handle(LookJoin& j) {
        int32_t sub = values_.back();
        values_.pop_back();
        BacktrackTree view;  // replay over the arena built so far
        view.nodes = std::move(nodes_);
        auto leaf = replay_first(view, sub, j.inp, j.gm, look_direction(j.kind));
        nodes_ = std::move(view.nodes);
        bool sub_matched = leaf.has_value();
        if (sub_matched == j.positive) {
            GroupMap next_gm = j.positive ? std::move(leaf->groups) : std::move(j.gm);
            tasks_.push_back(LookFinish{sub, j.kind, j.positive});
            tasks_.push_back(
                Expand{std::move(j.cont), std::move(j.inp), std::move(next_gm), j.dir, j.fuel});
            return true;
        }
        // The lookaround fails: the continuation is an immediate Mismatch.
        if (!emit_leafless(TreeKind::Mismatch)) return false;
        LookFinish fin{sub, j.kind, j.positive};
        return handle(fin);
    }

    bool handle(LookFinish& f) {
        TreeNode n;
        n.kind = TreeKind::Look;
        n.look = f.kind;
        n.positive = f.positive;
        n.b = values_.back();  // continuation
        values_.pop_back();
        n.a = f.sub;
        return emit(std::move(n));
    }

    bool handle(Expand& e) {
        if (e.fuel == 0) {
            status_ = TreeStatus::OutOfFuel;
            return false;
        }
        if (!e.acts) return emit_leafless(TreeKind::Match);
        const Action& head = e.acts->head;
        const ActionList& cont = e.acts->tail;
        uint64_t fuel = e.fuel - 1;
        switch (head.kind) {
            case Action::Kind::Check:
                if (!is_strict_progress(e.inp, head.check, e.dir))
                    return emit_leafless(TreeKind::Mismatch);
                tasks_.push_back(MakeUnary{TreeKind::Progress, 0, 0, 0, {}});
                tasks_.push_back(Expand{cont, e.inp, std::move(e.gm), e.dir, fuel});
                return true;
            case Action::Kind::Close: {
                GroupMap gm = gm_close(std::move(e.gm), head.group, e.inp.pos);
                tasks_.push_back(MakeUnary{TreeKind::Close, 0, head.group, 0, {}});
                tasks_.push_back(Expand{cont, e.inp, std::move(gm), e.dir, fuel});
                return true;
            }
            case Action::Kind::Reg:
                break;
        }
        const Regex& r = *head.reg;
        switch (r.kind()) {
            case RegexKind::Epsilon:
                tasks_.push_back(Expand{cont, e.inp, std::move(e.gm), e.dir, fuel});
                return true;
            case RegexKind::Character: {
                auto rd = read_char(cfg_, r.cd(), e.inp, e.dir);
                if (!rd) return emit_leafless(TreeKind::Mismatch);
                tasks_.push_back(MakeUnary{TreeKind::Read, rd->first, 0, 0, {}});
                tasks_.push_back(Expand{cont, rd->second, std::move(e.gm), e.dir, fuel});
                return true;
            }
            case RegexKind::Backreference: {
                auto rd = read_backref(cfg_, e.gm, r.group(), e.inp, e.dir);
                if (!rd) return emit_leafless(TreeKind::Mismatch);
                tasks_.push_back(MakeUnary{TreeKind::ReadBackref, 0, r.group(),
                                           static_cast<uint32_t>(rd->first.size()), {}});
                tasks_.push_back(Expand{cont, rd->second, std::move(e.gm), e.dir, fuel});
                return true;
            }
            case RegexKind::Anchor:
                if (!anchor_satisfied(cfg_, r.anchor_kind(), e.inp))
                    return emit_leafless(TreeKind::Mismatch);
                tasks_.push_back(MakeUnary{TreeKind::AnchorPass, 0, 0, 0, {}});
                tasks_.push_back(Expand{cont, e.inp, std::move(e.gm), e.dir, fuel});
                return true;
            case RegexKind::Sequence: {
                ActionList next =
                    e.dir == Direction::Forward
                        ? cons(Action::make_reg(r.left()), cons(Action::make_reg(r.right()), cont))
                        : cons(Action::make_reg(r.right()), cons(Action::make_reg(r.left()), cont));
                tasks_.push_back(Expand{std::move(next), e.inp, std::move(e.gm), e.dir, fuel});
                return true;
            }
            case RegexKind::NonCapGroup:
                tasks_.push_back(Expand{cons(Action::make_reg(r.body()), cont), e.inp,
                                        std::move(e.gm), e.dir, fuel});
                return true;
            case RegexKind::Group: {
                ActionList next =
                    cons(Action::make_reg(r.body()), cons(Action::make_close(r.group()), cont));
                GroupMap gm = gm_open(std::move(e.gm), r.group(), e.inp.pos);
                tasks_.push_back(MakeUnary{TreeKind::Open, 0, r.group(), 0, {}});
                tasks_.push_back(Expand{std::move(next), e.inp, std::move(gm), e.dir, fuel});
                return true;
            }
            case RegexKind::Disjunction: {
                // Tasks run LIFO: left arm first, then right, then the join.
                tasks_.push_back(MakeChoice{});
                tasks_.push_back(
                    Expand{cons(Action::make_reg(r.right()), cont), e.inp, e.gm, e.dir, fuel});
                tasks_.push_back(Expand{cons(Action::make_reg(r.left()), cont), e.inp,
                                        std::move(e.gm), e.dir, fuel});
                return true;
            }
            case RegexKind::Quantified: {
                if (r.min() > 0) {
                    ActionList next = cons(
                        Action::make_reg(r.body()),
                        cons(Action::make_reg(
                                 re::quant(r.greedy(), r.min() - 1, r.delta(), r.body())),
                             cont));
                    GroupMap gm = gm_reset(std::move(e.gm), r.def_groups());
                    tasks_.push_back(MakeUnary{TreeKind::ResetGroups, 0, 0, 0, r.def_groups()});
                    tasks_.push_back(Expand{std::move(next), e.inp, std::move(gm), e.dir, fuel});
                    return true;
                }
                if (r.delta().is_zero()) {
                    tasks_.push_back(Expand{cont, e.inp, std::move(e.gm), e.dir, fuel});
                    return true;
                }
                ActionList iter = cons(
                    Action::make_reg(r.body()),
                    cons(Action::make_check(e.inp),
                         cons(Action::make_reg(
                                  re::quant(r.greedy(), 0, r.delta().pred(), r.body())),
                              cont)));
                GroupMap iter_gm = gm_reset(e.gm, r.def_groups());
                Expand iter_task{std::move(iter), e.inp, std::move(iter_gm), e.dir, fuel};
                Expand skip_task{cont, e.inp, std::move(e.gm), e.dir, fuel};
                tasks_.push_back(MakeChoice{});
                if (r.greedy()) {
                    // High arm: ResetGroups wrapping the iteration.
                    tasks_.push_back(std::move(skip_task));
                    tasks_.push_back(MakeUnary{TreeKind::ResetGroups, 0, 0, 0, r.def_groups()});
                    tasks_.push_back(std::move(iter_task));
                } else {
                    tasks_.push_back(MakeUnary{TreeKind::ResetGroups, 0, 0, 0, r.def_groups()});
                    tasks_.push_back(std::move(iter_task));
                    tasks_.push_back(std::move(skip_task));
                }
                return true;
            }
            case RegexKind::Lookaround: {
                tasks_.push_back(LookJoin{r.look_kind(), r.look_positive(), cont, e.inp, e.gm,
                                          e.dir, fuel});
                tasks_.push_back(Expand{actions_of(r.body()), e.inp, std::move(e.gm),
                                        look_direction(r.look_kind()), fuel});
                return true;
            }
        }
        return emit_leafless(TreeKind::Mismatch);
    }
};

// --- leaf replay ---

struct ReplayPos {
    int32_t node;
    Input inp;
    GroupMap gm;
};

// Walks one branch segment; collects leaves; pending stack carries Choice low
// arms. Look nodes recurse (bounded by lookaround nesting).
void replay_collect(const BacktrackTree& t, int32_t root, const Input& inp0, const GroupMap& gm0,
                    Direction d, std::vector<Leaf>& out, bool first_only) {
    std::vector<ReplayPos> pending;
    pending.push_back({root, inp0, gm0});
    while (!pending.empty()) {
        ReplayPos cur = std::move(pending.back());
        pending.pop_back();
        int32_t idx = cur.node;
        Input inp = std::move(cur.inp);
        GroupMap gm = std::move(cur.gm);
        while (idx >= 0) {
            const TreeNode& n = t.at(idx);
            switch (n.kind) {
                case TreeKind::Match:
                    out.push_back(Leaf{inp, gm});
                    if (first_only) return;
                    idx = -1;
                    break;
                case TreeKind::Mismatch:
                    idx = -1;
                    break;
                case TreeKind::Choice:
                    pending.push_back({n.b, inp, gm});
                    idx = n.a;
                    break;
                case TreeKind::Read:
                    inp.pos = d == Direction::Forward ? inp.pos + 1 : inp.pos - 1;
                    idx = n.a;
                    break;
                case TreeKind::ReadBackref:
                    inp.pos = d == Direction::Forward ? inp.pos + n.len : inp.pos - n.len;
                    idx = n.a;
                    break;
                case TreeKind::Open:
                    gm = gm_open(std::move(gm), n.group, inp.pos);
                    idx = n.a;
                    break;
                case TreeKind::Close:
                    gm = gm_close(std::move(gm), n.group, inp.pos);
                    idx = n.a;
                    break;
                case TreeKind::ResetGroups:
                    gm = gm_reset(std::move(gm), n.reset);
                    idx = n.a;
                    break;
                case TreeKind::Progress:
                case TreeKind::AnchorPass:
                    idx = n.a;
                    break;
                case TreeKind::Look: {
                    if (n.positive) {
                        auto sub = replay_first(t, n.a, inp, gm, look_direction(n.look));
                        if (sub) gm = std::move(sub->groups);
                        // No sub leaf: the continuation is a Mismatch node.
                    }
                    idx = n.b;
                    break;
                }
            }
        }
    }
}

std::optional<Leaf> replay_first(const BacktrackTree& t, int32_t root, Input inp, GroupMap gm,
                                 Direction d) {
    std::vector<Leaf> out;
    replay_collect(t, root, inp, gm, d, out, true);
    if (out.empty()) return std::nullopt;
    return std::move(out.front());
}

}  // namespace

TreeResult build_tree(const MatchConfig& cfg, ActionList l, Input inp, GroupMap gm, Direction d,
                      uint64_t fuel, uint64_t node_budget) {
    Builder b(cfg, node_budget);
    return b.run(Expand{std::move(l), std::move(inp), std::move(gm), d, fuel});
}

TreeResult build_tree_for(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s, size_t pos,
                          uint64_t node_budget) {
    ActionList l = actions_of(r);
    Input inp = input_at(s, pos);
    uint64_t budget = fuel(l, inp, Direction::Forward) + 1;
    return build_tree(cfg, std::move(l), std::move(inp), GroupMap::empty(), Direction::Forward,
                      budget, node_budget);
}

std::vector<Leaf> tree_leaves(const BacktrackTree& t, const Input& inp, const GroupMap& gm,
                              Direction d) {
    std::vector<Leaf> out;
    if (t.root >= 0) replay_collect(t, t.root, inp, gm, d, out, false);
    return out;
}

std::optional<Leaf> first_leaf(const BacktrackTree& t, const Input& inp, const GroupMap& gm,
                               Direction d) {
    if (t.root < 0) return std::nullopt;
    return replay_first(t, t.root, inp, gm, d);
}

namespace {

std::string node_label(const TreeNode& n) {
    switch (n.kind) {
        case TreeKind::Match: return "Match";
        case TreeKind::Mismatch: return "Mismatch";
        case TreeKind::Choice: return "Choice";
        case TreeKind::Read: return "Read " + to_utf8(n.ch);
        case TreeKind::Open: return "Open " + std::to_string(n.group);
        case TreeKind::Close: return "Close " + std::to_string(n.group);
        case TreeKind::ResetGroups: {
            std::string s = "Reset {";
            for (size_t i = 0; i < n.reset.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(n.reset[i]);
            }
            return s + "}";
        }
        case TreeKind::Progress: return "Progress";
        case TreeKind::AnchorPass: return "AnchorPass";
        case TreeKind::ReadBackref:
            return "ReadBackref " + std::to_string(n.group) + " len=" + std::to_string(n.len);
        case TreeKind::Look:
            return std::string("Look ") + (n.look == LookKind::Ahead ? "ahead" : "behind") +
                   (n.positive ? " positive" : " negative");
    }
    return {};
}

}  // namespace

std::string render_tree(const BacktrackTree& t) {
    std::string out;
    // (indent, label-line or node) entries; unary chains stay at one level.
    struct Item {
        int32_t node;
        int indent;
        const char* tag;  // optional "hi:" / "lo:" / "sub:" / "cont:" line
    };
    std::vector<Item> stack;
    if (t.root >= 0) stack.push_back({t.root, 0, nullptr});
    auto line = [&out](int indent, const std::string& text) {
        out.append(static_cast<size_t>(indent) * 2, ' ');
        out += text;
        out += '\n';
    };
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.tag) line(it.indent, it.tag);
        int32_t idx = it.node;
        while (idx >= 0) {
            const TreeNode& n = t.at(idx);
            line(it.indent + (it.tag ? 1 : 0), node_label(n));
            if (n.kind == TreeKind::Choice) {
                int base = it.indent + (it.tag ? 1 : 0);
                stack.push_back({n.b, base + 1, "lo:"});
                stack.push_back({n.a, base + 1, "hi:"});
                idx = -1;
            } else if (n.kind == TreeKind::Look) {
                int base = it.indent + (it.tag ? 1 : 0);
                stack.push_back({n.b, base + 1, "cont:"});
                stack.push_back({n.a, base + 1, "sub:"});
                idx = -1;
            } else {
                idx = n.a;
            }
        }
    }
    return out;
}

}  // namespace bregex
