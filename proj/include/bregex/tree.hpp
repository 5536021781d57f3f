#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bregex/state.hpp"

namespace bregex {

enum class TreeKind {
    Match,
    Mismatch,
    Choice,
    Read,
    Open,
    Close,
    ResetGroups,
    Progress,
    AnchorPass,
    ReadBackref,
    Look,
};

struct TreeNode {
    TreeKind kind = TreeKind::Match;
    int32_t a = -1;  // unary child; Choice high arm; Look sub-tree
    int32_t b = -1;  // Choice low arm; Look continuation
    Char ch = 0;                 // Read
    GroupId group = 0;           // Open / Close / ReadBackref
    uint32_t len = 0;            // ReadBackref
    std::vector<GroupId> reset;  // ResetGroups
    LookKind look = LookKind::Ahead;  // Look
    bool positive = true;             // Look
};

// Full backtracking tree, arena-allocated. Immutable once built.
struct BacktrackTree {
    std::vector<TreeNode> nodes;
    int32_t root = -1;
    const TreeNode& at(int32_t i) const { return nodes[static_cast<size_t>(i)]; }
};

enum class TreeStatus { Ok, OutOfFuel, BudgetExceeded };

struct TreeResult {
    TreeStatus status = TreeStatus::Ok;
    BacktrackTree tree;
    bool ok() const { return status == TreeStatus::Ok; }
};

// Builds the complete backtracking tree of the inductive semantics. The tree
// can be exponentially larger than the fuel bound; node_budget (0 = none)
// caps the arena for callers that only probe.
TreeResult build_tree(const MatchConfig& cfg, ActionList l, Input inp, GroupMap gm, Direction d,
                      uint64_t fuel, uint64_t node_budget = 0);

// Convenience: tree of [Areg r] at position pos with fuel(...)+1.
TreeResult build_tree_for(const MatchConfig& cfg, const RegexPtr& r, const TextPtr& s,
                          size_t pos, uint64_t node_budget = 0);

// All leaves in priority order, each reconstructed by replaying its branch
// from the initial state.
std::vector<Leaf> tree_leaves(const BacktrackTree& t, const Input& inp, const GroupMap& gm,
                              Direction d);

// Highest-priority (leftmost) leaf without collecting the rest.
std::optional<Leaf> first_leaf(const BacktrackTree& t, const Input& inp, const GroupMap& gm,
                               Direction d);

// Indented text, one node per line; Choice children labeled hi:/lo:.
std::string render_tree(const BacktrackTree& t);

}  // namespace bregex
