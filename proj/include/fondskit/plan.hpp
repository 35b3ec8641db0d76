#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fondskit/signature.hpp"

namespace fondskit {

struct PlanNode {
    CategoryCode code;
    std::string label;
    std::vector<PlanNode> children; // sorted: series by letter, sub-series by number

    bool operator==(const PlanNode &) const = default;
};

/// The five root categories every plan starts from, A through E.
extern const std::array<std::pair<char, const char *>, 5> kDefaultRoots;

/// Per-fonds classification tree mediating physical and intellectual order.
/// Always rooted at the five fixed categories; series and sub-series encode
/// the specificity of each author.
struct ClassificationPlan {
    FondsCode fonds;
    std::vector<PlanNode> roots; // exactly five, A..E

    bool operator==(const ClassificationPlan &) const = default;
};

ClassificationPlan default_plan(const FondsCode &fonds);

/// Loads a plan from CSV with header `code,label`. Roots may be omitted
/// (created with default labels) or listed to override their label.
/// Throws DuplicateCode, OrphanCode (child without its parent, or a code
/// outside the grammar) and BadLabel.
ClassificationPlan load_plan(std::string_view csv_text, const FondsCode &fonds);

/// Canonical CSV rendering, depth-first with roots included;
/// load_plan(format_plan(p)) == p.
std::string format_plan(const ClassificationPlan &plan);

/// Root-to-node path for a code, e.g. AA1 -> [A, AA, AA1].
/// Throws UnknownCode when the code is not in the tree.
std::vector<const PlanNode *> resolve(const ClassificationPlan &plan, const CategoryCode &code);

bool plan_contains(const ClassificationPlan &plan, const CategoryCode &code);

/// Depth-first, sibling-ordered listing of every code in the tree.
std::vector<CategoryCode> enumerate_leaves(const ClassificationPlan &plan);

} // namespace fondskit
