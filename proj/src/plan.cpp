#include "fondskit/plan.hpp"

#include <algorithm>
#include <map>

#include "fondskit/csv.hpp"
#include "fondskit/errors.hpp"

namespace fondskit {

const std::array<std::pair<char, const char *>, 5> kDefaultRoots = { {
    { 'A', "Obras, creaciones, producciones" },
    { 'B', "Correspondencia" },
    { 'C', "Documentación" },
    { 'D', "Archivo biográfico" },
    { 'E', "Recepción" },
} };

ClassificationPlan default_plan(const FondsCode &fonds) {
    ClassificationPlan plan{ fonds, {} };
    for (const auto &[letter, label] : kDefaultRoots)
        plan.roots.push_back(PlanNode{ CategoryCode{ std::string(1, letter) }, label, {} });
    return plan;
}

namespace {

// series before sub-series is implied by depth; siblings share a depth,
// so letters compare lexicographically and sub-series numbers numerically
bool sibling_less(const PlanNode &a, const PlanNode &b) {
    if (a.code.depth() == 2 && b.code.depth() == 2 && a.code.code.substr(0, 2) == b.code.code.substr(0, 2))
        return std::stoi(a.code.code.substr(2)) < std::stoi(b.code.code.substr(2));
    return a.code.code < b.code.code;
}

void sort_tree(std::vector<PlanNode> &nodes) {
    std::sort(nodes.begin(), nodes.end(), sibling_less);
    for (PlanNode &node : nodes)
        sort_tree(node.children);
}

void walk(const PlanNode &node, std::vector<const PlanNode *> &out) {
    out.push_back(&node);
    for (const PlanNode &child : node.children)
        walk(child, out);
}

std::vector<const PlanNode *> all_nodes(const ClassificationPlan &plan) {
    std::vector<const PlanNode *> out;
    for (const PlanNode &root : plan.roots)
        walk(root, out);
    return out;
}

} // namespace

ClassificationPlan load_plan(std::string_view csv_text, const FondsCode &fonds) {
    ClassificationPlan plan = default_plan(fonds);
    if (csv_text.empty())
        return plan;

    const csv::Table table = csv::parse(csv_text);
    if (table.header != csv::Row{ "code", "label" })
        throw SchemaMismatch("plan file must have header code,label");

    std::map<std::string, std::string> labels; // declared codes
    for (const csv::Row &row : table.rows) {
        const std::string &code = row[0];
        const std::string &label = row[1];
        if (!CategoryCode::valid(code))
            throw OrphanCode("\"" + code + "\" is not a valid category code");
        if (label.empty())
            throw BadLabel("empty label for code " + code);
        if (!labels.emplace(code, label).second)
            throw DuplicateCode("code " + code + " declared twice");
    }

    // root overrides
    for (PlanNode &root : plan.roots) {
        if (const auto it = labels.find(root.code.code); it != labels.end()) {
            root.label = it->second;
            labels.erase(it);
        }
    }
    // series must exist before their sub-series, regardless of row order
    for (const auto &[code, label] : labels) {
        const CategoryCode parsed = CategoryCode::parse(code);
        if (parsed.depth() == 2 && !labels.contains(parsed.parent()->code))
            throw OrphanCode("sub-series " + code + " declared without series " + parsed.parent()->code);
    }
    for (const auto &[code, label] : labels) {
        const CategoryCode parsed = CategoryCode::parse(code);
        if (parsed.depth() != 1)
            continue;
        PlanNode &root = plan.roots[parsed.root() - 'A'];
        root.children.push_back(PlanNode{ parsed, label, {} });
        PlanNode &series = root.children.back();
        for (const auto &[sub_code, sub_label] : labels) {
            if (sub_code.size() > 2 && sub_code.substr(0, 2) == code)
                series.children.push_back(PlanNode{ CategoryCode{ sub_code }, sub_label, {} });
        }
    }
    sort_tree(plan.roots);
    return plan;
}

std::string format_plan(const ClassificationPlan &plan) {
    csv::Table table;
    table.header = { "code", "label" };
    for (const PlanNode *node : all_nodes(plan))
        table.rows.push_back({ node->code.code, node->label });
    return csv::render(table);
}

std::vector<const PlanNode *> resolve(const ClassificationPlan &plan, const CategoryCode &code) {
    if (!CategoryCode::valid(code.code))
        throw UnknownCode("\"" + code.code + "\" is not a category code");

    std::vector<const PlanNode *> path;
    const PlanNode *node = &plan.roots[code.root() - 'A'];
    path.push_back(node);
    for (int depth = 1; depth <= code.depth(); ++depth) {
        const std::string prefix = code.code.substr(0, depth == 1 ? 2 : code.code.size());
        const auto child = std::find_if(node->children.begin(), node->children.end(),
                                        [&](const PlanNode &c) { return c.code.code == prefix; });
        if (child == node->children.end())
            throw UnknownCode("code " + code.code + " is not in the plan");
        node = &*child;
        path.push_back(node);
    }
    return path;
}

bool plan_contains(const ClassificationPlan &plan, const CategoryCode &code) {
    try {
        resolve(plan, code);
        return true;
    } catch (const UnknownCode &) {
        return false;
    }
}

std::vector<CategoryCode> enumerate_leaves(const ClassificationPlan &plan) {
    std::vector<CategoryCode> codes;
    for (const PlanNode *node : all_nodes(plan))
        codes.push_back(node->code);
    return codes;
}

} // namespace fondskit
