#include "labelkit/treegen.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "labelkit/canonical.hpp"
#include "labelkit/enumerate.hpp"

namespace labelkit {

namespace {

bool acyclicSpanning(const EdgeList& edges, int p) {
    // p-1 edges on labels {0..p-1}: acyclic iff a spanning tree
    std::vector<int> parent(p);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

EdgeList Selection::edges(int p) const {
    EdgeList e;
    for (int d = 1; d <= p - 1; ++d) e.push_back({low[d], low[d] + d});
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<SelectionRecord> diffRepEnumerate(int p) {
    if (p < 2 || p > 9) throw std::invalid_argument("diffRepEnumerate: 2 <= p <= 9");
    std::vector<SelectionRecord> out;
    Selection sel;
    sel.low.assign(p, 0);
    // odometer over low[d] in {0..p-1-d}, lexicographic on (low[1],...,low[p-1])
    while (true) {
        SelectionRecord rec;
        rec.selection = sel;
        rec.isTree = acyclicSpanning(sel.edges(p), p);
        out.push_back(std::move(rec));
        int d = p - 2;  // low[p-1] has a single choice
        while (d >= 1 && sel.low[d] == p - 1 - d) sel.low[d--] = 0;
        if (d < 1) break;
        ++sel.low[d];
    }
    return out;
}

std::set<LabeledTree> msGenerate(int p) {
    if (p < 2 || p > 8) throw std::invalid_argument("msGenerate: 2 <= p <= 8");
    int n = p - 1;
    LabeledTree start;
    for (int i = 1; i <= n; ++i) start.push_back({0, i});
    std::set<LabeledTree> seen = {start};
    std::deque<LabeledTree> queue = {start};
    while (!queue.empty()) {
        LabeledTree t = queue.front();
        queue.pop_front();
        for (auto [i, j] : t) {
            int d = j - i;
            for (int k = 0; k + d <= n; ++k) {
                std::pair<int, int> in{k, k + d};
                if (in == std::pair{i, j}) continue;
                if (std::find(t.begin(), t.end(), in) != t.end()) continue;
                LabeledTree next;
                for (auto e : t)
                    if (e != std::pair{i, j}) next.push_back(e);
                next.push_back(in);
                std::sort(next.begin(), next.end());
                if (!acyclicSpanning(next, p)) continue;
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return seen;
}

Prop63Audit prop63Audit(int p) {
    Prop63Audit a;
    for (auto& rec : diffRepEnumerate(p)) {
        ++a.selections;
        if (rec.isTree) ++a.treeSelections;
    }
    a.agree = (a.selections == a.treeSelections);
    return a;
}

TreeCensus gracefulTreeCensus(int p) {
    TreeCensus c;
    if (p == 1) {
        c.coveredClasses = c.totalClasses = 1;
        c.covered.insert(canonicalForm(Graph(1, {})).g6);
        return c;
    }
    for (auto& rec : diffRepEnumerate(p)) {
        if (!rec.isTree) continue;
        Graph t(p, rec.selection.edges(p));
        c.covered.insert(canonicalForm(t).g6);
    }
    c.coveredClasses = c.covered.size();
    c.totalClasses = enumerateGraphs(GraphKind::Trees, p).size();
    return c;
}

CoverageAudit coverageAudit(int p) {
    CoverageAudit a;
    std::set<LabeledTree> diffRep;
    for (auto& rec : diffRepEnumerate(p))
        if (rec.isTree) diffRep.insert(rec.selection.edges(p));
    auto ms = msGenerate(p);
    a.msEqualsDiffRepTrees = (ms == diffRep);
    for (auto& t : diffRep)
        if (!ms.count(t)) a.missingLabelings.push_back(t);
    std::set<std::string> msClasses;
    for (auto& t : ms) msClasses.insert(canonicalForm(Graph(p, t)).g6);
    a.msCoversAllTreeClasses = msClasses.size() == enumerateGraphs(GraphKind::Trees, p).size();
    return a;
}

TreeAttractSurveyResult treeAttractSurvey(int order, const SearchBudget& budget) {
    if (order < 2 || order > 9) throw std::invalid_argument("treeAttractSurvey: 2 <= order <= 9");
    TreeAttractSurveyResult res;
    res.order = order;
    for (auto& t : enumerateGraphs(GraphKind::Trees, order)) {
        TreeAttractRow row;
        row.tree = t;
        row.key = canonicalForm(t).g6;
        row.zeroAttractive.assign(order, false);
        for (int v = 0; v < order; ++v) {
            GracefulConstraints cons;
            cons.fixedNodeLabels = {{v, 0}};
            row.zeroAttractive[v] = findGraceful(t, budget, cons).found();
            if (!row.zeroAttractive[v]) row.hasZeroRepellingNode = true;
            if (row.zeroAttractive[v] && t.degree(v) == 1) row.hasZeroAttractiveEndnode = true;
        }
        if (row.hasZeroRepellingNode) res.anyZeroRepelling = true;
        if (!row.hasZeroAttractiveEndnode) res.everyTreeHasZeroAttractiveEndnode = false;
        res.rows.push_back(std::move(row));
    }
    return res;
}

std::optional<int> minimalZeroRepellingOrder(int maxOrder, const SearchBudget& budget) {
    for (int p = 2; p <= maxOrder; ++p)
        if (treeAttractSurvey(p, budget).anyZeroRepelling) return p;
    return std::nullopt;
}

}  // namespace labelkit
