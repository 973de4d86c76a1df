#include "oort/discgeom.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace oort {

void ValuationMatrix::validate() const
{
    int n = size();
    if (n < 2)
        throw DomainError("a marked disc needs at least two points");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw DomainError("label count does not match the matrix");
    for (const auto& row : v)
        if (static_cast<int>(row.size()) != n)
            throw DomainError("valuation matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (v[i][j] != v[j][i])
                throw DomainError("valuation matrix must be symmetric");
            if (v[i][j] <= Rational(0))
                throw DomainError("points must lie in the open unit disc and be distinct");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::array<Rational, 3> t{v[i][j], v[j][k], v[i][k]};
                std::sort(t.begin(), t.end());
                if (t[0] != t[1])
                    throw DomainError("valuation matrix is not ultrametric at points " + std::to_string(i) + ", " +
                                      std::to_string(j) + ", " + std::to_string(k));
            }
}

ValuationMatrix valuation_matrix(const MarkedDisc& d)
{
    int n = static_cast<int>(d.points.size());
    ValuationMatrix m;
    m.v.assign(n, std::vector<Rational>(n, Rational(0)));
    m.labels = d.labels;
    if (m.labels.empty())
        for (int i = 0; i < n; ++i)
            m.labels.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) {
        const auto& x = d.points[i];
        if (!x.is_zero_to_precision() && x.valuation() <= Rational(0))
            throw DomainError("point " + m.labels[i] + " is not in the open unit disc");
        for (int j = i + 1; j < n; ++j) {
            PadicElement diff = x - d.points[j];
            if (diff.is_zero_to_precision())
                throw PrecisionError("points " + m.labels[i] + " and " + m.labels[j] +
                                     " coincide to working precision");
            m.v[i][j] = m.v[j][i] = diff.valuation();
        }
    }
    return m;
}

ClusterTree cluster_tree(const ValuationMatrix& m)
{
    m.validate();
    int n = m.size();
    ClusterTree tree;
    tree.matrix = m;
    tree.labels = m.labels;
    if (tree.labels.empty())
        for (int i = 0; i < n; ++i)
            tree.labels.push_back("x" + std::to_string(i + 1));

    std::set<std::vector<int>> balls;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            std::vector<int> ball;
            for (int k = 0; k < n; ++k)
                if (k == i || m.v[i][k] >= m.v[i][j])
                    ball.push_back(k);
            balls.insert(ball);
        }
    std::vector<std::vector<int>> order(balls.begin(), balls.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });

    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<int> parent(order.size(), -1);
    for (size_t b = 1; b < order.size(); ++b)
        for (size_t a = b; a-- > 0;)
            if (order[a].size() > order[b].size() && contains(order[a], order[b])) {
                parent[b] = static_cast<int>(a);
                break;
            }

    // Breadth-first numbering from the root, children ordered by their smallest point.
    std::vector<std::vector<int>> kids(order.size());
    for (size_t b = 1; b < order.size(); ++b)
        kids[parent[b]].push_back(static_cast<int>(b));
    std::vector<int> bfs{0}, id(order.size(), -1);
    for (size_t q = 0; q < bfs.size(); ++q) {
        auto& ks = kids[bfs[q]];
        std::sort(ks.begin(), ks.end(), [&](int a, int b) { return order[a].front() < order[b].front(); });
        bfs.insert(bfs.end(), ks.begin(), ks.end());
    }
    for (size_t i = 0; i < bfs.size(); ++i)
        id[bfs[i]] = static_cast<int>(i);

    for (int b : bfs) {
        ClusterVertex v;
        v.cluster = order[b];
        v.center = order[b].front();
        v.depth = m.v[order[b][0]][order[b][1]];
        for (int x : order[b])
            for (int y : order[b])
                if (x != y)
                    v.depth = std::min(v.depth, m.v[x][y]);
        if (parent[b] >= 0)
            v.parent = id[parent[b]];
        for (int k : kids[b])
            v.children.push_back(id[k]);
        tree.vertices.push_back(std::move(v));
    }

    tree.point_vertex.assign(n, 0);
    for (size_t v = 0; v < tree.vertices.size(); ++v)
        for (int x : tree.vertices[v].cluster)
            if (tree.vertices[v].cluster.size() <= tree.vertices[tree.point_vertex[x]].cluster.size())
                tree.point_vertex[x] = static_cast<int>(v);
    for (int x = 0; x < n; ++x)
        tree.vertices[tree.point_vertex[x]].points.push_back(x);

    for (size_t v = 0; v < tree.vertices.size(); ++v) {
        const auto& vx = tree.vertices[v];
        if (vx.points.size() + vx.children.size() + 1 < 3)
            throw DomainError("internal: unstable component in cluster tree");
        Rational above = vx.parent ? tree.vertices[*vx.parent].depth : Rational(0);
        if (vx.depth <= above)
            throw DomainError("internal: cluster depths do not increase");
        tree.edges.push_back(ClusterEdge{vx.parent, static_cast<int>(v), vx.depth - above});
    }
    return tree;
}

ClusterTree cluster_tree(const MarkedDisc& d)
{
    return cluster_tree(valuation_matrix(d));
}

Specialization specialize(const std::vector<std::optional<Rational>>& distances, const ClusterTree& tree)
{
    if (distances.size() != tree.point_vertex.size())
        throw DomainError("expected one distance per marked point");
    // Is x at distance > bound from the marked point c, treating nullopt as infinitely close?
    auto beyond = [&](int c, const Rational& bound, bool strict) {
        const auto& d = distances[c];
        return !d || (strict ? *d > bound : *d >= bound);
    };
    const auto& root = tree.vertices[0];
    if (!beyond(root.center, root.depth, false))
        return {Specialization::Kind::infinity, 0};
    int cur = 0;
    for (;;) {
        const auto& v = tree.vertices[cur];
        int next = -1;
        for (int c : v.children) {
            const auto& child = tree.vertices[c];
            if (!beyond(child.center, v.depth, true))
                continue;
            if (!beyond(child.center, child.depth, false))
                return {Specialization::Kind::node, c};
            next = c;
            break;
        }
        if (next < 0)
            return {Specialization::Kind::component, cur};
        cur = next;
    }
}

Specialization specialize(const PadicElement& x, const MarkedDisc& d, const ClusterTree& tree)
{
    std::vector<std::optional<Rational>> dist;
    for (const auto& y : d.points) {
        PadicElement diff = x - y;
        if (diff.is_zero_to_precision())
            dist.emplace_back();
        else
            dist.emplace_back(diff.valuation());
    }
    return specialize(dist, tree);
}

namespace {

std::string show(const Rational& q)
{
    return q.denominator() == 1 ? std::to_string(q.numerator()) : to_string(q);
}

std::string distance_to(const ClusterTree& tree, int point)
{
    const auto& label = tree.labels[point];
    return label == "0" ? "v(x)" : "v(x - " + label + ")";
}

}  // namespace

std::vector<SpecializationRow> specialization_table(const ClusterTree& tree)
{
    std::vector<SpecializationRow> rows;
    for (size_t i = 0; i < tree.vertices.size(); ++i) {
        const auto& v = tree.vertices[i];
        std::string region;
        if (v.children.empty()) {
            region = distance_to(tree, v.center) + " >= " + show(v.depth);
        } else {
            for (int c : v.children) {
                if (!region.empty())
                    region += " and ";
                region += distance_to(tree, tree.vertices[c].center) + " = " + show(v.depth);
            }
        }
        rows.push_back({{Specialization::Kind::component, static_cast<int>(i)}, region});
        if (v.parent)
            rows.push_back({{Specialization::Kind::node, static_cast<int>(i)},
                            show(tree.vertices[*v.parent].depth) + " < " + distance_to(tree, v.center) + " < " +
                                show(v.depth)});
    }
    const auto& root = tree.vertices[0];
    rows.push_back({{Specialization::Kind::infinity, 0}, distance_to(tree, root.center) + " < " + show(root.depth)});
    return rows;
}

std::string to_dot(const ClusterTree& tree)
{
    std::ostringstream out;
    out << "graph stable_model {\n  inf [label=\"inf\", shape=point];\n";
    for (size_t i = 0; i < tree.vertices.size(); ++i) {
        const auto& v = tree.vertices[i];
        out << "  X" << i + 1 << " [label=\"X" << i + 1;
        for (int x : v.points)
            out << "\\n" << tree.labels[x];
        out << "\"];\n";
    }
    for (const auto& e : tree.edges)
        out << "  " << (e.parent ? "X" + std::to_string(*e.parent + 1) : std::string("inf")) << " -- X" << e.child + 1
            << " [label=\"" << to_string(e.thickness) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace oort
