#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oort/discgeom.hpp"

using namespace oort;

namespace {

MarkedDisc example_disc()
{
    auto R = EisensteinRing::create(5, 1, {-5, 0}, 16);
    auto a = PadicElement::pi(R);
    auto n = [&](int k) { return PadicElement::from_int(R, k); };
    return {R, {n(0), n(5), n(10), n(25), n(5) * a, n(5) + n(5) * a}, {"0", "5", "10", "25", "5a", "5+5a"}};
}

std::set<int> as_set(const std::vector<int>& v)
{
    return {v.begin(), v.end()};
}

// Clusters as connected components of v(x - y) >= d, for every depth d that occurs.
std::set<std::set<int>> naive_clusters(const ValuationMatrix& m)
{
    int n = m.size();
    std::set<Rational> depths;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            depths.insert(m.v[i][j]);
    std::set<std::set<int>> out;
    for (const auto& d : depths) {
        std::vector<int> comp(n);
        for (int i = 0; i < n; ++i)
            comp[i] = i;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && m.v[i][j] >= d && comp[j] < comp[i]) {
                        comp[i] = comp[j];
                        changed = true;
                    }
        }
        std::map<int, std::set<int>> groups;
        for (int i = 0; i < n; ++i)
            groups[comp[i]].insert(i);
        for (const auto& [k, g] : groups)
            if (g.size() >= 2)
                out.insert(g);
    }
    return out;
}

ValuationMatrix integer_matrix(const std::vector<std::int64_t>& xs, int p)
{
    ValuationMatrix m;
    int n = static_cast<int>(xs.size());
    m.v.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                m.v[i][j] = Rational(vp_int(xs[i] - xs[j], p));
    return m;
}

}  // namespace

TEST_CASE("six points over Z_5[sqrt 5]")
{
    auto disc = example_disc();
    auto tree = cluster_tree(disc);
    REQUIRE(tree.vertices.size() == 4);

    std::map<std::set<int>, int> by_cluster;
    for (size_t i = 0; i < tree.vertices.size(); ++i)
        by_cluster[as_set(tree.vertices[i].cluster)] = static_cast<int>(i);
    int x3 = by_cluster.at({0, 1, 2, 3, 4, 5});
    int x2 = by_cluster.at({0, 3, 4});
    int x1 = by_cluster.at({0, 3});
    int x4 = by_cluster.at({1, 5});
    CHECK(x3 == 0);
    CHECK(tree.vertices[x1].depth == Rational(2));
    CHECK(tree.vertices[x2].depth == Rational(3, 2));
    CHECK(tree.vertices[x3].depth == Rational(1));
    CHECK(tree.vertices[x4].depth == Rational(3, 2));
    CHECK(as_set(tree.vertices[x1].points) == std::set<int>{0, 3});
    CHECK(as_set(tree.vertices[x2].points) == std::set<int>{4});
    CHECK(as_set(tree.vertices[x3].points) == std::set<int>{2});
    CHECK(as_set(tree.vertices[x4].points) == std::set<int>{1, 5});

    std::map<int, Rational> thickness;
    for (const auto& e : tree.edges)
        thickness.emplace(e.child, e.thickness);
    CHECK(thickness.at(x3) == Rational(1));
    CHECK(thickness.at(x2) == Rational(1, 2));
    CHECK(thickness.at(x1) == Rational(1, 2));
    CHECK(thickness.at(x4) == Rational(1, 2));

    auto rows = specialization_table(tree);
    REQUIRE(rows.size() == 8);
    std::set<std::string> regions;
    for (const auto& r : rows)
        regions.insert(r.region);
    for (const char* expect : {"v(x) >= 2", "3/2 < v(x) < 2", "v(x) = 3/2", "1 < v(x) < 3/2",
                               "v(x) = 1 and v(x - 5) = 1", "1 < v(x - 5) < 3/2", "v(x - 5) >= 3/2", "v(x) < 1"})
        CHECK_MESSAGE(regions.count(expect), std::string(expect));

    auto R = disc.ring;
    auto a = PadicElement::pi(R);
    auto n = [&](int k) { return PadicElement::from_int(R, k); };
    auto sp = [&](const PadicElement& x) { return specialize(x, disc, tree); };
    CHECK(sp(a).kind == Specialization::Kind::infinity);
    CHECK(sp(n(25)).kind == Specialization::Kind::component);
    CHECK(sp(n(25)).vertex == x1);
    CHECK(sp(n(125)).vertex == x1);
    CHECK(sp(n(5) * a).vertex == x2);
    CHECK(sp(n(15)).vertex == x3);
    CHECK(sp(n(5) + n(25) * a).vertex == x4);
    CHECK(sp(n(25) + n(25) * a).vertex == x1);
    CHECK(sp(n(5) * a + n(25)).vertex == x2);

    // Annuli have no points over R itself; feed distances from a ramified extension directly.
    auto q = [](int a, int b) { return std::optional<Rational>(Rational(a, b)); };
    auto inner = specialize({q(7, 4), q(1, 1), q(1, 1), q(7, 4), q(3, 2), q(1, 1)}, tree);
    CHECK(inner.kind == Specialization::Kind::node);
    CHECK(inner.vertex == x1);
    auto outer = specialize({q(5, 4), q(1, 1), q(1, 1), q(5, 4), q(5, 4), q(1, 1)}, tree);
    CHECK(outer.kind == Specialization::Kind::node);
    CHECK(outer.vertex == x2);
    auto side = specialize({q(1, 1), q(5, 4), q(1, 1), q(1, 1), q(1, 1), q(5, 4)}, tree);
    CHECK(side.kind == Specialization::Kind::node);
    CHECK(side.vertex == x4);
    for (int i = 0; i < 6; ++i) {
        auto s = sp(disc.points[i]);
        CHECK(s.kind == Specialization::Kind::component);
        CHECK(s.vertex == tree.point_vertex[i]);
    }
    CHECK(to_dot(tree).find("X1 -- X2") != std::string::npos);
}

TEST_CASE("small discs")
{
    auto R = EisensteinRing::create(3, 1, {-3, 0}, 12);
    auto pi = PadicElement::pi(R);
    auto tree = cluster_tree(MarkedDisc{R, {pi, -pi}, {}});
    REQUIRE(tree.vertices.size() == 1);
    CHECK(tree.vertices[0].depth == Rational(1, 2));
    CHECK(tree.edges[0].thickness == Rational(1, 2));
    CHECK(tree.vertices[0].points.size() == 2);

    auto one = PadicElement::from_int(R, 1);
    CHECK_THROWS_AS(cluster_tree(MarkedDisc{R, {pi, pi}, {}}), DomainError);
    CHECK_THROWS_AS(cluster_tree(MarkedDisc{R, {pi, one}, {}}), DomainError);
    CHECK_THROWS_AS(cluster_tree(MarkedDisc{R, {pi}, {}}), DomainError);

    ValuationMatrix bad{{{Rational(0), Rational(1), Rational(2)},
                         {Rational(1), Rational(0), Rational(3)},
                         {Rational(2), Rational(3), Rational(0)}},
                        {}};
    CHECK_THROWS_WITH_AS(cluster_tree(bad), doctest::Contains("ultrametric"), DomainError);
}

TEST_CASE("cluster tree properties")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int p = trial % 2 ? 2 : 3;
        int n = 2 + static_cast<int>(rng() % 7);
        std::set<std::int64_t> pool;
        while (static_cast<int>(pool.size()) < n)
            pool.insert(p * static_cast<std::int64_t>(rng() % 200));
        std::vector<std::int64_t> xs(pool.begin(), pool.end());
        auto m = integer_matrix(xs, p);
        auto tree = cluster_tree(m);

        std::set<std::set<int>> got;
        for (const auto& v : tree.vertices)
            got.insert(as_set(v.cluster));
        CHECK(got == naive_clusters(m));

        for (const auto& A : got)
            for (const auto& B : got) {
                std::vector<int> common;
                std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
                CHECK((common.empty() || common.size() == A.size() || common.size() == B.size()));
            }

        for (size_t v = 0; v < tree.vertices.size(); ++v) {
            Rational sum(0);
            std::optional<int> cur = static_cast<int>(v);
            while (cur) {
                sum += tree.edges[*cur].thickness;
                cur = tree.vertices[*cur].parent;
            }
            CHECK(sum == tree.vertices[v].depth);
        }

        for (int i = 0; i < n; ++i) {
            std::vector<std::optional<Rational>> d;
            for (int j = 0; j < n; ++j)
                d.push_back(i == j ? std::nullopt : std::optional<Rational>(m.v[i][j]));
            auto s = specialize(d, tree);
            CHECK(s.kind == Specialization::Kind::component);
            CHECK(s.vertex == tree.point_vertex[i]);
        }
        // Distinct marked points on one component have distinct reductions.
        for (const auto& v : tree.vertices)
            for (int x : v.points)
                for (int y : v.points)
                    if (x != y)
                        CHECK(m.v[x][y] == v.depth);
    }
}
