#include <doctest.h>

#include <functional>

#include "oort/kgb.hpp"

using namespace oort;

namespace {

// Every product-one generating tuple of the given length whose divisor degrees balance for all subgroups.
int count_balanced_tuples(const FiniteGroup& G, const KatzGabberCover& kg, int length)
{
    auto subs = subgroups(G);
    std::vector<std::int64_t> target;
    for (const auto& H : subs)
        target.push_back(ram_divisor_charp(G, kg, H));
    int hits = 0;
    std::vector<int> t(length);
    std::function<void(int, int)> rec = [&](int i, int prod) {
        if (i == length - 1) {
            t[i] = G.inv(prod);
            if (t[i] == 0)
                return;
            BranchCycleDescription b{t};
            try {
                b.validate(G);
            } catch (const DomainError&) {
                return;
            }
            for (size_t h = 0; h < subs.size(); ++h)
                if (ram_divisor_char0(G, b, subs[h]) != target[h])
                    return;
            ++hits;
            return;
        }
        for (int g = 1; g < G.size(); ++g) {
            t[i] = g;
            rec(i + 1, G.mul(prod, g));
        }
    };
    rec(0, 0);
    return hits;
}

std::int64_t p_power(int p, int k)
{
    return ipow(p, static_cast<unsigned>(k));
}

// Closed forms for Z/p^n x| Z/m on a subgroup of order p^{n'} m'.
std::pair<Rational, Rational> metacyclic_closed_forms(int p, int n, int m, const std::vector<Rational>& u, int np,
                                                      int mp)
{
    Rational rx(2 * p_power(p, np) * (mp - 1));
    Rational ry(p_power(p, np) * (mp - 1) + p_power(p, np) * mp - 1);
    Rational prev(0);
    for (int i = 1; i <= n; ++i) {
        Rational r = i == 1 ? u[0] + Rational(1, m) : u[i - 1] - u[i - 2];
        std::int64_t w = p_power(p, std::min(np, n - i + 1)) - 1;
        rx += r * Rational(m * p_power(p, i - 1) * w);
        ry += Rational(m * p_power(p, i - 1) * w) * (u[i - 1] - prev);
        prev = u[i - 1];
    }
    return {rx, ry};
}

}  // namespace

TEST_CASE("zpzp predicate")
{
    CHECK_FALSE(kgb_zpzp(3, 2, 2).vanishes);
    CHECK(kgb_zpzp(3, 2, 5).vanishes);
    CHECK_FALSE(kgb_zpzp(5, 3, 3).vanishes);
    CHECK_THROWS_AS(kgb_zpzp(3, 2, 4), DomainError);
    CHECK_THROWS_AS(kgb_zpzp(3, 5, 2), DomainError);
    CHECK_THROWS_AS(kgb_zpzp(3, 3, 6), DomainError);
    CHECK_THROWS_AS(kgb_zpzp(2, 1, 3), DomainError);
}

TEST_CASE("metacyclic predicate")
{
    CHECK(kgb_metacyclic(5, 1, 2, -1, 1).vanishes);
    CHECK_FALSE(kgb_metacyclic(5, 1, 4, 2, 2).vanishes);
    CHECK(kgb_metacyclic(3, 2, 2, -1, 1).vanishes);
    CHECK_THROWS_WITH_AS(kgb_metacyclic(5, 1, 2, 1, 1), doctest::Contains("use cyclic path"), DomainError);
    // chi = 4 has order 2 in (Z/5)^x, so with m = 4 the action is not faithful.
    CHECK_THROWS_AS(kgb_metacyclic(5, 1, 4, 4, 3), DomainError);
    CHECK_FALSE(kgb_metacyclic(5, 1, 4, 4, 2).vanishes);
}

TEST_CASE("zpzp witness search")
{
    auto V = bicyclic_group(3);
    CHECK_FALSE(kgb_witness_search(V, bicyclic_cover(V, 2, 2)).has_value());
    CHECK(count_balanced_tuples(V, bicyclic_cover(V, 2, 2), 4) == 0);

    auto w = kgb_witness_search(V, bicyclic_cover(V, 2, 5));
    REQUIRE(w.has_value());
    CHECK(w->elements.size() == 5);
    std::map<Subgroup, int> shape;
    for (int g : w->elements)
        ++shape[cyclic_subgroup(V, g)];
    CHECK(shape[cyclic_subgroup(V, 1)] == 2);
    for (int i = 0; i < 3; ++i)
        CHECK(shape[cyclic_subgroup(V, i + 3)] == 1);
    auto table = kgb_table(V, bicyclic_cover(V, 2, 5), w);
    for (const auto& row : table)
        CHECK(*row.r_x == row.r_y);
    CHECK(count_balanced_tuples(V, bicyclic_cover(V, 2, 5), 5) > 0);

    for (int p : {3, 5}) {
        auto G = bicyclic_group(p);
        for (int m1 = 1; m1 <= 9; ++m1)
            for (int m2 = m1; m2 <= 9; m2 += p) {
                if (m1 % p == 0)
                    continue;
                bool predicted = kgb_zpzp(p, m1, m2).vanishes;
                bool found = kgb_witness_search(G, bicyclic_cover(G, m1, m2)).has_value();
                CHECK_MESSAGE(predicted == found, "p=" << p << " m1=" << m1 << " m2=" << m2);
            }
    }
}

TEST_CASE("metacyclic witness search")
{
    auto D3 = metacyclic_group(3, 1, 2, -1);
    auto w = kgb_witness_search(D3, metacyclic_cover(D3, 1));
    REQUIRE(w.has_value());
    CHECK(w->elements.size() == 3);
    CHECK(count_balanced_tuples(D3, metacyclic_cover(D3, 1), 3) > 0);

    for (int p : {3, 5, 7})
        for (int h = 1; h < p; h += 2) {
            auto D = metacyclic_group(p, 1, 2, -1);
            CHECK_MESSAGE(kgb_witness_search(D, metacyclic_cover(D, h)).has_value(), "p=" << p << " h=" << h);
        }
    auto D5 = metacyclic_group(5, 1, 2, -1);
    CHECK_FALSE(kgb_witness_search(D5, metacyclic_cover(D5, 2)).has_value());

    struct Case {
        int p, n, m;
        std::int64_t chi, h;
    };
    for (auto c : {Case{3, 1, 2, -1, 1}, Case{3, 2, 2, -1, 1}, Case{5, 1, 4, 2, 3}, Case{7, 1, 3, 2, 2},
                   Case{5, 1, 2, -1, 3}}) {
        auto G = metacyclic_group(c.p, c.n, c.m, c.chi);
        auto kg = metacyclic_cover(G, c.h);
        auto wit = kgb_witness_search(G, kg);
        REQUIRE(wit.has_value());
        std::vector<Rational> u{Rational(c.h, c.m)};
        for (int i = 1; i < c.n; ++i)
            u.push_back(u.back() * Rational(c.p));
        for (const auto& row : kgb_table(G, kg, wit)) {
            int order = subgroup_order(row.subgroup);
            int np = vp_int(order, c.p), mp = static_cast<int>(order / ipow(c.p, np));
            auto [rx, ry] = metacyclic_closed_forms(c.p, c.n, c.m, u, np, mp);
            CHECK(*row.r_x == row.r_y);
            CHECK(Rational(row.r_y) == ry);
            CHECK(Rational(*row.r_x) == rx);
        }
    }
}
