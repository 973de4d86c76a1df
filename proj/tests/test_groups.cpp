#include <doctest.h>

#include <random>
#include <set>

#include "oort/groups.hpp"

using namespace oort;

namespace {

// Naive closure: multiply everything by everything until nothing new appears.
std::set<int> naive_closure(const FiniteGroup& G, std::set<int> S)
{
    S.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(S.begin(), S.end());
        for (int a : cur)
            for (int b : cur)
                grew |= S.insert(G.mul(a, b)).second;
    }
    return S;
}

// Every subgroup of these groups is generated by two elements.
std::set<std::set<int>> two_generated_subgroups(const FiniteGroup& G)
{
    std::set<std::set<int>> out;
    for (int a = 0; a < G.size(); ++a)
        for (int b = a; b < G.size(); ++b)
            out.insert(naive_closure(G, {a, b}));
    return out;
}

std::set<int> as_set(const Subgroup& S)
{
    std::set<int> out;
    for (auto x = S.find_first(); x != Subgroup::npos; x = S.find_next(x))
        out.insert(static_cast<int>(x));
    return out;
}

Subgroup subgroup_of(const FiniteGroup& G, int g)
{
    return cyclic_subgroup(G, g);
}

}  // namespace

TEST_CASE("group construction")
{
    for (auto G : {metacyclic_group(3, 1, 2, -1), metacyclic_group(3, 2, 2, -1), metacyclic_group(5, 1, 4, 2),
                   metacyclic_group(7, 1, 3, 2), metacyclic_group(5, 2, 4, 7), bicyclic_group(5)}) {
        CHECK(G.size() <= 200);
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < G.size(); ++b)
                for (int c = 0; c < G.size(); c += 1 + G.size() / 20)
                    CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
    }
    auto D = metacyclic_group(5, 1, 2, -1);
    for (int a = 0; a < D.size(); ++a)
        for (int b = 0; b < D.size(); ++b)
            for (int c = 0; c < D.size(); ++c)
                REQUIRE(D.mul(D.mul(a, b), c) == D.mul(a, D.mul(b, c)));
    CHECK_THROWS_AS(metacyclic_group(5, 1, 2, 2), DomainError);
    CHECK_THROWS_AS(metacyclic_group(3, 1, 3, 1), DomainError);
    CHECK(default_character(5, 1, 4) == 2);
    CHECK(default_character(3, 2, 2) == 8);
}

TEST_CASE("subgroup enumeration")
{
    CHECK(subgroups(bicyclic_group(3)).size() == 6);
    CHECK(subgroups(metacyclic_group(5, 1, 2, -1)).size() == 8);
    CHECK(subgroups(metacyclic_group(3, 2, 2, -1)).size() == 16);

    for (auto G : {bicyclic_group(3), bicyclic_group(5), metacyclic_group(3, 1, 2, -1), metacyclic_group(5, 1, 2, -1),
                   metacyclic_group(3, 2, 2, -1), metacyclic_group(5, 1, 4, 2), metacyclic_group(7, 1, 3, 2),
                   metacyclic_group(7, 1, 6, 3), metacyclic_group(13, 1, 4, 5), metacyclic_group(5, 2, 4, 7)}) {
        auto subs = subgroups(G);
        std::set<std::set<int>> got;
        for (const auto& S : subs) {
            CHECK(S.test(0));
            for (auto a = S.find_first(); a != Subgroup::npos; a = S.find_next(a))
                for (auto b = S.find_first(); b != Subgroup::npos; b = S.find_next(b))
                    REQUIRE(S.test(G.mul(static_cast<int>(a), static_cast<int>(b))));
            got.insert(as_set(S));
        }
        CHECK(got.size() == subs.size());
        CHECK(got == two_generated_subgroups(G));
    }
}

TEST_CASE("characteristic zero divisor degrees")
{
    auto D3 = metacyclic_group(3, 1, 2, -1);
    // gamma_1 = (0,1), gamma_2 = (1,1), g = (1,0): (0,1)(1,1) = (-1, 0), times (1,0) is the identity.
    BranchCycleDescription bcd{{3, 4, 1}};
    bcd.validate(D3);
    CHECK(ram_divisor_char0(D3, bcd, whole_group(D3)) == 10);
    CHECK(ram_divisor_char0(D3, bcd, trivial_subgroup(D3)) == 0);

    auto V = bicyclic_group(3);
    BranchCycleDescription bad{{3, 4, 5, 1, 1}};
    CHECK_THROWS_AS(bad.validate(V), DomainError);
    BranchCycleDescription good{{3, 4, 5, 2, 1}};
    // (0,1)+(1,1)+(2,1)+(2,0)+(1,0) = (6,3) = (0,0).
    good.validate(V);
    CHECK(ram_divisor_char0(V, good, subgroup_of(V, 1)) == 2 * 3 * 2);
    CHECK(ram_divisor_char0(V, good, subgroup_of(V, 3)) == 1 * 3 * 2);

    std::mt19937 rng(41);
    for (auto G : {metacyclic_group(3, 1, 2, -1), metacyclic_group(3, 2, 2, -1), metacyclic_group(5, 1, 4, 2),
                   bicyclic_group(3)}) {
        std::uniform_int_distribution<int> pick(1, G.size() - 1);
        int made = 0;
        while (made < 30) {
            std::vector<int> t;
            int prod = 0;
            int len = 2 + static_cast<int>(rng() % 4);
            for (int i = 0; i < len; ++i) {
                t.push_back(pick(rng));
                prod = G.mul(prod, t.back());
            }
            if (prod == 0)
                continue;
            t.push_back(G.inv(prod));
            BranchCycleDescription b{t};
            try {
                b.validate(G);
            } catch (const DomainError&) {
                continue;
            }
            std::int64_t hurwitz = 0;
            for (int g : t)
                hurwitz += (G.size() / G.order(g)) * (G.order(g) - 1);
            CHECK(ram_divisor_char0(G, b, whole_group(G)) == hurwitz);
            ++made;
        }
    }
}

TEST_CASE("characteristic p divisor degrees")
{
    auto D3 = metacyclic_group(3, 1, 2, -1);
    auto kg = metacyclic_cover(D3, 1);
    CHECK(ram_divisor_charp(D3, kg, whole_group(D3)) == 10);
    CHECK(ram_divisor_charp(D3, kg, trivial_subgroup(D3)) == 0);

    auto V = bicyclic_group(3);
    auto kv = bicyclic_cover(V, 2, 5);
    CHECK(ram_divisor_charp(V, kv, subgroup_of(V, 1)) == 12);
    CHECK(ram_divisor_charp(V, kv, subgroup_of(V, 3)) == 6);
    CHECK(ram_divisor_charp(V, kv, whole_group(V)) == 3 * 8 + 3 * 2);

    CHECK(metacyclic_lower_jumps(3, 2, {Rational(1, 2), Rational(3, 2)}) == std::vector<std::int64_t>{1, 7});
    auto G = metacyclic_group(3, 2, 2, -1);
    CHECK(ram_divisor_charp(G, metacyclic_cover(G, 1), whole_group(G)) == 46);
    CHECK_THROWS_AS(metacyclic_lower_jumps(3, 2, {Rational(1, 2), Rational(3, 4)}), DomainError);

    for (auto [Gp, cover] : std::vector<std::pair<FiniteGroup, KatzGabberCover>>{
             {D3, kg}, {V, kv}, {G, metacyclic_cover(G, 1)}, {G, metacyclic_cover(G, 3)}}) {
        auto subs = subgroups(Gp);
        for (const auto& A : subs)
            for (const auto& B : subs)
                if (A.is_subset_of(B))
                    CHECK(ram_divisor_charp(Gp, cover, A) <= ram_divisor_charp(Gp, cover, B));
    }
}
