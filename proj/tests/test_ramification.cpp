#include <doctest.h>

#include <random>

#include "oort/ramification.hpp"

using namespace oort;

namespace {

using Q = Rational;

// Sum of |G_i| - 1 over integers i >= 0, straight from the step function.
std::int64_t brute_different(const RamFiltration& f)
{
    std::int64_t d = 0;
    for (std::int64_t i = 0;; ++i) {
        std::int64_t o = f.order_at(Q(i));
        if (o == 1)
            return d;
        d += o - 1;
    }
}

RamFiltration random_lower(std::mt19937& rng, int p, int n, std::int64_t m)
{
    std::uniform_int_distribution<int> step(1, 6);
    RamFiltration f{Numbering::lower, m * ipow(p, n), {}};
    if (m > 1)
        f.breaks.emplace_back(Q(0), ipow(p, n));
    std::int64_t t = 0, o = ipow(p, n);
    while (o > 1) {
        t += step(rng);
        std::uniform_int_distribution<int> cut(1, vp_int(o, p));
        o /= ipow(p, cut(rng));
        f.breaks.emplace_back(Q(t), o);
    }
    return f;
}

}  // namespace

TEST_CASE("herbrand examples")
{
    RamFiltration single{Numbering::lower, 5, {{Q(4), 1}}};
    CHECK(herbrand_upper_from_lower(single).breaks[0].first == Q(4));

    for (int p : {2, 3, 5}) {
        for (int u1 = 1; u1 < 5; ++u1) {
            int u2 = p * u1 + 1;
            RamFiltration lower{Numbering::lower, p * p, {{Q(u1), p}, {Q(u1 + p * (u2 - u1)), 1}}};
            auto upper = herbrand_upper_from_lower(lower);
            CHECK(upper.jumps() == std::vector<Q>{Q(u1), Q(u2)});
            CHECK(herbrand_lower_from_upper(upper) == lower);
        }
    }

    RamFiltration dihedral{Numbering::lower, 6, {{Q(0), 3}, {Q(1), 1}}};
    CHECK(herbrand_upper_from_lower(dihedral).jumps() == std::vector<Q>{Q(0), Q(1, 2)});

    auto up = cyclic_upper_filtration(3, {Q(1), Q(3)});
    CHECK(herbrand_lower_from_upper(up).jumps() == std::vector<Q>{Q(1), Q(1 + 3 * 2)});

    RamFiltration bad{Numbering::upper, 9, {{Q(1), 3}, {Q(3, 2), 1}}};
    CHECK_THROWS_WITH_AS(herbrand_lower_from_upper(bad), doctest::Contains("inconsistent filtration"), DomainError);
}

TEST_CASE("herbrand round trip on random filtrations")
{
    std::mt19937 rng(17);
    int count = 0;
    for (int p : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 0; k < 84; ++k) {
                std::int64_t m = (k % 3 == 0) ? 1 : (p == 2 ? 3 : 2);
                auto f = random_lower(rng, p, n, m);
                auto g = herbrand_upper_from_lower(f);
                CHECK(herbrand_lower_from_upper(g) == f);
                for (const auto& t : f.jumps())
                    CHECK(herbrand_psi(f, herbrand_phi(f, t)) == t);
                ++count;
            }
        }
    }
    CHECK(count >= 1000);
}

TEST_CASE("different from lower filtration")
{
    CHECK(different_from_lower(RamFiltration{Numbering::lower, 1, {}}) == 0);
    for (int p : {3, 5, 7}) {
        RamFiltration dp{Numbering::lower, 2 * p, {{Q(0), p}, {Q(1), 1}}};
        CHECK(different_from_lower(dp) == 3 * p - 2);
        for (int u = 1; u < 6; ++u)
            CHECK(different_from_lower(RamFiltration{Numbering::lower, p, {{Q(u), 1}}}) == (u + 1) * (p - 1));
    }
    CHECK_THROWS_AS(different_from_lower(RamFiltration{Numbering::lower, 9, {{Q(1, 2), 1}}}), DomainError);
    CHECK_THROWS_AS(different_from_lower(RamFiltration{Numbering::lower, 9, {{Q(1), 3}}}), DomainError);
}

TEST_CASE("cyclic different closed form")
{
    CHECK(cyclic_different(3, {Q(2)}) == Q(6));
    // (p^2 - 1)(u1 + 1) + p(p - 1)^2 u1 with p = 3, u1 = 1.
    CHECK(cyclic_different(3, {Q(1), Q(3)}) == Q(8 * 2 + 3 * 4 * 1));
    CHECK(cyclic_different(3, {Q(1), Q(3)}) == Q(28));
    auto up = cyclic_upper_filtration(5, {Q(1), Q(5), Q(25)});
    CHECK(cyclic_different(5, {Q(1), Q(5), Q(25)}) == Q(brute_different(herbrand_lower_from_upper(up))));
    CHECK_THROWS_AS(cyclic_different(3, {Q(3), Q(2)}), DomainError);

    for (int p : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            for (int u1 = 1; u1 <= 10; ++u1) {
                std::vector<Q> u{Q(u1)};
                for (int i = 1; i < n; ++i)
                    u.push_back(u.back() * Q(p) + Q(i % 2));
                auto lower = herbrand_lower_from_upper(cyclic_upper_filtration(p, u));
                CHECK(cyclic_different(p, u) == Q(brute_different(lower)));
                CHECK(different_from_lower(lower) == brute_different(lower));
            }
        }
    }
}

TEST_CASE("tame composition")
{
    RamFiltration zp{Numbering::lower, 3, {{Q(1), 1}}};
    auto g = compose_tame(zp, 2);
    CHECK(g.order == 6);
    CHECK(different_from_lower(g) == 9);
    CHECK(compose_tame(zp, 1) == zp);

    RamFiltration z9{Numbering::lower, 9, {{Q(1), 3}, {Q(7), 1}}};
    auto g9 = compose_tame(z9, 2);
    CHECK(brute_different(g9) == 2 * different_from_lower(z9) + 1);
    CHECK(different_from_lower(g9) == 57);
    for (int i = 1; i < 20; ++i)
        CHECK(g9.order_at(Q(2 * i)) == z9.order_at(Q(i)));
    CHECK_THROWS_AS(compose_tame(zp, 3), DomainError);

    std::mt19937 rng(23);
    for (int p : {2, 3, 5}) {
        for (int k = 0; k < 50; ++k) {
            auto f = random_lower(rng, p, 1 + k % 4, 1);
            for (std::int64_t m : {1, 2, 3, 4, 7}) {
                if (m % p == 0)
                    continue;
                auto h = compose_tame(f, m);
                CHECK(different_from_lower(h) == m * different_from_lower(f) + m - 1);
                CHECK(brute_different(h) == different_from_lower(h));
            }
        }
    }
}

TEST_CASE("wild different exceeds |G| - 1")
{
    std::mt19937 rng(29);
    for (int p : {2, 3, 5})
        for (int k = 0; k < 100; ++k) {
            auto f = random_lower(rng, p, 1 + k % 4, k % 2 ? 1 : (p == 2 ? 3 : 4));
            CHECK(different_from_lower(f) > f.order - 1);
        }
}
