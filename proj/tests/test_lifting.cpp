#include <doctest.h>

#include <random>

#include "oort/lifting.hpp"
#include "oort/ramification.hpp"

using namespace oort;

namespace {

// Different of a cyclic p-power extension from its upper jumps, through the lower numbering.
std::int64_t different_from_upper(int p, const std::vector<std::int64_t>& u)
{
    int n = static_cast<int>(u.size());
    std::int64_t total = 0, lower = 0, prev_u = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t step = i == 0 ? u[0] : ipow(p, i) * (u[i] - prev_u);
        lower += step;
        prev_u = u[i];
        std::int64_t order = ipow(p, n - i);
        total += (i == 0 ? lower + 1 : step) * (order - 1);
    }
    return total;
}

ValuedLaurentPoly term(const PadicElement& c, int k)
{
    return ValuedLaurentPoly::monomial(c, k);
}

ValuedLaurentPoly one(const RingPtr& R)
{
    return ValuedLaurentPoly::constant(PadicElement::from_int(R, 1));
}

}  // namespace

TEST_CASE("lift builders")
{
    auto c = build_zp_lift(3, 2);
    CHECK(c.n == 1);
    CHECK(c.H[0].degree() == 2);
    CHECK(*c.H[0].coef_valuation(2) == Rational(3, 2));
    CHECK(build_zp_lift(5, 1).H[0].degree() == 1);
    CHECK_THROWS_AS(build_zp_lift(3, 3), DomainError);
    CHECK_THROWS_AS(build_zp2_lift(5, 10), DomainError);

    CHECK(build_zp2_lift(3, 1).H[1].degree() == 2);
    CHECK(build_zp2_lift(3, 2).H[1].degree() == 4);
    CHECK(build_zp2_lift(5, 1).H[1].degree() == 4);
    CHECK(default_precision(3, 2) == 24);
}

TEST_CASE("generic different")
{
    auto g = generic_different(build_zp_lift(3, 2));
    CHECK(g.exact);
    CHECK(g.delta == Rational(6));
    int points = 0;
    for (const auto& row : g.branch_table)
        points += row.count;
    CHECK(points == 3);

    auto g2 = generic_different(build_zp2_lift(3, 1));
    CHECK(g2.exact);
    CHECK(g2.delta == Rational(28));
    int by_index[10] = {};
    for (const auto& row : g2.branch_table)
        by_index[row.index] += row.count;
    CHECK(by_index[9] == 2);
    CHECK(by_index[3] == 2);

    auto bad = build_zp_lift(3, 2);
    bad.H[0] = bad.H[0] - one(bad.ring.ring) + term(bad.ring.lambda, 0);
    CHECK_THROWS_AS(generic_different(bad), DomainError);
}

TEST_CASE("different criterion examples")
{
    auto a = different_criterion(build_zp_lift(3, 2), {2});
    CHECK(a.status == LiftStatus::lift_certified);
    CHECK(a.delta_eta == Rational(6));
    CHECK(a.delta_s == Rational(6));

    auto b = different_criterion(build_zp2_lift(3, 1), {1, 3});
    CHECK(b.status == LiftStatus::lift_certified);
    CHECK(b.delta_eta == Rational(28));

    auto c = different_criterion(build_zp_lift(3, 2), {5});
    CHECK(c.status == LiftStatus::not_a_lift);
    CHECK(c.delta_s == Rational(12));
    CHECK(to_string(c.status) == "not-a-lift");

    CHECK_THROWS_AS(different_criterion(build_zp_lift(3, 2), {3}), DomainError);
    CHECK_THROWS_AS(different_criterion(build_zp_lift(3, 2), {2, 6}), DomainError);
}

TEST_CASE("reduction check")
{
    std::string why;
    CHECK(reduction_check(build_zp_lift(5, 3), 3, &why));
    CHECK_FALSE(reduction_check(build_zp_lift(5, 3), 4, &why));
    CHECK(why.find("conductor") != std::string::npos);

    auto C = make_cyclotomic_ring(3, 1, default_precision(3, 1));
    KummerChain deep{3, 1, C, {one(C.ring) + term(C.lambda.pow(4), 2)}};
    CHECK_FALSE(reduction_check(deep, 2, &why));
    KummerChain shallow{3, 1, C, {one(C.ring) + term(C.lambda.pow(2), 2)}};
    CHECK_FALSE(reduction_check(shallow, 2, &why));
    CHECK(why.find("divisible") != std::string::npos);
    CHECK(different_criterion(shallow, {2}).status != LiftStatus::lift_certified);
}

TEST_CASE("dihedral example")
{
    for (int p : {3, 5, 7}) {
        auto d = dihedral_example_check(p);
        CHECK(d.status == LiftStatus::lift_certified);
        CHECK(d.delta_s == Rational(3 * p - 2));
        CHECK(d.delta_eta == Rational(3 * p - 2));
    }
    CHECK_THROWS_AS(dihedral_example_check(2), DomainError);
    CHECK_THROWS_AS(dihedral_example_check(9), DomainError);
}

TEST_CASE("oort condition")
{
    auto r = oort_condition(5, {1, 5, 34, 170});
    CHECK_FALSE(r.holds);
    CHECK(*r.index == 3);
    CHECK(*r.witness == 10);
    CHECK(oort_condition(3, {1, 3, 9, 27}).holds);
    for (int p : {3, 5, 7})
        for (std::int64_t u : {1, 2, 4})
            if (u % p)
                CHECK(oort_condition(p, {u, p * u, p * p * u}).holds);
    CHECK_THROWS_AS(oort_condition(5, {5, 25}), DomainError);
    CHECK_THROWS_AS(oort_condition(5, {1, 4}), DomainError);
    CHECK_THROWS_AS(oort_condition(5, {1, 10}), DomainError);

    // Brute force over a_i directly.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int p = std::vector<int>{3, 5, 7}[rng() % 3];
        std::vector<std::int64_t> u{1 + static_cast<std::int64_t>(rng() % 6)};
        if (u[0] % p == 0)
            continue;
        bool ok = true;
        for (int i = 1; i < 5; ++i) {
            std::int64_t next = p * u.back() + static_cast<std::int64_t>(rng() % 12);
            if (next > p * u.back() && next % p == 0)
                ++next;
            u.push_back(next);
        }
        bool expect = true;
        for (int i = 3; i <= 4 && ok; ++i) {
            std::int64_t d = u[i - 1] - p * u[i - 2];
            for (std::int64_t a = p; a <= 10 * d + 10 * p; a += p)
                if (a > d && a * (u[i - 1] - u[i - 2]) <= d * u[i - 1])
                    expect = false;
        }
        CHECK(oort_condition(p, u).holds == expect);
    }
}

TEST_CASE("oort window scales linearly")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int p = std::vector<int>{3, 5, 7}[rng() % 3];
        std::vector<std::int64_t> u{1 + static_cast<std::int64_t>(rng() % 5)};
        if (u[0] % p == 0)
            u[0] += 1;
        for (int i = 1; i < 4; ++i)
            u.push_back(p * u.back() + 1 + static_cast<std::int64_t>(rng() % 9));
        std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 6);
        if (c % p == 0)
            ++c;
        std::vector<std::int64_t> cu;
        for (auto x : u)
            cu.push_back(c * x);
        for (int i = 2; i <= 4; ++i) {
            auto w = oort_window(u, p, i), cw = oort_window(cu, p, i);
            CHECK(cw.low == w.low * Rational(c));
            CHECK(cw.high == w.high * Rational(c));
        }
    }
}

TEST_CASE("lift properties")
{
    for (int p : {3, 5, 7})
        for (int u = 1; u <= 6; ++u) {
            if (u % p == 0)
                continue;
            auto cert = different_criterion(build_zp_lift(p, u), {u});
            CHECK_MESSAGE(cert.status == LiftStatus::lift_certified, "p=" << p << " u=" << u << " " << cert.note);
            CHECK(cert.delta_eta == Rational(different_from_upper(p, {u})));
            CHECK(cert.delta_eta == Rational((u + 1) * (p - 1)));
        }
    for (int p : {3, 5})
        for (int u : {1, 2}) {
            auto cert = different_criterion(build_zp2_lift(p, u), {u, p * u});
            CHECK_MESSAGE(cert.status == LiftStatus::lift_certified, "p=" << p << " u=" << u << " " << cert.note);
            CHECK(cert.delta_s == Rational(different_from_upper(p, {u, p * u})));
            CHECK(cert.delta_eta == Rational((p * p - 1) * (u + 1) + p * (p - 1) * (p - 1) * u));
        }
}

TEST_CASE("generic different is monotone in factors")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int p = trial % 2 ? 3 : 5;
        auto chain = trial % 3 ? build_zp_lift(p, 1 + trial % 2) : build_zp2_lift(p, 1);
        Rational before = generic_different(chain).delta;
        size_t i = rng() % chain.H.size();
        const auto& lam = chain.ring.lambda;
        int k = 1 + static_cast<int>(rng() % 3);
        auto factor = one(chain.ring.ring) + term(lam.pow(1 + rng() % 3) * (1 + rng() % 4), k);
        chain.H[i] = chain.H[i] * factor;
        CHECK(generic_different(chain).delta >= before);
    }
}

TEST_CASE("depth")
{
    for (int p : {3, 5})
        for (int u : {1, 2}) {
            auto f = build_zp_lift(p, u).H[0];
            CHECK(zp_depth(f, Rational(0)) == Rational(0));
            Rational edge(1, u * (p - 1));
            CHECK(zp_depth(f, edge) == Rational(1, p - 1));
            for (int j = 1; j <= 4; ++j) {
                Rational r = edge * Rational(j, 4);
                CHECK(zp_depth(f, r) == Rational(u) * r);
            }
        }

    auto C = make_cyclotomic_ring(3, 1, default_precision(3, 1));
    auto R = C.ring;
    auto unit = PadicElement::from_int(R, 1);
    auto plus_t = one(R) + term(unit, -1);
    CHECK(zp_depth(plus_t, Rational(0)) == Rational(3, 2));
    CHECK(zp_depth(plus_t, Rational(1, 4)) == Rational(5, 4));
    CHECK(zp_depth(one(R), Rational(1, 3)) == Rational(0));
    CHECK_THROWS_AS(zp_depth(one(R) + term(unit, 1), Rational(1)), DomainError);

    // (1 + W)^3 + pi W: peel away (1 + W)^3, leaving pi W of valuation 1/2.
    auto cube = (one(R) + term(unit, 1)).pow(3);
    CHECK(zp_depth(cube + term(C.pi, 1), Rational(0)) == Rational(1));
    CHECK(zp_depth(cube, Rational(0)) == Rational(0));

    // A peel by pi W needs pi^3 W^3; over the level-1 ring that term has no cube root of the coefficient.
    CHECK_THROWS_AS(zp_depth(one(R) + term(C.pi, 3), Rational(0)), DomainError);

    // Level 2: 1 + pi^3 W^3 + pi^4 W peels by 1 + pi W and leaves pi^4 W - 3 pi W + ... of valuation 2/3.
    auto C2 = make_cyclotomic_ring(3, 2, default_precision(3, 2));
    auto f2 = one(C2.ring) + term(C2.pi.pow(3), 3) + term(C2.pi.pow(4), 1);
    CHECK(zp_depth(f2, Rational(0)) == Rational(5, 6));

    // Etale threshold: every term of f - 1 at valuation >= p/(p-1).
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = one(R);
        Rational r(static_cast<int>(rng() % 4), 8);
        for (int k = 1; k <= 3; ++k) {
            int need = floor_of((Rational(3, 2) + Rational(k) * r) * Rational(2)) + 1;
            f = f + term(C.pi.pow(need + rng() % 2) * (1 + rng() % 2), k);
        }
        CHECK(zp_depth(f, r) == Rational(0));
    }
}

TEST_CASE("depth profile")
{
    auto f = build_zp_lift(3, 2).H[0];
    CHECK(branch_points_above(f, Rational(0)) == 3);
    CHECK(branch_points_above(f, Rational(1)) == 1);
    auto prof = depth_profile_check(f, {Rational(0), Rational(1, 8), Rational(1, 4)});
    CHECK(prof.consistent);
    REQUIRE(prof.slopes.size() == 2);
    CHECK(prof.slopes[0] == Rational(2));
    CHECK(prof.nu[0] == 3);

    auto C = make_cyclotomic_ring(3, 1, default_precision(3, 1));
    auto c = depth_profile_check(one(C.ring), {Rational(0), Rational(1, 2)});
    CHECK(c.samples[0].second == Rational(0));
    CHECK(c.samples[1].second == Rational(0));
    CHECK(c.slopes[0] == Rational(0));

    auto mult = one(C.ring) + term(PadicElement::from_int(C.ring, 1), -1);
    auto m = depth_profile_check(mult, {Rational(0), Rational(1, 4), Rational(1, 2)});
    CHECK(m.consistent);
    CHECK(m.slopes[0] == Rational(-1));
    CHECK_THROWS_AS(depth_profile_check(f, {Rational(1, 2), Rational(0)}), DomainError);

    CHECK(chain_depth(build_zp_lift(3, 2), Rational(1, 8)) == Rational(1, 4));
    CHECK_THROWS_AS(chain_depth(build_zp2_lift(3, 1), Rational(0)), DomainError);
}
