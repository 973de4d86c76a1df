#include <doctest.h>

#include <random>

#include "oort/asw.hpp"

using namespace oort;

namespace {

LaurentPoly mono(const GaloisField& F, std::uint32_t c, int e)
{
    return LaurentPoly::monomial(Fq(F, c), e);
}

LaurentPoly random_laurent(std::mt19937& rng, const GaloisField& F, int lo, int hi)
{
    std::uniform_int_distribution<std::uint32_t> coef(0, F.q() - 1);
    LaurentPoly f(F);
    for (int k = lo; k <= hi; ++k)
        if (rng() % 2)
            f = f + LaurentPoly::monomial(Fq(F, coef(rng)), k);
    return f;
}

// Coefficientwise z^p - z, written out without LaurentPoly::wp.
LaurentPoly artin_schreier_map(const LaurentPoly& z)
{
    const GaloisField& F = z.field();
    LaurentPoly out(F);
    for (const auto& [k, c] : z.terms()) {
        out = out + LaurentPoly::monomial(Fq(F, F.pow(c, F.p())), k * F.p());
        out = out - LaurentPoly::monomial(Fq(F, c), k);
    }
    return out;
}

}  // namespace

TEST_CASE("artin-schreier reduction examples")
{
    const auto& F5 = GaloisField::get(5);
    CHECK(reduce_artin_schreier(mono(F5, 1, -3)).standard == mono(F5, 1, -3));

    const auto& F3 = GaloisField::get(3);
    auto r = reduce_artin_schreier(mono(F3, 1, -9));
    CHECK(r.standard == mono(F3, 1, -1));
    CHECK(r.witness == mono(F3, 1, -3) + mono(F3, 1, -1));

    const auto& F9 = GaloisField::get(3, 2);
    Fq g(F9, F9.generator());
    auto r9 = reduce_artin_schreier(LaurentPoly::monomial(g, -9));
    CHECK(r9.standard == LaurentPoly::monomial(g.proot().proot(), -1));

    auto t = reduce_artin_schreier(mono(F5, 1, 2) + mono(F5, 1, 0));
    CHECK(t.trivial());
    CHECK(t.constant == Fq(F5, 1));
}

TEST_CASE("artin-schreier reduction properties")
{
    std::mt19937 rng(31);
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        const auto& F = GaloisField::get(p, r);
        for (int k = 0; k < 60; ++k) {
            LaurentPoly f = random_laurent(rng, F, -30, 6);
            auto red = reduce_artin_schreier(f, 40);
            for (const auto& [e, c] : red.standard.terms()) {
                CHECK(e < 0);
                CHECK((-e) % p != 0);
            }
            CHECK(reduce_artin_schreier(red.standard).standard == red.standard);
            LaurentPoly lhs = f - red.standard - LaurentPoly::monomial(red.constant, 0);
            LaurentPoly rhs = artin_schreier_map(red.witness);
            CHECK(lhs.slice(-1000, 40) == rhs.slice(-1000, 40));
        }
    }
}

TEST_CASE("witt upper jumps")
{
    for (int p : {2, 3, 5, 7}) {
        const auto& F = GaloisField::get(p);
        WittNormalForm w{p, 1, {mono(F, 1, -1), LaurentPoly(F)}};
        CHECK(asw_upper_jumps(w) == std::vector<std::int64_t>{1, p});
    }
    const auto& F3 = GaloisField::get(3);
    CHECK_THROWS_AS(asw_upper_jumps(WittNormalForm{3, 1, {mono(F3, 1, -3)}}), DomainError);
    CHECK_THROWS_AS(asw_upper_jumps(WittNormalForm{3, 1, {mono(F3, 1, -1), mono(F3, 1, -6)}}), DomainError);

    const auto& F5 = GaloisField::get(5);
    CHECK(asw_upper_jumps(WittNormalForm{5, 1, {mono(F5, 1, -1), mono(F5, 1, -7)}}) == std::vector<std::int64_t>{1, 7});
    CHECK(asw_upper_jumps(WittNormalForm{5, 1, {mono(F5, 3, -4)}}) == std::vector<std::int64_t>{4});
}

TEST_CASE("witt different")
{
    const auto& F3 = GaloisField::get(3);
    CHECK(different_of(WittNormalForm{3, 1, {mono(F3, 1, -1)}}) == 4);
    CHECK(different_of(WittNormalForm{3, 1, {mono(F3, 1, -1), LaurentPoly(F3)}}) == 28);
    CHECK(different_of(WittNormalForm{3, 1, {mono(F3, 1, -2)}}) == 6);
}

TEST_CASE("witt jumps satisfy u_i >= p u_{i-1}, prime to p when strict")
{
    std::mt19937 rng(37);
    for (int p : {2, 3, 5}) {
        const auto& F = GaloisField::get(p);
        for (int k = 0; k < 100; ++k) {
            int j = 1 + static_cast<int>(rng() % 20);
            if (j % p == 0)
                ++j;
            WittNormalForm w{p, 1, {mono(F, 1, -j)}};
            int n = 1 + static_cast<int>(rng() % 4);
            for (int i = 1; i < n; ++i)
                w.x.push_back(reduce_artin_schreier(random_laurent(rng, F, -static_cast<int>(ipow(p, i)) * 25, -1)).standard);
            auto u = asw_upper_jumps(w);
            CHECK(u.front() == j);
            for (size_t i = 1; i < u.size(); ++i) {
                CHECK(u[i] >= p * u[i - 1]);
                if (u[i] > p * u[i - 1])
                    CHECK(u[i] % p != 0);
            }
        }
    }
}
