#include "oort/asw.hpp"

#include "oort/ramification.hpp"

namespace oort {

namespace {

bool standard_form(const LaurentPoly& g, int p)
{
    for (const auto& [k, c] : g.terms())
        if (k >= 0 || (-k) % p == 0)
            return false;
    return true;
}

}  // namespace

ArtinSchreierReduction reduce_artin_schreier(const LaurentPoly& f, int precision)
{
    const GaloisField& F = f.field();
    int p = F.p();
    if (precision < 1)
        throw DomainError("witness precision must be positive");
    LaurentPoly g = f.slice(f.is_zero() ? 0 : std::min(f.min_exponent(), -1), -1);
    LaurentPoly pos = f.slice(1, f.is_zero() ? 0 : std::max(f.max_exponent(), 1));
    ArtinSchreierReduction out{LaurentPoly(F), f.coef(0), LaurentPoly(F), precision};

    while (true) {
        std::optional<int> hit;
        for (const auto& [k, c] : g.terms())
            if ((-k) % p == 0) {
                hit = k;
                break;
            }
        if (!hit)
            break;
        Fq root = g.coef(*hit).proot();
        LaurentPoly z = LaurentPoly::monomial(root, *hit / p);
        g = g - z.wp();
        out.witness = out.witness + z;
    }
    out.standard = g;

    // w = -(pos + pos^p + pos^{p^2} + ...) solves w^p - w = pos in F_q[[t]].
    LaurentPoly term = pos;
    while (!term.is_zero()) {
        out.witness = out.witness - term.slice(1, precision);
        term = term.slice(1, precision).frobenius().slice(1, precision);
    }

    LaurentPoly lhs = (f - out.standard - LaurentPoly::monomial(out.constant, 0));
    LaurentPoly rhs = out.witness.wp();
    int lo = std::min(lhs.is_zero() ? 0 : lhs.min_exponent(), rhs.is_zero() ? 0 : rhs.min_exponent());
    if (lhs.slice(lo, precision) != rhs.slice(lo, precision))
        throw DomainError("internal: Artin-Schreier witness check failed");
    if (!standard_form(out.standard, p))
        throw DomainError("internal: reduction left a non-standard term");
    return out;
}

void WittNormalForm::validate() const
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (x.empty())
        throw DomainError("Witt vector must have length at least 1");
    const LaurentPoly& x1 = x.front();
    if (x1.terms().size() != 1 || x1.min_exponent() >= 0)
        throw DomainError("x_1 must be a single term c t^{-j} with j >= 1");
    if ((-x1.min_exponent()) % p == 0)
        throw DomainError("x_1 = c t^{-j} requires p not dividing j");
    for (size_t i = 1; i < x.size(); ++i)
        if (!standard_form(x[i], p))
            throw DomainError("x_" + std::to_string(i + 1) +
                              " must have only negative exponents prime to p");
}

std::vector<std::int64_t> asw_upper_jumps(const WittNormalForm& w)
{
    w.validate();
    std::vector<std::int64_t> u{w.x.front().pole_order()};
    for (size_t i = 1; i < w.x.size(); ++i)
        u.push_back(std::max<std::int64_t>(w.x[i].pole_order(), w.p * u.back()));
    return u;
}

std::int64_t different_of(const WittNormalForm& w)
{
    std::vector<Rational> u;
    for (auto j : asw_upper_jumps(w))
        u.emplace_back(j);
    return cyclic_different(w.p, u).numerator();
}

}  // namespace oort
