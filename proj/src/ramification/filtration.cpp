#include "oort/ramification.hpp"

namespace oort {

namespace {

int prime_of_power(std::int64_t n)
{
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q)
            continue;
        while (n % q == 0)
            n /= q;
        return n == 1 ? static_cast<int>(q) : 0;
    }
    return n > 1 ? static_cast<int>(n) : 0;
}

}  // namespace

void RamFiltration::validate() const
{
    if (order < 1)
        throw DomainError("filtration order must be positive");
    std::int64_t prev_order = order;
    Rational prev_t(-1);
    int wild_prime = 0;
    for (const auto& [t, o] : breaks) {
        if (t < Rational(0))
            throw DomainError("filtration thresholds must be nonnegative");
        if (t <= prev_t)
            throw DomainError("filtration thresholds must increase strictly");
        if (o < 1 || o >= prev_order || prev_order % o)
            throw DomainError("filtration orders must decrease strictly by divisors");
        if (numbering == Numbering::lower && !is_integer(t))
            throw DomainError("lower jumps must be integers");
        if (t > Rational(0)) {
            int q = prime_of_power(prev_order / o);
            if (!q || (wild_prime && q != wild_prime))
                throw DomainError("positive jumps must cut the group by powers of a single prime");
            wild_prime = q;
        }
        prev_t = t;
        prev_order = o;
    }
    if (prev_order != 1)
        throw DomainError("filtration must end at the trivial group");
}

std::int64_t RamFiltration::order_at(const Rational& s) const
{
    std::int64_t o = order;
    for (const auto& [t, after] : breaks) {
        if (s <= t)
            break;
        o = after;
    }
    return o;
}

std::vector<Rational> RamFiltration::jumps() const
{
    std::vector<Rational> out;
    for (const auto& b : breaks)
        out.push_back(b.first);
    return out;
}

Rational herbrand_phi(const RamFiltration& f, const Rational& u)
{
    Rational acc(0), left(0);
    std::int64_t cur = f.order;
    for (const auto& [t, o] : f.breaks) {
        if (u <= t)
            break;
        acc += (t - left) * Rational(cur, f.order);
        left = t;
        cur = o;
    }
    return acc + (u - left) * Rational(cur, f.order);
}

Rational herbrand_psi(const RamFiltration& f, const Rational& v)
{
    Rational acc(0), left(0), left_phi(0);
    std::int64_t cur = f.order;
    for (const auto& [t, o] : f.breaks) {
        Rational phi_t = left_phi + (t - left) * Rational(cur, f.order);
        if (v <= phi_t)
            break;
        acc = t;
        left = t;
        left_phi = phi_t;
        cur = o;
    }
    return acc + (v - left_phi) * Rational(f.order, cur);
}

RamFiltration herbrand_upper_from_lower(const RamFiltration& f)
{
    if (f.numbering != Numbering::lower)
        throw DomainError("expected a lower filtration");
    f.validate();
    RamFiltration g{Numbering::upper, f.order, {}};
    for (const auto& [t, o] : f.breaks)
        g.breaks.emplace_back(herbrand_phi(f, t), o);
    return g;
}

RamFiltration herbrand_lower_from_upper(const RamFiltration& f)
{
    if (f.numbering != Numbering::upper)
        throw DomainError("expected an upper filtration");
    Rational acc(0), left(0);
    std::int64_t cur = f.order;
    RamFiltration g{Numbering::lower, f.order, {}};
    for (const auto& [v, o] : f.breaks) {
        acc += (v - left) * Rational(f.order, cur);
        if (!is_integer(acc))
            throw DomainError("inconsistent filtration: lower jump " + to_string(acc) + " is not an integer");
        g.breaks.emplace_back(acc, o);
        left = v;
        cur = o;
    }
    g.validate();
    return g;
}

std::int64_t different_from_lower(const RamFiltration& f)
{
    if (f.numbering != Numbering::lower)
        throw DomainError("expected a lower filtration");
    f.validate();
    if (f.breaks.empty())
        return 0;
    std::int64_t t0 = f.breaks.front().first.numerator();
    std::int64_t d = (t0 + 1) * (f.order - 1);
    for (size_t k = 1; k < f.breaks.size(); ++k) {
        std::int64_t len = (f.breaks[k].first - f.breaks[k - 1].first).numerator();
        d += len * (f.breaks[k - 1].second - 1);
    }
    return d;
}

RamFiltration cyclic_upper_filtration(int p, const std::vector<Rational>& u)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    int n = static_cast<int>(u.size());
    RamFiltration f{Numbering::upper, ipow(p, n), {}};
    for (int i = 0; i < n; ++i) {
        if (u[i] <= Rational(0) || (i && u[i] <= u[i - 1]))
            throw DomainError("upper jumps must be positive and strictly increasing");
        f.breaks.emplace_back(u[i], ipow(p, n - i - 1));
    }
    return f;
}

Rational cyclic_different(int p, const std::vector<Rational>& u)
{
    cyclic_upper_filtration(p, u);
    int n = static_cast<int>(u.size());
    Rational d(ipow(p, n) - 1);
    Rational prev(0);
    for (int i = 1; i <= n; ++i) {
        d += Rational(ipow(p, i - 1) * (ipow(p, n - i + 1) - 1)) * (u[i - 1] - prev);
        prev = u[i - 1];
    }
    return d;
}

RamFiltration compose_tame(const RamFiltration& f, std::int64_t m)
{
    if (f.numbering != Numbering::lower)
        throw DomainError("expected a lower filtration");
    f.validate();
    if (m < 1)
        throw DomainError("tame order must be positive");
    if (m == 1)
        return f;
    if (f.order > 1) {
        int p = prime_of_power(f.order);
        if (!p)
            throw DomainError("p-part must have prime-power order");
        if (m % p == 0)
            throw DomainError("tame order must be prime to p");
        if (f.breaks.front().first == Rational(0))
            throw DomainError("p-part must have positive lower jumps");
    }
    RamFiltration g{Numbering::lower, m * f.order, {{Rational(0), f.order}}};
    if (f.order == 1)
        return g;
    for (const auto& [t, o] : f.breaks)
        g.breaks.emplace_back(t * Rational(m), o);
    return g;
}

}  // namespace oort
