#include "oort/core.hpp"

#include <numeric>

namespace oort {

std::string to_string(const Rational& q)
{
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s)
{
    auto bad = [&] { return DomainError("malformed rational '" + s + "'"); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &used);
            if (used != s.size())
                throw bad();
            return Rational(n);
        }
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        long long n = std::stoll(a, &used);
        if (used != a.size())
            throw bad();
        long long d = std::stoll(b, &used);
        if (used != b.size() || d == 0)
            throw bad();
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw bad();
    }
}

std::int64_t floor_of(const Rational& q)
{
    std::int64_t n = q.numerator(), d = q.denominator();
    std::int64_t f = n / d;
    if (n % d != 0 && n < 0)
        --f;
    return f;
}

std::int64_t ceil_of(const Rational& q)
{
    return -floor_of(-q);
}

bool is_integer(const Rational& q)
{
    return q.denominator() == 1;
}

std::int64_t ipow(std::int64_t base, unsigned exp)
{
    std::int64_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::int64_t t = g - q * a1;
        g = a1;
        a1 = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1)
        throw DomainError("element not invertible modulo " + std::to_string(m));
    return mod(x, m);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    return std::lcm(a, b);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int vp_int(std::int64_t a, std::int64_t p)
{
    if (a == 0)
        throw DomainError("valuation of zero");
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

}  // namespace oort
