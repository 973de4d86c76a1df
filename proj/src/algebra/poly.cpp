#include "oort/algebra/poly.hpp"

#include <algorithm>

namespace oort {

Poly::Poly(const GaloisField& F, std::vector<std::uint32_t> coeffs) : F_(&F), c_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(const Fq& c)
{
    return Poly(c.field(), {c.code()});
}

Poly Poly::monomial(const Fq& c, int degree)
{
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[degree] = c.code();
    return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const Fq& a)
{
    const GaloisField& F = a.field();
    return Poly(F, {F.neg(a.code()), 1});
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Fq Poly::coef(int i) const
{
    if (i < 0 || i > degree())
        return Fq(*F_, 0);
    return Fq(*F_, c_[i]);
}

Fq Poly::lead() const
{
    if (c_.empty())
        return Fq(*F_, 0);
    return Fq(*F_, c_.back());
}

Poly Poly::operator+(const Poly& o) const
{
    const GaloisField& F = F_ ? *F_ : *o.F_;
    std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        std::uint32_t a = i < c_.size() ? c_[i] : 0;
        std::uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        v[i] = F.add(a, b);
    }
    return Poly(F, std::move(v));
}

Poly Poly::operator-() const
{
    std::vector<std::uint32_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = F_->neg(c_[i]);
    return Poly(*F_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const
{
    const GaloisField& F = F_ ? *F_ : *o.F_;
    if (c_.empty() || o.c_.empty())
        return Poly(F);
    std::vector<std::uint32_t> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(F, std::move(v));
}

Poly Poly::operator*(const Fq& s) const
{
    std::vector<std::uint32_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = F_->mul(c_[i], s.code());
    return Poly(*F_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const
{
    if (d.is_zero())
        throw DomainError("polynomial division by zero");
    const GaloisField& F = *d.F_;
    std::vector<std::uint32_t> r = c_;
    int dd = d.degree();
    if (degree() < dd)
        return {Poly(F), *this};
    std::vector<std::uint32_t> q(degree() - dd + 1, 0);
    std::uint32_t li = F.inv(d.c_.back());
    for (int i = degree(); i >= dd; --i) {
        std::uint32_t c = r[i];
        if (c == 0)
            continue;
        std::uint32_t f = F.mul(c, li);
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j)
            r[i - dd + j] = F.sub(r[i - dd + j], F.mul(f, d.c_[j]));
    }
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    return *this * lead().inv();
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return Poly(*F_);
    std::vector<std::uint32_t> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<std::int64_t>(i)));
    return Poly(*F_, std::move(v));
}

Poly Poly::pow(unsigned e) const
{
    Poly result = constant(Fq(*F_, 1)), base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Poly Poly::powmod(std::uint64_t e, const Poly& m) const
{
    Poly result = constant(Fq(*F_, 1)) % m, base = *this % m;
    while (e) {
        if (e & 1)
            result = (result * base) % m;
        e >>= 1;
        if (e)
            base = (base * base) % m;
    }
    return result;
}

Fq Poly::eval(const Fq& x) const
{
    std::uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = F_->add(F_->mul(acc, x.code()), c_[i]);
    return Fq(*F_, acc);
}

Poly Poly::proot() const
{
    int p = F_->p();
    std::vector<std::uint32_t> v;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (i % p != 0)
            throw DomainError("polynomial is not a p-th power");
        size_t k = i / p;
        if (v.size() <= k)
            v.resize(k + 1, 0);
        v[k] = F_->proot(c_[i]);
    }
    return Poly(*F_, std::move(v));
}

Poly Poly::frobenius() const
{
    int p = F_->p();
    if (c_.empty())
        return *this;
    std::vector<std::uint32_t> v((c_.size() - 1) * p + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        v[i * p] = F_->frobenius(c_[i]);
    return Poly(*F_, std::move(v));
}

int Poly::multiplicity(const Fq& a) const
{
    if (is_zero())
        throw DomainError("multiplicity in the zero polynomial");
    Poly f = *this, lin = linear(a);
    int k = 0;
    while (true) {
        auto [q, r] = f.divmod(lin);
        if (!r.is_zero())
            return k;
        f = q;
        ++k;
    }
}

std::string Poly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0)
            continue;
        std::string cs = F_->format(c_[i]);
        if (cs.find('+') != std::string::npos)
            cs = "(" + cs + ")";
        if (!s.empty())
            s += "+";
        if (i == 0) {
            s += cs;
            continue;
        }
        if (c_[i] != 1)
            s += cs + "*";
        s += var;
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return s;
}

Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f)
{
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() <= 0)
        return out;
    int p = f.field().p();
    Poly a = f.monic();
    Poly c = gcd(a, a.derivative());
    Poly w = a / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0)
            out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_factorization(c.proot()))
            out.emplace_back(g, e * p);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f)
{
    std::vector<std::pair<Poly, int>> out;
    const GaloisField& F = f.field();
    Poly rest = f.monic();
    Poly x = Poly::z(F);
    Poly h = x;
    int d = 0;
    while (rest.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.powmod(F.q(), rest);
        Poly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(rest, rest.degree());
    return out;
}

bool is_irreducible(const Poly& f)
{
    if (f.degree() <= 0)
        return false;
    auto sq = squarefree_factorization(f);
    if (sq.size() != 1 || sq[0].second != 1)
        return false;
    auto dd = distinct_degree_factorization(f);
    return dd.size() == 1 && dd[0].second == f.degree();
}

}  // namespace oort
