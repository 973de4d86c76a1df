#include "oort/algebra/laurent.hpp"

namespace oort {

LaurentPoly LaurentPoly::monomial(const Fq& c, int exponent)
{
    LaurentPoly f(c.field());
    f.set(exponent, c);
    return f;
}

Fq LaurentPoly::coef(int exponent) const
{
    auto it = terms_.find(exponent);
    return Fq(*F_, it == terms_.end() ? 0 : it->second);
}

void LaurentPoly::set(int exponent, const Fq& c)
{
    if (c.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = c.code();
}

int LaurentPoly::pole_order() const
{
    if (terms_.empty() || terms_.begin()->first >= 0)
        return 0;
    return -terms_.begin()->first;
}

int LaurentPoly::min_exponent() const
{
    if (terms_.empty())
        throw DomainError("exponent range of the zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const
{
    if (terms_.empty())
        throw DomainError("exponent range of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = F_ ? *this : LaurentPoly(*o.F_);
    for (auto [k, c] : o.terms_)
        r.set(k, r.coef(k) + Fq(*o.F_, c));
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*F_);
    for (auto [k, c] : terms_)
        r.terms_[k] = F_->neg(c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r(*F_);
    for (auto [i, a] : terms_)
        for (auto [j, b] : o.terms_)
            r.set(i + j, r.coef(i + j) + Fq(*F_, F_->mul(a, b)));
    return r;
}

LaurentPoly LaurentPoly::frobenius() const
{
    LaurentPoly r(*F_);
    for (auto [k, c] : terms_)
        r.terms_[k * F_->p()] = F_->frobenius(c);
    return r;
}

LaurentPoly LaurentPoly::wp() const
{
    return frobenius() - *this;
}

LaurentPoly LaurentPoly::slice(int lo, int hi) const
{
    LaurentPoly r(*F_);
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it)
        r.terms_[it->first] = it->second;
    return r;
}

std::string LaurentPoly::str(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        auto [k, c] = *it;
        if (!s.empty())
            s += "+";
        std::string cs = F_->format(c);
        if (k == 0) {
            s += cs;
            continue;
        }
        if (c != 1)
            s += cs + "*";
        s += var;
        if (k != 1)
            s += "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    return s;
}

}  // namespace oort
