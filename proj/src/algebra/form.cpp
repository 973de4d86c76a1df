#include "oort/algebra/form.hpp"

#include <cctype>

namespace oort {

std::string point_str(const ProjPoint& x)
{
    return x ? x->str() : "inf";
}

RatFunc::RatFunc(const GaloisField& F) : num_(F), den_(Poly::constant(Fq(F, 1))) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den)
{
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(Fq(num.field(), 1))) {}

void RatFunc::normalize()
{
    const GaloisField& F = den_.field();
    if (num_.is_zero()) {
        num_ = Poly(F);
        den_ = Poly::constant(Fq(F, 1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Fq l = den_.lead();
    if (l != Fq(F, 1)) {
        Fq li = l.inv();
        num_ = num_ * li;
        den_ = den_ * li;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
    if (den_ == o.den_)
        return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const
{
    return *this + (-o);
}

RatFunc RatFunc::operator*(const RatFunc& o) const
{
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const
{
    if (o.is_zero())
        throw DomainError("division by the zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(int e) const
{
    if (e >= 0)
        return RatFunc(num_.pow(e), den_.pow(e));
    if (is_zero())
        throw DomainError("negative power of zero");
    return RatFunc(den_.pow(-e), num_.pow(-e));
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RatFunc::order_at(const ProjPoint& x) const
{
    if (is_zero())
        throw DomainError("order of the zero function");
    if (!x)
        return den_.degree() - num_.degree();
    return num_.multiplicity(*x) - den_.multiplicity(*x);
}

RatFunc RatFunc::compose_mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const
{
    const GaloisField& F = field();
    if (a * d - b * c == Fq(F, 0))
        throw DomainError("degenerate fractional linear map");
    int L = std::max(num_.degree(), den_.degree());
    Poly top(F, {b.code(), a.code()}), bot(F, {d.code(), c.code()});
    auto homog = [&](const Poly& P) {
        Poly acc(F);
        for (int k = 0; k <= P.degree(); ++k) {
            if (P.coef(k).is_zero())
                continue;
            acc = acc + top.pow(k) * bot.pow(L - k) * P.coef(k);
        }
        return acc;
    };
    return RatFunc(homog(num_), homog(den_));
}

std::string RatFunc::str() const
{
    if (den_.is_one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

class Parser {
public:
    Parser(const GaloisField& F, const std::string& s) : F_(F), s_(s) {}

    RatFunc parse()
    {
        RatFunc r = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why)
    {
        throw DomainError("cannot parse '" + s_ + "': " + why);
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool starts_primary()
    {
        skip();
        if (i_ >= s_.size())
            return false;
        char c = s_[i_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'g' || c == '(';
    }
    RatFunc expr()
    {
        RatFunc acc = term();
        while (true) {
            if (peek('+')) {
                ++i_;
                acc = acc + term();
            } else if (peek('-')) {
                ++i_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }
    RatFunc term()
    {
        RatFunc acc = unary();
        while (true) {
            if (peek('*')) {
                ++i_;
                acc = acc * unary();
            } else if (peek('/')) {
                ++i_;
                acc = acc / unary();
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }
    RatFunc unary()
    {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        return power();
    }
    RatFunc power()
    {
        RatFunc base = primary();
        if (peek('^')) {
            ++i_;
            skip();
            bool negative = false;
            if (i_ < s_.size() && s_[i_] == '-') {
                negative = true;
                ++i_;
            }
            long e = integer();
            return base.pow(static_cast<int>(negative ? -e : e));
        }
        return base;
    }
    long integer()
    {
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            fail("expected integer");
        if (i_ - start > 12)
            fail("integer too long");
        return std::stol(s_.substr(start, i_ - start));
    }
    RatFunc primary()
    {
        skip();
        if (i_ >= s_.size())
            fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            RatFunc r = expr();
            if (!peek(')'))
                fail("missing ')'");
            ++i_;
            return r;
        }
        if (c == 'z') {
            ++i_;
            return RatFunc::z(F_);
        }
        if (c == 'g') {
            ++i_;
            return RatFunc::constant(Fq(F_, F_.generator()));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatFunc::constant(Fq::from_int(F_, integer()));
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const GaloisField& F_;
    const std::string& s_;
    size_t i_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const GaloisField& F, const std::string& text)
{
    return Parser(F, text).parse();
}

ProjPoint parse_point(const GaloisField& F, const std::string& text)
{
    if (text == "inf")
        return std::nullopt;
    RatFunc r = parse_ratfunc(F, text);
    if (r.num().degree() > 0 || r.den().degree() > 0)
        throw DomainError("point '" + text + "' is not a constant");
    return r.num().coef(0);
}

std::string to_string(FormClass c)
{
    switch (c) {
    case FormClass::logarithmic:
        return "logarithmic";
    case FormClass::exact:
        return "exact";
    default:
        return "neither";
    }
}

int Divisor::total_degree() const
{
    int s = 0;
    for (const auto& pl : places)
        s += pl.degree * pl.count * pl.order;
    return s;
}

int DiffForm::order_at(const ProjPoint& x) const
{
    if (is_zero())
        throw DomainError("zero form has no divisor");
    if (!x)
        return f_.order_at(x) - 2;
    return f_.order_at(x);
}

Divisor DiffForm::divisor() const
{
    if (is_zero())
        throw DomainError("zero form has no divisor");
    Divisor D;
    D.splitting_degree = 1;
    auto add = [&](const Poly& P, int sign) {
        for (auto& [g, e] : squarefree_factorization(P)) {
            for (auto& [h, d] : distinct_degree_factorization(g)) {
                D.places.push_back(Place{h, false, d, h.degree() / d, sign * e});
                D.splitting_degree = static_cast<int>(lcm64(D.splitting_degree, d));
            }
        }
    };
    add(f_.num(), 1);
    add(f_.den(), -1);
    int inf = order_at(std::nullopt);
    if (inf != 0)
        D.places.push_back(Place{Poly(field()), true, 1, 1, inf});
    return D;
}

DiffForm DiffForm::pullback_mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const
{
    const GaloisField& F = field();
    RatFunc g = f_.compose_mobius(a, b, c, d);
    Poly bot(F, {d.code(), c.code()});
    RatFunc jac(Poly::constant(a * d - b * c), bot * bot);
    return DiffForm(g * jac);
}

std::string DiffForm::str() const
{
    return "(" + f_.str() + ")dz";
}

namespace {

// C(A dz) for a polynomial A.
Poly cartier_poly(const Poly& A)
{
    const GaloisField& F = A.field();
    int p = F.p();
    std::vector<std::uint32_t> out;
    for (int k = p - 1; k <= A.degree(); k += p) {
        std::uint32_t c = A.coeffs()[k];
        if (c == 0)
            continue;
        size_t j = static_cast<size_t>((k + 1) / p - 1);
        if (out.size() <= j)
            out.resize(j + 1, 0);
        out[j] = F.proot(c);
    }
    return Poly(F, std::move(out));
}

}  // namespace

DiffForm cartier(const DiffForm& w)
{
    const RatFunc& f = w.coefficient();
    int p = w.field().p();
    Poly A = f.num() * f.den().pow(p - 1);
    return DiffForm(RatFunc(cartier_poly(A), f.den()));
}

FormClass classify_form(const DiffForm& w)
{
    DiffForm c = cartier(w);
    if (c.is_zero())
        return FormClass::exact;
    if (c == w)
        return FormClass::logarithmic;
    return FormClass::neither;
}

}  // namespace oort
