#include <algorithm>

#include "oort/padic.hpp"

namespace oort {

namespace {

SymbolicCoef sym_mul(const SymbolicCoef& a, const SymbolicCoef& b)
{
    SymbolicCoef c{a.valuation + b.valuation, std::nullopt};
    if (a.residue && b.residue)
        c.residue = *a.residue * *b.residue;
    return c;
}

SymbolicCoef sym_add(const SymbolicCoef& a, const SymbolicCoef& b)
{
    if (a.valuation < b.valuation)
        return a;
    if (b.valuation < a.valuation)
        return b;
    if (!a.residue || !b.residue)
        throw PrecisionError("symbolic addition of equal-valuation terms with unknown residues");
    Fq s = *a.residue + *b.residue;
    if (s.is_zero())
        throw PrecisionError("symbolic cancellation: resulting valuation unknown");
    return SymbolicCoef{a.valuation, s};
}

}  // namespace

ValuedLaurentPoly ValuedLaurentPoly::monomial(const PadicElement& c, int exponent)
{
    ValuedLaurentPoly f(c.ring());
    f.set(exponent, c);
    return f;
}

int ValuedLaurentPoly::degree() const
{
    if (terms_.empty())
        throw DomainError("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

int ValuedLaurentPoly::low_degree() const
{
    if (terms_.empty())
        throw DomainError("low degree of the zero polynomial");
    return terms_.begin()->first;
}

void ValuedLaurentPoly::set(int exponent, Coef c)
{
    if (auto* x = std::get_if<PadicElement>(&c)) {
        if (symbolic_)
            throw DomainError("exact coefficient in a symbolic polynomial");
        if (x->is_zero_to_precision() && x->exact()) {
            terms_.erase(exponent);
            return;
        }
    } else if (!symbolic_) {
        throw DomainError("symbolic coefficient in an exact polynomial");
    }
    terms_.insert_or_assign(exponent, std::move(c));
}

std::optional<Rational> ValuedLaurentPoly::coef_valuation(int exponent) const
{
    auto it = terms_.find(exponent);
    if (it == terms_.end())
        return std::nullopt;
    if (auto* s = std::get_if<SymbolicCoef>(&it->second))
        return s->valuation;
    const auto& x = std::get<PadicElement>(it->second);
    auto v = x.try_valuation_pi();
    if (!v)
        return std::nullopt;
    return Rational(*v, x.ring()->e());
}

Rational ValuedLaurentPoly::coef_lower_bound(int exponent) const
{
    auto it = terms_.find(exponent);
    if (it == terms_.end())
        throw DomainError("no such coefficient");
    if (auto* s = std::get_if<SymbolicCoef>(&it->second))
        return s->valuation;
    const auto& x = std::get<PadicElement>(it->second);
    auto v = x.try_valuation_pi();
    return Rational(v ? *v : x.prec(), x.ring()->e());
}

std::optional<Fq> ValuedLaurentPoly::coef_residue(int exponent) const
{
    auto it = terms_.find(exponent);
    if (it == terms_.end())
        return std::nullopt;
    if (auto* s = std::get_if<SymbolicCoef>(&it->second))
        return s->residue;
    const auto& x = std::get<PadicElement>(it->second);
    if (!x.try_valuation_pi())
        return std::nullopt;
    return x.leading_residue();
}

ValuedLaurentPoly ValuedLaurentPoly::operator+(const ValuedLaurentPoly& o) const
{
    ValuedLaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.set(k, c);
            continue;
        }
        if (symbolic_)
            r.set(k, sym_add(std::get<SymbolicCoef>(it->second), std::get<SymbolicCoef>(c)));
        else
            r.set(k, std::get<PadicElement>(it->second) + std::get<PadicElement>(c));
    }
    return r;
}

ValuedLaurentPoly ValuedLaurentPoly::operator-(const ValuedLaurentPoly& o) const
{
    if (o.symbolic_)
        throw DomainError("subtraction is not defined on symbolic polynomials");
    return *this + o.scale_int(-1);
}

ValuedLaurentPoly ValuedLaurentPoly::operator*(const ValuedLaurentPoly& o) const
{
    ValuedLaurentPoly r = *this;
    r.terms_.clear();
    for (const auto& [i, a] : terms_) {
        for (const auto& [j, b] : o.terms_) {
            ValuedLaurentPoly t = r;
            t.terms_.clear();
            if (symbolic_)
                t.set(i + j, sym_mul(std::get<SymbolicCoef>(a), std::get<SymbolicCoef>(b)));
            else
                t.set(i + j, std::get<PadicElement>(a) * std::get<PadicElement>(b));
            r = r + t;
        }
    }
    return r;
}

ValuedLaurentPoly ValuedLaurentPoly::scale(const PadicElement& s) const
{
    if (symbolic_) {
        SymbolicCoef sc{s.valuation(), s.leading_residue()};
        ValuedLaurentPoly r = *this;
        for (auto& [k, c] : r.terms_)
            c = sym_mul(std::get<SymbolicCoef>(c), sc);
        return r;
    }
    ValuedLaurentPoly r(R_);
    for (const auto& [k, c] : terms_)
        r.set(k, std::get<PadicElement>(c) * s);
    return r;
}

ValuedLaurentPoly ValuedLaurentPoly::scale_int(std::int64_t s) const
{
    if (symbolic_) {
        if (mod(s, p_) == 0)
            throw DomainError("symbolic scaling by a multiple of p");
        ValuedLaurentPoly r = *this;
        for (auto& [k, c] : r.terms_) {
            auto& sc = std::get<SymbolicCoef>(c);
            if (sc.residue)
                sc.residue = *sc.residue * Fq::from_int(*F_, s);
        }
        return r;
    }
    ValuedLaurentPoly r(R_);
    for (const auto& [k, c] : terms_)
        r.set(k, std::get<PadicElement>(c) * s);
    return r;
}

ValuedLaurentPoly ValuedLaurentPoly::pow(unsigned k) const
{
    if (k == 0) {
        if (symbolic_) {
            ValuedLaurentPoly one(p_, e_, *F_);
            one.set(0, SymbolicCoef{Rational(0), Fq(*F_, 1)});
            return one;
        }
        return constant(PadicElement::from_int(R_, 1));
    }
    ValuedLaurentPoly r = *this;
    for (unsigned i = 1; i < k; ++i)
        r = r * *this;
    return r;
}

ValuedLaurentPoly ValuedLaurentPoly::substitute_power(int u) const
{
    if (u < 1)
        throw DomainError("substitution exponent must be positive");
    ValuedLaurentPoly r = *this;
    r.terms_.clear();
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k * u, c);
    return r;
}

ValuedLaurentPoly ValuedLaurentPoly::to_symbolic() const
{
    if (symbolic_)
        return *this;
    ValuedLaurentPoly r(R_->p(), R_->e(), R_->residue_field());
    for (const auto& [k, c] : terms_) {
        const auto& x = std::get<PadicElement>(c);
        if (!x.try_valuation_pi())
            throw PrecisionError("coefficient of W^" + std::to_string(k) + " vanishes to precision");
        r.set(k, SymbolicCoef{x.valuation(), x.leading_residue()});
    }
    return r;
}

std::string ValuedLaurentPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty())
            s += " + ";
        if (auto* sc = std::get_if<SymbolicCoef>(&c))
            s += "[v=" + to_string(sc->valuation) + (sc->residue ? ",res=" + sc->residue->str() : "") + "]";
        else
            s += "(" + std::get<PadicElement>(c).str() + ")";
        if (k != 0)
            s += "*W^" + std::to_string(k);
    }
    return s;
}

PadicElement exp_truncated(const PadicElement& x)
{
    const auto& R = x.ring();
    PadicElement acc = PadicElement::from_int(R, 1), term = acc;
    for (int i = 1; i < R->p(); ++i) {
        term = (term * x).div_int(i);
        acc = acc + term;
    }
    return acc;
}

ValuedLaurentPoly exp_truncated(const ValuedLaurentPoly& x)
{
    int p = x.p();
    ValuedLaurentPoly acc = x.pow(0), term = acc;
    for (int i = 1; i < p; ++i) {
        term = term * x;
        if (x.symbolic()) {
            term = term.scale_int(inv_mod(i, p));
        } else {
            ValuedLaurentPoly t(x.ring());
            for (const auto& [k, c] : term.terms())
                t.set(k, std::get<PadicElement>(c).div_int(i));
            term = t;
        }
        acc = acc + term;
    }
    return acc;
}

int NewtonPolygon::total_length() const
{
    int s = 0;
    for (const auto& seg : segments)
        s += seg.length();
    return s;
}

NewtonPolygon newton_polygon(const ValuedLaurentPoly& f)
{
    if (f.is_zero())
        throw DomainError("Newton polygon of the zero polynomial");
    std::vector<std::pair<int, Rational>> pts, unsure;
    for (const auto& [k, c] : f.terms()) {
        auto v = f.coef_valuation(k);
        if (v)
            pts.emplace_back(k, *v);
        else
            unsure.emplace_back(k, f.coef_lower_bound(k));
    }
    if (pts.empty())
        throw PrecisionError("every coefficient vanishes to precision");
    std::vector<std::pair<int, Rational>> hull;
    auto slope = [](const std::pair<int, Rational>& a, const std::pair<int, Rational>& b) {
        return (b.second - a.second) / Rational(b.first - a.first);
    };
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= slope(hull.back(), pt))
            hull.pop_back();
        hull.push_back(pt);
    }
    NewtonPolygon P;
    P.shift = hull.front().first;
    P.degenerate = hull.size() == 1;
    for (size_t i = 0; i + 1 < hull.size(); ++i)
        P.segments.push_back(NewtonSegment{hull[i].first, hull[i + 1].first, hull[i].second, slope(hull[i], hull[i + 1])});
    for (const auto& [k, lb] : unsure) {
        if (k < hull.front().first || k > hull.back().first)
            throw PrecisionError("coefficient of W^" + std::to_string(k) + " vanishes to precision outside the hull");
        for (const auto& seg : P.segments) {
            if (k < seg.start || k > seg.end)
                continue;
            Rational line = seg.start_value + seg.slope * Rational(k - seg.start);
            if (lb <= line)
                throw PrecisionError("coefficient of W^" + std::to_string(k) +
                                     " vanishes to precision not above the Newton polygon");
        }
    }
    return P;
}

void require_normalized(const ValuedLaurentPoly& f)
{
    if (f.is_zero() || f.low_degree() != 0)
        throw DomainError("polynomial not normalized: constant term missing or negative exponents");
    auto v0 = f.coef_valuation(0);
    if (!v0 || *v0 != Rational(0))
        throw DomainError("polynomial not normalized: constant term is not a unit");
    for (const auto& [k, c] : f.terms()) {
        if (k == 0)
            continue;
        if (f.coef_lower_bound(k) <= Rational(0))
            throw DomainError("polynomial not normalized: coefficient of W^" + std::to_string(k) +
                              " has non-positive valuation");
    }
}

namespace {

struct Residual {
    Rational slope;
    Poly poly;
};

// Residual polynomial of f along a segment, or nullopt when a needed residue is unknown.
std::optional<Poly> residual_polynomial(const ValuedLaurentPoly& f, const NewtonSegment& seg)
{
    const GaloisField& F = f.residue_field();
    int e = f.e();
    Rational s = seg.slope * Rational(e);
    std::int64_t a = s.numerator(), b = s.denominator();
    Rational y0 = seg.start_value * Rational(e);
    std::vector<std::uint32_t> coeffs;
    for (int t = 0; seg.start + t * b <= seg.end; ++t) {
        int k = seg.start + static_cast<int>(t * b);
        Rational target = y0 + Rational(t * a);
        auto v = f.coef_valuation(k);
        if (!v) {
            coeffs.push_back(0);
            continue;
        }
        if (*v * Rational(e) != target) {
            coeffs.push_back(0);
            continue;
        }
        auto res = f.coef_residue(k);
        if (!res)
            return std::nullopt;
        coeffs.push_back(res->code());
    }
    return Poly(F, coeffs);
}

}  // namespace

RootCertificate roots_simple_distinct_certificate(const std::vector<ValuedLaurentPoly>& fs)
{
    std::vector<std::vector<Residual>> all;
    for (size_t i = 0; i < fs.size(); ++i) {
        require_normalized(fs[i]);
        NewtonPolygon P = newton_polygon(fs[i]);
        std::vector<Residual> rs;
        for (const auto& seg : P.segments) {
            auto R = residual_polynomial(fs[i], seg);
            if (!R)
                return {false, "unknown residue on a segment of polynomial " + std::to_string(i)};
            if (gcd(*R, R->derivative()).degree() > 0)
                return {false, "repeated roots in polynomial " + std::to_string(i)};
            rs.push_back(Residual{seg.slope, *R});
        }
        all.push_back(std::move(rs));
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            for (const auto& a : all[i])
                for (const auto& b : all[j])
                    if (a.slope == b.slope && gcd(a.poly, b.poly).degree() > 0)
                        return {false, "shared roots"};
    return {true, ""};
}

}  // namespace oort
