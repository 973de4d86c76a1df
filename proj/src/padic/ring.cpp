#include <limits>

#include "oort/padic.hpp"

namespace oort {

namespace {

std::int64_t checked_pow(std::int64_t p, int M)
{
    std::int64_t v = 1;
    for (int i = 0; i < M; ++i) {
        if (v > std::numeric_limits<std::int64_t>::max() / (4 * p))
            throw PrecisionError("precision too large: p^M overflows 62 bits");
        v *= p;
    }
    return v;
}

}  // namespace

std::shared_ptr<const EisensteinRing> EisensteinRing::create(int p, int r, const std::vector<std::int64_t>& eis, int N)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (eis.empty())
        throw DomainError("Eisenstein polynomial must have degree at least 1");
    if (N < 1)
        throw DomainError("precision must be positive");
    std::shared_ptr<EisensteinRing> R(new EisensteinRing());
    R->p_ = p;
    R->r_ = r;
    R->e_ = static_cast<int>(eis.size());
    R->N_ = N;
    R->M_ = (N + R->e_ - 1) / R->e_ + 2;
    R->pM_ = checked_pow(p, R->M_);
    R->F_ = &GaloisField::get(p, r);
    for (int d : R->F_->modulus())
        R->gr_modulus_.push_back(d);
    if (eis[0] == 0 || vp_int(eis[0], p) != 1)
        throw DomainError("not Eisenstein: constant term must have valuation exactly 1");
    for (size_t i = 1; i < eis.size(); ++i)
        if (mod(eis[i], p) != 0)
            throw DomainError("not Eisenstein: non-constant coefficients must be divisible by p");
    for (auto b : eis)
        R->b_.push_back(R->gr_int(b));
    GR u0 = R->gr_div_p(R->b_[0], 1);
    GR u0inv = R->gr_inverse(u0);
    int e = R->e_;
    R->p_over_pi_.assign(e, R->gr_zero());
    for (int j = 0; j + 1 < e; ++j)
        R->p_over_pi_[j] = R->gr_scale(R->gr_mul(R->b_[j + 1], u0inv), -1);
    R->p_over_pi_[e - 1] = R->gr_scale(u0inv, -1);
    R->rho_ = R->gr_residue(R->p_over_pi_[e - 1]);
    return R;
}

EisensteinRing::GR EisensteinRing::gr_int(std::int64_t n) const
{
    GR a(r_, 0);
    a[0] = mod(n, pM_);
    return a;
}

EisensteinRing::GR EisensteinRing::gr_add(const GR& a, const GR& b) const
{
    GR c(r_);
    for (int i = 0; i < r_; ++i)
        c[i] = mod(a[i] + b[i], pM_);
    return c;
}

EisensteinRing::GR EisensteinRing::gr_sub(const GR& a, const GR& b) const
{
    GR c(r_);
    for (int i = 0; i < r_; ++i)
        c[i] = mod(a[i] - b[i], pM_);
    return c;
}

EisensteinRing::GR EisensteinRing::gr_mul(const GR& a, const GR& b) const
{
    if (r_ == 1)
        return GR{mulmod(a[0], b[0], pM_)};
    std::vector<std::int64_t> t(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < r_; ++j)
            t[i + j] = mod(t[i + j] + mulmod(a[i], b[j], pM_), pM_);
    }
    for (int k = 2 * r_ - 2; k >= r_; --k) {
        std::int64_t c = t[k];
        if (c == 0)
            continue;
        t[k] = 0;
        for (int j = 0; j < r_; ++j)
            t[k - r_ + j] = mod(t[k - r_ + j] - mulmod(c, gr_modulus_[j], pM_), pM_);
    }
    t.resize(r_);
    return t;
}

EisensteinRing::GR EisensteinRing::gr_scale(const GR& a, std::int64_t s) const
{
    GR c(r_);
    for (int i = 0; i < r_; ++i)
        c[i] = mulmod(a[i], s, pM_);
    return c;
}

bool EisensteinRing::gr_is_zero(const GR& a) const
{
    for (auto x : a)
        if (x != 0)
            return false;
    return true;
}

int EisensteinRing::gr_vp(const GR& a) const
{
    int best = -1;
    for (auto x : a) {
        if (x == 0)
            continue;
        int v = vp_int(x, p_);
        if (best < 0 || v < best)
            best = v;
    }
    return best;
}

EisensteinRing::GR EisensteinRing::gr_div_p(const GR& a, int k) const
{
    std::int64_t pk = ipow(p_, k);
    GR c(r_);
    for (int i = 0; i < r_; ++i) {
        if (a[i] % pk != 0)
            throw DomainError("division by p^k is not exact");
        c[i] = a[i] / pk;
    }
    return c;
}

EisensteinRing::GR EisensteinRing::gr_truncate(const GR& a, int k) const
{
    if (k >= M_)
        return a;
    if (k <= 0)
        return gr_zero();
    std::int64_t pk = ipow(p_, k);
    GR c(r_);
    for (int i = 0; i < r_; ++i)
        c[i] = a[i] % pk;
    return c;
}

Fq EisensteinRing::gr_residue(const GR& a) const
{
    return Fq(*F_, F_->from_digits(a));
}

EisensteinRing::GR EisensteinRing::gr_lift(const Fq& x) const
{
    auto d = F_->digits(x.code());
    GR a(r_);
    for (int i = 0; i < r_; ++i)
        a[i] = d[i];
    return a;
}

EisensteinRing::GR EisensteinRing::gr_inverse(const GR& a) const
{
    Fq res = gr_residue(a);
    if (res.is_zero())
        throw DomainError("inverse of a non-unit");
    GR y = gr_lift(res.inv());
    GR two = gr_int(2);
    for (int k = 1; k < 2 * M_; k *= 2)
        y = gr_mul(y, gr_sub(two, gr_mul(a, y)));
    return y;
}

PadicElement::PadicElement(RingPtr R) : R_(std::move(R))
{
    c_.assign(R_->e(), R_->gr_zero());
    prec_ = R_->N();
}

PadicElement PadicElement::from_int(RingPtr R, std::int64_t n)
{
    PadicElement x(std::move(R));
    x.c_[0] = x.R_->gr_int(n);
    x.normalize();
    return x;
}

PadicElement PadicElement::from_residue(RingPtr R, const Fq& a)
{
    PadicElement x(std::move(R));
    x.c_[0] = x.R_->gr_lift(a);
    x.normalize();
    return x;
}

PadicElement PadicElement::pi(RingPtr R)
{
    PadicElement x(std::move(R));
    if (x.R_->e() >= 2)
        x.c_[1] = x.R_->gr_int(1);
    else
        x.c_[0] = x.R_->gr_scale(x.R_->eisenstein()[0], -1);
    x.normalize();
    return x;
}

void PadicElement::normalize()
{
    int e = R_->e();
    for (int i = 0; i < e; ++i) {
        int k = prec_ - i <= 0 ? 0 : (prec_ - i + e - 1) / e;
        c_[i] = R_->gr_truncate(c_[i], k);
    }
}

bool PadicElement::is_zero_to_precision() const
{
    for (const auto& c : c_)
        if (!R_->gr_is_zero(c))
            return false;
    return true;
}

std::optional<int> PadicElement::try_valuation_pi() const
{
    int e = R_->e();
    std::optional<int> best;
    for (int i = 0; i < e; ++i) {
        int v = R_->gr_vp(c_[i]);
        if (v < 0)
            continue;
        int w = e * v + i;
        if (!best || w < *best)
            best = w;
    }
    return best;
}

int PadicElement::valuation_pi() const
{
    auto v = try_valuation_pi();
    if (!v)
        throw PrecisionError("element vanishes to precision " + std::to_string(prec_) +
                             "; valuation not certified");
    return *v;
}

Rational PadicElement::valuation() const
{
    return Rational(valuation_pi(), R_->e());
}

Fq PadicElement::leading_residue() const
{
    int v = valuation_pi();
    int e = R_->e();
    int i0 = v % e, a = v / e;
    Fq res = R_->gr_residue(R_->gr_div_p(c_[i0], a));
    return res * R_->rho().pow(a);
}

Fq PadicElement::residue() const
{
    if (prec_ < 1)
        throw PrecisionError("residue of an element with no known digits");
    return R_->gr_residue(c_[0]);
}

PadicElement PadicElement::operator+(const PadicElement& o) const
{
    PadicElement x(R_);
    for (int i = 0; i < R_->e(); ++i)
        x.c_[i] = R_->gr_add(c_[i], o.c_[i]);
    x.prec_ = std::min(prec_, o.prec_);
    x.normalize();
    return x;
}

PadicElement PadicElement::operator-() const
{
    PadicElement x(R_);
    for (int i = 0; i < R_->e(); ++i)
        x.c_[i] = R_->gr_scale(c_[i], -1);
    x.prec_ = prec_;
    x.normalize();
    return x;
}

PadicElement PadicElement::operator-(const PadicElement& o) const
{
    return *this + (-o);
}

PadicElement PadicElement::operator*(const PadicElement& o) const
{
    int e = R_->e();
    std::vector<EisensteinRing::GR> t(2 * e - 1, R_->gr_zero());
    for (int i = 0; i < e; ++i) {
        if (R_->gr_is_zero(c_[i]))
            continue;
        for (int j = 0; j < e; ++j) {
            if (R_->gr_is_zero(o.c_[j]))
                continue;
            t[i + j] = R_->gr_add(t[i + j], R_->gr_mul(c_[i], o.c_[j]));
        }
    }
    const auto& b = R_->eisenstein();
    for (int k = 2 * e - 2; k >= e; --k) {
        if (R_->gr_is_zero(t[k]))
            continue;
        EisensteinRing::GR top = t[k];
        t[k] = R_->gr_zero();
        for (int i = 0; i < e; ++i)
            t[k - e + i] = R_->gr_sub(t[k - e + i], R_->gr_mul(top, b[i]));
    }
    PadicElement x(R_);
    for (int i = 0; i < e; ++i)
        x.c_[i] = t[i];
    int vx = try_valuation_pi().value_or(prec_);
    int vy = o.try_valuation_pi().value_or(o.prec_);
    x.prec_ = std::min({prec_ + vy, o.prec_ + vx, R_->N()});
    x.normalize();
    return x;
}

PadicElement PadicElement::operator*(std::int64_t s) const
{
    PadicElement x(R_);
    for (int i = 0; i < R_->e(); ++i)
        x.c_[i] = R_->gr_scale(c_[i], s);
    x.prec_ = prec_;
    x.normalize();
    return x;
}

PadicElement PadicElement::pow(unsigned k) const
{
    PadicElement result = from_int(R_, 1), base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

PadicElement PadicElement::div_pi(int times) const
{
    PadicElement x = *this;
    int e = R_->e();
    for (int t = 0; t < times; ++t) {
        if (x.prec_ < 1)
            throw PrecisionError("no digits left to divide by pi");
        if (!R_->gr_residue(x.c_[0]).is_zero())
            throw DomainError("division by pi of a unit");
        EisensteinRing::GR c0 = R_->gr_div_p(x.c_[0], 1);
        PadicElement y(R_);
        for (int j = 0; j + 1 < e; ++j)
            y.c_[j] = x.c_[j + 1];
        y.c_[e - 1] = R_->gr_zero();
        for (int j = 0; j < e; ++j)
            y.c_[j] = R_->gr_add(y.c_[j], R_->gr_mul(c0, R_->p_over_pi()[j]));
        y.prec_ = x.prec_ - 1;
        y.normalize();
        x = y;
    }
    return x;
}

PadicElement PadicElement::inverse() const
{
    if (prec_ < 1 || residue().is_zero())
        throw DomainError("inverse of a non-unit");
    PadicElement a = *this;
    a.prec_ = R_->N();
    PadicElement y = from_residue(R_, residue().inv());
    PadicElement two = from_int(R_, 2);
    for (int k = 1; k < 2 * R_->N(); k *= 2)
        y = y * (two - a * y);
    y.prec_ = prec_;
    y.normalize();
    return y;
}

PadicElement PadicElement::divide(const PadicElement& b) const
{
    int v = b.valuation_pi();
    PadicElement u = b.div_pi(v);
    PadicElement q = *this * u.inverse();
    auto vq = q.try_valuation_pi();
    if (vq && *vq < v)
        throw DomainError("quotient is not integral");
    return q.div_pi(v);
}

PadicElement PadicElement::div_int(std::int64_t n) const
{
    if (mod(n, R_->p()) == 0)
        throw DomainError("division by an integer divisible by p");
    return *this * inv_mod(n, R_->pM());
}

PadicElement PadicElement::with_precision(int k) const
{
    PadicElement x = *this;
    x.prec_ = std::min(prec_, k);
    x.normalize();
    return x;
}

std::string PadicElement::str() const
{
    std::string s;
    for (int i = 0; i < R_->e(); ++i) {
        if (R_->gr_is_zero(c_[i]))
            continue;
        std::string cs;
        if (R_->r() == 1) {
            cs = std::to_string(c_[i][0]);
        } else {
            cs = "[";
            for (int j = 0; j < R_->r(); ++j)
                cs += (j ? "," : "") + std::to_string(c_[i][j]);
            cs += "]";
        }
        if (!s.empty())
            s += " + ";
        s += cs;
        if (i == 1)
            s += "*pi";
        else if (i > 1)
            s += "*pi^" + std::to_string(i);
    }
    if (s.empty())
        s = "0";
    return s + " + O(pi^" + std::to_string(prec_) + ")";
}

CyclotomicRing make_cyclotomic_ring(int p, int level, int N, int r)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (level != 1 && level != 2)
        throw DomainError("cyclotomic level must be 1 or 2");
    int e = level == 1 ? p - 1 : p * (p - 1);
    if (N < 3 * e)
        throw PrecisionError("precision " + std::to_string(N) + " below the required " + std::to_string(3 * e) +
                             " pi-digits");
    int M = (N + e - 1) / e + 2;
    std::int64_t pM = checked_pow(p, M);
    std::vector<std::int64_t> eis(e, 0);
    if (level == 1) {
        std::int64_t c = 1;
        for (int k = 1; k <= p - 1; ++k) {
            c = c * (p - k + 1) / k;
            eis[k - 1] = c;
        }
    } else {
        int n = p * (p - 1);
        std::vector<std::vector<std::int64_t>> C(n + 1, std::vector<std::int64_t>(n + 1, 0));
        for (int a = 0; a <= n; ++a) {
            C[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                C[a][b] = mod(C[a - 1][b - 1] + (b <= a - 1 ? C[a - 1][b] : 0), pM);
        }
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < e && i <= p * j; ++i)
                eis[i] = mod(eis[i] + C[p * j][i], pM);
    }
    RingPtr R = EisensteinRing::create(p, r, eis, N);
    PadicElement pi = PadicElement::pi(R);
    PadicElement one = PadicElement::from_int(R, 1);
    CyclotomicRing out{R, level, pi, pi, std::nullopt};
    if (level == 2) {
        out.lambda = (one + pi).pow(p) - one;
        PadicElement mu(R);
        for (int k = 1; k <= p - 1; ++k) {
            PadicElement term = pi.pow(k).div_int(k);
            mu = (k % 2 == 1) ? mu + term : mu - term;
        }
        out.mu = mu;
        if (mu.valuation_pi() != 1)
            throw PrecisionError("could not certify v(mu) = v(pi)");
    }
    if (out.lambda.valuation() != Rational(1, p - 1))
        throw PrecisionError("could not certify v(lambda) = 1/(p-1)");
    PadicElement check = out.lambda.pow(p - 1) + PadicElement::from_int(R, p);
    auto vc = check.try_valuation_pi();
    bool certified = vc ? *vc > e : check.prec() > e;
    if (!certified)
        throw PrecisionError("could not certify v(lambda^(p-1) + p) > 1");
    return out;
}

}  // namespace oort
