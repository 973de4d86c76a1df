#include "oort/lifting.hpp"

#include <map>

#include "oort/asw.hpp"
#include "oort/ramification.hpp"

namespace oort {

namespace {

void require_lift_parameters(int p, int u1)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (u1 < 1)
        throw DomainError("u1 must be positive");
    if (u1 % p == 0)
        throw DomainError("u1 must be prime to p");
}

ValuedLaurentPoly one_plus(const PadicElement& c, int exponent)
{
    return ValuedLaurentPoly::constant(PadicElement::from_int(c.ring(), 1)) + ValuedLaurentPoly::monomial(c, exponent);
}

std::int64_t binomial(int n, int k)
{
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

Rational capped_circle_valuation(const ValuedLaurentPoly& f, const Rational& r, const Rational& cap)
{
    Rational known = cap, unknown = cap;
    for (const auto& [k, c] : f.terms()) {
        auto v = f.coef_valuation(k);
        Rational val = (v ? *v : f.coef_lower_bound(k)) - Rational(k) * r;
        Rational& slot = v ? known : unknown;
        slot = std::min(slot, val);
    }
    if (unknown < cap && unknown <= known)
        throw PrecisionError("valuation on the circle is not determined at this precision");
    return known;
}

}  // namespace

int default_precision(int p, int level)
{
    int e = level == 1 ? p - 1 : p * (p - 1);
    return 4 * e;
}

void KummerChain::validate() const
{
    if (n < 1 || static_cast<int>(H.size()) != n)
        throw DomainError("chain must have n equations");
    for (const auto& h : H)
        require_normalized(h);
}

KummerChain build_zp_lift(int p, int u1, int N)
{
    require_lift_parameters(p, u1);
    auto C = make_cyclotomic_ring(p, 1, N ? N : default_precision(p, 1));
    KummerChain chain{p, 1, C, {one_plus(C.lambda.pow(p), u1)}};
    chain.validate();
    return chain;
}

KummerChain build_zp2_lift(int p, int u1, int N)
{
    require_lift_parameters(p, u1);
    auto C = make_cyclotomic_ring(p, 2, N ? N : default_precision(p, 2));
    auto H1 = one_plus(C.lambda.pow(p), u1);
    auto H2 = exp_truncated(ValuedLaurentPoly::monomial(C.mu->pow(p), u1));
    KummerChain chain{p, 2, C, {H1, H2}};
    chain.validate();
    return chain;
}

GenericDifferent generic_different(const KummerChain& chain)
{
    chain.validate();
    int p = chain.p, n = chain.n;
    std::int64_t pn = ipow(p, n);
    std::map<std::pair<Rational, std::int64_t>, int> rows;
    GenericDifferent out;
    out.delta = Rational(0);
    std::int64_t pole_order = 0;
    for (int i = 1; i <= n; ++i) {
        const auto& Hi = chain.H[i - 1];
        NewtonPolygon P = newton_polygon(Hi);
        std::int64_t index = ipow(p, n - i + 1);
        for (const auto& seg : P.segments) {
            rows[{seg.root_valuation_T(), index}] += seg.length();
            out.delta += Rational(seg.length() * ipow(p, i - 1) * (index - 1));
        }
        pole_order += ipow(p, i - 1) * Hi.degree();
    }
    for (const auto& [key, count] : rows)
        out.branch_table.push_back(BranchRow{key.first, count, key.second});
    std::int64_t pole_index = pn / gcd64(pn, pole_order);
    if (pole_index > 1) {
        out.branch_table.push_back(BranchRow{std::nullopt, 1, pole_index});
        out.delta += Rational((pn / pole_index) * (pole_index - 1));
    }
    RootCertificate cert = roots_simple_distinct_certificate(chain.H);
    out.exact = cert.certified;
    out.reason = cert.reason;
    return out;
}

std::string to_string(LiftStatus s)
{
    switch (s) {
    case LiftStatus::lift_certified:
        return "lift-certified";
    case LiftStatus::bound_only:
        return "bound-only";
    case LiftStatus::not_a_lift:
        return "not-a-lift";
    }
    return "";
}

bool reduction_check(const KummerChain& chain, std::int64_t u1, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    int p = chain.p;
    const auto& R = chain.ring.ring;
    const auto& lambda = chain.ring.lambda;
    PadicElement lp = lambda.pow(p);
    for (int k = 1; k <= p; ++k) {
        PadicElement ck = (lambda.pow(k) * binomial(p, k)).divide(lp);
        if (k == p || k == 1) {
            Fq expect = Fq::from_int(R->residue_field(), k == p ? 1 : -1);
            if (ck.residue() != expect)
                return fail("coefficient of Y^" + std::to_string(k) + " does not reduce to " + expect.str());
        } else if (ck.valuation_pi() < 1) {
            return fail("coefficient of Y^" + std::to_string(k) + " does not vanish mod pi");
        }
    }
    const GaloisField& F = R->residue_field();
    LaurentPoly g(F);
    ValuedLaurentPoly shifted = chain.H[0] - ValuedLaurentPoly::constant(PadicElement::from_int(R, 1));
    for (const auto& [k, c] : shifted.terms()) {
        PadicElement q;
        try {
            q = std::get<PadicElement>(c).divide(lp);
        } catch (const DomainError&) {
            return fail("H_1 - 1 is not divisible by lambda^p");
        }
        g = g + LaurentPoly::monomial(q.residue(), -k);
    }
    auto red = reduce_artin_schreier(g);
    if (red.trivial())
        return fail("special fiber is a trivial Artin-Schreier extension");
    if (red.standard.pole_order() != u1)
        return fail("special fiber has conductor " + std::to_string(red.standard.pole_order()) + ", expected " +
                    std::to_string(u1));
    return true;
}

DifferentCertificate different_criterion(const KummerChain& chain, const std::vector<std::int64_t>& jumps)
{
    validate_jumps(chain.p, jumps);
    if (static_cast<int>(jumps.size()) != chain.n)
        throw DomainError("expected " + std::to_string(chain.n) + " special-fiber jumps");
    std::vector<Rational> u;
    for (auto j : jumps)
        u.emplace_back(j);
    DifferentCertificate cert;
    cert.delta_s = cyclic_different(chain.p, u);
    GenericDifferent gd = generic_different(chain);
    cert.delta_eta = gd.delta;
    cert.branch_table = gd.branch_table;
    if (gd.exact) {
        if (cert.delta_eta != cert.delta_s) {
            cert.status = LiftStatus::not_a_lift;
            cert.note = "generic and special differents differ";
        } else {
            std::string why;
            if (reduction_check(chain, jumps.front(), &why)) {
                cert.status = LiftStatus::lift_certified;
            } else {
                cert.status = LiftStatus::not_a_lift;
                cert.note = why;
            }
        }
    } else if (cert.delta_eta < cert.delta_s) {
        cert.status = LiftStatus::not_a_lift;
        cert.note = "upper bound on the generic different is below the special different";
    } else {
        cert.status = LiftStatus::bound_only;
        cert.note = "branch points not certified simple and distinct: " + gd.reason;
    }
    return cert;
}

DifferentCertificate dihedral_example_check(int p, int N)
{
    if (!is_prime(p) || p == 2)
        throw DomainError("p must be an odd prime");
    KummerChain zp = build_zp_lift(p, 1, N);
    const auto& R = zp.ring.ring;
    PadicElement lp = zp.ring.lambda.pow(p);
    PadicElement zero = PadicElement::from_int(R, 0), one = PadicElement::from_int(R, 1);
    PadicElement half = lp.div_int(2);

    auto swap = [&](const PadicElement& x) { return -lp - x; };
    auto same = [](const PadicElement& a, const PadicElement& b) { return (a - b).is_zero_to_precision(); };
    PadicElement x0 = -lp;  // zero of 1 + lambda^p / X
    if (!same(one + lp.divide(x0), zero))
        throw DomainError("internal: -lambda^p is not a zero of the Z/p equation");
    if (!same(swap(zero), x0) || !same(swap(x0), zero))
        throw DomainError("internal: the involution does not swap the Z/p branch points");
    PadicElement fixed = -half;
    if (!same(swap(fixed), fixed))
        throw DomainError("internal: -lambda^p/2 is not fixed by the involution");
    PadicElement value = one + lp.divide(fixed);
    if (!same(value, -one))
        throw DomainError("internal: the Z/p equation does not take the value -1 at the tame point");

    GenericDifferent gd = generic_different(zp);
    int x_points = 0;
    for (const auto& row : gd.branch_table)
        x_points += row.count;

    DifferentCertificate cert;
    cert.delta_eta = Rational(x_points * (p - 1) + p);
    cert.delta_s = Rational(different_from_lower(RamFiltration{Numbering::lower, 2 * p, {{Rational(0), p}, {Rational(1), 1}}}));
    cert.branch_table = gd.branch_table;
    cert.branch_table.push_back(BranchRow{Rational(p, p - 1), 1, 2});
    std::string why;
    bool reduces = reduction_check(zp, 1, &why);
    if (gd.exact && reduces && cert.delta_eta == cert.delta_s) {
        cert.status = LiftStatus::lift_certified;
    } else if (gd.exact && cert.delta_eta != cert.delta_s) {
        cert.status = LiftStatus::not_a_lift;
    } else {
        cert.status = LiftStatus::bound_only;
        cert.note = reduces ? gd.reason : why;
    }
    return cert;
}

void validate_jumps(int p, const std::vector<std::int64_t>& u)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (u.empty())
        throw DomainError("at least one jump is required");
    if (u[0] < 1 || u[0] % p == 0)
        throw DomainError("u_1 must be positive and prime to p");
    for (size_t i = 1; i < u.size(); ++i) {
        if (u[i] < p * u[i - 1])
            throw DomainError("jumps must satisfy u_i >= p u_{i-1}");
        if (u[i] > p * u[i - 1] && u[i] % p == 0)
            throw DomainError("u_i > p u_{i-1} requires p not dividing u_i");
    }
}

OortWindow oort_window(const std::vector<std::int64_t>& u, int p, int i)
{
    if (i < 2 || i > static_cast<int>(u.size()))
        throw DomainError("window index out of range");
    std::int64_t ui = u[i - 1], prev = u[i - 2];
    Rational d(ui - p * prev);
    return {d, d * Rational(ui, ui - prev)};
}

OortResult oort_condition(int p, const std::vector<std::int64_t>& u)
{
    validate_jumps(p, u);
    int n = static_cast<int>(u.size());
    for (int i = 3; i <= n - 1; ++i) {
        OortWindow w = oort_window(u, p, i);
        std::int64_t a = p * (floor_of(w.low / Rational(p)) + 1);
        if (Rational(a) <= w.high)
            return {false, i, a};
    }
    return {};
}

Rational valuation_on_circle(const ValuedLaurentPoly& f, const Rational& r)
{
    if (f.is_zero())
        throw DomainError("zero function has no valuation");
    std::optional<Rational> known, unknown;
    for (const auto& [k, c] : f.terms()) {
        auto v = f.coef_valuation(k);
        Rational val = (v ? *v : f.coef_lower_bound(k)) - Rational(k) * r;
        auto& slot = v ? known : unknown;
        if (!slot || val < *slot)
            slot = val;
    }
    if (!known || (unknown && *unknown <= *known))
        throw PrecisionError("valuation on the circle is not determined at this precision");
    return *known;
}

Rational zp_depth(const ValuedLaurentPoly& f, const Rational& r)
{
    if (r < Rational(0))
        throw DomainError("radius must be nonnegative");
    if (f.symbolic())
        throw DomainError("depth needs exact coefficients");
    int p = f.p();
    Rational cap(p, p - 1);
    if (valuation_on_circle(f, r) != Rational(0))
        throw DomainError("f is not a unit on the circle v(T) = " + to_string(r));
    if (f.terms().size() == 1 && f.terms().begin()->first == 0)
        return Rational(0);

    const RingPtr& R = f.ring();
    ValuedLaurentPoly g(R);
    Rational w(-1);
    int limit = (f.degree() - f.low_degree() + 1) * R->e() * R->N() + 1;
    for (int step = 0; step < limit; ++step) {
        ValuedLaurentPoly h = g.is_zero() ? f : f - g.pow(p);
        Rational wn = capped_circle_valuation(h, r, cap);
        if (wn <= w)
            throw DomainError("internal: peeling did not raise the valuation");
        w = wn;
        if (w >= cap)
            return Rational(0);
        std::vector<std::pair<int, PadicElement>> roots;
        for (const auto& [k, c] : h.terms()) {
            auto v = h.coef_valuation(k);
            if (!v || *v - Rational(k) * r != w)
                continue;
            if (k % p != 0)
                return cap - w;
            const auto& x = std::get<PadicElement>(c);
            int vp = x.valuation_pi();
            if (vp % p != 0)
                throw DomainError("peeling needs a p-th root of pi: enlarge R by a ramified extension");
            PadicElement d = PadicElement::from_residue(R, x.leading_residue().proot()) * PadicElement::pi(R).pow(vp / p);
            roots.emplace_back(k / p, d);
        }
        for (const auto& [k, d] : roots)
            g = g + ValuedLaurentPoly::monomial(d, k);
    }
    throw DomainError("internal: peeling did not terminate");
}

int branch_points_above(const ValuedLaurentPoly& f, const Rational& r)
{
    int count = 0;
    NewtonPolygon P = newton_polygon(f);
    for (const auto& seg : P.segments)
        if (seg.root_valuation_T() > r)
            count += seg.length();
    if (mod(f.degree(), f.p()) != 0)
        ++count;
    return count;
}

DepthProfile depth_profile_check(const ValuedLaurentPoly& f, const std::vector<Rational>& radii)
{
    for (size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1])
            throw DomainError("radii must increase strictly");
    DepthProfile prof;
    for (const auto& r : radii)
        prof.samples.emplace_back(r, zp_depth(f, r));
    for (size_t i = 0; i + 1 < prof.samples.size(); ++i) {
        const auto& [r0, d0] = prof.samples[i];
        const auto& [r1, d1] = prof.samples[i + 1];
        Rational slope = (d1 - d0) / (r1 - r0);
        int nu = branch_points_above(f, r0);
        prof.slopes.push_back(slope);
        prof.nu.push_back(nu);
        if (slope > Rational(nu - 1))
            prof.consistent = false;
    }
    return prof;
}

Rational chain_depth(const KummerChain& chain, const Rational& r)
{
    chain.validate();
    if (chain.n != 1)
        throw DomainError("depth of chains with n >= 2 is not supported: the intermediate covers are not known to "
                          "have unit-times-p-th-power shape");
    return zp_depth(chain.H[0], r);
}

}  // namespace oort
