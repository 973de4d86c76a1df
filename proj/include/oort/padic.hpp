#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oort/algebra.hpp"
#include "oort/core.hpp"

namespace oort {

class PadicElement;

/**
 * R = W(F_{p^r})[pi]/(E(pi)) for an Eisenstein polynomial E of degree e,
 * computed modulo p^M and trusted to N pi-adic digits.
 *
 * Valuations are normalized so that v(p) = 1 and v(pi) = 1/e.
 */
class EisensteinRing : public std::enable_shared_from_this<EisensteinRing> {
public:
    using GR = std::vector<std::int64_t>;  // element of W_M(F_{p^r}) in the lifted polynomial basis

    /// `eisenstein` holds b_0..b_{e-1} of E = pi^e + sum b_i pi^i, each an integer.
    static std::shared_ptr<const EisensteinRing> create(int p, int r, const std::vector<std::int64_t>& eisenstein,
                                                        int N);

    int p() const { return p_; }
    int r() const { return r_; }
    int e() const { return e_; }
    int N() const { return N_; }
    int M() const { return M_; }
    std::int64_t pM() const { return pM_; }
    const GaloisField& residue_field() const { return *F_; }
    const std::vector<GR>& eisenstein() const { return b_; }
    /// Residue of p / pi^e.
    Fq rho() const { return rho_; }

    GR gr_zero() const { return GR(r_, 0); }
    GR gr_int(std::int64_t n) const;
    GR gr_add(const GR& a, const GR& b) const;
    GR gr_sub(const GR& a, const GR& b) const;
    GR gr_mul(const GR& a, const GR& b) const;
    GR gr_scale(const GR& a, std::int64_t s) const;
    bool gr_is_zero(const GR& a) const;
    /// Minimum p-adic valuation of the coordinates; -1 for zero.
    int gr_vp(const GR& a) const;
    GR gr_div_p(const GR& a, int k) const;
    GR gr_truncate(const GR& a, int k) const;
    Fq gr_residue(const GR& a) const;
    GR gr_lift(const Fq& x) const;
    GR gr_inverse(const GR& a) const;

    const std::vector<GR>& p_over_pi() const { return p_over_pi_; }

private:
    EisensteinRing() = default;
    int p_ = 0, r_ = 0, e_ = 0, N_ = 0, M_ = 0;
    std::int64_t pM_ = 0;
    const GaloisField* F_ = nullptr;
    std::vector<std::int64_t> gr_modulus_;
    std::vector<GR> b_;
    std::vector<GR> p_over_pi_;
    Fq rho_;
};

using RingPtr = std::shared_ptr<const EisensteinRing>;

/// Element of an EisensteinRing known modulo pi^prec.
class PadicElement {
public:
    PadicElement() = default;
    explicit PadicElement(RingPtr R);
    static PadicElement from_int(RingPtr R, std::int64_t n);
    static PadicElement from_residue(RingPtr R, const Fq& x);
    static PadicElement pi(RingPtr R);

    const RingPtr& ring() const { return R_; }
    int prec() const { return prec_; }
    bool exact() const { return prec_ >= R_->N(); }
    bool is_zero_to_precision() const;
    /// pi-adic valuation; throws PrecisionError when the element vanishes to its precision.
    int valuation_pi() const;
    std::optional<int> try_valuation_pi() const;
    /// Valuation with v(p) = 1.
    Rational valuation() const;
    /// Residue of x / pi^{v(x)}.
    Fq leading_residue() const;
    /// x mod pi.
    Fq residue() const;
    const EisensteinRing::GR& coeff(int i) const { return c_[i]; }

    PadicElement operator+(const PadicElement& o) const;
    PadicElement operator-(const PadicElement& o) const;
    PadicElement operator-() const;
    PadicElement operator*(const PadicElement& o) const;
    PadicElement operator*(std::int64_t s) const;
    PadicElement pow(unsigned k) const;
    /// Exact division by pi; requires v >= 1/e.
    PadicElement div_pi(int times = 1) const;
    /// Inverse of a unit.
    PadicElement inverse() const;
    /// a / b when b divides a; throws otherwise.
    PadicElement divide(const PadicElement& b) const;
    /// Division by an integer prime to p.
    PadicElement div_int(std::int64_t n) const;
    PadicElement with_precision(int k) const;

    std::string str() const;

private:
    void normalize();
    RingPtr R_;
    std::vector<EisensteinRing::GR> c_;
    int prec_ = 0;
};

struct CyclotomicRing {
    RingPtr ring;
    int level;
    PadicElement pi;
    PadicElement lambda;               // zeta_p - 1
    std::optional<PadicElement> mu;    // level 2 only
};

CyclotomicRing make_cyclotomic_ring(int p, int level, int N, int r = 1);

/// Coefficient known only through its valuation and leading residue.
struct SymbolicCoef {
    Rational valuation;
    std::optional<Fq> residue;
};

using Coef = std::variant<PadicElement, SymbolicCoef>;

/// Laurent polynomial in W = T^{-1}; keys are exponents of W.
class ValuedLaurentPoly {
public:
    ValuedLaurentPoly() = default;
    explicit ValuedLaurentPoly(RingPtr R) : R_(std::move(R)) {}
    /// Symbolic mode over a ring of ramification index e with residue field F.
    ValuedLaurentPoly(int p, int e, const GaloisField& F) : p_(p), e_(e), F_(&F), symbolic_(true) {}

    static ValuedLaurentPoly monomial(const PadicElement& c, int exponent);
    static ValuedLaurentPoly constant(const PadicElement& c) { return monomial(c, 0); }

    bool symbolic() const { return symbolic_; }
    const RingPtr& ring() const { return R_; }
    int p() const { return symbolic_ ? p_ : R_->p(); }
    int e() const { return symbolic_ ? e_ : R_->e(); }
    const GaloisField& residue_field() const { return symbolic_ ? *F_ : R_->residue_field(); }
    const std::map<int, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    int low_degree() const;

    void set(int exponent, Coef c);
    /// Valuation of a coefficient, or nullopt if it vanishes to precision.
    std::optional<Rational> coef_valuation(int exponent) const;
    /// Lower bound on the valuation of a coefficient that vanishes to precision.
    Rational coef_lower_bound(int exponent) const;
    /// Leading residue of the coefficient, if known.
    std::optional<Fq> coef_residue(int exponent) const;

    ValuedLaurentPoly operator+(const ValuedLaurentPoly& o) const;
    ValuedLaurentPoly operator-(const ValuedLaurentPoly& o) const;
    ValuedLaurentPoly operator*(const ValuedLaurentPoly& o) const;
    ValuedLaurentPoly scale(const PadicElement& s) const;
    ValuedLaurentPoly scale_int(std::int64_t s) const;
    ValuedLaurentPoly pow(unsigned k) const;
    /// W -> W^u.
    ValuedLaurentPoly substitute_power(int u) const;
    ValuedLaurentPoly to_symbolic() const;

    std::string str() const;

private:
    RingPtr R_;
    int p_ = 0, e_ = 0;
    const GaloisField* F_ = nullptr;
    bool symbolic_ = false;
    std::map<int, Coef> terms_;
};

PadicElement exp_truncated(const PadicElement& x);
ValuedLaurentPoly exp_truncated(const ValuedLaurentPoly& x);

struct NewtonSegment {
    int start;             // exponent of W at the left vertex
    int end;               // exponent of W at the right vertex
    Rational start_value;  // valuation at the left vertex
    Rational slope;        // rise over run, v(p) = 1 units
    int length() const { return end - start; }
    /// Valuation of T at the corresponding roots.
    Rational root_valuation_T() const { return slope; }
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
    int shift = 0;            // lowest exponent present: roots at W = 0
    bool degenerate = false;  // a single monomial, no segments
    int total_length() const;
};

NewtonPolygon newton_polygon(const ValuedLaurentPoly& f);

struct RootCertificate {
    bool certified = false;
    std::string reason;
};

/// Residual-polynomial test for simple roots within each polynomial and no common roots across them.
RootCertificate roots_simple_distinct_certificate(const std::vector<ValuedLaurentPoly>& fs);

/// Throws unless f has unit constant term and positive-valuation higher coefficients.
void require_normalized(const ValuedLaurentPoly& f);

}  // namespace oort
