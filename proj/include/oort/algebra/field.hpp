#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oort/core.hpp"

namespace oort {

/**
 * The finite field F_{p^r}, realized as F_p[x]/(f) for the lexicographically
 * first primitive monic f of degree r.
 *
 * Elements are coded as integers in [0, q): the base-p digits of a code are
 * its coordinates in the basis 1, x, ..., x^{r-1}. Fields are interned, so
 * pointer equality is field equality.
 */
class GaloisField {
public:
    static const GaloisField& get(int p, int r = 1);

    int p() const { return p_; }
    int r() const { return r_; }
    std::uint32_t q() const { return q_; }
    /// Coefficients of the defining polynomial, low degree first, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }
    /// The unique b with b^p = a.
    std::uint32_t proot(std::uint32_t a) const;
    std::uint32_t from_int(std::int64_t n) const;
    /// The class of x.
    std::uint32_t generator() const { return gen_; }
    /// Multiplicative generator (a primitive element).
    std::uint32_t primitive() const { return exp_[1]; }
    std::uint32_t log(std::uint32_t a) const;

    std::vector<int> digits(std::uint32_t a) const;
    std::uint32_t from_digits(const std::vector<std::int64_t>& d) const;
    bool in_prime_field(std::uint32_t a) const { return a < static_cast<std::uint32_t>(p_); }

    /// Absolute trace to F_p.
    int trace(std::uint32_t a) const;

    /// Integer for prime-field elements, otherwise a parenthesized polynomial in g.
    std::string format(std::uint32_t a) const;

private:
    GaloisField(int p, int r);

    int p_, r_;
    std::uint32_t q_;
    std::uint32_t gen_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> pw_;
};

/// Value-type wrapper around a field element code.
class Fq {
public:
    Fq() = default;
    Fq(const GaloisField& F, std::uint32_t v) : F_(&F), v_(v) {}
    static Fq from_int(const GaloisField& F, std::int64_t n) { return Fq(F, F.from_int(n)); }

    const GaloisField& field() const { return *F_; }
    std::uint32_t code() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fq operator+(const Fq& o) const { return Fq(*F_, F_->add(v_, o.v_)); }
    Fq operator-(const Fq& o) const { return Fq(*F_, F_->sub(v_, o.v_)); }
    Fq operator-() const { return Fq(*F_, F_->neg(v_)); }
    Fq operator*(const Fq& o) const { return Fq(*F_, F_->mul(v_, o.v_)); }
    Fq operator/(const Fq& o) const { return Fq(*F_, F_->div(v_, o.v_)); }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    Fq inv() const { return Fq(*F_, F_->inv(v_)); }
    Fq pow(std::int64_t e) const { return Fq(*F_, F_->pow(v_, e)); }
    Fq proot() const { return Fq(*F_, F_->proot(v_)); }

    bool operator==(const Fq& o) const { return F_ == o.F_ && v_ == o.v_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }
    bool operator<(const Fq& o) const { return v_ < o.v_; }

    std::string str() const { return F_->format(v_); }

private:
    const GaloisField* F_ = nullptr;
    std::uint32_t v_ = 0;
};

}  // namespace oort
