#pragma once

#include <map>
#include <string>

#include "oort/algebra/field.hpp"

namespace oort {

/// Sparse Laurent polynomial in t over F_q; keys are exponents of t.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const GaloisField& F) : F_(&F) {}
    static LaurentPoly monomial(const Fq& c, int exponent);

    const GaloisField& field() const { return *F_; }
    const std::map<int, std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Fq coef(int exponent) const;
    void set(int exponent, const Fq& c);

    /// Largest k with a nonzero t^{-k} term; 0 if there is none.
    int pole_order() const;
    int min_exponent() const;
    int max_exponent() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// x -> x^p.
    LaurentPoly frobenius() const;
    /// x^p - x.
    LaurentPoly wp() const;
    /// Terms with exponent in [lo, hi].
    LaurentPoly slice(int lo, int hi) const;

    std::string str(const std::string& var = "t") const;

private:
    const GaloisField* F_ = nullptr;
    std::map<int, std::uint32_t> terms_;
};

}  // namespace oort
