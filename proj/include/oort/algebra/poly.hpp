#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oort/algebra/field.hpp"

namespace oort {

/// Dense univariate polynomial over F_q in the variable z.
class Poly {
public:
    Poly() = default;
    explicit Poly(const GaloisField& F) : F_(&F) {}
    Poly(const GaloisField& F, std::vector<std::uint32_t> coeffs);
    static Poly constant(const Fq& c);
    static Poly monomial(const Fq& c, int degree);
    static Poly z(const GaloisField& F) { return monomial(Fq(F, 1), 1); }
    /// The polynomial z - a.
    static Poly linear(const Fq& a);

    const GaloisField& field() const { return *F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Fq coef(int i) const;
    Fq lead() const;
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Fq& s) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;
    Poly derivative() const;
    Poly pow(unsigned e) const;
    Poly powmod(std::uint64_t e, const Poly& m) const;
    Fq eval(const Fq& x) const;
    /// Applies the p-th root to every coefficient and divides exponents by p; requires only p-divisible exponents.
    Poly proot() const;
    /// Coefficientwise Frobenius composed with z -> z^p, i.e. the p-th power.
    Poly frobenius() const;
    /// Multiplicity of the root a.
    int multiplicity(const Fq& a) const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    const GaloisField* F_ = nullptr;
    std::vector<std::uint32_t> c_;
};

Poly gcd(Poly a, Poly b);

/// Squarefree decomposition: monic pairwise coprime g_i with f = lc * prod g_i^{e_i}.
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f);

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree d.
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace oort
