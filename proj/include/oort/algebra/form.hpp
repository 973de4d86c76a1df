#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oort/algebra/poly.hpp"

namespace oort {

/// A point of the projective line over F_q; std::nullopt is infinity.
using ProjPoint = std::optional<Fq>;

std::string point_str(const ProjPoint& x);

/// A rational function num/den with gcd 1 and monic den.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const GaloisField& F);
    RatFunc(const Poly& num, const Poly& den);
    RatFunc(const Poly& num);  // NOLINT: polynomials are rational functions
    static RatFunc constant(const Fq& c) { return RatFunc(Poly::constant(c)); }
    static RatFunc z(const GaloisField& F) { return RatFunc(Poly::z(F)); }

    const GaloisField& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Fq& s) const { return RatFunc(num_ * s, den_); }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(int e) const;
    RatFunc derivative() const;
    /// Order of vanishing at a point (negative for poles).
    int order_at(const ProjPoint& x) const;
    /// f((a z + b) / (c z + d)).
    RatFunc compose_mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const;

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

/// Parses expressions in z (and g, the field generator) with + - * / ^ and parentheses.
RatFunc parse_ratfunc(const GaloisField& F, const std::string& text);
/// Parses a constant; accepts "inf" for the point at infinity.
ProjPoint parse_point(const GaloisField& F, const std::string& text);

enum class FormClass { logarithmic, exact, neither };
std::string to_string(FormClass c);

/// One orbit of closed points: all roots of `factor`, each of degree `degree`, with common order `order`.
struct Place {
    Poly factor;       // product of the irreducible factors in this group (empty for infinity)
    bool at_infinity;
    int degree;        // degree of each closed point
    int count;         // number of closed points in the group
    int order;
};

struct Divisor {
    std::vector<Place> places;
    int splitting_degree;  // degree over F_q of a field splitting all finite places
    int total_degree() const;
};

/// The meromorphic differential f dz on the projective line over F_q.
class DiffForm {
public:
    DiffForm() = default;
    explicit DiffForm(RatFunc f) : f_(std::move(f)) {}
    static DiffForm d(const RatFunc& g) { return DiffForm(g.derivative()); }
    static DiffForm dlog(const RatFunc& g) { return DiffForm(g.derivative() / g); }

    const RatFunc& coefficient() const { return f_; }
    const GaloisField& field() const { return f_.field(); }
    bool is_zero() const { return f_.is_zero(); }

    DiffForm operator+(const DiffForm& o) const { return DiffForm(f_ + o.f_); }
    DiffForm operator-(const DiffForm& o) const { return DiffForm(f_ - o.f_); }
    DiffForm operator*(const RatFunc& g) const { return DiffForm(f_ * g); }
    DiffForm operator*(const Fq& s) const { return DiffForm(f_ * s); }
    bool operator==(const DiffForm& o) const { return f_ == o.f_; }
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    int order_at(const ProjPoint& x) const;
    Divisor divisor() const;
    /// Pullback along z -> (a z + b)/(c z + d).
    DiffForm pullback_mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const;

    std::string str() const;

private:
    RatFunc f_;
};

DiffForm cartier(const DiffForm& w);
FormClass classify_form(const DiffForm& w);

}  // namespace oort
