#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oort/padic.hpp"

namespace oort {

/// Z_1^p = H_1, Z_i^p = Z_{i-1} H_i over W(k)[zeta_{p^n}], with H_i written in W = T^{-1}.
struct KummerChain {
    int p = 0;
    int n = 0;
    CyclotomicRing ring;
    std::vector<ValuedLaurentPoly> H;

    void validate() const;
};

/// Working precision used when none is given: four times the ramification index.
int default_precision(int p, int level);

KummerChain build_zp_lift(int p, int u1, int N = 0);
KummerChain build_zp2_lift(int p, int u1, int N = 0);

struct BranchRow {
    std::optional<Rational> valuation;  // v(T) at the branch point; nullopt for the pole T = 0
    int count = 0;
    std::int64_t index = 1;
};

struct GenericDifferent {
    Rational delta;
    bool exact = false;  // false: delta is only an upper bound
    std::string reason;  // why exactness could not be certified
    std::vector<BranchRow> branch_table;
};

GenericDifferent generic_different(const KummerChain& chain);

enum class LiftStatus { lift_certified, bound_only, not_a_lift };
std::string to_string(LiftStatus s);

struct DifferentCertificate {
    Rational delta_eta;
    Rational delta_s;
    LiftStatus status = LiftStatus::bound_only;
    std::vector<BranchRow> branch_table;
    std::string note;
};

/// Checks Z = 1 + lambda Y turns Z^p = H_1 into y^p - y = g(t^{-1}) with g of standard degree u1.
bool reduction_check(const KummerChain& chain, std::int64_t u1, std::string* why = nullptr);

DifferentCertificate different_criterion(const KummerChain& chain, const std::vector<std::int64_t>& jumps);

/// (X + lambda^p/2)^2 = T, Z^p = 1 + lambda^p X^{-1}.
DifferentCertificate dihedral_example_check(int p, int N = 0);

/// Throws unless u_1 >= 1, p does not divide u_1, u_i >= p u_{i-1}, and p does not divide u_i when strict.
void validate_jumps(int p, const std::vector<std::int64_t>& jumps);

struct OortWindow {
    Rational low;   // exclusive
    Rational high;  // inclusive
};

/// Window for index i (1-based) of the Oort condition.
OortWindow oort_window(const std::vector<std::int64_t>& jumps, int p, int i);

struct OortResult {
    bool holds = true;
    std::optional<int> index;
    std::optional<std::int64_t> witness;
};

OortResult oort_condition(int p, const std::vector<std::int64_t>& jumps);

/// min_k v(c_k) - k r for f = sum c_k W^k on the circle v(T) = r.
Rational valuation_on_circle(const ValuedLaurentPoly& f, const Rational& r);

/// Depth of Z^p = f on the disc of radius r.
Rational zp_depth(const ValuedLaurentPoly& f, const Rational& r);

/// Number of branch points of Z^p = f with v(T) > r.
int branch_points_above(const ValuedLaurentPoly& f, const Rational& r);

struct DepthProfile {
    std::vector<std::pair<Rational, Rational>> samples;  // (radius, depth)
    std::vector<Rational> slopes;                        // right slopes between consecutive samples
    std::vector<int> nu;                                 // branch points above each left endpoint
    bool consistent = true;                              // slope <= nu - 1 everywhere
};

DepthProfile depth_profile_check(const ValuedLaurentPoly& f, const std::vector<Rational>& radii);

/// Depth of a chain; only n = 1 is supported.
Rational chain_depth(const KummerChain& chain, const Rational& r);

}  // namespace oort
