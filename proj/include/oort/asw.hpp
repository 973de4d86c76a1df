#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oort/algebra.hpp"
#include "oort/core.hpp"

namespace oort {

/// y^p - y = f reduced to standard form: f - standard - constant = z^p - z.
struct ArtinSchreierReduction {
    LaurentPoly standard;
    /// Constant term of f, removed because it only gives an unramified extension.
    Fq constant;
    /// Exact witness on the polar part; the power-series part is truncated at t^{precision}.
    LaurentPoly witness;
    int precision = 0;
    bool trivial() const { return standard.is_zero(); }
};

/// Standard form of y^p - y = f over F_q((t)); the witness is checked before returning.
ArtinSchreierReduction reduce_artin_schreier(const LaurentPoly& f, int precision = 32);

struct WittNormalForm {
    int p = 0;
    int r = 1;
    std::vector<LaurentPoly> x;

    /// Throws DomainError unless x_1 = c t^{-j} with p not dividing j, and every later x_i is standard.
    void validate() const;
};

std::vector<std::int64_t> asw_upper_jumps(const WittNormalForm& w);

std::int64_t different_of(const WittNormalForm& w);

}  // namespace oort
