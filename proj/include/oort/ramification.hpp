#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oort/core.hpp"

namespace oort {

enum class Numbering { lower, upper };

/// Break (t, o) means |G_s| = o for every s > t; for s <= first threshold the group is all of G_0.
struct RamFiltration {
    Numbering numbering = Numbering::lower;
    std::int64_t order = 1;
    std::vector<std::pair<Rational, std::int64_t>> breaks;

    /// Throws DomainError unless the invariants hold.
    void validate() const;
    /// |G_s|.
    std::int64_t order_at(const Rational& s) const;
    std::vector<Rational> jumps() const;

    bool operator==(const RamFiltration&) const = default;
};

RamFiltration herbrand_upper_from_lower(const RamFiltration& f);
RamFiltration herbrand_lower_from_upper(const RamFiltration& f);

/// Herbrand functions of a lower filtration.
Rational herbrand_phi(const RamFiltration& lower, const Rational& u);
Rational herbrand_psi(const RamFiltration& lower, const Rational& v);

std::int64_t different_from_lower(const RamFiltration& f);

/// Upper filtration of Z/p^n with the given upper jumps.
RamFiltration cyclic_upper_filtration(int p, const std::vector<Rational>& upper_jumps);

Rational cyclic_different(int p, const std::vector<Rational>& upper_jumps);

/// Lower filtration of Z/m x| Z/p^n from that of its p-part.
RamFiltration compose_tame(const RamFiltration& p_part, std::int64_t m);

}  // namespace oort
