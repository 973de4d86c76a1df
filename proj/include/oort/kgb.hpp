#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oort/groups.hpp"

namespace oort {

struct KgbRow {
    Subgroup subgroup;
    std::optional<std::int64_t> r_x;  // characteristic zero side, when a witness is known
    std::int64_t r_y = 0;             // Katz-Gabber side
};

struct KgbVerdict {
    bool vanishes = false;
    std::optional<BranchCycleDescription> witness;
    std::vector<KgbRow> table;

    bool balanced() const;
};

struct SearchBounds {
    int max_points = 16;
    std::int64_t max_states = 4'000'000;
};

/// Predicate for (Z/p)^2 with lower jumps m1 <= m2.
KgbVerdict kgb_zpzp(int p, std::int64_t m1, std::int64_t m2);

/// Predicate for Z/p^n x|_chi Z/m with first positive lower jump h.
KgbVerdict kgb_metacyclic(int p, int n, int m, std::int64_t chi, std::int64_t h);

/// Exhaustive search for a product-one generating tuple whose divisor degrees match the cover for every subgroup.
std::optional<BranchCycleDescription> kgb_witness_search(const FiniteGroup& G, const KatzGabberCover& kg,
                                                         const SearchBounds& bounds = {});

/// Comparison table over all subgroups; r_x is filled only when a witness is given.
std::vector<KgbRow> kgb_table(const FiniteGroup& G, const KatzGabberCover& kg,
                              const std::optional<BranchCycleDescription>& witness);

}  // namespace oort
