#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "oort/core.hpp"

namespace oort {

/// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels, std::string name);

    int size() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int g) const { return mul(mul(a, g), inv(a)); }
    int order(int g) const { return order_[g]; }
    int pow(int g, std::int64_t k) const;
    const std::string& label(int g) const { return labels_[g]; }
    std::optional<int> find(const std::string& label) const;
    const std::string& name() const { return name_; }

    /// Present for the groups built below.
    int p = 0, n = 0, m = 1;
    std::int64_t chi = 1;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_, order_;
    std::vector<std::string> labels_;
    std::string name_;
};

/// Z/p^n x|_chi Z/m with (a,b)(a',b') = (a + chi^b a', b + b'); element index a + p^n b.
FiniteGroup metacyclic_group(int p, int n, int m, std::int64_t chi);
/// (Z/p)^2 as pairs; element index a + p b.
FiniteGroup bicyclic_group(int p);
/// Smallest c whose class in (Z/p^n)^x has order exactly m.
std::int64_t default_character(int p, int n, int m);

using Subgroup = boost::dynamic_bitset<>;

int subgroup_order(const Subgroup& H);
Subgroup cyclic_subgroup(const FiniteGroup& G, int g);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
/// Subgroup generated by H and the elements of K.
Subgroup join(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

/// All subgroups, ordered by order and then by membership; |G| <= 10^4.
std::vector<Subgroup> subgroups(const FiniteGroup& G);

struct BranchCycleDescription {
    std::vector<int> elements;

    /// Throws unless the entries are non-identity, multiply to 1 and generate G.
    void validate(const FiniteGroup& G) const;
    std::string str(const FiniteGroup& G) const;
};

/// Degree of the ramification divisor of X -> X/H for the characteristic-zero cover.
std::int64_t ram_divisor_char0(const FiniteGroup& G, const BranchCycleDescription& bcd, const Subgroup& H);
/// Contribution of a single branch point with inertia generator g.
std::int64_t ram_divisor_point(const FiniteGroup& G, int g, const Subgroup& H);

/// Lower filtration by subgroups: break (t, S) means G_j = S for j > t.
struct SubgroupFiltration {
    std::vector<std::pair<std::int64_t, Subgroup>> breaks;

    void validate(const FiniteGroup& G) const;
};

/// Katz-Gabber cover: one totally ramified wild point and, when m > 1, one tame point.
struct KatzGabberCover {
    SubgroupFiltration wild;
    std::optional<int> tame_generator;
};

std::int64_t ram_divisor_charp(const FiniteGroup& G, const KatzGabberCover& kg, const Subgroup& H);

/// G_j = G for j <= m1 and <(1,0)> for m1 < j <= m2.
KatzGabberCover bicyclic_cover(const FiniteGroup& G, std::int64_t m1, std::int64_t m2);
/// Upper jumps default to u_1 = h/m and u_i = p u_{i-1}.
KatzGabberCover metacyclic_cover(const FiniteGroup& G, std::int64_t h, std::vector<Rational> upper = {});
/// Lower breaks l_i = l_{i-1} + m p^{i-1}(u_i - u_{i-1}) of the metacyclic wild filtration.
std::vector<std::int64_t> metacyclic_lower_jumps(int p, int m, const std::vector<Rational>& upper);

}  // namespace oort
