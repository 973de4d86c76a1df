#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oort/algebra.hpp"
#include "oort/core.hpp"

namespace oort {

/// Malformed tree data, as opposed to a failed axiom.
class StructuralError : public DomainError {
public:
    using DomainError::DomainError;
};

/// z -> (a z + b) / (c z + d).
struct Mobius {
    Fq a, b, c, d;

    static Mobius identity(const GaloisField& F);
    static Mobius scaling(const Fq& s);
    ProjPoint apply(const ProjPoint& z) const;
    /// this o o.
    Mobius compose(const Mobius& o) const;
    bool invertible() const;
    /// Same map up to a scalar.
    bool same_map(const Mobius& o) const;
    /// Derivative at a fixed point, in the local parameter there.
    Fq tangent_character(const ProjPoint& fixed) const;
};

struct HurwitzVertex {
    Rational delta;
    std::optional<DiffForm> omega;  // absent on the root vertex
    std::vector<ProjPoint> marked;  // the points z_i on this component
};

/// Edge from the vertex nearer the root to the one further away; the root edge ends at infinity'.
struct HurwitzEdge {
    int parent = 0;
    int child = 0;
    Rational epsilon;
    std::optional<ProjPoint> parent_point;  // node on the parent component; absent for the root edge
    ProjPoint child_point;                  // node on the child component, or infinity' for the root edge
};

/// Action of a generator c of Z/m: a vertex permutation and maps from each component to its image.
struct HurwitzAction {
    std::vector<int> vertex_map;
    std::vector<Mobius> maps;  // maps[v]: component v -> component vertex_map[v]; maps[0] unused
};

/// Vertex 0 is the root v0; edges[0] is the root edge e0.
struct HurwitzTree {
    int p = 0;
    int m = 1;
    const GaloisField* field = nullptr;
    Fq chi;  // chi(c) for the generator c
    std::vector<HurwitzVertex> vertices;
    std::vector<HurwitzEdge> edges;
    HurwitzAction action;

    /// Throws StructuralError on dangling references or missing data.
    void check_structure() const;
};

struct Violation {
    std::string axiom;  // "i" .. "x"
    std::string message;
};

std::vector<Violation> validate(const HurwitzTree& t);

/// h, where the tree carries h + 1 marked points z_i.
int conductor(const HurwitzTree& t);

/// Smooth tree for 1 < h < p, h != p - 1, with omega = dz / prod (z^m - z_i^m) and c^* z = chi z.
HurwitzTree build_small_conductor(int p, int m, int h, std::int64_t chi, const std::vector<std::int64_t>& z);

std::string to_dot(const HurwitzTree& t);

}  // namespace oort
