#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oort/padic.hpp"

namespace oort {

/// Marked points of the open unit disc over a ring R.
struct MarkedDisc {
    RingPtr ring;
    std::vector<PadicElement> points;
    std::vector<std::string> labels;  // optional; defaults to x1, x2, ...
};

/// Symmetric matrix of v(x_i - x_j); the diagonal is ignored.
struct ValuationMatrix {
    std::vector<std::vector<Rational>> v;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(v.size()); }
    /// Throws unless square, symmetric, positive off the diagonal and ultrametric.
    void validate() const;
};

ValuationMatrix valuation_matrix(const MarkedDisc& d);

struct ClusterVertex {
    Rational depth;
    std::vector<int> cluster;  // every marked point below this vertex
    std::vector<int> points;   // marked points specializing to this component
    std::optional<int> parent;
    std::vector<int> children;
    int center = 0;  // smallest marked point in the cluster
};

/// Edge into a vertex; the root's edge runs from the point at infinity.
struct ClusterEdge {
    std::optional<int> parent;
    int child = 0;
    Rational thickness;
};

struct ClusterTree {
    std::vector<std::string> labels;
    std::vector<ClusterVertex> vertices;  // vertex 0 is the root
    std::vector<ClusterEdge> edges;
    std::vector<int> point_vertex;
    ValuationMatrix matrix;
};

ClusterTree cluster_tree(const ValuationMatrix& m);
ClusterTree cluster_tree(const MarkedDisc& d);

struct Specialization {
    enum class Kind { infinity, component, node };
    Kind kind = Kind::infinity;
    int vertex = 0;  // component, or the lower end of a node
};

/// From the valuations v(x - x_i); nullopt means x = x_i.
Specialization specialize(const std::vector<std::optional<Rational>>& distances, const ClusterTree& tree);
Specialization specialize(const PadicElement& x, const MarkedDisc& d, const ClusterTree& tree);

struct SpecializationRow {
    Specialization target;
    std::string region;
};

/// Where each component, node and the point at infinity come from.
std::vector<SpecializationRow> specialization_table(const ClusterTree& tree);

std::string to_dot(const ClusterTree& tree);

}  // namespace oort
