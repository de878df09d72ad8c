#include "rgate/geometry.hpp"

#include <algorithm>

#include "rgate/errors.hpp"

namespace rgate::geometry {

namespace {

const std::vector<std::pair<GeometryClass, GeometryClass>>& edge_table() {
    using G = GeometryClass;
    static const std::vector<std::pair<G, G>> edges = {
        // closed figure
        {G::S3, G::Lens},
        {G::S3, G::RP3RP3},
        {G::Lens, G::SphericalSolvable},
        {G::SphericalSolvable, G::Euclidean},
        {G::SphericalSolvable, G::SphericalTypeI},
        {G::SphericalTypeI, G::BigClass},
        {G::RP3RP3, G::Euclidean},
        {G::S1S2, G::Euclidean},
        {G::Euclidean, G::Nil},
        {G::Nil, G::Sol},
        {G::Sol, G::BigClass},
        // toroidal-boundary figure
        {G::S1D2, G::K2I},
        {G::K2I, G::BigClassBoundary},
        {G::T2I, G::BigClassBoundary},
    };
    return edges;
}

const std::vector<std::string>& label_table() {
    static const std::vector<std::string> labels = {
        "S3",  "Lens", "RP3RP3", "S1S2", "SphericalSolvable", "SphericalTypeI", "Euclidean",
        "Nil", "Sol",  "BigClass", "S1D2", "K2I", "T2I", "BigClassBoundary",
    };
    return labels;
}

}  // namespace

bool is_boundary_class(GeometryClass c) { return static_cast<int>(c) >= kClosedClassCount; }

const std::string& class_label(GeometryClass c) { return label_table()[static_cast<int>(c)]; }

std::optional<GeometryClass> class_from_label(const std::string& label) {
    const auto& labels = label_table();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<GeometryClass>(i);
    return std::nullopt;
}

std::vector<std::pair<GeometryClass, GeometryClass>> hierarchy_edges() { return edge_table(); }

bool hierarchy_reachable(GeometryClass from, GeometryClass to) {
    if (is_boundary_class(from) != is_boundary_class(to))
        throw mixed_figure("hierarchy_reachable: labels come from different figures");
    if (from == to) return true;
    // DFS over the (tiny, acyclic) edge set.
    std::vector<GeometryClass> stack{from};
    std::vector<bool> seen(label_table().size(), false);
    seen[static_cast<int>(from)] = true;
    while (!stack.empty()) {
        const GeometryClass cur = stack.back();
        stack.pop_back();
        for (const auto& [src, dst] : edge_table()) {
            if (src != cur || seen[static_cast<int>(dst)]) continue;
            if (dst == to) return true;
            seen[static_cast<int>(dst)] = true;
            stack.push_back(dst);
        }
    }
    return false;
}

std::optional<bool> lspace_from_geometry(GeometryClass g) {
    if (is_boundary_class(g))
        throw precondition_violated("lspace_from_geometry: closed-figure label required");
    if (g == GeometryClass::BigClass) return std::nullopt;
    return true;
}

ArrowStatus arrow_status(GeometryClass from, GeometryClass to) {
    if (!hierarchy_reachable(from, to)) return ArrowStatus::Obstructed;
    if (from == to) return ArrowStatus::RealizableKnown;  // product cobordism
    if (from == GeometryClass::S1D2 && to == GeometryClass::K2I) return ArrowStatus::RealizableKnown;
    return ArrowStatus::Open;
}

std::vector<ArrowWitness> remark_witnesses() {
    std::vector<ArrowWitness> table;
    const int total = kClosedClassCount + kBoundaryClassCount;
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
            const auto from = static_cast<GeometryClass>(i);
            const auto to = static_cast<GeometryClass>(j);
            if (is_boundary_class(from) != is_boundary_class(to)) continue;
            table.push_back({from, to, arrow_status(from, to)});
        }
    return table;
}

std::array<std::array<bool, kClosedClassCount>, kClosedClassCount> closed_reachability_matrix() {
    std::array<std::array<bool, kClosedClassCount>, kClosedClassCount> m{};
    for (int i = 0; i < kClosedClassCount; ++i)
        for (int j = 0; j < kClosedClassCount; ++j)
            m[i][j] = hierarchy_reachable(static_cast<GeometryClass>(i), static_cast<GeometryClass>(j));
    return m;
}

}  // namespace rgate::geometry
