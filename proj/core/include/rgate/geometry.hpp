#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rgate::geometry {

// Geometry classes of the closed-manifold hierarchy (first ten) and of the
// toroidal-boundary hierarchy (last four). A query never mixes the two.
enum class GeometryClass {
    S3,
    Lens,
    RP3RP3,
    S1S2,
    SphericalSolvable,
    SphericalTypeI,
    Euclidean,
    Nil,
    Sol,
    BigClass,
    S1D2,
    K2I,
    T2I,
    BigClassBoundary,
};

inline constexpr int kClosedClassCount = 10;
inline constexpr int kBoundaryClassCount = 4;

bool is_boundary_class(GeometryClass c);

const std::string& class_label(GeometryClass c);
std::optional<GeometryClass> class_from_label(const std::string& label);

// Directed edges of the hierarchy (within one figure).
std::vector<std::pair<GeometryClass, GeometryClass>> hierarchy_edges();

// True iff a directed path (possibly empty) exists from `from` to `to`.
// Equal labels are reachable; throws mixed_figure across figures.
bool hierarchy_reachable(GeometryClass from, GeometryClass to);

// L-space status determined by the geometry alone: true for every closed
// class except BigClass, where nothing is known. Boundary classes are
// rejected.
std::optional<bool> lspace_from_geometry(GeometryClass g);

enum class ArrowStatus {
    Obstructed,       // no directed path; a ribbon QHC in this direction is impossible
    RealizableKnown,  // a ribbon QHC realizing the arrow is known to exist
    Open,             // path exists in the hierarchy but no realization is claimed
};

struct ArrowWitness {
    GeometryClass from;
    GeometryClass to;
    ArrowStatus status;
};

// Status of every ordered pair within each figure (reflexive pairs are
// realizable via the product cobordism).
std::vector<ArrowWitness> remark_witnesses();

ArrowStatus arrow_status(GeometryClass from, GeometryClass to);

// Row-major reachability matrix over the closed classes, in enum order.
std::array<std::array<bool, kClosedClassCount>, kClosedClassCount> closed_reachability_matrix();

}  // namespace rgate::geometry
