#pragma once

#include <vector>

#include "rgate/exact.hpp"
#include "rgate/groupcoh.hpp"
#include "rgate/seifert.hpp"
#include "rgate/su2.hpp"

namespace rgate::repvar {

// Labels one representation component: the sign eps = rho(h) and rotation
// numbers ell_i with arg rho(x_i) = pi ell_i / a_i.
struct RotationData {
    int eps = 1;
    std::vector<long long> ells;

    bool operator==(const RotationData& other) const = default;
    bool operator<(const RotationData& other) const {
        if (eps != other.eps) return eps < other.eps;
        return ells < other.ells;
    }
};

// Number of noncentral rotation numbers (0 < ell_i < a_i).
int noncentral_count(const seifert::SeifertPresentation& s, const RotationData& r);

// All admissible rotation data of a Seifert homology sphere, sorted
// lexicographically by (eps, ells). For three exceptional fibers every
// ell_i is strictly interior; for more, tuples with central entries are kept
// when at least three entries stay noncentral. Deterministic.
std::vector<RotationData> enumerate_rotation_data(const seifert::SeifertPresentation& s);

// Explicit unit-quaternion representative of a rotation component, produced
// by greedy interval folding with bisection at each fold.
struct RepWitness {
    groupcoh::Representation representation;
    double residual = 0.0;
    RotationData rotation;
};

RepWitness synthesize_witness(const seifert::SeifertPresentation& s, const RotationData& r);

// Casson data for three exceptional fibers (and the degenerate S^3 cases):
// count of rotation tuples and |lambda| = count / 2.
struct CassonCount {
    long long count = 0;
    Rational abs_lambda = 0;
};

CassonCount casson_via_count(const seifert::SeifertPresentation& s);

// One representative per conjugacy class, clustered on the trace coordinates
// (arg rho(g_i) for all i, arg rho(g_i g_j) for i < j) at tolerance 1e-6,
// sorted by coordinate vector.
std::vector<groupcoh::Representation> cluster_conjugacy_classes(
    const std::vector<groupcoh::Representation>& witnesses, double tol = 1e-6);

// Zariski tangent dimension 2t - 6 of an irreducible component with t
// noncentral rotation numbers; throws reducible_data when t < 3.
int tangent_dimension(const RotationData& r, const seifert::SeifertPresentation& s);
int tangent_dimension_from_t(int t);

}  // namespace rgate::repvar
