#pragma once

#include <string>
#include <vector>

#include "rgate/linalg.hpp"
#include "rgate/presentation.hpp"
#include "rgate/su2.hpp"

namespace rgate::groupcoh {

// An assignment of unit quaternions (SU(2) elements) to the generators of a
// presentation. residual is the max over relators of arg(evaluated relator);
// a representation is "valid" when it is below tolerance.
struct Representation {
    GroupPresentation presentation;
    std::vector<su2::UnitQuaternion> images;
    double residual = 0.0;

    static constexpr double kDefaultTolerance = 1e-8;

    bool valid(double tol = kDefaultTolerance) const { return residual <= tol; }
};

su2::UnitQuaternion evaluate_word(const std::vector<su2::UnitQuaternion>& images, const Word& w);

// Max over relators of arg(evaluated relator).
double relator_residual(const GroupPresentation& p, const std::vector<su2::UnitQuaternion>& images);

// Builds a Representation and records its residual.
Representation make_representation(GroupPresentation p, std::vector<su2::UnitQuaternion> images);

// 3x3g row of Ad-evaluated free derivatives of w, one 3x3 block per generator.
linalg::MatX fox_word_row(const GroupPresentation& p, const std::vector<su2::UnitQuaternion>& images,
                          const Word& w);

// The cochain data of the two-step complex g -> g^g -> g^r at rho:
//   psi (3g x 3): X |-> (X - Ad(rho(a_i)) X)_i
//   phi (3r x 3g): Ad-evaluated free-derivative blocks of the relators.
// h0 = 3 - rank(psi); h1 = dim ker(phi) - rank(psi).
struct CochainData {
    linalg::MatX psi;
    linalg::MatX phi;
    int h0 = 0;
    int h1 = 0;
};

struct RankOptions {
    double svd_cutoff = 1e-8;          // relative to sigma_max
    double residual_tolerance = 1e-8;  // validity gate for rho
};

CochainData fox_matrix(const GroupPresentation& p, const Representation& rho,
                       const RankOptions& opts = {});

int h0_dimension(const GroupPresentation& p, const Representation& rho, const RankOptions& opts = {});
int h1_dimension(const GroupPresentation& p, const Representation& rho, const RankOptions& opts = {});

// Kernel dimension of the linearized relator map: 3g - rank(phi). Additive
// under free products.
int omega(const GroupPresentation& p, const Representation& rho, const RankOptions& opts = {});

struct DimensionPair {
    int h0 = 0;
    int h1 = 0;
};

// Checks the hypothesis h0(Y-) == h0(Y+) and the chain
// h1(Y-) <= h1(W) <= h1(Y+). A failing chain on inputs certified as a genuine
// ribbon QHC is an internal-consistency failure, not an obstruction.
struct ChainReport {
    bool h0_hypothesis = false;
    bool chain_holds = false;
    std::string text;
};

ChainReport zariski_chain_check(const DimensionPair& dims_minus, const DimensionPair& dims_w,
                                const DimensionPair& dims_plus);

}  // namespace rgate::groupcoh
