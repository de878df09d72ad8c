#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgate/abelian.hpp"
#include "rgate/groupcoh.hpp"
#include "rgate/presentation.hpp"

namespace rgate::cobordism {

// Handle data of a ribbon cobordism built on Y-: m 1-handles adding the
// generators b_1..b_m and m 2-handles with attaching words over the base
// generators and the b's. Letters index the combined generator list (base
// first, then new).
struct RibbonHandleData {
    GroupPresentation base;
    std::vector<std::string> new_generators;
    std::vector<Word> attaching_words;

    int handle_count() const { return static_cast<int>(new_generators.size()); }

    // pi_1(W) = (base * <b_1..b_m>) / <<v_1..v_m>>.
    GroupPresentation total_presentation() const;
};

void validate(const RibbonHandleData& h);

// B_ij = signed count of b_j in v_i after quotienting the base group.
struct ExponentMatrix {
    abelian::IntMatrix b;
    Int det;
};

ExponentMatrix exponent_matrix(const RibbonHandleData& h);

// det(B) != 0 test; when it holds, |H_1(W, Y-)| = |det B|.
struct QhcResult {
    bool is_qhc = false;
    Int relative_h1_order = 0;  // meaningful only when is_qhc
};

QhcResult is_rational_homology_cobordism(const RibbonHandleData& h);

struct SolverOptions {
    int restarts = 64;
    std::uint64_t seed = 0;
    int max_iterations = 200;
    double residual_target = 1e-9;
};

// Extends rho_minus over pi_1(W) by solving the attaching-word equations for
// the b's (damped Gauss-Newton, random restarts, lowest successful restart
// wins). Requires det(B) != 0 and a valid rho_minus; base images are carried
// over exactly. Throws solver_exhausted when the budget runs out.
groupcoh::Representation extend_representation(const RibbonHandleData& h,
                                               const groupcoh::Representation& rho_minus,
                                               const SolverOptions& opts = {});

// Word images of the generators of a boundary presentation in pi_1(W).
struct TopPresentation {
    GroupPresentation presentation;
    std::vector<Word> images_in_w;  // one word over total_presentation letters per generator
};

// Composes the word images with rho_W and re-validates against the top
// relators. Throws invalid_representation when a relator fails.
groupcoh::Representation pullback_to_top(const RibbonHandleData& h, const TopPresentation& top,
                                         const groupcoh::Representation& rho_w,
                                         double tolerance = 1e-8);

}  // namespace rgate::cobordism
