#include "rgate/groupcoh.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "rgate/errors.hpp"

namespace rgate::groupcoh {

su2::UnitQuaternion evaluate_word(const std::vector<su2::UnitQuaternion>& images, const Word& w) {
    su2::UnitQuaternion acc;
    for (int letter : w) {
        const int idx = std::abs(letter) - 1;
        acc = letter > 0 ? acc * images[idx] : acc * images[idx].inverse();
    }
    return acc;
}

double relator_residual(const GroupPresentation& p, const std::vector<su2::UnitQuaternion>& images) {
    double r = 0.0;
    for (const Word& w : p.relators) r = std::max(r, su2::arg(evaluate_word(images, w)));
    return r;
}

Representation make_representation(GroupPresentation p, std::vector<su2::UnitQuaternion> images) {
    if (static_cast<int>(images.size()) != p.generator_count())
        throw precondition_violated("representation: one image per generator required");
    Representation rho{std::move(p), std::move(images), 0.0};
    rho.residual = relator_residual(rho.presentation, rho.images);
    return rho;
}

linalg::MatX fox_word_row(const GroupPresentation& p, const std::vector<su2::UnitQuaternion>& images,
                          const Word& w) {
    const int g = p.generator_count();
    linalg::MatX row(3, 3 * g);
    su2::UnitQuaternion prefix;
    for (int letter : w) {
        const int idx = std::abs(letter) - 1;
        if (letter > 0) {
            const linalg::Mat3 ad = su2::adjoint(prefix);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) row.at(i, 3 * idx + j) += ad[3 * i + j];
            prefix = prefix * images[idx];
        } else {
            prefix = prefix * images[idx].inverse();
            const linalg::Mat3 ad = su2::adjoint(prefix);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) row.at(i, 3 * idx + j) -= ad[3 * i + j];
        }
    }
    return row;
}

CochainData fox_matrix(const GroupPresentation& p, const Representation& rho, const RankOptions& opts) {
    if (!rho.valid(opts.residual_tolerance))
        throw invalid_representation("fox_matrix: representation residual exceeds tolerance");
    const int g = p.generator_count();
    const int r = p.relator_count();

    CochainData data;
    data.psi = linalg::MatX(3 * g, 3);
    for (int i = 0; i < g; ++i) {
        const linalg::Mat3 ad = su2::adjoint(rho.images[i]);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                data.psi.at(3 * i + a, b) = (a == b ? 1.0 : 0.0) - ad[3 * a + b];
    }

    data.phi = linalg::MatX(3 * r, 3 * g);
    for (int j = 0; j < r; ++j)
        data.phi.set_block(3 * j, 0, fox_word_row(p, rho.images, p.relators[j]));

    const int rank_psi = linalg::rank_from_singular_values(linalg::singular_values(data.psi),
                                                           opts.svd_cutoff);
    const int rank_phi = linalg::rank_from_singular_values(linalg::singular_values(data.phi),
                                                           opts.svd_cutoff);
    data.h0 = 3 - rank_psi;
    data.h1 = 3 * g - rank_phi - rank_psi;
    return data;
}

int h0_dimension(const GroupPresentation& p, const Representation& rho, const RankOptions& opts) {
    return fox_matrix(p, rho, opts).h0;
}

int h1_dimension(const GroupPresentation& p, const Representation& rho, const RankOptions& opts) {
    return fox_matrix(p, rho, opts).h1;
}

int omega(const GroupPresentation& p, const Representation& rho, const RankOptions& opts) {
    if (!rho.valid(opts.residual_tolerance))
        throw invalid_representation("omega: representation residual exceeds tolerance");
    const int g = p.generator_count();
    const int r = p.relator_count();
    linalg::MatX phi(3 * r, 3 * g);
    for (int j = 0; j < r; ++j) phi.set_block(3 * j, 0, fox_word_row(p, rho.images, p.relators[j]));
    const int rank_phi =
        linalg::rank_from_singular_values(linalg::singular_values(phi), opts.svd_cutoff);
    return 3 * g - rank_phi;
}

ChainReport zariski_chain_check(const DimensionPair& dims_minus, const DimensionPair& dims_w,
                                const DimensionPair& dims_plus) {
    ChainReport report;
    report.h0_hypothesis = dims_minus.h0 == dims_plus.h0;
    report.chain_holds = dims_minus.h1 <= dims_w.h1 && dims_w.h1 <= dims_plus.h1;
    std::ostringstream os;
    os << "h0: " << dims_minus.h0 << " vs " << dims_plus.h0
       << (report.h0_hypothesis ? " (hypothesis holds)" : " (hypothesis fails)") << "; h1 chain: "
       << dims_minus.h1 << " <= " << dims_w.h1 << " <= " << dims_plus.h1 << " "
       << (report.chain_holds ? "holds" : "violated");
    if (!report.chain_holds)
        os << " -- violation on a certified ribbon QHC chain indicates an internal inconsistency, "
              "not an obstruction";
    report.text = os.str();
    return report;
}

}  // namespace rgate::groupcoh
