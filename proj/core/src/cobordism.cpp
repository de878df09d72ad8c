#include "rgate/cobordism.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "rgate/errors.hpp"
#include "rgate/linalg.hpp"
#include "rgate/parallel.hpp"
#include "rgate/su2.hpp"

namespace rgate::cobordism {

GroupPresentation RibbonHandleData::total_presentation() const {
    GroupPresentation p;
    p.generators = base.generators;
    p.generators.insert(p.generators.end(), new_generators.begin(), new_generators.end());
    p.relators = base.relators;
    p.relators.insert(p.relators.end(), attaching_words.begin(), attaching_words.end());
    return p;
}

void validate(const RibbonHandleData& h) {
    if (h.new_generators.size() != h.attaching_words.size())
        throw precondition_violated("handle data: need one attaching word per 1-handle");
    GroupPresentation total = h.total_presentation();
    total.normalize();  // throws on out-of-range letters
}

ExponentMatrix exponent_matrix(const RibbonHandleData& h) {
    validate(h);
    const int m = h.handle_count();
    const int g = h.base.generator_count();
    abelian::IntMatrix b(m, m);
    for (int i = 0; i < m; ++i)
        for (int letter : free_reduce(h.attaching_words[i])) {
            const int idx = std::abs(letter) - 1;
            if (idx >= g) b.at(i, idx - g) += letter > 0 ? 1 : -1;
        }
    Int det = b.determinant();
    return {std::move(b), std::move(det)};
}

QhcResult is_rational_homology_cobordism(const RibbonHandleData& h) {
    const ExponentMatrix e = exponent_matrix(h);
    QhcResult r;
    r.is_qhc = e.det != 0;
    if (r.is_qhc) r.relative_h1_order = abs(e.det);
    return r;
}

namespace {

// splitmix64; deterministic across platforms.
struct Prng {
    std::uint64_t state;
    explicit Prng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }
};

su2::UnitQuaternion random_unit_quaternion(Prng& rng) {
    for (;;) {
        const double w = 2.0 * rng.uniform() - 1.0;
        const double x = 2.0 * rng.uniform() - 1.0;
        const double y = 2.0 * rng.uniform() - 1.0;
        const double z = 2.0 * rng.uniform() - 1.0;
        const double n2 = w * w + x * x + y * y + z * z;
        if (n2 > 1e-6 && n2 <= 1.0) return su2::UnitQuaternion{w, x, y, z}.normalized();
    }
}

struct LogVec {
    double x, y, z;
};

LogVec quat_log(const su2::UnitQuaternion& q) {
    const double imag = q.imaginary_norm();
    const double angle = std::atan2(imag, q.w);
    if (imag < 1e-300) return {0.0, 0.0, 0.0};
    const double s = angle / imag;
    return {s * q.x, s * q.y, s * q.z};
}

// One Gauss-Newton descent from the given starting values for the b's.
// Returns true and fills `values` on success.
bool descend(const RibbonHandleData& h, const std::vector<su2::UnitQuaternion>& base_images,
             std::vector<su2::UnitQuaternion>& values, const SolverOptions& opts) {
    const int m = h.handle_count();
    const int g = h.base.generator_count();

    const auto image_of = [&](int letter) {
        const int idx = std::abs(letter) - 1;
        const su2::UnitQuaternion q = idx < g ? base_images[idx] : values[idx - g];
        return letter > 0 ? q : q.inverse();
    };

    const auto word_value = [&](const Word& w) {
        su2::UnitQuaternion acc;
        for (int letter : w) acc = acc * image_of(letter);
        return acc;
    };

    const auto residual_norm = [&]() {
        double r = 0.0;
        for (const Word& w : h.attaching_words) r = std::max(r, su2::arg(word_value(w)));
        return r;
    };

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        const double res = residual_norm();
        if (res < opts.residual_target) return true;

        // Right-trivialized Jacobian of the word map and error vector.
        linalg::MatX jac(3 * m, 3 * m);
        std::vector<double> err(3 * m, 0.0);
        for (int i = 0; i < m; ++i) {
            const Word& w = h.attaching_words[i];
            su2::UnitQuaternion prefix;
            for (int letter : w) {
                const int idx = std::abs(letter) - 1;
                if (idx >= g) {
                    const int j = idx - g;
                    if (letter > 0) {
                        const linalg::Mat3 ad = su2::adjoint(prefix * values[j]);
                        for (int a = 0; a < 3; ++a)
                            for (int c = 0; c < 3; ++c) jac.at(3 * i + a, 3 * j + c) += ad[3 * a + c];
                    } else {
                        const linalg::Mat3 ad = su2::adjoint(prefix);
                        for (int a = 0; a < 3; ++a)
                            for (int c = 0; c < 3; ++c) jac.at(3 * i + a, 3 * j + c) -= ad[3 * a + c];
                    }
                }
                prefix = prefix * image_of(letter);
            }
            const LogVec e = quat_log(prefix);
            err[3 * i + 0] = -e.x;
            err[3 * i + 1] = -e.y;
            err[3 * i + 2] = -e.z;
        }

        std::vector<double> step;
        if (!linalg::solve_linear(jac, err, step)) return false;

        // Backtracking on the max relator angle.
        double lambda = 1.0;
        bool improved = false;
        for (int bt = 0; bt < 12; ++bt) {
            std::vector<su2::UnitQuaternion> trial = values;
            for (int j = 0; j < m; ++j)
                trial[j] = trial[j] * su2::exp_pure(lambda * step[3 * j + 0], lambda * step[3 * j + 1],
                                                    lambda * step[3 * j + 2]);
            std::swap(values, trial);
            const double trial_res = residual_norm();
            if (trial_res < res) {
                improved = true;
                break;
            }
            std::swap(values, trial);
            lambda *= 0.5;
        }
        if (!improved) return false;
    }
    return residual_norm() < opts.residual_target;
}

}  // namespace

groupcoh::Representation extend_representation(const RibbonHandleData& h,
                                               const groupcoh::Representation& rho_minus,
                                               const SolverOptions& opts) {
    validate(h);
    if (!rho_minus.valid())
        throw invalid_representation("extend_representation: rho_minus residual exceeds tolerance");
    if (rho_minus.presentation.generator_count() != h.base.generator_count())
        throw precondition_violated("extend_representation: rho_minus does not match the base");
    const QhcResult qhc = is_rational_homology_cobordism(h);
    if (!qhc.is_qhc)
        throw precondition_violated("extend_representation: det(B) = 0, not a Q-homology cobordism");

    const int m = h.handle_count();
    const GroupPresentation total = h.total_presentation();

    // Restart 0 starts at the identity; further restarts are random. Batches
    // have a fixed size so the chosen restart is independent of worker count.
    const int batch = 8;
    std::vector<std::vector<su2::UnitQuaternion>> solutions(opts.restarts);
    std::vector<char> success(opts.restarts, 0);
    for (int base_idx = 0; base_idx < opts.restarts; base_idx += batch) {
        const int count = std::min(batch, opts.restarts - base_idx);
        parallel_for(static_cast<std::size_t>(count), [&](std::size_t k) {
            const int r = base_idx + static_cast<int>(k);
            std::vector<su2::UnitQuaternion> values(m);
            if (r > 0) {
                Prng rng(opts.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(r));
                for (int j = 0; j < m; ++j) values[j] = random_unit_quaternion(rng);
            }
            if (descend(h, rho_minus.images, values, opts)) {
                solutions[r] = std::move(values);
                success[r] = 1;
            }
        });
        for (int r = base_idx; r < base_idx + count; ++r) {
            if (!success[r]) continue;
            std::vector<su2::UnitQuaternion> images = rho_minus.images;
            images.insert(images.end(), solutions[r].begin(), solutions[r].end());
            return groupcoh::make_representation(total, std::move(images));
        }
    }
    throw solver_exhausted(
        "extend_representation: no restart converged; a solution exists whenever det(B) != 0, so "
        "this is a numerics limit (raise the restart budget)");
}

groupcoh::Representation pullback_to_top(const RibbonHandleData& h, const TopPresentation& top,
                                         const groupcoh::Representation& rho_w, double tolerance) {
    if (top.images_in_w.size() != top.presentation.generators.size())
        throw precondition_violated("pullback_to_top: one image word per top generator required");
    std::vector<su2::UnitQuaternion> images;
    images.reserve(top.images_in_w.size());
    for (const Word& w : top.images_in_w) images.push_back(groupcoh::evaluate_word(rho_w.images, w));
    groupcoh::Representation rho = groupcoh::make_representation(top.presentation, std::move(images));
    if (!rho.valid(tolerance))
        throw invalid_representation("pullback_to_top: composite violates a boundary relator");
    return rho;
}

}  // namespace rgate::cobordism
