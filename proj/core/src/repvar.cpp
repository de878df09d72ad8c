#include "rgate/repvar.hpp"

#include <algorithm>
#include <cmath>

#include "rgate/errors.hpp"
#include "rgate/parallel.hpp"

namespace rgate::repvar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInteriorMargin = 1e-9;

bool is_central_ell(long long ell, long long a) { return ell == 0 || ell == a; }

struct TupleGeometry {
    // Noncentral class angles in fiber order, the +-1 the product of the
    // noncentral factors must hit, and the target angle at the last
    // noncentral index.
    std::vector<double> angles;
    int product_sign = 1;
    double target = 0.0;
    bool valid = false;
};

TupleGeometry analyze(const seifert::SeifertPresentation& s, int eps,
                      const std::vector<long long>& ells) {
    TupleGeometry g;
    const int n = s.fiber_count();
    // Central product the noncentral factors must realize: eps^{-b} times the
    // inverses of the central images (each +-1).
    int sign = (eps == -1 && (s.b % 2 != 0)) ? -1 : 1;  // eps^{-b}
    for (int i = 0; i < n; ++i) {
        const long long a = s.pairs[i].first;
        if (is_central_ell(ells[i], a)) {
            if (ells[i] == a) sign = -sign;  // rho(x_i) = -1
        } else {
            g.angles.push_back(kPi * static_cast<double>(ells[i]) / static_cast<double>(a));
        }
    }
    if (g.angles.size() < 3) return g;
    g.product_sign = sign;
    const double last = g.angles.back();
    g.target = sign > 0 ? last : kPi - last;
    g.valid = true;
    return g;
}

bool target_strictly_reachable(const TupleGeometry& g) {
    su2::AngleInterval interval{g.angles[0], g.angles[0]};
    for (std::size_t i = 1; i + 1 < g.angles.size(); ++i)
        interval = su2::fold_angle_interval(interval, g.angles[i]);
    return interval.contains_strictly(g.target, kInteriorMargin);
}

bool parity_matches(int eps, long long ell, long long bi) {
    if (eps == 1) return ell % 2 == 0;       // (-1)^ell = +1
    return ((ell ^ bi) & 1LL) == 0;          // (-1)^ell = (-1)^{b_i}
}

}  // namespace

int noncentral_count(const seifert::SeifertPresentation& s, const RotationData& r) {
    int t = 0;
    for (int i = 0; i < s.fiber_count(); ++i)
        if (!is_central_ell(r.ells[i], s.pairs[i].first)) ++t;
    return t;
}

std::vector<RotationData> enumerate_rotation_data(const seifert::SeifertPresentation& s) {
    if (!seifert::is_homology_sphere(s))
        throw not_homology_sphere("enumerate_rotation_data: homology sphere required");
    const int n = s.fiber_count();
    const bool strict_interior = s.exceptional_fiber_count() <= 3;

    std::vector<RotationData> candidates;
    for (int eps : {-1, +1}) {
        std::vector<std::vector<long long>> options(n);
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            const auto [a, bi] = s.pairs[i];
            const long long lo = (strict_interior && a >= 2) ? 1 : 0;
            const long long hi = (strict_interior && a >= 2) ? a - 1 : a;
            for (long long ell = lo; ell <= hi; ++ell)
                if (parity_matches(eps, ell, bi)) options[i].push_back(ell);
            feasible = !options[i].empty();
        }
        if (!feasible) continue;

        std::vector<long long> current(n);
        const auto emit = [&](const auto& self, int i) -> void {
            if (i == n) {
                candidates.push_back(RotationData{eps, current});
                return;
            }
            for (long long ell : options[i]) {
                current[i] = ell;
                self(self, i + 1);
            }
        };
        emit(emit, 0);
    }

    // Admissibility is checked independently per candidate; slots keep the
    // result merge deterministic regardless of worker count.
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), [&](std::size_t idx) {
        const RotationData& r = candidates[idx];
        const TupleGeometry g = analyze(s, r.eps, r.ells);
        keep[idx] = g.valid && target_strictly_reachable(g) ? 1 : 0;
    });

    std::vector<RotationData> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back(candidates[i]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Deterministic jitter stream for synthesis retries.
double jitter(unsigned attempt, unsigned slot) {
    unsigned long long x = 0x9e3779b97f4a7c15ULL * (attempt * 131 + slot + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return static_cast<double>(x % 2048) / 2048.0 - 0.5;
}

}  // namespace

RepWitness synthesize_witness(const seifert::SeifertPresentation& s, const RotationData& r) {
    const int n = s.fiber_count();
    if (static_cast<int>(r.ells.size()) != n)
        throw precondition_violated("synthesize_witness: rotation data size mismatch");
    for (int i = 0; i < n; ++i) {
        const auto [a, bi] = s.pairs[i];
        if (r.ells[i] < 0 || r.ells[i] > a || !parity_matches(r.eps, r.ells[i], bi))
            throw precondition_violated("synthesize_witness: rotation data violates parity constraints");
    }
    const TupleGeometry geom = analyze(s, r.eps, r.ells);
    if (!geom.valid || !target_strictly_reachable(geom))
        throw synthesis_failed("synthesize_witness: rotation data is not admissible");

    std::vector<int> noncentral;
    for (int i = 0; i < n; ++i)
        if (!is_central_ell(r.ells[i], s.pairs[i].first)) noncentral.push_back(i);
    const int t = static_cast<int>(noncentral.size());

    const GroupPresentation pres = seifert::fundamental_group(s);
    const double target_residual = 1e-9;

    for (unsigned attempt = 0; attempt < 8; ++attempt) {
        // Forward reachable intervals of the noncentral prefix products.
        std::vector<su2::AngleInterval> reach(t - 1);
        reach[0] = {geom.angles[0], geom.angles[0]};
        for (int m = 1; m + 1 < t; ++m)
            reach[m] = su2::fold_angle_interval(reach[m - 1], geom.angles[m]);

        // Backward target angles: prefix m must land on targets[m].
        std::vector<double> targets(t - 1);
        targets[t - 2] = geom.target;
        for (int m = t - 2; m >= 1; --m) {
            const su2::AngleInterval window =
                su2::product_angle_interval(targets[m], geom.angles[m]);
            double lo = std::max(window.lo, reach[m - 1].lo);
            double hi = std::min(window.hi, reach[m - 1].hi);
            if (lo > hi) throw synthesis_failed("synthesize_witness: empty folding window");
            double pick = 0.5 * (lo + hi);
            if (attempt > 0) pick += (hi - lo) * 0.45 * jitter(attempt, static_cast<unsigned>(m));
            targets[m - 1] = std::clamp(pick, lo, hi);
        }

        std::vector<su2::UnitQuaternion> images(pres.generator_count());
        const su2::UnitQuaternion h_image =
            r.eps > 0 ? su2::UnitQuaternion{1, 0, 0, 0} : su2::UnitQuaternion{-1, 0, 0, 0};
        images[n] = h_image;
        for (int i = 0; i < n; ++i)
            if (is_central_ell(r.ells[i], s.pairs[i].first))
                images[i] = r.ells[i] == 0 ? su2::UnitQuaternion{1, 0, 0, 0}
                                           : su2::UnitQuaternion{-1, 0, 0, 0};

        try {
            su2::UnitQuaternion prefix = su2::exp_i(geom.angles[0]);
            images[noncentral[0]] = prefix;
            for (int m = 1; m + 1 < t; ++m) {
                const double current = su2::arg(prefix);
                const su2::UnitQuaternion slice =
                    su2::bisect_to_target(current, geom.angles[m], targets[m], 1e-12);
                const su2::UnitQuaternion g = su2::align_conjugator(prefix);
                const su2::UnitQuaternion elem = g * slice * g.inverse();
                images[noncentral[m]] = elem;
                prefix = prefix * elem;
            }
            // Last factor is forced by the relation.
            su2::UnitQuaternion last = prefix.inverse();
            if (geom.product_sign < 0) last = su2::UnitQuaternion{-last.w, -last.x, -last.y, -last.z};
            images[noncentral[t - 1]] = last;

            groupcoh::Representation rep = groupcoh::make_representation(pres, images);
            if (rep.residual < target_residual) {
                bool angles_ok = true;
                for (int i = 0; i < n; ++i) {
                    const double want =
                        kPi * static_cast<double>(r.ells[i]) / static_cast<double>(s.pairs[i].first);
                    if (std::fabs(su2::arg(rep.images[i]) - want) > 1e-8) angles_ok = false;
                }
                if (angles_ok) return RepWitness{rep, rep.residual, r};
            }
        } catch (const target_out_of_range&) {
            // retry with jittered targets
        }
    }
    throw synthesis_failed("synthesize_witness: residual target not reached after retries");
}

CassonCount casson_via_count(const seifert::SeifertPresentation& s) {
    if (!seifert::is_homology_sphere(s))
        throw not_homology_sphere("casson_via_count: homology sphere required");
    const int exceptional = seifert::normalize(s).fiber_count();
    if (exceptional <= 2) return {0, Rational(0)};  // S^3
    if (exceptional != 3)
        throw unsupported_fiber_count(
            "casson_via_count: |lambda| via counting is rigorous for three fibers only; supply a "
            "value for more");
    const auto tuples = enumerate_rotation_data(s);
    CassonCount c;
    c.count = static_cast<long long>(tuples.size());
    c.abs_lambda = Rational(to_int(c.count), Int(2));
    c.abs_lambda.canonicalize();
    return c;
}

namespace {

std::vector<double> trace_coordinates(const groupcoh::Representation& rep) {
    const int g = rep.presentation.generator_count();
    std::vector<double> coords;
    for (int i = 0; i < g; ++i) coords.push_back(su2::arg(rep.images[i]));
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) coords.push_back(su2::arg(rep.images[i] * rep.images[j]));
    return coords;
}

}  // namespace

std::vector<groupcoh::Representation> cluster_conjugacy_classes(
    const std::vector<groupcoh::Representation>& witnesses, double tol) {
    for (std::size_t i = 1; i < witnesses.size(); ++i)
        if (witnesses[i].presentation.generators != witnesses[0].presentation.generators ||
            witnesses[i].presentation.relators != witnesses[0].presentation.relators)
            throw precondition_violated("cluster_conjugacy_classes: mixed presentations");
    std::vector<groupcoh::Representation> reps;
    std::vector<std::vector<double>> keys;
    for (const auto& w : witnesses) {
        const std::vector<double> key = trace_coordinates(w);
        bool found = false;
        for (const auto& existing : keys) {
            double d = 0.0;
            for (std::size_t i = 0; i < key.size(); ++i)
                d = std::max(d, std::fabs(key[i] - existing[i]));
            if (d < tol) {
                found = true;
                break;
            }
        }
        if (!found) {
            keys.push_back(key);
            reps.push_back(w);
        }
    }
    std::vector<std::size_t> order(reps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<groupcoh::Representation> out;
    out.reserve(reps.size());
    for (std::size_t i : order) out.push_back(reps[i]);
    return out;
}

int tangent_dimension_from_t(int t) {
    if (t < 3) throw reducible_data("tangent_dimension: fewer than three noncentral rotation numbers");
    return 2 * t - 6;
}

int tangent_dimension(const RotationData& r, const seifert::SeifertPresentation& s) {
    return tangent_dimension_from_t(noncentral_count(s, r));
}

}  // namespace rgate::repvar
