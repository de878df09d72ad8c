#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "rgate/errors.hpp"
#include "rgate/groupcoh.hpp"
#include "rgate/repvar.hpp"
#include "rgate/seifert.hpp"

using namespace rgate;
using groupcoh::Representation;
using su2::UnitQuaternion;

namespace {

constexpr double kPi = 3.14159265358979323846;

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
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

UnitQuaternion random_unit(Prng& rng) {
    for (;;) {
        const double w = 2.0 * rng.uniform() - 1.0;
        const double x = 2.0 * rng.uniform() - 1.0;
        const double y = 2.0 * rng.uniform() - 1.0;
        const double z = 2.0 * rng.uniform() - 1.0;
        const double n2 = w * w + x * x + y * y + z * z;
        if (n2 > 1e-6 && n2 <= 1.0) return UnitQuaternion{w, x, y, z}.normalized();
    }
}

// Torus-knot-style group <x, y | x^p y^{-q}> with an exact representation
// sending both generators to odd-rotation conjugates.
Representation torus_knot_rep(long long p, long long q, Prng& rng) {
    GroupPresentation pres;
    pres.generators = {"x", "y"};
    Word rel;
    for (long long i = 0; i < p; ++i) rel.push_back(1);
    for (long long i = 0; i < q; ++i) rel.push_back(-2);
    pres.relators.push_back(rel);
    // x^p = y^q = -1: odd rotation numbers on both.
    const long long k = 1 + 2 * rng.range(0, (p - 1) / 2);
    const long long kk = 1 + 2 * rng.range(0, (q - 1) / 2);
    const UnitQuaternion g1 = random_unit(rng);
    const UnitQuaternion g2 = random_unit(rng);
    std::vector<UnitQuaternion> images = {
        g1 * su2::exp_i(kPi * static_cast<double>(k) / static_cast<double>(p)) * g1.inverse(),
        g2 * su2::exp_i(kPi * static_cast<double>(kk) / static_cast<double>(q)) * g2.inverse()};
    return groupcoh::make_representation(pres, images);
}

}  // namespace

TEST_CASE("fox_matrix pinned examples") {
    SUBCASE("<a | a^2> at rho(a) = -1") {
        GroupPresentation p;
        p.generators = {"a"};
        p.relators = {Word{1, 1}};
        const Representation rho =
            groupcoh::make_representation(p, {UnitQuaternion{-1, 0, 0, 0}});
        REQUIRE(rho.residual < 1e-12);
        const groupcoh::CochainData data = groupcoh::fox_matrix(p, rho);
        // phi block = I + Ad(-1) = 2I, psi = 0.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(data.phi.at(i, j) == doctest::Approx(i == j ? 2.0 : 0.0));
                CHECK(data.psi.at(i, j) == doctest::Approx(0.0));
            }
        CHECK(data.h0 == 3);
        CHECK(data.h1 == 0);
        CHECK(groupcoh::omega(p, rho) == 0);
    }
    SUBCASE("trivial representation has h0 = 3") {
        const auto s = seifert::from_fibers({2, 3, 5});
        const GroupPresentation p = seifert::fundamental_group(s);
        const Representation rho = groupcoh::make_representation(
            p, std::vector<UnitQuaternion>(p.generator_count(), UnitQuaternion{}));
        const groupcoh::CochainData data = groupcoh::fox_matrix(p, rho);
        CHECK(data.h0 == 3);
        // Perfect group with trivial coefficients: h1 = 0.
        CHECK(data.h1 == 0);
    }
    SUBCASE("trefoil at an irreducible representation: h0 = 0, h1 = 1") {
        // <x, y | x y x y^-1 x^-1 y^-1>, rho(x), rho(y) conjugate meridians.
        GroupPresentation p;
        p.generators = {"x", "y"};
        p.relators = {Word{1, 2, 1, -2, -1, -2}};
        // Traceless meridians: the braid relation pins the axes at angle
        // 2 pi / 3 (dot product -1/2).
        const UnitQuaternion x{0, 1, 0, 0};
        const UnitQuaternion y{0, -0.5, std::sqrt(3.0) / 2.0, 0};
        const Representation rho = groupcoh::make_representation(p, {x, y});
        REQUIRE(rho.residual < 1e-9);
        const groupcoh::CochainData data = groupcoh::fox_matrix(p, rho);
        CHECK(data.h0 == 0);
        CHECK(data.h1 == 1);
    }
}

TEST_CASE("fox product rule on random word splits") {
    Prng rng(123987);
    GroupPresentation p;
    p.generators = {"a", "b", "c"};
    std::vector<UnitQuaternion> images = {random_unit(rng), random_unit(rng), random_unit(rng)};
    for (int trial = 0; trial < 1000; ++trial) {
        Word u, v;
        const int lu = static_cast<int>(rng.range(0, 6));
        const int lv = static_cast<int>(rng.range(0, 6));
        for (int i = 0; i < lu; ++i) u.push_back((rng.next() & 1 ? 1 : -1) * static_cast<int>(rng.range(1, 3)));
        for (int i = 0; i < lv; ++i) v.push_back((rng.next() & 1 ? 1 : -1) * static_cast<int>(rng.range(1, 3)));
        const linalg::MatX row_u = groupcoh::fox_word_row(p, images, u);
        const linalg::MatX row_v = groupcoh::fox_word_row(p, images, v);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        const linalg::MatX row_uv = groupcoh::fox_word_row(p, images, uv);
        // row(uv) = row(u) + Ad(rho(u)) row(v)
        const linalg::Mat3 ad_u = su2::adjoint(groupcoh::evaluate_word(images, u));
        linalg::MatX expected = row_u;
        const linalg::MatX lifted = linalg::to_matx(ad_u) * row_v;
        expected += lifted;
        linalg::MatX diff = expected;
        diff -= row_uv;
        REQUIRE(diff.max_abs() < 1e-10);
    }
}

TEST_CASE("chain complex property on solved representations") {
    Prng rng(5150);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Representation rho = [&]() {
            switch (trial % 3) {
                case 0: {
                    static const long long third[5] = {5, 7, 11, 13, 25};
                    const auto s = seifert::from_fibers({2, 3, third[trial % 5]});
                    const auto tuples = repvar::enumerate_rotation_data(s);
                    return repvar::synthesize_witness(s, tuples[trial % tuples.size()]).representation;
                }
                case 1:
                    return torus_knot_rep(2 + trial % 4, 3 + (trial + 1) % 4, rng);
                default: {
                    GroupPresentation p;
                    p.generators = {"a"};
                    Word r;
                    const long long k = rng.range(2, 7);
                    for (long long i = 0; i < k; ++i) r.push_back(1);
                    p.relators = {r};
                    const UnitQuaternion g = random_unit(rng);
                    const long long ell = rng.range(0, k);
                    return groupcoh::make_representation(
                        p, {g * su2::exp_i(2.0 * kPi * static_cast<double>(ell) / static_cast<double>(k)) * g.inverse()});
                }
            }
        }();
        if (!rho.valid()) continue;
        ++checked;
        const groupcoh::CochainData data = groupcoh::fox_matrix(rho.presentation, rho);
        const linalg::MatX composite = data.phi * data.psi;
        REQUIRE(composite.frobenius_norm() < 1e-7);
    }
    CHECK(checked >= 30);
}

TEST_CASE("h0 trichotomy") {
    Prng rng(31415);
    // Central image -> 3.
    GroupPresentation p;
    p.generators = {"a", "b"};
    p.relators = {};
    const Representation central = groupcoh::make_representation(
        p, {UnitQuaternion{-1, 0, 0, 0}, UnitQuaternion{1, 0, 0, 0}});
    CHECK(groupcoh::h0_dimension(p, central) == 3);
    // Abelian noncentral -> 1.
    const Representation abelian_rho = groupcoh::make_representation(
        p, {su2::exp_i(0.7), su2::exp_i(1.9)});
    CHECK(groupcoh::h0_dimension(p, abelian_rho) == 1);
    // Irreducible -> 0.
    const Representation irred = groupcoh::make_representation(
        p, {su2::exp_i(0.7), UnitQuaternion{std::cos(0.9), 0, std::sin(0.9), 0}});
    CHECK(groupcoh::h0_dimension(p, irred) == 0);
}

TEST_CASE("omega") {
    SUBCASE("free group has omega = 3g") {
        GroupPresentation p;
        p.generators = {"a", "b"};
        Prng rng(2);
        const Representation rho =
            groupcoh::make_representation(p, {random_unit(rng), random_unit(rng)});
        CHECK(groupcoh::omega(p, rho) == 6);
    }
    SUBCASE("additive under free products") {
        Prng rng(77);
        for (int trial = 0; trial < 3; ++trial) {
            static const long long f1[3] = {5, 7, 11};
            static const long long f2[3] = {7, 11, 13};
            const auto s1 = seifert::from_fibers({2, 3, f1[trial]});
            const auto s2 = seifert::from_fibers({2, 3, f2[trial]});
            const auto w1 = repvar::synthesize_witness(s1, repvar::enumerate_rotation_data(s1)[0]);
            const auto w2 = repvar::synthesize_witness(s2, repvar::enumerate_rotation_data(s2)[0]);
            const GroupPresentation prod =
                free_product(w1.representation.presentation, w2.representation.presentation);
            std::vector<UnitQuaternion> images = w1.representation.images;
            images.insert(images.end(), w2.representation.images.begin(),
                          w2.representation.images.end());
            const Representation rho = groupcoh::make_representation(prod, images);
            const int o1 = groupcoh::omega(w1.representation.presentation, w1.representation);
            const int o2 = groupcoh::omega(w2.representation.presentation, w2.representation);
            CHECK(groupcoh::omega(prod, rho) == o1 + o2);
        }
    }
}

TEST_CASE("rank stability across cutoffs") {
    const auto s = seifert::from_fibers({2, 3, 5});
    const auto tuples = repvar::enumerate_rotation_data(s);
    for (const auto& r : tuples) {
        const auto w = repvar::synthesize_witness(s, r);
        for (double cutoff : {1e-9, 1e-8, 1e-7, 1e-6}) {
            groupcoh::RankOptions opts;
            opts.svd_cutoff = cutoff;
            const auto data = groupcoh::fox_matrix(w.representation.presentation, w.representation, opts);
            CHECK(data.h0 == 0);
            CHECK(data.h1 == 0);
        }
    }
}

TEST_CASE("invalid representations are refused") {
    GroupPresentation p;
    p.generators = {"a"};
    p.relators = {Word{1, 1}};  // a^2
    const Representation bad = groupcoh::make_representation(p, {su2::exp_i(0.3)});
    CHECK(bad.residual > 1e-3);
    CHECK_THROWS_AS(groupcoh::fox_matrix(p, bad), invalid_representation);
    CHECK_THROWS_AS(groupcoh::omega(p, bad), invalid_representation);
}

TEST_CASE("zariski_chain_check") {
    using groupcoh::DimensionPair;
    CHECK(groupcoh::zariski_chain_check({0, 0}, {0, 0}, {0, 0}).chain_holds);
    CHECK(groupcoh::zariski_chain_check({0, 2}, {0, 2}, {0, 4}).chain_holds);
    const auto bad = groupcoh::zariski_chain_check({0, 4}, {0, 2}, {0, 2});
    CHECK(!bad.chain_holds);
    CHECK(bad.text.find("internal inconsistency") != std::string::npos);
}
