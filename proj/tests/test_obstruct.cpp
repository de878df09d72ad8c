#include <doctest.h>

#include <algorithm>

#include "rgate/errors.hpp"
#include "rgate/obstruct.hpp"
#include "rgate/seifert.hpp"

using namespace rgate;
using obstruct::ManifoldDescription;
using obstruct::ObstructionReport;

namespace {

ManifoldDescription seifert_desc(const std::vector<long long>& fibers) {
    ManifoldDescription d;
    d.seifert_data = seifert::from_fibers(fibers);
    return d;
}

ManifoldDescription geometry_desc(geometry::GeometryClass c) {
    ManifoldDescription d;
    d.geometry_class = c;
    return d;
}

bool fired(const ObstructionReport& r, const std::string& id) {
    return std::any_of(r.fired.begin(), r.fired.end(),
                       [&](const auto& f) { return f.id == id; });
}

bool skipped(const ObstructionReport& r, const std::string& id) {
    return std::any_of(r.skipped.begin(), r.skipped.end(),
                       [&](const auto& s) { return s.id == id; });
}

}  // namespace

TEST_CASE("fiber count criterion") {
    const auto report = obstruct::evaluate(seifert_desc({2, 3, 5, 7}), seifert_desc({2, 3, 11}));
    CHECK(report.obstructed);
    CHECK(fired(report, "fiber_count"));
    const auto& f = *std::find_if(report.fired.begin(), report.fired.end(),
                                  [](const auto& c) { return c.id == "fiber_count"; });
    CHECK(f.evidence == "n = 4 > m = 3");
    CHECK(f.cite == "Thm 1.3(3)");
}

TEST_CASE("geometry hierarchy criterion") {
    const auto report = obstruct::evaluate(geometry_desc(geometry::GeometryClass::Sol),
                                           geometry_desc(geometry::GeometryClass::Nil));
    CHECK(report.obstructed);
    CHECK(fired(report, "geometry_hierarchy"));
    const auto ok = obstruct::evaluate(geometry_desc(geometry::GeometryClass::Nil),
                                       geometry_desc(geometry::GeometryClass::Sol));
    CHECK(!ok.obstructed);
}

TEST_CASE("reflexivity: evaluate(Y, Y) is never obstructed") {
    const std::vector<ManifoldDescription> fixtures = {
        seifert_desc({2, 3, 5}),
        seifert_desc({2, 3, 5, 7}),
        geometry_desc(geometry::GeometryClass::Sol),
        [] {
            ManifoldDescription d;
            d.h1 = abelian::FgAbelianGroup{0, {Int(2), Int(4)}};
            d.lspace = true;
            d.casson = Rational(3);
            d.n_fibers = 4;
            d.definiteness_sign = -1;
            d.cs_values = std::vector<obstruct::CsValue>{{Rational(1, 120), true}};
            return d;
        }(),
    };
    for (const auto& d : fixtures) {
        const auto report = obstruct::evaluate(d, d);
        CHECK(!report.obstructed);
    }
}

TEST_CASE("square order criterion") {
    ManifoldDescription lens;  // |H1| = 2
    lens.h1 = abelian::FgAbelianGroup{0, {Int(2)}};
    ManifoldDescription rp3rp3;  // |H1| = 4, Z/2 + Z/2
    rp3rp3.h1 = abelian::FgAbelianGroup{0, {Int(2), Int(2)}};
    const auto report = obstruct::evaluate(lens, rp3rp3);
    CHECK(report.obstructed);
    CHECK(fired(report, "square_order"));  // 8 is not a perfect square
    // Z/2 embeds into Z/2+Z/2, so the H1 criterion itself must stay quiet.
    CHECK(!fired(report, "h1_embedding"));
}

TEST_CASE("h1 embedding criterion") {
    ManifoldDescription big;
    big.h1 = abelian::FgAbelianGroup{0, {Int(4)}};
    ManifoldDescription small;
    small.h1 = abelian::FgAbelianGroup{0, {Int(2), Int(2)}};
    const auto report = obstruct::evaluate(big, small);
    CHECK(fired(report, "h1_embedding"));   // Z/4 does not embed into Z/2+Z/2
    CHECK(!fired(report, "square_order"));  // 4 * 4 = 16 is a perfect square
}

TEST_CASE("casson and definiteness criteria") {
    ManifoldDescription ym, yp;
    ym.casson = Rational(-2);
    yp.casson = Rational(1);
    const auto report = obstruct::evaluate(ym, yp);
    CHECK(fired(report, "casson_abs"));     // |-2| > |1|
    CHECK(fired(report, "definiteness"));   // signs differ
    ManifoldDescription equal_m, equal_p;
    equal_m.casson = Rational(1);
    equal_p.casson = Rational(2);
    CHECK(!obstruct::evaluate(equal_m, equal_p).obstructed);
}

TEST_CASE("auto-derived |lambda| for 3-fiber Seifert inputs") {
    // |lambda(Sigma(2,3,7))| = 1 = |lambda(Sigma(2,3,5))|: no obstruction in
    // either direction from the Casson criterion alone.
    const auto r1 = obstruct::evaluate(seifert_desc({2, 3, 7}), seifert_desc({2, 3, 5}));
    CHECK(!fired(r1, "casson_abs"));
    // Sigma(2,3,11) has |lambda| = 2 (four tuples): 2 > 1 obstructs.
    const auto r2 = obstruct::evaluate(seifert_desc({2, 3, 11}), seifert_desc({2, 3, 5}));
    CHECK(fired(r2, "casson_abs"));
    CHECK(!obstruct::evaluate(seifert_desc({2, 3, 5}), seifert_desc({2, 3, 11})).obstructed);
}

TEST_CASE("lspace criterion") {
    ManifoldDescription ym, yp;
    ym.lspace = false;
    yp.lspace = true;
    const auto report = obstruct::evaluate(ym, yp);
    CHECK(report.obstructed);
    CHECK(fired(report, "lspace"));
    // Reverse direction is fine.
    CHECK(!obstruct::evaluate(yp, ym).obstructed);
    // Geometry-derived L-space flags: Sol is an L-space.
    const auto geo = obstruct::evaluate(ym, geometry_desc(geometry::GeometryClass::Sol));
    CHECK(fired(geo, "lspace"));
}

TEST_CASE("composite criterion") {
    ManifoldDescription ym;
    ym.composite_both_non_lspace = true;
    ym.h1 = abelian::FgAbelianGroup{};
    const auto report = obstruct::evaluate(ym, seifert_desc({2, 3, 7}));
    CHECK(fired(report, "composite_lspace"));
    ManifoldDescription plain;
    plain.h1 = abelian::FgAbelianGroup{};
    CHECK(!fired(obstruct::evaluate(plain, seifert_desc({2, 3, 7})), "composite_lspace"));
}

TEST_CASE("chern-simons subset criterion") {
    ManifoldDescription ym, yp;
    ym.cs_values = std::vector<obstruct::CsValue>{{Rational(1, 120), true}, {Rational(49, 120), true}};
    yp.cs_values = std::vector<obstruct::CsValue>{{Rational(1, 120), true}};
    const auto report = obstruct::evaluate(ym, yp);
    CHECK(fired(report, "cs_subset"));
    // Subset holds the other way.
    CHECK(!obstruct::evaluate(yp, ym).obstructed);
    // Values are compared mod 1.
    ManifoldDescription shifted;
    shifted.cs_values = std::vector<obstruct::CsValue>{{Rational(121, 120), true}, {Rational(-71, 120), true}};
    CHECK(!obstruct::evaluate(yp, shifted).obstructed);
    // Decimal tolerance.
    ManifoldDescription decimal;
    decimal.cs_values = std::vector<obstruct::CsValue>{{Rational(0.0083333333), false}};
    CHECK(!obstruct::evaluate(decimal, yp).obstructed);
}

TEST_CASE("missing data is skipped and listed, never guessed") {
    ManifoldDescription bare_geo = geometry_desc(geometry::GeometryClass::Nil);
    const auto report = obstruct::evaluate(bare_geo, bare_geo);
    CHECK(!report.obstructed);
    CHECK(skipped(report, "h1_embedding"));
    CHECK(skipped(report, "casson_abs"));
    CHECK(skipped(report, "fiber_count"));
    CHECK(skipped(report, "cs_subset"));
    CHECK(skipped(report, "definiteness"));
}

TEST_CASE("monotonicity: refining data never unfires a criterion") {
    ManifoldDescription ym = seifert_desc({2, 3, 5, 7});
    ManifoldDescription yp = seifert_desc({2, 3, 11});
    const auto before = obstruct::evaluate(ym, yp);
    // Add optional data on both sides.
    ym.lspace = false;
    ym.cs_values = std::vector<obstruct::CsValue>{{Rational(0), true}};
    yp.cs_values = std::vector<obstruct::CsValue>{{Rational(0), true}, {Rational(1, 4), true}};
    yp.definiteness_sign = -1;
    const auto after = obstruct::evaluate(ym, yp);
    for (const auto& f : before.fired) CHECK(fired(after, f.id));
}

TEST_CASE("montesinos pipeline derives fiber counts through the double cover") {
    // Determinant-1 Montesinos inputs with 4 vs 3 exceptional fibers: the
    // covers are Sigma(2,3,5,7) and the (-2,3,7)-pretzel cover Sigma(2,3,7).
    const seifert::MontesinosKnot four{2, {{2, 1}, {3, 1}, {5, 3}, {7, 4}}};
    const seifert::MontesinosKnot three{0, {{2, -1}, {3, 1}, {7, 1}}};
    ManifoldDescription ym, yp;
    ym.seifert_data = seifert::montesinos_double_cover(four);
    yp.seifert_data = seifert::montesinos_double_cover(three);
    REQUIRE(*abelian::order(seifert::first_homology(*ym.seifert_data)) == 1);
    REQUIRE(*abelian::order(seifert::first_homology(*yp.seifert_data)) == 1);
    const auto report = obstruct::evaluate(ym, yp);
    CHECK(report.obstructed);
    CHECK(fired(report, "fiber_count"));
}

TEST_CASE("non-homology-sphere Seifert inputs do not feed homology-sphere criteria") {
    // L(4,1)-style input: fiber data exists but Thm-level fiber/Casson
    // comparisons must be skipped, not guessed.
    ManifoldDescription lens;
    lens.seifert_data = seifert::SeifertPresentation{0, {{2, 1}, {2, 1}}};
    const auto report = obstruct::evaluate(lens, seifert_desc({2, 3, 5, 7}));
    CHECK(skipped(report, "fiber_count"));
    CHECK(skipped(report, "casson_abs"));
    // H1 = Z/4 does not embed into the trivial group: that criterion fires.
    CHECK(fired(report, "h1_embedding"));
}

TEST_CASE("linking_matrix_precheck") {
    abelian::IntMatrix zero(1, 1);
    CHECK(obstruct::linking_matrix_precheck(zero));
    abelian::IntMatrix empty(0, 0);
    CHECK(obstruct::linking_matrix_precheck(empty));
    abelian::IntMatrix hopf(2, 2);
    hopf.at(0, 1) = 1;
    hopf.at(1, 0) = 1;
    CHECK(!obstruct::linking_matrix_precheck(hopf));
    abelian::IntMatrix rect(1, 2);
    CHECK_THROWS_AS(obstruct::linking_matrix_precheck(rect), precondition_violated);
}

TEST_CASE("every fired criterion reports concrete evidence") {
    const auto report = obstruct::evaluate(seifert_desc({2, 3, 5, 7}), seifert_desc({2, 3, 11}));
    for (const auto& f : report.fired) {
        CHECK(!f.evidence.empty());
        CHECK(!f.cite.empty());
    }
}
