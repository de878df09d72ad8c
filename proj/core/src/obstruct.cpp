#include "rgate/obstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rgate/errors.hpp"
#include "rgate/repvar.hpp"

namespace rgate::obstruct {

namespace {

// Everything the criteria can consume, after auto-derivation.
struct Derived {
    std::optional<abelian::FgAbelianGroup> h1;
    std::optional<geometry::GeometryClass> geo;
    std::optional<bool> lspace;
    std::optional<long long> n_fibers;
    std::optional<Rational> abs_casson;
    std::optional<int> sign;  // definiteness sign
    std::optional<std::vector<CsValue>> cs_values;
    bool is_seifert = false;
    bool composite_both_non_lspace = false;
};

Derived derive(const ManifoldDescription& d) {
    Derived out;
    out.h1 = d.h1;
    out.geo = d.geometry_class;
    out.lspace = d.lspace;
    out.n_fibers = d.n_fibers;
    out.cs_values = d.cs_values;
    out.composite_both_non_lspace = d.composite_both_non_lspace;
    out.is_seifert = d.declared_seifert.value_or(false);

    if (d.casson) {
        Rational a = *d.casson;
        if (a < 0) a = -a;
        out.abs_casson = a;
        if (*d.casson != 0) out.sign = *d.casson > 0 ? 1 : -1;
    }
    if (d.definiteness_sign) out.sign = *d.definiteness_sign;

    if (d.seifert_data) {
        const seifert::SeifertPresentation& s = *d.seifert_data;
        out.is_seifert = true;
        if (!out.h1) out.h1 = seifert::first_homology(s);
        const seifert::SeifertPresentation oriented =
            seifert::is_homology_sphere(s) ? s : seifert::reversed(s);
        if (seifert::is_homology_sphere(oriented)) {
            const seifert::SeifertPresentation norm = seifert::normalize(oriented);
            if (!out.n_fibers) out.n_fibers = norm.fiber_count();
            if (!out.geo) out.geo = seifert::geometry_class(oriented);
            if (!out.abs_casson && norm.fiber_count() <= 3)
                out.abs_casson = repvar::casson_via_count(oriented).abs_lambda;
        }
        // Fiber-count and Casson criteria are homology-sphere statements, so
        // they are not auto-derived for other Seifert inputs.
        if (!out.lspace && out.geo) {
            const auto known = geometry::lspace_from_geometry(*out.geo);
            if (known) out.lspace = *known;
        }
    } else if (out.geo && !out.lspace && !geometry::is_boundary_class(*out.geo)) {
        const auto known = geometry::lspace_from_geometry(*out.geo);
        if (known) out.lspace = *known;
    }
    return out;
}

std::string rational_str(const Rational& q) { return to_string(q); }

bool cs_member(const CsValue& v, const std::vector<CsValue>& set) {
    const Rational target = mod1(v.value);
    for (const CsValue& w : set) {
        const Rational c = mod1(w.value);
        if (v.exact && w.exact) {
            if (c == target) return true;
        } else {
            // Distance mod 1 with tolerance for decimal-origin values.
            const double d = std::fabs(c.get_d() - target.get_d());
            if (std::min(d, 1.0 - d) < 1e-9) return true;
        }
    }
    return false;
}

}  // namespace

ObstructionReport evaluate(const ManifoldDescription& ym, const ManifoldDescription& yp) {
    if (!ym.has_content() || !yp.has_content())
        throw precondition_violated("evaluate: both manifold descriptions must carry data");
    const Derived m = derive(ym);
    const Derived p = derive(yp);

    ObstructionReport report;
    const auto fire = [&](std::string id, std::string evidence, std::string cite) {
        report.fired.push_back({std::move(id), std::move(evidence), std::move(cite)});
    };
    const auto skip = [&](std::string id, std::string reason) {
        report.skipped.push_back({std::move(id), std::move(reason)});
    };

    // 1. H1 must include into a quotient of H1(Y+); for finite abelian groups
    //    this is subgroup embedding, plus equality of free ranks.
    if (m.h1 && p.h1) {
        const bool rank_ok = m.h1->free_rank == p.h1->free_rank;
        const abelian::FgAbelianGroup tm{0, m.h1->torsion};
        const abelian::FgAbelianGroup tp{0, p.h1->torsion};
        if (!rank_ok || !abelian::embeds_into(tm, tp)) {
            fire("h1_embedding",
                 "H1(Y-) = " + m.h1->to_string() + " does not embed into H1(Y+) = " +
                     p.h1->to_string() + (rank_ok ? "" : " (free ranks differ)"),
                 "Lemma 3.1");
        }
    } else {
        skip("h1_embedding", "H1 not available for both ends");
    }

    // 2. Geometry hierarchy.
    if (m.geo && p.geo) {
        if (!geometry::hierarchy_reachable(*m.geo, *p.geo)) {
            fire("geometry_hierarchy",
                 "no directed path " + geometry::class_label(*m.geo) + " -> " +
                     geometry::class_label(*p.geo) + " in the hierarchy",
                 "Thm 3.4 (Thm 1.1 diagram)");
        }
    } else {
        skip("geometry_hierarchy", "geometry class not available for both ends");
    }

    // 3. Perfect-square order test.
    if (m.h1 && p.h1) {
        if (m.h1->is_finite() && p.h1->is_finite()) {
            const Int om = *abelian::order(*m.h1);
            const Int op = *abelian::order(*p.h1);
            if (abelian::square_order_obstruction(*m.h1, *p.h1)) {
                fire("square_order",
                     "|H1(Y-)| * |H1(Y+)| = " + om.get_str() + " * " + op.get_str() + " = " +
                         Int(om * op).get_str() + " is not a perfect square",
                     "Thm 3.4 proof");
            }
        } else {
            skip("square_order", "a free H1 factor makes the order infinite");
        }
    } else {
        skip("square_order", "H1 not available for both ends");
    }

    // 4. |lambda(Y-)| <= |lambda(Y+)|.
    if (m.abs_casson && p.abs_casson) {
        if (*m.abs_casson > *p.abs_casson) {
            fire("casson_abs",
                 "|lambda(Y-)| = " + rational_str(*m.abs_casson) + " > |lambda(Y+)| = " +
                     rational_str(*p.abs_casson),
                 "Thm 1.3(1)");
        }
    } else {
        skip("casson_abs", "|lambda| not available for both ends (computed only for 3-fiber Seifert "
                           "inputs; supply a value otherwise)");
    }

    // 5. Definiteness signs must agree.
    if (m.sign && p.sign) {
        if (*m.sign != *p.sign) {
            fire("definiteness",
                 "definiteness signs differ: " + std::to_string(*m.sign) + " vs " +
                     std::to_string(*p.sign),
                 "Thm 1.3(2)");
        }
    } else {
        skip("definiteness", "definiteness/Casson sign not supplied for both ends");
    }

    // 6. Fiber counts n <= m.
    if (m.n_fibers && p.n_fibers) {
        if (*m.n_fibers > *p.n_fibers) {
            fire("fiber_count",
                 "n = " + std::to_string(*m.n_fibers) + " > m = " + std::to_string(*p.n_fibers),
                 "Thm 1.3(3)");
        }
    } else {
        skip("fiber_count", "exceptional fiber count not available for both ends");
    }

    // 7. Y+ an L-space while Y- is not.
    if (m.lspace && p.lspace) {
        if (*p.lspace && !*m.lspace) {
            std::string evidence = "Y+ is an L-space, Y- is not (Z/2-homology-cobordism strength";
            if (m.h1 && p.h1 && abelian::zhc_upgrade(*m.h1, *p.h1))
                evidence += "; integral strength applies since H1(Y-) = H1(Y+), Lemma 3.2";
            evidence += ")";
            fire("lspace", std::move(evidence), "Cor. 8.2");
        }
    } else {
        skip("lspace", "L-space status not available for both ends");
    }

    // 8. Composite with both summands non-L-spaces into a Seifert space.
    if (m.composite_both_non_lspace && p.is_seifert) {
        fire("composite_lspace",
             "Y- is a connected sum with both summands non-L-spaces and Y+ is Seifert fibered "
             "(Z/2-homology-cobordism strength)",
             "Cor. 8.3");
    } else if (!m.composite_both_non_lspace) {
        skip("composite_lspace", "Y- not declared as a composite with non-L-space summands");
    } else {
        skip("composite_lspace", "Y+ not known to be Seifert fibered");
    }

    // 9. Chern-Simons subset check.
    if (m.cs_values && p.cs_values) {
        for (const CsValue& v : *m.cs_values) {
            if (!cs_member(v, *p.cs_values)) {
                fire("cs_subset",
                     "Chern-Simons value " + rational_str(mod1(v.value)) +
                         " (mod 1) of Y- is not attained by Y+",
                     "Cor. 1.9");
                break;
            }
        }
    } else {
        skip("cs_subset", "Chern-Simons value sets not supplied for both ends");
    }

    report.obstructed = !report.fired.empty();
    return report;
}

bool linking_matrix_precheck(const abelian::IntMatrix& l) {
    if (!l.is_square()) throw precondition_violated("linking_matrix_precheck: square matrix required");
    return l.is_zero();
}

}  // namespace rgate::obstruct
