#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgate/abelian.hpp"
#include "rgate/exact.hpp"
#include "rgate/geometry.hpp"
#include "rgate/seifert.hpp"

namespace rgate::obstruct {

// A rational value mod 1 supplied by the caller; exact values compare
// exactly, decimal-origin values with tolerance.
struct CsValue {
    Rational value;
    bool exact = true;
};

// Description of one end of the would-be cobordism. Exactly one of the
// "kind" views is primary (seifert / geometry / data), but a Seifert input
// auto-derives homology, geometry class, fiber count and |lambda| (n = 3).
struct ManifoldDescription {
    std::optional<seifert::SeifertPresentation> seifert_data;
    std::optional<geometry::GeometryClass> geometry_class;

    std::optional<abelian::FgAbelianGroup> h1;
    std::optional<bool> lspace;
    std::optional<Rational> casson;            // signed lambda, if known
    std::optional<std::vector<CsValue>> cs_values;
    std::optional<long long> n_fibers;
    std::optional<int> definiteness_sign;      // +-1
    bool composite_both_non_lspace = false;    // Y- declared as a connected sum
                                               // with both summands non-L-spaces
    std::optional<bool> declared_seifert;      // for data inputs

    bool has_content() const {
        return seifert_data || geometry_class || h1 || lspace || casson || cs_values || n_fibers ||
               definiteness_sign || composite_both_non_lspace || declared_seifert;
    }
};

struct FiredCriterion {
    std::string id;
    std::string evidence;
    std::string cite;
};

struct SkippedCriterion {
    std::string id;
    std::string reason;
};

struct ObstructionReport {
    bool obstructed = false;
    std::vector<FiredCriterion> fired;
    std::vector<SkippedCriterion> skipped;
};

// Runs every applicable criterion; criteria with missing data are skipped and
// listed, never guessed. Deterministic (criteria in fixed id order).
ObstructionReport evaluate(const ManifoldDescription& ym, const ManifoldDescription& yp);

// Surgery precheck: a reducible 0-surgery hypothesis is viable only when the
// linking matrix vanishes identically.
bool linking_matrix_precheck(const abelian::IntMatrix& l);

}  // namespace rgate::obstruct
