#pragma once

#include <utility>
#include <vector>

#include "rgate/abelian.hpp"
#include "rgate/exact.hpp"
#include "rgate/geometry.hpp"
#include "rgate/presentation.hpp"

namespace rgate::seifert {

// Seifert invariants (b; (a_1, b_1), ..., (a_n, b_n)) over S^2, with
// e = -b + sum b_i/a_i. The b_i are not forced into (0, a_i); normalize()
// produces the display form. orientation is a bookkeeping flag carried by
// constructions that may hand back mirrored data.
struct SeifertPresentation {
    long long b = 0;
    std::vector<std::pair<long long, long long>> pairs;  // (a_i, b_i), a_i >= 1, gcd = 1
    int orientation = 1;

    int fiber_count() const { return static_cast<int>(pairs.size()); }
    // Fibers with a_i >= 2 (the exceptional ones).
    int exceptional_fiber_count() const;

    bool operator==(const SeifertPresentation& other) const = default;

    std::string to_string() const;
};

// Validates a_i >= 1 and gcd(a_i, b_i) = 1; throws precondition_violated.
void validate(const SeifertPresentation& s);

using EulerNumber = Rational;

EulerNumber euler_number(const SeifertPresentation& s);

// Normalization moves b_i -> b_i mod a_i (adjusting b), dropping a_i = 1
// pairs. Euler number is preserved; idempotent.
SeifertPresentation normalize(const SeifertPresentation& s);

// Orientation reversal: (b; (a_i, b_i)) -> (-b; (a_i, -b_i)), flag flipped.
SeifertPresentation reversed(const SeifertPresentation& s);

bool is_homology_sphere(const SeifertPresentation& s);

// Generators x_1..x_n, h; relators [x_i, h], x_i^{a_i} h^{b_i}, x_1...x_n h^b.
GroupPresentation fundamental_group(const SeifertPresentation& s);

abelian::FgAbelianGroup first_homology(const SeifertPresentation& s);

// Geometry of a Seifert homology sphere: S3 for n <= 2 exceptional fibers,
// SphericalTypeI for (2,3,5), BigClass otherwise. Throws not_homology_sphere.
geometry::GeometryClass geometry_class(const SeifertPresentation& s);

// The canonical homology-sphere presentation with the given pairwise-coprime
// fiber orders: b_i the least positive inverse of (P/a_i) mod a_i.
SeifertPresentation from_fibers(const std::vector<long long>& fiber_orders);

// A group homomorphism between Seifert fundamental groups, given by generator
// images (words in the target presentation's letters).
struct HomomorphismData {
    SeifertPresentation source_data;
    SeifertPresentation target_data;
    GroupPresentation source;
    GroupPresentation target;
    std::vector<Word> images;  // indexed by source generator
};

// Branched-cover homomorphism pi_1(Sigma(a_1,..,k*a_i,..)) ->
// pi_1(Sigma(a_1,..,a_n)): h -> h^k, x_j -> y_j, with the multiplied fiber
// reindexed last. k must be coprime to the other fiber orders.
HomomorphismData cover_homomorphism(const SeifertPresentation& s, int index, long long k);

// Pinch homomorphism pi_1(Sigma(a_1,...,a_n)) -> pi_1(Sigma(a_1, a_2, p)),
// p = a_3...a_n: x_1 -> y_1, x_2 -> y_2, x_i -> z^{alpha_i} h^{beta_i},
// h -> h. Requires n >= 4 and a homology sphere.
HomomorphismData pinch_homomorphism(const SeifertPresentation& s);

// Montesinos knot/link data: integer twist parameter e plus reduced tangle
// fractions beta_i/alpha_i with alpha_i >= 1.
struct MontesinosKnot {
    long long e = 0;
    std::vector<std::pair<long long, long long>> tangles;  // (alpha_i, beta_i)
};

void validate(const MontesinosKnot& k);

// Double branched cover: the Seifert space (e; (alpha_1, beta_1), ...,
// (alpha_n, beta_n)). The knot determinant is order(first_homology(result)).
SeifertPresentation montesinos_double_cover(const MontesinosKnot& k);

}  // namespace rgate::seifert
