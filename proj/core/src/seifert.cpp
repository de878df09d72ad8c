#include "rgate/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rgate/errors.hpp"

namespace rgate::seifert {

int SeifertPresentation::exceptional_fiber_count() const {
    return static_cast<int>(std::count_if(pairs.begin(), pairs.end(),
                                          [](const auto& p) { return p.first >= 2; }));
}

std::string SeifertPresentation::to_string() const {
    std::ostringstream os;
    os << "(" << b << ";";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        os << " (" << pairs[i].first << "," << pairs[i].second << ")";
    os << ")";
    if (orientation < 0) os << " [reversed]";
    return os.str();
}

void validate(const SeifertPresentation& s) {
    for (const auto& [a, bi] : s.pairs) {
        if (a < 1) throw precondition_violated("Seifert pair with a_i < 1");
        if (std::gcd(a, bi) != 1) throw precondition_violated("Seifert pair with gcd(a_i, b_i) != 1");
    }
    if (s.orientation != 1 && s.orientation != -1)
        throw precondition_violated("orientation flag must be +1 or -1");
}

EulerNumber euler_number(const SeifertPresentation& s) {
    validate(s);
    Rational e(to_int(-s.b));
    for (const auto& [a, bi] : s.pairs) {
        e += Rational(to_int(bi), to_int(a));
    }
    e.canonicalize();
    return e;
}

SeifertPresentation normalize(const SeifertPresentation& s) {
    validate(s);
    SeifertPresentation out;
    out.b = s.b;
    out.orientation = s.orientation;
    for (auto [a, bi] : s.pairs) {
        long long q = bi >= 0 ? bi / a : -((-bi + a - 1) / a);  // floor division
        bi -= q * a;
        out.b -= q;
        if (a >= 2) out.pairs.emplace_back(a, bi);
    }
    std::stable_sort(out.pairs.begin(), out.pairs.end());
    return out;
}

SeifertPresentation reversed(const SeifertPresentation& s) {
    SeifertPresentation out;
    out.b = -s.b;
    out.orientation = -s.orientation;
    for (const auto& [a, bi] : s.pairs) out.pairs.emplace_back(a, -bi);
    return out;
}

namespace {

bool pairwise_coprime(const std::vector<std::pair<long long, long long>>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (std::gcd(pairs[i].first, pairs[j].first) != 1) return false;
    return true;
}

Int fiber_product(const SeifertPresentation& s) {
    Int p = 1;
    for (const auto& [a, bi] : s.pairs) p *= to_int(a);
    return p;
}

}  // namespace

bool is_homology_sphere(const SeifertPresentation& s) {
    validate(s);
    const SeifertPresentation n = normalize(s);
    if (!pairwise_coprime(n.pairs)) return false;
    const Rational e = euler_number(s);
    const Int p = fiber_product(n);
    if (n.fiber_count() <= 2) {
        Rational scaled = e * Rational(p);
        scaled.canonicalize();
        return scaled == 1 || scaled == -1;  // degenerate S^3 cases
    }
    Rational target(Int(1), p);
    target.canonicalize();
    return e == target;
}

GroupPresentation fundamental_group(const SeifertPresentation& s) {
    validate(s);
    const int n = s.fiber_count();
    GroupPresentation p;
    for (int i = 0; i < n; ++i) p.generators.push_back("x" + std::to_string(i + 1));
    p.generators.push_back("h");
    const int h = n + 1;  // letter for h

    const auto power = [](int letter, long long e) {
        Word w;
        const int sign = e >= 0 ? 1 : -1;
        for (long long i = 0; i < (e >= 0 ? e : -e); ++i) w.push_back(sign * letter);
        return w;
    };

    for (int i = 1; i <= n; ++i) p.relators.push_back(Word{i, h, -i, -h});  // [x_i, h]
    for (int i = 1; i <= n; ++i) {
        Word w = power(i, s.pairs[i - 1].first);
        Word hb = power(h, s.pairs[i - 1].second);
        w.insert(w.end(), hb.begin(), hb.end());
        p.relators.push_back(free_reduce(std::move(w)));
    }
    Word prod;
    for (int i = 1; i <= n; ++i) prod.push_back(i);
    Word hb = power(h, s.b);
    prod.insert(prod.end(), hb.begin(), hb.end());
    p.relators.push_back(free_reduce(std::move(prod)));
    return p;
}

abelian::FgAbelianGroup first_homology(const SeifertPresentation& s) {
    const GroupPresentation p = fundamental_group(s);
    const auto cols = p.abelianized_columns();
    abelian::IntMatrix m(p.generator_count(), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < p.generator_count(); ++i) m.at(i, static_cast<int>(j)) = to_int(cols[j][i]);
    return abelian::cokernel(m);
}

geometry::GeometryClass geometry_class(const SeifertPresentation& s) {
    if (!is_homology_sphere(s))
        throw not_homology_sphere("geometry_class: classification implemented for homology spheres only");
    const SeifertPresentation n = normalize(s);
    if (n.fiber_count() <= 2) return geometry::GeometryClass::S3;
    if (n.fiber_count() == 3) {
        std::vector<long long> a{n.pairs[0].first, n.pairs[1].first, n.pairs[2].first};
        std::sort(a.begin(), a.end());
        if (a[0] == 2 && a[1] == 3 && a[2] == 5) return geometry::GeometryClass::SphericalTypeI;
    }
    return geometry::GeometryClass::BigClass;
}

SeifertPresentation from_fibers(const std::vector<long long>& fiber_orders) {
    SeifertPresentation s;
    for (long long a : fiber_orders)
        if (a < 2) throw precondition_violated("fiber orders must be >= 2");
    Int p = 1;
    for (long long a : fiber_orders) p *= to_int(a);
    Rational b_sum(0);
    for (long long a : fiber_orders) {
        const Int cofactor = p / to_int(a);
        const auto inv = mod_inverse(cofactor % to_int(a), to_int(a));
        if (!inv) throw coprimality_violation("fiber orders must be pairwise coprime");
        const long long bi = inv->get_si();
        s.pairs.emplace_back(a, bi);
        b_sum += Rational(to_int(bi), to_int(a));
    }
    Rational b = b_sum - Rational(Int(1), p);
    b.canonicalize();
    if (b.get_den() != 1) throw coprimality_violation("fiber orders must be pairwise coprime");
    s.b = b.get_num().get_si();
    return s;
}

HomomorphismData cover_homomorphism(const SeifertPresentation& s, int index, long long k) {
    validate(s);
    if (!is_homology_sphere(s)) throw not_homology_sphere("cover_homomorphism: homology sphere required");
    const int n = s.fiber_count();
    if (index < 0 || index >= n) throw precondition_violated("cover_homomorphism: fiber index out of range");
    if (k < 1) throw precondition_violated("cover_homomorphism: k must be >= 1");
    for (int i = 0; i < n; ++i)
        if (i != index && std::gcd(k, s.pairs[i].first) != 1)
            throw coprimality_violation("cover_homomorphism: k shares a factor with another fiber order");

    // Reindex so the multiplied fiber is last, then build compatible
    // presentations: source (bs; (a_i, bs_i), (k a_n, bs_n)) maps onto target
    // (k bs; (a_i, k bs_i), (a_n, bs_n)) by h -> h^k, x_i -> y_i.
    SeifertPresentation base = s;
    std::rotate(base.pairs.begin() + index, base.pairs.begin() + index + 1, base.pairs.end());

    std::vector<long long> source_orders;
    for (int i = 0; i + 1 < n; ++i) source_orders.push_back(base.pairs[i].first);
    source_orders.push_back(k * base.pairs[n - 1].first);

    HomomorphismData hom;
    hom.source_data = from_fibers(source_orders);
    SeifertPresentation target;
    target.b = k * hom.source_data.b;
    for (int i = 0; i + 1 < n; ++i)
        target.pairs.emplace_back(hom.source_data.pairs[i].first, k * hom.source_data.pairs[i].second);
    target.pairs.emplace_back(base.pairs[n - 1].first, hom.source_data.pairs[n - 1].second);
    hom.target_data = target;

    hom.source = fundamental_group(hom.source_data);
    hom.target = fundamental_group(hom.target_data);
    const int h_target = n + 1;
    for (int i = 1; i <= n; ++i) hom.images.push_back(Word{i});  // x_i -> y_i
    Word hk;
    for (long long i = 0; i < k; ++i) hk.push_back(h_target);
    hom.images.push_back(hk);  // h -> h^k
    return hom;
}

HomomorphismData pinch_homomorphism(const SeifertPresentation& s) {
    validate(s);
    const int n = s.fiber_count();
    if (n < 4) throw too_few_fibers("pinch_homomorphism: at least four fibers required");
    if (!is_homology_sphere(s)) throw not_homology_sphere("pinch_homomorphism: homology sphere required");

    long long p = 1;
    for (int i = 2; i < n; ++i) p *= s.pairs[i].first;
    // q = sum_{i>=3} p b_i / a_i, exact by construction.
    long long q = 0;
    for (int i = 2; i < n; ++i) q += (p / s.pairs[i].first) * s.pairs[i].second;

    HomomorphismData hom;
    hom.source_data = s;
    hom.target_data =
        SeifertPresentation{s.b, {s.pairs[0], s.pairs[1], {p, q}}, s.orientation};
    hom.source = fundamental_group(s);
    hom.target = fundamental_group(hom.target_data);

    const int z_letter = 3;  // generators of the target: y1, y2, z, h
    const int h_letter = 4;
    hom.images.push_back(Word{1});
    hom.images.push_back(Word{2});
    for (int i = 2; i < n; ++i) {
        const long long a = s.pairs[i].first;
        const long long bi = s.pairs[i].second;
        const long long cofactor = (p / a) % a;
        const auto inv = mod_inverse(to_int(cofactor), to_int(a));
        if (!inv) throw coprimality_violation("pinch_homomorphism: fiber orders not pairwise coprime");
        long long eta = inv->get_si();
        if (eta <= 0) eta += a;  // least positive solution
        const long long alpha = eta * (p / a);
        const long long beta = (eta * q - bi) / a;
        Word w;
        for (long long t = 0; t < alpha; ++t) w.push_back(z_letter);
        const int hsign = beta >= 0 ? 1 : -1;
        for (long long t = 0; t < (beta >= 0 ? beta : -beta); ++t) w.push_back(hsign * h_letter);
        hom.images.push_back(std::move(w));
    }
    Word h_image{h_letter};
    hom.images.push_back(h_image);
    return hom;
}

void validate(const MontesinosKnot& k) {
    for (const auto& [alpha, beta] : k.tangles) {
        if (alpha < 1) throw precondition_violated("Montesinos tangle with alpha < 1");
        if (std::gcd(alpha, beta) != 1)
            throw precondition_violated("Montesinos tangle fraction not reduced");
    }
}

SeifertPresentation montesinos_double_cover(const MontesinosKnot& k) {
    validate(k);
    SeifertPresentation s;
    s.b = k.e;
    s.pairs = k.tangles;
    s.orientation = 1;
    return s;
}

}  // namespace rgate::seifert
