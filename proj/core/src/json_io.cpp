#include "rgate/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rgate/errors.hpp"

namespace rgate::json_io {

namespace {

Json int_to_json(const Int& v) {
    // Entries beyond double-exact range are emitted as strings.
    static const Int bound(Int(1) << 53);
    if (v >= -bound && v <= bound) return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw parse_error("expected integer or integer string");
}

long long ll_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw parse_error(std::string("expected integer for ") + what);
    return j.get<long long>();
}

}  // namespace

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("invalid JSON");
    return j;
}

Json to_json(const abelian::IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

abelian::IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw parse_error("matrix: rows, cols, entries required");
    const int rows = static_cast<int>(ll_from_json(j.at("rows"), "rows"));
    const int cols = static_cast<int>(ll_from_json(j.at("cols"), "cols"));
    if (rows < 0 || cols < 0) throw parse_error("matrix: dimensions must be >= 0");
    abelian::IntMatrix m(rows, cols);
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw parse_error("matrix: entries must hold one array per row");
    for (int r = 0; r < rows; ++r) {
        const Json& row = entries.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw parse_error("matrix: row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = int_from_json(row.at(c));
    }
    return m;
}

Json to_json(const abelian::FgAbelianGroup& g) {
    Json torsion = Json::array();
    for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
    return Json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

abelian::FgAbelianGroup fg_group_from_json(const Json& j) {
    abelian::FgAbelianGroup g;
    g.free_rank = static_cast<int>(ll_from_json(j.at("free_rank"), "free_rank"));
    for (const Json& d : j.at("torsion")) g.torsion.push_back(int_from_json(d));
    // Accept any cyclic decomposition; store canonically.
    std::vector<Int> orders = g.torsion;
    abelian::FgAbelianGroup canon = abelian::from_cyclic_orders(orders);
    canon.free_rank += g.free_rank;
    return canon;
}

Json to_json(const abelian::SnfDecomposition& d) {
    return Json{{"U", to_json(d.u)}, {"S", to_json(d.s)}, {"V", to_json(d.v)}};
}

Json to_json(const seifert::SeifertPresentation& s) {
    Json pairs = Json::array();
    for (const auto& [a, b] : s.pairs) pairs.push_back(Json::array({a, b}));
    return Json{{"kind", "seifert"},
                {"b", s.b},
                {"pairs", std::move(pairs)},
                {"orientation", s.orientation}};
}

seifert::SeifertPresentation seifert_from_json(const Json& j) {
    seifert::SeifertPresentation s;
    s.b = ll_from_json(j.at("b"), "b");
    for (const Json& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw parse_error("seifert: pairs must be [a_i, b_i]");
        s.pairs.emplace_back(ll_from_json(p.at(0), "a_i"), ll_from_json(p.at(1), "b_i"));
    }
    if (j.contains("orientation")) s.orientation = static_cast<int>(ll_from_json(j.at("orientation"), "orientation"));
    seifert::validate(s);
    return s;
}

std::string rational_to_string(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, bool* exact) {
    if (exact) *exact = true;
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_number_float()) {
        if (exact) *exact = false;
        Rational q(j.get<double>());
        q.canonicalize();
        return q;
    }
    if (!j.is_string()) throw parse_error("expected rational as string or number");
    const std::string s = j.get<std::string>();
    if (s.find('.') != std::string::npos) {
        if (exact) *exact = false;
        Rational q(std::stod(s));
        q.canonicalize();
        return q;
    }
    try {
        Rational q;
        if (const auto slash = s.find('/'); slash != std::string::npos)
            q = Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        else
            q = Rational(Int(s));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: " + s);
    }
}

Json to_json(const seifert::MontesinosKnot& k) {
    Json tangles = Json::array();
    for (const auto& [alpha, beta] : k.tangles)
        tangles.push_back(std::to_string(beta) + "/" + std::to_string(alpha));
    return Json{{"kind", "montesinos"}, {"e", k.e}, {"tangles", std::move(tangles)}};
}

seifert::MontesinosKnot montesinos_from_json(const Json& j) {
    seifert::MontesinosKnot k;
    k.e = ll_from_json(j.at("e"), "e");
    for (const Json& t : j.at("tangles")) {
        const Rational q = rational_from_json(t);
        k.tangles.emplace_back(q.get_den().get_si(), q.get_num().get_si());
    }
    seifert::validate(k);
    return k;
}

Json to_json(const GroupPresentation& p) {
    Json relators = Json::array();
    for (const Word& w : p.relators) {
        Json word = Json::array();
        for (int letter : w) word.push_back(letter_to_string(p, letter));
        relators.push_back(std::move(word));
    }
    return Json{{"generators", p.generators}, {"relators", std::move(relators)}};
}

GroupPresentation presentation_from_json(const Json& j) {
    GroupPresentation p;
    for (const Json& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
    for (const Json& r : j.at("relators")) {
        Word w;
        for (const Json& letter : r) w.push_back(parse_letter(p, letter.get<std::string>()));
        p.relators.push_back(std::move(w));
    }
    p.normalize();
    return p;
}

Json to_json(const groupcoh::Representation& rho) {
    Json images = Json::object();
    for (int i = 0; i < rho.presentation.generator_count(); ++i) {
        const su2::UnitQuaternion& q = rho.images[i];
        images[rho.presentation.generators[i]] = Json::array({q.w, q.x, q.y, q.z});
    }
    return Json{{"presentation", to_json(rho.presentation)},
                {"images", std::move(images)},
                {"residual", rho.residual}};
}

namespace {

std::vector<su2::UnitQuaternion> images_from_json(const Json& j, const GroupPresentation& p) {
    std::vector<su2::UnitQuaternion> images(p.generator_count());
    const Json& obj = j.at("images");
    for (int i = 0; i < p.generator_count(); ++i) {
        if (!obj.contains(p.generators[i]))
            throw parse_error("representation: missing image for generator " + p.generators[i]);
        const Json& q = obj.at(p.generators[i]);
        if (!q.is_array() || q.size() != 4)
            throw parse_error("representation: image must be a quaternion quadruple");
        images[i] = su2::UnitQuaternion{q.at(0).get<double>(), q.at(1).get<double>(),
                                        q.at(2).get<double>(), q.at(3).get<double>()}
                        .normalized();
    }
    return images;
}

}  // namespace

groupcoh::Representation representation_from_json(const Json& j) {
    const GroupPresentation p = presentation_from_json(j.at("presentation"));
    return groupcoh::make_representation(p, images_from_json(j, p));
}

groupcoh::Representation representation_from_json(const Json& j, const GroupPresentation& p) {
    return groupcoh::make_representation(p, images_from_json(j, p));
}

Json to_json(const repvar::RotationData& r) {
    return Json{{"eps", r.eps}, {"ells", r.ells}};
}

repvar::RotationData rotation_from_json(const Json& j) {
    repvar::RotationData r;
    r.eps = static_cast<int>(ll_from_json(j.at("eps"), "eps"));
    if (r.eps != 1 && r.eps != -1) throw parse_error("rotation data: eps must be +-1");
    for (const Json& e : j.at("ells")) r.ells.push_back(ll_from_json(e, "ell"));
    return r;
}

Json to_json(const cobordism::RibbonHandleData& h) {
    const GroupPresentation total = h.total_presentation();
    Json words = Json::array();
    for (const Word& w : h.attaching_words) {
        Json word = Json::array();
        for (int letter : w) word.push_back(letter_to_string(total, letter));
        words.push_back(std::move(word));
    }
    Json base = to_json(h.base);
    base["new_generators"] = h.new_generators;
    base["attaching_words"] = std::move(words);
    return base;
}

cobordism::RibbonHandleData handle_data_from_json(const Json& j) {
    cobordism::RibbonHandleData h;
    h.base = presentation_from_json(j);
    for (const Json& g : j.at("new_generators")) h.new_generators.push_back(g.get<std::string>());
    const GroupPresentation total = h.total_presentation();
    for (const Json& r : j.at("attaching_words")) {
        Word w;
        for (const Json& letter : r) w.push_back(parse_letter(total, letter.get<std::string>()));
        h.attaching_words.push_back(free_reduce(std::move(w)));
    }
    cobordism::validate(h);
    return h;
}

Json to_json(const obstruct::ObstructionReport& r) {
    Json fired = Json::array();
    for (const auto& f : r.fired)
        fired.push_back(Json{{"id", f.id}, {"evidence", f.evidence}, {"cite", f.cite}});
    Json skipped = Json::array();
    for (const auto& s : r.skipped) skipped.push_back(Json{{"id", s.id}, {"reason", s.reason}});
    return Json{{"verdict", r.obstructed ? "obstructed" : "not_obstructed"},
                {"fired", std::move(fired)},
                {"skipped", std::move(skipped)}};
}

obstruct::ManifoldDescription manifold_from_json(const Json& j) {
    obstruct::ManifoldDescription d;
    const std::string kind = j.value("kind", "data");
    if (kind == "seifert") {
        d.seifert_data = seifert_from_json(j);
    } else if (kind == "montesinos") {
        d.seifert_data = seifert::montesinos_double_cover(montesinos_from_json(j));
    } else if (kind == "geometry") {
        const std::string label = j.at("class").get<std::string>();
        const auto cls = geometry::class_from_label(label);
        if (!cls) throw parse_error("unknown geometry class: " + label);
        d.geometry_class = *cls;
    } else if (kind != "data") {
        throw parse_error("manifold kind must be seifert, montesinos, geometry, or data");
    }
    if (j.contains("h1")) d.h1 = fg_group_from_json(j.at("h1"));
    if (j.contains("lspace")) d.lspace = j.at("lspace").get<bool>();
    if (j.contains("casson")) d.casson = rational_from_json(j.at("casson"));
    if (j.contains("cs_values")) {
        std::vector<obstruct::CsValue> values;
        for (const Json& v : j.at("cs_values")) {
            bool exact = true;
            const Rational q = rational_from_json(v, &exact);
            values.push_back({q, exact});
        }
        d.cs_values = std::move(values);
    }
    if (j.contains("n_fibers")) d.n_fibers = ll_from_json(j.at("n_fibers"), "n_fibers");
    if (j.contains("definiteness_sign"))
        d.definiteness_sign = static_cast<int>(ll_from_json(j.at("definiteness_sign"), "definiteness_sign"));
    if (j.contains("composite_both_non_lspace"))
        d.composite_both_non_lspace = j.at("composite_both_non_lspace").get<bool>();
    if (j.contains("seifert")) d.declared_seifert = j.at("seifert").get<bool>();
    if (!d.has_content()) throw parse_error("manifold description carries no data");
    return d;
}

}  // namespace rgate::json_io
