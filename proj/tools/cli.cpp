#include "cli.hpp"

#include <CLI11.hpp>

#include "rgate/errors.hpp"
#include "rgate/json_io.hpp"
#include "rgate/parallel.hpp"

namespace rgate::cli {

namespace {

using json_io::Json;

constexpr const char* kVersion = "ribbon-gate 0.1.0";

seifert::SeifertPresentation seifert_from_args(const std::vector<std::string>& inputs) {
    if (inputs.size() == 1 && inputs[0].find(".json") != std::string::npos) {
        const Json j = json_io::parse_file(inputs[0]);
        return json_io::seifert_from_json(j);
    }
    std::vector<long long> fibers;
    for (const std::string& s : inputs) {
        try {
            fibers.push_back(std::stoll(s));
        } catch (const std::exception&) {
            throw parse_error("expected fiber orders or a .json file, got: " + s);
        }
    }
    return seifert::from_fibers(fibers);
}

// Representation-variety commands need euler = +1/(a_1...a_n). A mirrored
// presentation is reoriented, with notice, since counts and |lambda| do not
// depend on orientation.
seifert::SeifertPresentation oriented_homology_sphere(const seifert::SeifertPresentation& s,
                                                      bool& reversed_out, std::ostream& out,
                                                      bool as_json) {
    reversed_out = false;
    if (seifert::is_homology_sphere(s)) return s;
    const seifert::SeifertPresentation mirror = seifert::reversed(s);
    if (seifert::is_homology_sphere(mirror)) {
        reversed_out = true;
        if (!as_json) out << "note: input is mirror-oriented; using " << mirror.to_string() << "\n";
        return mirror;
    }
    return s;  // let the library raise not_homology_sphere
}

int cmd_snf(const std::string& path, bool as_json, std::ostream& out) {
    const abelian::IntMatrix a = json_io::int_matrix_from_json(json_io::parse_file(path));
    const abelian::SnfDecomposition d = abelian::smith_normal_form(a);
    if (as_json) {
        out << json_io::to_json(d).dump(2) << "\n";
    } else {
        out << "S = diag(";
        const auto diag = d.diagonal();
        for (std::size_t i = 0; i < diag.size(); ++i) out << (i ? ", " : "") << diag[i].get_str();
        out << ")\n";
        out << "reconstruction U*A*V = S: " << (d.u * a * d.v == d.s ? "exact" : "FAILED") << "\n";
    }
    return kExitOk;
}

int cmd_casson(const std::vector<std::string>& inputs, bool as_json, std::ostream& out) {
    bool reoriented = false;
    const seifert::SeifertPresentation s =
        oriented_homology_sphere(seifert_from_args(inputs), reoriented, out, as_json);
    const repvar::CassonCount c = repvar::casson_via_count(s);
    if (as_json) {
        Json j{{"presentation", json_io::to_json(s)},
               {"reoriented", reoriented},
               {"count", c.count},
               {"abs_lambda", json_io::rational_to_string(c.abs_lambda)}};
        out << j.dump(2) << "\n";
    } else {
        out << "count = " << c.count << "\n";
        out << "|lambda| = " << json_io::rational_to_string(c.abs_lambda) << "\n";
    }
    return kExitOk;
}

int cmd_repvar(const std::vector<std::string>& inputs, bool witnesses, bool as_json,
               std::ostream& out) {
    bool reoriented = false;
    const seifert::SeifertPresentation s =
        oriented_homology_sphere(seifert_from_args(inputs), reoriented, out, as_json);
    const auto tuples = repvar::enumerate_rotation_data(s);
    const bool casson_regime = seifert::normalize(s).fiber_count() <= 3;
    const char* label = casson_regime ? "rotation tuples" : "components by rotation data";
    if (as_json) {
        Json jt = Json::array();
        for (const auto& r : tuples) jt.push_back(json_io::to_json(r));
        Json j{{"presentation", json_io::to_json(s)},
               {"reoriented", reoriented},
               {"label", casson_regime ? "rotation_tuples" : "components_by_rotation_data"},
               {"tuples", std::move(jt)}};
        if (witnesses) {
            Json jw = Json::array();
            for (const auto& r : tuples)
                jw.push_back(json_io::to_json(repvar::synthesize_witness(s, r).representation));
            j["witnesses"] = std::move(jw);
        }
        out << j.dump(2) << "\n";
    } else {
        out << label << ": " << tuples.size() << "\n";
        for (const auto& r : tuples) {
            out << "  eps=" << (r.eps > 0 ? "+1" : "-1") << " ells=(";
            for (std::size_t i = 0; i < r.ells.size(); ++i) out << (i ? "," : "") << r.ells[i];
            out << ")\n";
        }
        if (witnesses)
            for (const auto& r : tuples) {
                const auto w = repvar::synthesize_witness(s, r);
                out << "  witness residual " << w.residual << "\n";
            }
    }
    return kExitOk;
}

int cmd_zariski(const std::string& pres_path, const std::string& rep_path, double tolerance,
                bool as_json, std::ostream& out) {
    const GroupPresentation p = json_io::presentation_from_json(json_io::parse_file(pres_path));
    const groupcoh::Representation rho =
        json_io::representation_from_json(json_io::parse_file(rep_path), p);
    groupcoh::RankOptions opts;
    opts.residual_tolerance = tolerance;
    const groupcoh::CochainData data = groupcoh::fox_matrix(p, rho, opts);
    const int om = groupcoh::omega(p, rho, opts);
    if (as_json) {
        Json j{{"h0", data.h0}, {"h1", data.h1}, {"omega", om}, {"residual", rho.residual}};
        out << j.dump(2) << "\n";
    } else {
        out << "h0 = " << data.h0 << "\nh1 = " << data.h1 << "\nomega = " << om
            << "\nresidual = " << rho.residual << "\n";
    }
    return kExitOk;
}

int cmd_geometry(const std::vector<std::string>& args, bool as_json, std::ostream& out) {
    if (args.empty()) throw parse_error("geometry: expected reach|lspace|classify|matrix");
    const std::string mode = args[0];
    const auto parse_class = [](const std::string& label) {
        const auto c = geometry::class_from_label(label);
        if (!c) throw parse_error("unknown geometry class: " + label);
        return *c;
    };
    if (mode == "reach") {
        if (args.size() != 3) throw parse_error("geometry reach FROM TO");
        const auto from = parse_class(args[1]);
        const auto to = parse_class(args[2]);
        const bool ok = geometry::hierarchy_reachable(from, to);
        const geometry::ArrowStatus status = geometry::arrow_status(from, to);
        const char* status_str = status == geometry::ArrowStatus::Obstructed ? "obstructed"
                                 : status == geometry::ArrowStatus::RealizableKnown ? "realizable"
                                                                                    : "open";
        if (as_json)
            out << Json{{"from", args[1]}, {"to", args[2]}, {"reachable", ok}, {"status", status_str}}
                       .dump(2)
                << "\n";
        else
            out << (ok ? "reachable" : "not reachable") << " (" << status_str << ")\n";
        return ok ? kExitOk : kExitObstructed;
    }
    if (mode == "lspace") {
        if (args.size() != 2) throw parse_error("geometry lspace CLASS");
        const auto known = geometry::lspace_from_geometry(parse_class(args[1]));
        if (as_json)
            out << Json{{"class", args[1]}, {"lspace", known ? Json(*known) : Json(nullptr)}}.dump(2)
                << "\n";
        else
            out << (known ? (*known ? "L-space" : "not an L-space") : "unknown") << "\n";
        return kExitOk;
    }
    if (mode == "matrix") {
        const auto m = geometry::closed_reachability_matrix();
        if (as_json) {
            Json rows = Json::array();
            for (int i = 0; i < geometry::kClosedClassCount; ++i) {
                Json row = Json::array();
                for (int j = 0; j < geometry::kClosedClassCount; ++j) row.push_back(m[i][j] ? 1 : 0);
                rows.push_back(std::move(row));
            }
            Json labels = Json::array();
            for (int i = 0; i < geometry::kClosedClassCount; ++i)
                labels.push_back(geometry::class_label(static_cast<geometry::GeometryClass>(i)));
            out << Json{{"labels", std::move(labels)}, {"reachable", std::move(rows)}}.dump(2)
                << "\n";
        } else {
            for (int i = 0; i < geometry::kClosedClassCount; ++i) {
                for (int j = 0; j < geometry::kClosedClassCount; ++j) out << (m[i][j] ? 1 : 0);
                out << "  " << geometry::class_label(static_cast<geometry::GeometryClass>(i)) << "\n";
            }
        }
        return kExitOk;
    }
    if (mode == "classify") {
        const seifert::SeifertPresentation s =
            seifert_from_args(std::vector<std::string>(args.begin() + 1, args.end()));
        const auto cls = seifert::geometry_class(s);
        if (as_json)
            out << Json{{"class", geometry::class_label(cls)}}.dump(2) << "\n";
        else
            out << geometry::class_label(cls) << "\n";
        return kExitOk;
    }
    throw parse_error("geometry: unknown mode " + mode);
}

int cmd_montesinos(const std::string& path, bool as_json, std::ostream& out) {
    const seifert::MontesinosKnot k = json_io::montesinos_from_json(json_io::parse_file(path));
    const seifert::SeifertPresentation cover = seifert::montesinos_double_cover(k);
    const abelian::FgAbelianGroup h1 = seifert::first_homology(cover);
    const auto det = abelian::order(h1);
    if (as_json) {
        Json j{{"cover", json_io::to_json(cover)},
               {"h1", json_io::to_json(h1)},
               {"determinant", det ? Json(det->get_str()) : Json(nullptr)},
               {"exceptional_fibers", cover.exceptional_fiber_count()}};
        out << j.dump(2) << "\n";
    } else {
        out << "double cover: " << cover.to_string() << "\n";
        out << "H1 = " << h1.to_string() << "\n";
        out << "determinant = " << (det ? det->get_str() : std::string("infinite")) << "\n";
        out << "exceptional fibers = " << cover.exceptional_fiber_count() << "\n";
    }
    return kExitOk;
}

int cmd_extend(const std::string& handles_path, const std::string& rep_path, int restarts,
               std::uint64_t seed, bool as_json, std::ostream& out) {
    const cobordism::RibbonHandleData h =
        json_io::handle_data_from_json(json_io::parse_file(handles_path));
    const groupcoh::Representation rho_minus =
        json_io::representation_from_json(json_io::parse_file(rep_path), h.base);
    cobordism::SolverOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    const groupcoh::Representation rho_w = cobordism::extend_representation(h, rho_minus, opts);
    if (as_json) {
        out << json_io::to_json(rho_w).dump(2) << "\n";
    } else {
        out << "extension found, residual = " << rho_w.residual << "\n";
        const int g = h.base.generator_count();
        for (int j = 0; j < h.handle_count(); ++j) {
            const su2::UnitQuaternion& q = rho_w.images[g + j];
            out << "  " << h.new_generators[j] << " = [" << q.w << ", " << q.x << ", " << q.y
                << ", " << q.z << "]\n";
        }
    }
    return kExitOk;
}

int cmd_obstruct(const std::string& ym_path, const std::string& yp_path, bool as_json,
                 std::ostream& out) {
    const obstruct::ManifoldDescription ym =
        json_io::manifold_from_json(json_io::parse_file(ym_path));
    const obstruct::ManifoldDescription yp =
        json_io::manifold_from_json(json_io::parse_file(yp_path));
    const obstruct::ObstructionReport report = obstruct::evaluate(ym, yp);
    if (as_json) {
        out << json_io::to_json(report).dump(2) << "\n";
    } else {
        out << "verdict: " << (report.obstructed ? "obstructed" : "not obstructed (inconclusive)")
            << "\n";
        for (const auto& f : report.fired)
            out << "  fired " << f.id << ": " << f.evidence << " [" << f.cite << "]\n";
        for (const auto& s : report.skipped) out << "  skipped " << s.id << ": " << s.reason << "\n";
    }
    return report.obstructed ? kExitObstructed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ribbon-gate: computable obstructions to ribbon rational-homology cobordisms"};
    app.require_subcommand(0, 1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    app.set_version_flag("--version", std::string(kVersion));

    bool as_json = false;
    bool witnesses = false;
    double tolerance = groupcoh::Representation::kDefaultTolerance;
    int restarts = 64;
    std::uint64_t seed = 0;
    std::vector<std::string> positional;

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("matrix", positional, "matrix JSON file")->expected(1);
    snf->add_flag("--json", as_json, "machine-readable output");

    auto* casson = app.add_subcommand("casson", "|lambda| of a 3-fiber Seifert homology sphere");
    casson->add_option("input", positional, "fiber orders or Seifert JSON file")->expected(1, 3);
    casson->add_flag("--json", as_json, "machine-readable output");

    auto* repvar_cmd = app.add_subcommand("repvar", "rotation data of a Seifert homology sphere");
    repvar_cmd->add_option("input", positional, "fiber orders or Seifert JSON file")->expected(1, 12);
    repvar_cmd->add_flag("--witnesses", witnesses, "synthesize numerical witnesses");
    repvar_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* zariski = app.add_subcommand("zariski", "Fox-calculus h0/h1/omega at a representation");
    zariski->add_option("files", positional, "presentation JSON, representation JSON")->expected(2);
    zariski->add_option("--tolerance", tolerance, "representation residual tolerance");
    zariski->add_flag("--json", as_json, "machine-readable output");

    auto* geometry_cmd = app.add_subcommand("geometry", "hierarchy queries (reach/lspace/classify/matrix)");
    geometry_cmd->add_option("args", positional, "mode and arguments")->expected(1, 8);
    geometry_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* montesinos = app.add_subcommand("montesinos", "double branched cover of a Montesinos knot");
    montesinos->add_option("input", positional, "Montesinos JSON file")->expected(1);
    montesinos->add_flag("--json", as_json, "machine-readable output");

    auto* extend = app.add_subcommand("extend", "extend a representation over ribbon handle data");
    extend->add_option("files", positional, "handle-data JSON, representation JSON")->expected(2);
    extend->add_option("--restarts", restarts, "restart budget");
    extend->add_option("--seed", seed, "PRNG seed");
    extend->add_flag("--json", as_json, "machine-readable output");

    auto* obstruct_cmd = app.add_subcommand("obstruct", "run every applicable obstruction criterion");
    obstruct_cmd->add_option("files", positional, "Y- JSON, Y+ JSON")->expected(2);
    obstruct_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    set_worker_threads(threads);

    try {
        if (snf->parsed()) return cmd_snf(positional.at(0), as_json, out);
        if (casson->parsed()) return cmd_casson(positional, as_json, out);
        if (repvar_cmd->parsed()) return cmd_repvar(positional, witnesses, as_json, out);
        if (zariski->parsed())
            return cmd_zariski(positional.at(0), positional.at(1), tolerance, as_json, out);
        if (geometry_cmd->parsed()) return cmd_geometry(positional, as_json, out);
        if (montesinos->parsed()) return cmd_montesinos(positional.at(0), as_json, out);
        if (extend->parsed())
            return cmd_extend(positional.at(0), positional.at(1), restarts, seed, as_json, out);
        if (obstruct_cmd->parsed()) return cmd_obstruct(positional.at(0), positional.at(1), as_json, out);
        out << app.help();
        return kExitOk;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const precondition_violated& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const computation_failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputationFailure;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputationFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitComputationFailure;
    }
}

}  // namespace rgate::cli
