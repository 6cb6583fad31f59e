// quadpreper: exact computation and classification of preperiodic structures
// of z^2 + c over Q and quadratic fields.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "quadpreper/catalog.hpp"
#include "quadpreper/curves.hpp"
#include "quadpreper/families.hpp"
#include "quadpreper/preper.hpp"
#include "quadpreper/scan.hpp"
#include "quadpreper/textio.hpp"
#include "quadpreper/verify.hpp"

using namespace quadpreper;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;
constexpr int kExitIntegrity = 5;

FieldDesc field_of(long disc) {
    return disc == 1 ? FieldDesc::rational() : FieldDesc::make(Integer(disc));
}

Catalog load_active_catalog(const std::string& flag_path) {
    if (!flag_path.empty()) return Catalog::load(flag_path);
    if (const char* env = std::getenv("QUADPREPER_CATALOG")) return Catalog::load(env);
    return default_catalog();
}

std::vector<Representative> load_reps_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open representatives file: " + path);
    std::vector<Representative> reps;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string label, dstr, cstr;
        if (!(ss >> label >> dstr)) throw DataIntegrityError("malformed row: " + line);
        std::getline(ss, cstr);
        Integer d(dstr);
        FieldDesc k = d == 1 ? FieldDesc::rational() : FieldDesc::make(d);
        reps.push_back({label, d, parse_elem(cstr, k)});
    }
    return reps;
}

int run_graph(long disc, const std::string& c_text, const std::string& format,
              long max_box, const std::string& catalog_path) {
    FieldDesc k = field_of(disc);
    QuadElem c = parse_elem(c_text, k);
    Catalog cat = load_active_catalog(catalog_path);
    ScanLimits lim;
    lim.box_limit = max_box;
    ScanRow row = scan_one({Integer(disc), c}, cat, lim);

    if (format == "json") {
        std::cout << row.json() << "\n";
        return kExitOk;
    }
    PreperGraph g = build_graph(preperiodic_points(k, in_field(c, k),
                                                   PreperOptions{max_box}),
                                in_field(c, k));
    if (format == "dot") {
        std::cout << g.dot();
        return kExitOk;
    }
    std::cout << "field:     " << k.str() << "\n";
    std::cout << "c:         " << c.str() << "\n";
    std::cout << "vertices:  " << row.vertices << "\n";
    std::cout << "cycles:    " << row.cycles.str() << "\n";
    std::cout << "label:     " << row.label.value_or("(not in catalog)") << "\n";
    std::cout << "canonical: " << row.canonical << "\n";
    std::cout << "screen:    " << row.screen << "\n";
    std::cout << "points:\n";
    for (int v = 0; v < g.size(); ++v)
        std::cout << "  " << g.label(v) << "  type " << g.vertex_type(v).str() << "\n";
    return kExitOk;
}

int run_scan(const std::string& range, long num_bound, long den_bound,
             const std::string& dens_csv, const std::string& out_path, bool skip_done,
             long max_box, const std::string& catalog_path) {
    size_t dots = range.find("..");
    if (dots == std::string::npos)
        throw ParseError("--disc-range expects A..B");
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));

    std::vector<long> dens;
    if (!dens_csv.empty()) {
        std::stringstream ss(dens_csv);
        std::string item;
        while (std::getline(ss, item, ',')) dens.push_back(std::stol(item));
    } else {
        for (long d = 1; d <= den_bound; ++d) dens.push_back(d);
    }

    Catalog cat = load_active_catalog(catalog_path);
    auto tasks = make_scan_tasks(lo, hi, num_bound, dens);

    // resumability: keep byte-identical lines for tasks already present
    std::map<std::pair<std::string, std::string>, std::string> done;
    if (skip_done) {
        std::ifstream in(out_path);
        std::string line;
        while (in && std::getline(in, line)) {
            auto key = parse_scan_row_key(line);
            if (key) done[{key->first.get_str(), key->second.str()}] = line;
        }
    }

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }
    ScanLimits lim;
    lim.box_limit = max_box;
    for (const auto& task : tasks) {
        auto it = done.find({task.disc.get_str(), task.c.str()});
        if (it != done.end()) {
            out << it->second << "\n";
            continue;
        }
        ScanRow row;
        try {
            row = scan_one(task, cat, lim);
        } catch (const LimitError& e) {
            std::cerr << "error: box too large at D=" << task.disc.get_str()
                      << " c=" << task.c.str() << ": " << e.what() << "\n";
            return kExitResource;
        }
        if (row.violation) {
            std::cerr << "VIOLATION: (" << task.disc.get_str() << ", " << task.c.str()
                      << ") computed a strongly admissible graph outside every mandated"
                      << " containment; this contradicts the classification theorem.\n";
            return kExitVerify;
        }
        out << row.json() << "\n";
    }
    if (!out) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_family(const std::string& name, const std::string& params_csv) {
    if (name == "list") {
        for (const auto& f : family_table()) {
            std::cout << f.name << "  params(" << f.params << ")  marks[" << f.marks << "]";
            if (f.genus_annotation) std::cout << "  genus " << *f.genus_annotation;
            std::cout << "\n";
            for (const auto& eq : f.curve_equations) std::cout << "    " << eq << "\n";
            std::cout << "    cusps: " << f.cusp_condition << "\n";
        }
        return kExitOk;
    }
    FamilyId id = family_from_name(name);
    std::vector<QuadElem> params;
    std::stringstream ss(params_csv);
    std::string item;
    while (std::getline(ss, item, ';')) params.push_back(parse_elem(item));
    MarkedConfig cfg = family_forward(id, params);
    std::cout << "c = " << cfg.c.str() << "\n";
    for (const auto& [x, t] : cfg.points)
        std::cout << "  " << x.str() << "  type " << t.str() << "  (verified)\n";
    std::vector<QuadElem> back = family_inverse(id, cfg);
    std::cout << "inverse:";
    for (const auto& p : back) std::cout << " " << p.str();
    std::cout << (back == params ? "  (roundtrip exact)" : "  (WARNING: roundtrip differs)")
              << "\n";
    return back == params ? kExitOk : kExitVerify;
}

int run_verify(const std::vector<std::string>& only, const std::string& fault) {
    VerifyOptions opt;
    opt.only = only;
    opt.inject_fault = fault;
    VerifyResult res = run_paper_verification(opt, std::cout);
    return res.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact preperiodic-structure computations for z^2 + c over quadratic fields"};
    app.require_subcommand(1);

    // graph
    auto* graph = app.add_subcommand("graph", "compute and classify one preperiodic graph");
    long g_disc = 1;
    std::string g_c, g_format = "text", g_catalog;
    long g_maxbox = kDefaultBoxLimit;
    graph->add_option("--disc", g_disc, "field discriminant D (1 means Q)")->required();
    graph->add_option("--c", g_c, "parameter c (element grammar)")->required();
    graph->add_option("--format", g_format, "text|dot|json")
        ->check(CLI::IsMember({"text", "dot", "json"}));
    graph->add_option("--max-box", g_maxbox, "candidate-box guard");
    graph->add_option("--catalog", g_catalog, "catalog file (default: built-in)");

    // scan
    auto* scan = app.add_subcommand("scan", "scan a (D, c) grid, one JSON line per pair");
    std::string s_range, s_out, s_dens, s_catalog;
    long s_num = 30, s_den = 48, s_maxbox = kDefaultBoxLimit;
    bool s_skip = false;
    scan->add_option("--disc-range", s_range, "A..B")->required();
    scan->add_option("--num-bound", s_num, "max |numerator| of c");
    scan->add_option("--den-bound", s_den, "denominators 1..M (unless --dens)");
    scan->add_option("--dens", s_dens, "explicit denominator list, e.g. 1,4,16,48");
    scan->add_option("--out", s_out, "output JSONL file")->required();
    scan->add_flag("--skip-done", s_skip, "reuse rows already in the output file");
    scan->add_option("--max-box", s_maxbox, "candidate-box guard");
    scan->add_option("--catalog", s_catalog, "catalog file (default: built-in)");

    // catalog
    auto* cat = app.add_subcommand("catalog", "build, query, or extend the graph catalog");
    cat->require_subcommand(1);
    auto* cat_build = cat->add_subcommand("build", "compute canonical forms from representatives");
    std::string cb_reps, cb_out = "catalog.txt";
    cat_build->add_option("--reps", cb_reps, "file of `label D c` rows (default: built-in)");
    cat_build->add_option("--out", cb_out, "output catalog file")->required();
    auto* cat_match = cat->add_subcommand("match", "classify one pair against the catalog");
    long cm_disc = 1;
    std::string cm_c, cm_catalog;
    cat_match->add_option("--disc", cm_disc)->required();
    cat_match->add_option("--c", cm_c)->required();
    cat_match->add_option("--catalog", cm_catalog, "catalog file (default: built-in)");
    auto* cat_list = cat->add_subcommand("list", "print the 46 known labels");
    auto* cat_disc = cat->add_subcommand("discover", "extend representatives by scanning");
    std::string cd_range = "-20..20", cd_dens = "1,4,16,48", cd_out;
    long cd_num = 30;
    cat_disc->add_option("--disc-range", cd_range, "A..B");
    cat_disc->add_option("--num-bound", cd_num);
    cat_disc->add_option("--dens", cd_dens);
    cat_disc->add_option("--out", cd_out, "write discovered representatives here")->required();

    // family
    auto* fam = app.add_subcommand("family", "evaluate a marked-point parametrization");
    std::string f_name, f_params;
    fam->add_option("name", f_name, "family name or `list`")->required();
    fam->add_option("--params", f_params, "semicolon-separated elements");
    auto* fams = app.add_subcommand("families", "family metadata");
    fams->add_subcommand("list", "print the family table");

    // curve
    auto* curve = app.add_subcommand("curve", "desk-scale curve utilities");
    curve->require_subcommand(1);
    std::string model_line, poly_f, poly_g;
    long p_prime = 5, height = 100, rank = 0, count = 0;
    std::string x0_text, a_t, b_t, c_t, d_t, y0_text, v_text;
    auto* c_count = curve->add_subcommand("count", "count points of y^2 = f(x) over F_p");
    c_count->add_option("--model", model_line, "`name; y^2 = <poly>`")->required();
    c_count->add_option("--p", p_prime, "odd prime of good reduction")->required();
    auto* c_search = curve->add_subcommand("search", "height-bounded rational point search");
    c_search->add_option("--model", model_line)->required();
    c_search->add_option("--height", height)->required();
    auto* c_stoll = curve->add_subcommand("stoll", "#X(F_p) + 2r + floor(2r/(p-2))");
    c_stoll->add_option("--count", count)->required();
    c_stoll->add_option("--rank", rank, "Jacobian rank (externally supplied)")->required();
    c_stoll->add_option("--p", p_prime)->required();
    auto* c_res = curve->add_subcommand("resultant", "exact resultant of two polynomials");
    c_res->add_option("--f", poly_f)->required();
    c_res->add_option("--g", poly_g)->required();
    auto* c_genus = curve->add_subcommand("genus", "hyperelliptic genus of a model");
    c_genus->add_option("--model", model_line)->required();
    auto* c_quad = curve->add_subcommand("quadpoint", "obvious quadratic point over x0");
    c_quad->add_option("--model", model_line)->required();
    c_quad->add_option("--x0", x0_text)->required();
    auto* c_ec = curve->add_subcommand("ecquad", "elliptic quadratic-point relation");
    c_ec->add_option("--a", a_t)->required();
    c_ec->add_option("--b", b_t)->required();
    c_ec->add_option("--c", c_t)->required();
    c_ec->add_option("--d", d_t)->required();
    c_ec->add_option("--x0", x0_text)->required();
    c_ec->add_option("--y0", y0_text)->required();
    c_ec->add_option("--v", v_text)->required();

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the pinned verification table");
    std::vector<std::string> v_only;
    std::string v_fault;
    verify->add_option("--only", v_only, "sections to run");
    verify->add_option("--inject-fault", v_fault, "corrupt one expected value (harness test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*graph) return run_graph(g_disc, g_c, g_format, g_maxbox, g_catalog);
        if (*scan)
            return run_scan(s_range, s_num, s_den, s_dens, s_out, s_skip, s_maxbox, s_catalog);
        if (*cat_build) {
            auto reps = cb_reps.empty() ? shipped_representatives() : load_reps_file(cb_reps);
            Catalog built = build_catalog_from_representatives(reps);
            built.save(cb_out);
            std::cout << "wrote " << built.entries().size() << " entries to " << cb_out << "\n";
            return kExitOk;
        }
        if (*cat_match) {
            FieldDesc k = field_of(cm_disc);
            QuadElem c = parse_elem(cm_c, k);
            Catalog active = load_active_catalog(cm_catalog);
            PointSet pts = preperiodic_points(k, in_field(c, k));
            PreperGraph g = build_graph(pts, in_field(c, k));
            std::string canon = canonical_form(g);
            auto label = active.classify_canonical(canon);
            std::cout << (label ? *label : std::string("unknown")) << "\t" << canon << "\n";
            return kExitOk;
        }
        if (*cat_list) {
            for (const auto& label : Catalog::known_labels()) std::cout << label << "\n";
            return kExitOk;
        }
        if (*cat_disc) {
            size_t dots = cd_range.find("..");
            if (dots == std::string::npos) throw ParseError("--disc-range expects A..B");
            std::vector<long> dens;
            std::stringstream ss(cd_dens);
            std::string item;
            while (std::getline(ss, item, ',')) dens.push_back(std::stol(item));
            auto tasks = make_scan_tasks(std::stol(cd_range.substr(0, dots)),
                                         std::stol(cd_range.substr(dots + 2)), cd_num, dens);
            auto reps = discover_representatives(tasks, shipped_representatives(), {});
            std::ofstream out(cd_out);
            if (!out) throw IoError("cannot write " + cd_out);
            for (const auto& r : reps)
                out << r.label << "\t" << r.disc.get_str() << "\t" << r.c.str() << "\n";
            std::cout << "wrote " << reps.size() << " representatives ("
                      << reps.size() - shipped_representatives().size() << " new)\n";
            return kExitOk;
        }
        if (*fam) return run_family(f_name, f_params);
        if (*fams) return run_family("list", "");
        if (*c_count) {
            FpCount n = count_points_mod_p(CurveModel::parse_line(model_line), p_prime);
            std::cout << "affine " << n.affine << " + infinity " << n.at_infinity << " = "
                      << n.total << "\n";
            return kExitOk;
        }
        if (*c_search) {
            auto pts = search_rational_points(CurveModel::parse_line(model_line), height);
            for (const auto& [x, y] : pts) {
                std::cout << "(" << x.get_str() << ", " << y.get_str() << ")\n";
            }
            std::cout << pts.size() << " affine points up to height " << height << "\n";
            return kExitOk;
        }
        if (*c_stoll) {
            std::cout << stoll_bound(count, rank, p_prime).get_str() << "\n";
            return kExitOk;
        }
        if (*c_res) {
            Rational r = resultant(parse_unipoly(poly_f), parse_unipoly(poly_g));
            std::cout << r.get_num().get_str();
            if (r.get_den() != 1) std::cout << "/" << r.get_den().get_str();
            std::cout << "\n";
            return kExitOk;
        }
        if (*c_genus) {
            CurveModel m = CurveModel::parse_line(model_line);
            std::cout << hyperelliptic_genus(m);
            if (m.genus_annotation) std::cout << "  (annotation: " << *m.genus_annotation << ")";
            std::cout << "\n";
            return kExitOk;
        }
        if (*c_quad) {
            auto r = obvious_quadratic_point(CurveModel::parse_line(model_line),
                                             parse_rational(x0_text));
            if (std::holds_alternative<PointIsRational>(r)) {
                std::cout << "rational point: y = " << std::get<PointIsRational>(r).y << "\n";
            } else {
                const auto& pt = std::get<ObviousQuadPoint>(r);
                std::cout << "field " << pt.field.str() << ", point (" << pt.x.str() << ", "
                          << pt.y.str() << ")\n";
            }
            return kExitOk;
        }
        if (*c_ec) {
            UniPoly q = ec_quadratic_relation(parse_rational(a_t), parse_rational(b_t),
                                              parse_rational(c_t), parse_rational(d_t),
                                              parse_rational(x0_text), parse_rational(y0_text),
                                              parse_rational(v_text));
            std::cout << unipoly_str(q) << "\n";
            return kExitOk;
        }
        if (*verify) return run_verify(v_only, v_fault);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FieldMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const DataIntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
