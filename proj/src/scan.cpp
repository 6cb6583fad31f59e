#include "quadpreper/scan.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

#include "quadpreper/textio.hpp"

namespace quadpreper {

namespace {

bool is_squarefree_long(long n) {
    if (n == 0) return false;
    return squarefree_kernel(Integer(n)) == n;
}

std::string rational_str(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

}  // namespace

std::string ScanRow::json() const {
    nlohmann::json j;
    j["disc"] = task.disc.get_str();
    j["c"] = task.c.str();
    j["vertices"] = vertices;
    j["cycle_structure"] = cycles.str();
    if (label) j["label"] = *label;
    j["canonical"] = canonical;
    j["screen"] = screen;
    j["ms"] = ms;
    return j.dump();
}

std::vector<ScanTask> make_scan_tasks(long disc_lo, long disc_hi, long num_bound,
                                      const std::vector<long>& dens) {
    std::vector<long> discs;
    for (long d = disc_lo; d <= disc_hi; ++d) {
        if (d == 0) continue;
        if (d == 1 || is_squarefree_long(d)) discs.push_back(d);
    }
    std::sort(discs.begin(), discs.end(), [](long a, long b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a < b;
    });

    std::vector<Rational> cs;
    {
        std::set<Rational> seen;
        for (long den : dens)
            for (long num = -num_bound; num <= num_bound; ++num) {
                Rational q(num, den);
                q.canonicalize();
                if (seen.insert(q).second) cs.push_back(q);
            }
        std::sort(cs.begin(), cs.end());
    }

    std::vector<ScanTask> tasks;
    tasks.reserve(discs.size() * cs.size());
    for (long d : discs)
        for (const auto& c : cs) tasks.push_back({Integer(d), QuadElem(c)});
    return tasks;
}

ScanRow scan_one(const ScanTask& task, const Catalog& catalog, const ScanLimits& limits) {
    auto t0 = std::chrono::steady_clock::now();
    ScanRow row;
    row.task = task;

    FieldDesc k = task.disc == 1 ? FieldDesc::rational() : FieldDesc::make(task.disc);
    QuadElem c = in_field(task.c, k);
    PreperOptions opt;
    opt.box_limit = limits.box_limit;
    PointSet pts = preperiodic_points(k, c, opt);
    PreperGraph g = build_graph(pts, c);

    row.vertices = g.size();
    row.cycles = cycle_structure(g);
    row.canonical = canonical_form(g);
    row.label = catalog.classify_canonical(row.canonical);

    int max_period = 0;
    for (int len : row.cycles.lengths) max_period = std::max(max_period, len);

    row.strongly_admissible = is_strongly_admissible(g);
    if (!row.strongly_admissible) {
        row.screen = row.label ? "IN_CATALOG(" + *row.label + ")" : "NOT_STRONGLY_ADMISSIBLE";
    } else if (limits.max_period > 0 && max_period > limits.max_period && !row.label) {
        row.screen = "PERIOD_LIMIT";
    } else {
        ScreenReport rep = main_theorem_screen(g, catalog);
        switch (rep.status) {
            case ScreenStatus::IN_CATALOG:
                row.screen = "IN_CATALOG(" + rep.label + ")";
                break;
            case ScreenStatus::EXCEPTIONAL: {
                std::string w;
                for (size_t i = 0; i < rep.witnesses.size(); ++i) {
                    if (i) w += ",";
                    w += rep.witnesses[i];
                }
                row.screen = "EXCEPTIONAL(" + w + ")";
                break;
            }
            case ScreenStatus::VIOLATION:
                row.screen = "VIOLATION";
                row.violation = true;
                break;
            case ScreenStatus::OUT_OF_HYPOTHESIS:
                row.screen = "OUT_OF_HYPOTHESIS(" + rep.note + ")";
                break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return row;
}

std::optional<std::pair<Integer, QuadElem>> parse_scan_row_key(const std::string& json_line) {
    try {
        auto j = nlohmann::json::parse(json_line);
        Integer d(j.at("disc").get<std::string>());
        QuadElem c = parse_elem(j.at("c").get<std::string>());
        return std::make_pair(d, c);
    } catch (...) {
        return std::nullopt;
    }
}

std::vector<Representative> discover_representatives(const std::vector<ScanTask>& tasks,
                                                     const std::vector<Representative>& seed,
                                                     const ScanLimits& limits) {
    std::vector<Representative> out = seed;
    std::set<std::string> canon_seen;
    std::set<std::string> labels_seen;

    Catalog cat = build_catalog_from_representatives(seed);
    for (const auto& e : cat.entries()) {
        canon_seen.insert(e.canonical);
        labels_seen.insert(e.label);
    }

    for (const auto& task : tasks) {
        FieldDesc k = task.disc == 1 ? FieldDesc::rational() : FieldDesc::make(task.disc);
        QuadElem c = in_field(task.c, k);
        PointSet pts;
        try {
            PreperOptions opt;
            opt.box_limit = limits.box_limit;
            pts = preperiodic_points(k, c, opt);
        } catch (const LimitError&) {
            continue;
        }
        PreperGraph g = build_graph(pts, c);
        std::string canon = canonical_form(g);
        if (canon_seen.count(canon)) continue;
        canon_seen.insert(canon);

        std::string base = std::to_string(g.size()) + cycle_structure(g).str();
        const auto& known = Catalog::known_labels();
        bool lettered = std::find(known.begin(), known.end(), base + "a") != known.end();
        std::string label;
        if (g.size() == 0) {
            label = "0";
        } else if (!lettered && !labels_seen.count(base)) {
            label = base;
        } else {
            for (char letter = 'a'; letter <= 'z'; ++letter) {
                label = base + letter;
                if (!labels_seen.count(label)) break;
            }
        }
        labels_seen.insert(label);
        out.push_back({label, task.disc, task.c});
    }
    return out;
}

}  // namespace quadpreper
