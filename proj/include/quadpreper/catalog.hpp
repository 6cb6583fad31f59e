#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadpreper/graphs.hpp"
#include "quadpreper/qfield.hpp"

namespace quadpreper {

struct CatalogEntry {
    std::string label;       // e.g. "12(2,1,1)b"
    std::string canonical;   // canonical_form output
    std::optional<Integer> disc;   // representative pair, when known
    std::optional<QuadElem> c;     // element of Q(sqrt(disc))
};

class Catalog {
public:
    void add(CatalogEntry entry);  // duplicate labels -> DataIntegrityError
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::optional<std::string> classify(const PreperGraph& g) const;
    std::optional<std::string> classify_canonical(const std::string& canonical) const;
    const CatalogEntry* find_label(const std::string& label) const;

    // file format: label<TAB>canonical<TAB>D<TAB>c  (last two optional)
    static Catalog load(const std::string& path);
    void save(const std::string& path) const;

    static const std::vector<std::string>& known_labels();  // the fixed 46

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, size_t> by_canonical_;
    std::map<std::string, size_t> by_label_;
};

// Representative pairs (label, D, c) shipped with the tool: pairs named in
// the source literature plus pairs found by the bundled scan.  Labels with a
// trailing letter follow discovered order where the literature does not pin
// them.
struct Representative {
    std::string label;
    Integer disc;       // 1 encodes K = Q
    QuadElem c;         // element of Q(sqrt(disc))
};
const std::vector<Representative>& shipped_representatives();

// build a catalog by computing the graph of every representative pair
Catalog build_catalog_from_representatives(const std::vector<Representative>& reps);

// the default catalog: shipped representatives, built once and cached
const Catalog& default_catalog();

// ---- main-theorem screen ----------------------------------------------------

enum class ScreenStatus { IN_CATALOG, EXCEPTIONAL, VIOLATION, OUT_OF_HYPOTHESIS };

struct ScreenReport {
    ScreenStatus status;
    std::string label;                   // for IN_CATALOG
    std::vector<std::string> witnesses;  // for EXCEPTIONAL: which containments hold
    std::string note;
};

// Classification sieve for strongly admissible graphs with all periods <= 4
// (a 6-cycle is tolerated when the graph itself is catalogued): either the
// graph is in the catalog, or it must properly contain one of
// 10(1,1)b, 10(2), 10(3)a/b, 12(2,1,1)b, 12(4), 12(4,2) or contain one of
// G0, G2, G4.  Anything else is reported loudly as a VIOLATION.
ScreenReport main_theorem_screen(const PreperGraph& g, const Catalog& catalog);

}  // namespace quadpreper
