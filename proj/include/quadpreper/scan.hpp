#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadpreper/catalog.hpp"
#include "quadpreper/preper.hpp"

namespace quadpreper {

struct ScanTask {
    Integer disc;  // 1 encodes K = Q; otherwise squarefree
    QuadElem c;    // parsed with the element grammar; usually rational
};

struct ScanLimits {
    long box_limit = kDefaultBoxLimit;
    int max_period = 0;  // 0 = unrestricted; otherwise tasks whose graph
                         // exceeds it are still reported, just not screened
};

struct ScanRow {
    ScanTask task;
    int vertices = 0;
    CycleStructure cycles;
    std::optional<std::string> label;
    std::string canonical;
    std::string screen;  // IN_CATALOG(<label>), EXCEPTIONAL(...), VIOLATION, ...
    long ms = 0;
    bool violation = false;
    bool strongly_admissible = false;
    std::string json() const;
};

// deterministic task list: squarefree D in [lo, hi] (1 = Q always included
// when in range), c = n/d with |n| <= num_bound and d in dens, reduced and
// de-duplicated, sorted by (|D|, D, c)
std::vector<ScanTask> make_scan_tasks(long disc_lo, long disc_hi, long num_bound,
                                      const std::vector<long>& dens);

ScanRow scan_one(const ScanTask& task, const Catalog& catalog, const ScanLimits& limits);

// JSONL round-trip helpers used by --skip-done
std::optional<std::pair<Integer, QuadElem>> parse_scan_row_key(const std::string& json_line);

// Representative discovery: run the grid, keep the first witness of every
// new canonical form, and auto-label N(cycle-structure) with a discovered-
// order letter when the structure collides.
std::vector<Representative> discover_representatives(const std::vector<ScanTask>& tasks,
                                                     const std::vector<Representative>& seed,
                                                     const ScanLimits& limits);

}  // namespace quadpreper
