#pragma once

#include <string>
#include <vector>

#include "mldsurf/tower.hpp"

namespace mldsurf {

struct DivisorReport {
    std::string name;
    Rat a;
    bool on_base = false;
    bool is_kollar = false;
    bool is_potential_lc_place = false;
};

/// The set of mld-computing divisors found within the search depth, the case
/// label of the classification theorem, and whether the computed flags agree
/// with the declarative clause.
struct ClassificationReport {
    std::string case_label;  // "1.a", "1.b.iii", "1.b.iv", "2", "3"
    Rat mld;
    std::vector<DivisorReport> computing_set;
    bool consistency = true;
    std::vector<std::string> violations;
    bool search_complete = true;
    std::string note;
    SingularityClass sing;
    PairStatus pair;
    bool x_klt = true;
};

enum class DltKind { Plt, LogSmoothDlt, NotDlt };

/// Requires the pair to be lc.
DltKind dlt_kind(const GermModel& g);

/// Runs the mld search to `depth`, flags every computing divisor via the
/// pinned extraction system, and checks the flags against the clause of the
/// classification that applies. Throws GermError on non-lc input or a klt
/// fork graph outside the A/D/E catalog.
ClassificationReport classify(const GermModel& g, int depth);

struct TheoremCheck {
    bool pass = false;
    std::string counterexample;  // empty on pass
};

TheoremCheck verify_theorem(const GermModel& g, int depth);

/// Stable key-value rendering for golden-file tests and the CLI.
std::string render_report(const ClassificationReport& r);

}  // namespace mldsurf
