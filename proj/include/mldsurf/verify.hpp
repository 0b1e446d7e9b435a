#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mldsurf/classifier.hpp"

namespace mldsurf {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> messages;  // one replayable description per failure
    bool pass() const { return failures == 0; }
};

/// The A/D/E minimal-resolution catalog: Du Val A_1..A_9, D_4..D_9, E_6/7/8,
/// plus one non-Du-Val weight variant of each shape (kept inside the catalog
/// and klt).
std::vector<GermModel> ade_catalog();

/// Randomized lemma-oracle suites (ledger vs pullback, intersection
/// conservation, the Noether bound, fork minimality, exceptional confinement,
/// the chain property). Deterministic under a fixed seed.
std::vector<SuiteResult> run_lemma_suites(uint64_t seed, int cases);

/// verify_theorem over the catalog with B = 0 and with `cases` random plt
/// boundaries per Du Val graph.
SuiteResult run_theorem14_suite(uint64_t seed, int cases, int depth = 3);

}  // namespace mldsurf
