#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mldsurf/verify.hpp"

using namespace mldsurf;

TEST_CASE("randomized lemma suites pass on an independent seed") {
    for (const SuiteResult& s : run_lemma_suites(42, 60)) {
        INFO(s.name);
        for (const auto& m : s.messages) { INFO(m); }
        CHECK(s.failures == 0);
        CHECK(s.cases == 60);
    }
}

TEST_CASE("lemma suites are deterministic under a fixed seed") {
    auto a = run_lemma_suites(7, 10);
    auto b = run_lemma_suites(7, 10);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].failures == b[i].failures);
    }
}

TEST_CASE("theorem suite over the catalog and random plt boundaries") {
    SuiteResult s = run_theorem14_suite(42, 5);
    for (const auto& m : s.messages) { INFO(m); }
    CHECK(s.failures == 0);
    // 36 catalog germs with B=0 plus 5 random boundaries per Du Val graph
    CHECK(s.cases == 36 + 18 * 5);
}

TEST_CASE("the catalog stays inside the classification") {
    for (const GermModel& g : ade_catalog()) {
        SingularityClass c = classify_graph(g.graph());
        bool ade = c.tag == SingularityClass::A || c.tag == SingularityClass::D ||
                   c.tag == SingularityClass::E;
        CHECK(ade);
        for (const Rat& a : solve_discrepancies(g).a) CHECK(a > Rat(0));
    }
}
