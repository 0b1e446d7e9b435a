#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mldsurf/classifier.hpp"
#include "mldsurf/spec_io.hpp"

using namespace mldsurf;

namespace {

GermModel fixture(const std::string& name) {
    return load_spec_file(std::string(FIXTURES_DIR) + "/" + name);
}

WeightedDualGraph chain(std::vector<long long> w) {
    WeightedDualGraph g;
    for (size_t i = 0; i < w.size(); ++i) g.add_vertex({"F" + std::to_string(i + 1), w[i]});
    for (size_t i = 0; i + 1 < w.size(); ++i)
        g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
    return g;
}

}  // namespace

TEST_CASE("dlt_kind") {
    CHECK(dlt_kind(fixture("duval_d4.germ")) == DltKind::Plt);
    CHECK(dlt_kind(GermModel::smooth({})) == DltKind::Plt);
    CHECK(dlt_kind(fixture("d4_pair.germ")) == DltKind::NotDlt);

    // two coefficient-1 axes through the origin: normal crossing, dlt, not plt
    BoundaryBranch a1, a2;
    a1.coeff = a2.coeff = Rat(1);
    GermModel axes = GermModel::smooth({a1, a2});
    CHECK(dlt_kind(axes) == DltKind::LogSmoothDlt);

    BoundaryBranch b;
    b.coeff = Rat(1);
    b.cluster = BranchCluster::cusp();
    CHECK_THROWS_AS(dlt_kind(GermModel::smooth({b})), GermError);
}

TEST_CASE("case 1.a: chain singularities, all members Kollar") {
    GermModel g = GermModel::resolved(chain({2, 3, 2}), {});
    ClassificationReport r = classify(g, 3);
    CHECK(r.case_label == "1.a");
    CHECK(r.mld == Rat(1, 2));
    CHECK(r.consistency);
    CHECK(r.search_complete);
    REQUIRE(r.computing_set.size() == 1);
    CHECK(r.computing_set[0].name == "F2");
    CHECK(r.computing_set[0].is_kollar);

    // smooth germ without boundary: mld 2, the first blow-up computes it
    ClassificationReport s = classify(GermModel::smooth({}), 3);
    CHECK(s.case_label == "1.a");
    CHECK(s.mld == Rat(2));
    CHECK(s.consistency);
    REQUIRE(s.computing_set.size() == 1);
    CHECK_FALSE(s.computing_set[0].on_base);
    CHECK(s.computing_set[0].is_kollar);

    // Kawakita: smooth with a klt boundary, still 1.a
    ClassificationReport k = classify(fixture("kawakita.germ"), 4);
    CHECK(k.case_label == "1.a");
    CHECK(k.mld == Rat(2, 3));
    CHECK(k.consistency);
    CHECK(k.search_complete);
    CHECK(k.computing_set.size() == 1);
}

TEST_CASE("case 1.b.iii: non-Du-Val D-type") {
    ClassificationReport r = classify(fixture("bd12_d4.germ"), 3);
    CHECK(r.case_label == "1.b.iii");
    CHECK(r.mld == Rat(1, 2));
    CHECK(r.consistency);
    REQUIRE(r.computing_set.size() == 2);
    CHECK(r.computing_set[0].name == "F1");
    CHECK_FALSE(r.computing_set[0].is_kollar);
    CHECK(r.computing_set[0].is_potential_lc_place);
    CHECK(r.computing_set[1].name == "F2");
    CHECK(r.computing_set[1].is_kollar);
}

TEST_CASE("case 1.b.iv: Du Val D and E") {
    ClassificationReport d = classify(fixture("duval_d4.germ"), 3);
    CHECK(d.case_label == "1.b.iv");
    CHECK(d.mld == Rat(1));
    CHECK(d.consistency);
    CHECK(d.computing_set.size() == 4);
    for (const auto& div : d.computing_set) {
        CHECK(div.on_base);
        CHECK(div.is_kollar == (div.name == "F2"));
        CHECK(div.is_potential_lc_place);  // D_4: every branch has length 1
    }

    ClassificationReport e = classify(fixture("duval_e6.germ"), 3);
    CHECK(e.case_label == "1.b.iv");
    CHECK(e.consistency);
    CHECK(e.computing_set.size() == 6);
    for (const auto& div : e.computing_set) {
        CHECK(div.is_kollar == (div.name == "F3"));
        CHECK(div.is_potential_lc_place == (div.name == "F3"));
    }

    ClassificationReport d5 = classify(fixture("duval_d5.germ"), 3);
    CHECK(d5.consistency);
    for (const auto& div : d5.computing_set)
        CHECK(div.is_potential_lc_place == (div.name == "F1" || div.name == "F2" || div.name == "F3"));
}

TEST_CASE("case 2: lc-not-dlt pair over a klt germ") {
    ClassificationReport r = classify(fixture("d4_pair.germ"), 3);
    CHECK(r.case_label == "2");
    CHECK(r.mld == Rat(0));
    CHECK(r.consistency);
    CHECK_FALSE(r.note.empty());
    bool kollar_found = false;
    for (const auto& d : r.computing_set) {
        CHECK(d.is_potential_lc_place);
        kollar_found |= d.is_kollar;
    }
    CHECK(kollar_found);
}

TEST_CASE("case 3: germ not klt") {
    ClassificationReport r = classify(fixture("h5.germ"), 3);
    CHECK(r.case_label == "3");
    CHECK_FALSE(r.x_klt);
    CHECK(r.mld == Rat(0));
    CHECK(r.consistency);
    for (const auto& d : r.computing_set) CHECK(d.is_potential_lc_place);
}

TEST_CASE("classify rejects non-lc pairs and off-catalog klt forks") {
    BoundaryBranch b;
    b.coeff = Rat(1);
    b.cluster = BranchCluster::cusp();
    CHECK_THROWS_AS(classify(GermModel::smooth({b}), 3), GermError);

    // a klt fork with leaf weights (2,3,3) is not D-shaped (one weight-2 leaf)
    WeightedDualGraph g = chain({2});
    g.add_vertex({"L1", 2});
    g.add_vertex({"L2", 3});
    g.add_vertex({"L3", 3});
    for (int v = 1; v <= 3; ++v) g.add_edge(0, v);
    GermModel m = GermModel::resolved(g, {});
    for (const Rat& a : solve_discrepancies(m).a) CHECK(a > Rat(0));  // klt
    CHECK_THROWS_AS(classify(m, 3), GermError);
}

TEST_CASE("verify_theorem reports violations with the case label") {
    TheoremCheck ok = verify_theorem(fixture("duval_e7.germ"), 3);
    CHECK(ok.pass);
    CHECK(ok.counterexample.empty());
}

TEST_CASE("render_report is stable and keyed") {
    std::string out = render_report(classify(fixture("bd12_d4.germ"), 3));
    CHECK(out.find("case: 1.b.iii\n") != std::string::npos);
    CHECK(out.find("mld: 1/2\n") != std::string::npos);
    CHECK(out.find("singularity: D4\n") != std::string::npos);
    CHECK(out.find("consistency: true\n") != std::string::npos);
    CHECK(out.find("divisor: name=F1 a=1/2 base=1 kollar=0 plc=1\n") != std::string::npos);
    CHECK(out.find("divisor: name=F2 a=1/2 base=1 kollar=1 plc=1\n") != std::string::npos);
}
