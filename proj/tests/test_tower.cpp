#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mldsurf/spec_io.hpp"
#include "mldsurf/tower.hpp"

using namespace mldsurf;

namespace {

GermModel fixture(const std::string& name) {
    return load_spec_file(std::string(FIXTURES_DIR) + "/" + name);
}

GermModel cusp_pair(Rat coeff) {
    BoundaryBranch b;
    b.coeff = coeff;
    b.cluster = BranchCluster::cusp();
    return GermModel::smooth({b});
}

PointSpec branch_point(size_t b) {
    PointSpec p;
    p.branches = {b};
    return p;
}

}  // namespace

TEST_CASE("local_intersection via Noether's formula") {
    BranchCluster s = BranchCluster::smooth();
    BranchCluster c = BranchCluster::cusp();
    CHECK(local_intersection(s, s, 1) == Rat(1));
    CHECK(local_intersection(c, s, 1) == Rat(2));
    CHECK(local_intersection(c, c, 3) == Rat(6));
    CHECK_THROWS_AS(local_intersection(s, s, 2), GermError);
}

TEST_CASE("Kawakita germ: gamma ledger along the canonical tower") {
    GermModel g = fixture("kawakita.germ");
    BlowupTower t(g);
    CHECK(t.branch_mult(0) == 2);

    t = t.blow_up(branch_point(0));
    CHECK(t.curve(0).gamma == Rat(1, 3));  // a(E_1) = 2/3
    CHECK(t.branch_mult(0) == 1);

    t = t.blow_up(branch_point(0));
    CHECK(t.curve(1).gamma == Rat(0));  // a(E_2) = 1

    // the last cluster point is the satellite on E_1 ^ E_2
    t = t.blow_up(branch_point(0));
    CHECK(t.curve(2).gamma == Rat(0));
    CHECK(t.branch_exhausted(0));
    CHECK(t.branch_curves(0) == std::vector<int>{2});
    CHECK(t.branch_curve_intersection(0, 2) == Rat(1));

    // ledger matches the from-scratch pullback solve at the top
    RatVector c = t.pullback_coefficients();
    for (size_t i = 0; i < t.curve_count(); ++i) CHECK(c[i] == t.curve(i).gamma);
    CHECK(t.curve(2).self_int == -1);
    CHECK(t.curve(0).self_int == -3);
    CHECK(t.edge(0, 2) == 1);
    CHECK(t.edge(1, 2) == 1);
    CHECK(t.edge(0, 1) == 0);
}

TEST_CASE("Kawakita germ: depth-4 search is exact with a unique minimizer") {
    GermModel g = fixture("kawakita.germ");
    BruteForceResult bf = mld_bruteforce(g, 4);
    CHECK(bf.value == Rat(2, 3));
    CHECK(bf.complete);
    REQUIRE(bf.argmin.size() == 1);
    CHECK(bf.argmin[0].tower->steps() == 1);
    CHECK(bf.argmin[0].a == Rat(2, 3));

    const BlowupTower& t = *bf.argmin[0].tower;
    KollarStatus s = tower_divisor_status(t, 0);
    CHECK(s.is_kollar);
    CHECK(s.is_potential_lc_place);
    // relative to the pair the coefficient ledger eventually exceeds 1
    CHECK_FALSE(tower_divisor_plc_of_pair(t, 0));
}

TEST_CASE("smooth germ without boundary: depth-2 discrepancies are 2 and 3") {
    GermModel g = GermModel::smooth({});
    auto divs = enumerate_divisors(g, 2);
    std::vector<Rat> a;
    for (const auto& d : divs) a.push_back(d.a);
    std::sort(a.begin(), a.end());
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Rat(2));
    CHECK(a[1] == Rat(3));
    BruteForceResult bf = mld_bruteforce(g, 2);
    CHECK(bf.value == Rat(2));
    CHECK(bf.complete);  // rule A closes the subtree below the first blow-up
}

TEST_CASE("coefficient-1 cusp: three steps to SNC, not lc") {
    GermModel g = cusp_pair(Rat(1));
    BlowupTower t = resolve_pair(g);
    CHECK(t.steps() == 3);
    CHECK(t.curve(0).gamma == Rat(1));
    CHECK(t.curve(1).gamma == Rat(1));
    CHECK(t.curve(2).gamma == Rat(2));
    PairStatus s = status_of_resolved(t);
    CHECK_FALSE(s.lc);
}

TEST_CASE("5/6 cusp is the lc threshold") {
    PairStatus at = pair_status(cusp_pair(Rat(5, 6)));
    CHECK(at.lc);
    CHECK_FALSE(at.klt);
    PairStatus below = pair_status(cusp_pair(Rat(4, 5)));
    CHECK(below.klt);
    PairStatus above = pair_status(cusp_pair(Rat(9, 10)));
    CHECK_FALSE(above.lc);
}

TEST_CASE("node blow-up of a nodal rational curve") {
    WeightedDualGraph g;
    g.add_vertex({"N", 3, 0, 1});
    GermModel m = GermModel::resolved(g, {});
    BlowupTower t(m);
    CHECK(t.curve(0).gamma == Rat(1));  // a = 0: lc, not klt

    auto pts = t.candidate_points(-1);
    bool has_node = false;
    for (const auto& p : pts) has_node |= p.node_of == 0;
    CHECK(has_node);

    PointSpec p;
    p.node_of = 0;
    BlowupTower u = t.blow_up(p);
    CHECK(u.curve(1).gamma == Rat(1));  // 2*gamma - 1
    CHECK(u.curve(0).self_int == -7);
    CHECK(u.curve(0).nodes == 0);
    CHECK(u.edge(0, 1) == 2);
    RatVector c = u.pullback_coefficients();
    CHECK(c == RatVector{Rat(1), Rat(1)});
}

TEST_CASE("candidate points on a resolved germ") {
    GermModel g = fixture("duval_d4.germ");
    BlowupTower t(g);
    // one generic point per curve plus one point per intersection
    CHECK(t.candidate_points(-1).size() == 7);
    // restricted to the fork: generic point + three intersections
    CHECK(t.candidate_points(1).size() == 4);
}

TEST_CASE("intersection points occupied by branches are not double-counted") {
    GermModel g = fixture("d4_pair.germ");
    BlowupTower t(g);
    // branch 0 sits at an interior point of F2; blowing the point through the
    // branch consumes its only cluster point
    BlowupTower u = t.blow_up(branch_point(0));
    CHECK(u.branch_exhausted(0));
    CHECK(u.curve(3).gamma == Rat(1) + Rat(1) - Rat(1));  // gamma(F2) + coeff - 1
    CHECK(u.edge(1, 3) == 1);
}

TEST_CASE("tangent smooth branches separate after one blow-up") {
    BoundaryBranch b1, b2;
    b1.coeff = b2.coeff = Rat(1, 2);
    b1.cluster = b2.cluster = BranchCluster{{ClusterPoint{}, ClusterPoint{}}};
    GermModel g = GermModel::smooth({b1, b2});
    g.set_shared_points(0, 1, 2);
    BlowupTower t(g);
    CHECK(t.branch_branch_intersection(0, 1) == Rat(2));
    PointSpec p;
    p.branches = {0, 1};
    t = t.blow_up(p);
    CHECK(t.shared_remaining(0, 1) == 1);
    CHECK(t.branch_branch_intersection(0, 1) == Rat(1));
    t = t.blow_up(p);
    CHECK(t.shared_remaining(0, 1) == 0);
    CHECK(t.branch_branch_intersection(0, 1) == Rat(0));
}

TEST_CASE("bruteforce confinement on resolved germs") {
    GermModel g = fixture("bd12_d4.germ");
    BruteForceResult bf = mld_bruteforce(g, 3);
    CHECK(bf.value == Rat(1, 2));
    REQUIRE(bf.argmin.size() == 2);
    for (const auto& d : bf.argmin) CHECK(d.on_base());

    GermModel d4 = fixture("duval_d4.germ");
    BruteForceResult bf4 = mld_bruteforce(d4, 3);
    CHECK(bf4.value == Rat(1));
    CHECK(bf4.argmin.size() == 4);
}

TEST_CASE("dual graph of the top model includes branch strict transforms") {
    GermModel g = fixture("kawakita.germ");
    BlowupTower t(g);
    t = t.blow_up(branch_point(0));
    WeightedDualGraph d = t.dual_graph(true);
    CHECK(d.size() == 2);  // E_1 plus the branch
    CHECK_FALSE(d.vertices[1].exceptional);
    CHECK(d.edges.size() == 1);
    CHECK(t.dual_graph(false).size() == 1);
}

TEST_CASE("canonical_point rejects inconsistent specs") {
    GermModel g = fixture("duval_d4.germ");
    BlowupTower t(g);
    PointSpec p;
    p.curves = {0, 2};  // tail and leaf never meet
    CHECK_THROWS_AS(t.blow_up(p), GermError);
    PointSpec n;
    n.node_of = 0;
    CHECK_THROWS_AS(t.blow_up(n), GermError);
}
