#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "mldsurf/spec_io.hpp"

using namespace mldsurf;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const GermError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("all fixtures parse") {
    int count = 0;
    for (const auto& entry :
         std::filesystem::directory_iterator(std::filesystem::path(FIXTURES_DIR))) {
        if (entry.path().extension() != ".germ") continue;
        CHECK_NOTHROW(load_spec_file(entry.path().string()));
        ++count;
    }
    CHECK(count >= 22);
}

TEST_CASE("parsing a resolved germ") {
    GermModel g = parse_spec(
        "mldsurf-spec v1\n"
        "germ resolved\n"
        "# a comment\n"
        "vertex F1 weight=3 genus=1\n"
        "vertex F2 weight=2 nodes=0\n"
        "edge F1 F2 mult=1\n"
        "branch coeff=1/2 at=F1 cluster=1,1\n"
        "branch coeff=1/3 at=F1^F2 cluster=1\n");
    CHECK(g.graph().size() == 2);
    CHECK(g.graph().vertices[0].genus == 1);
    CHECK(g.graph().edge_mult(0, 1) == 1);
    REQUIRE(g.boundary().size() == 2);
    CHECK(g.boundary()[0].coeff == Rat(1, 2));
    CHECK(g.boundary()[0].cluster.size() == 2);
    CHECK(g.boundary()[1].attach.kind == SiteKind::Intersection);
    CHECK(g.shared_points(0, 1) == 0);  // different attach points
}

TEST_CASE("parsing the cusp cluster with a satellite annotation") {
    GermModel g = parse_spec(
        "mldsurf-spec v1\n"
        "germ smooth\n"
        "branch coeff=2/3 at=origin cluster=2,1,1@e:0\n");
    REQUIRE(g.boundary().size() == 1);
    const BranchCluster& c = g.boundary()[0].cluster;
    REQUIRE(c.size() == 3);
    CHECK(c.points[0].mult == 2);
    CHECK(c.points[2].extra == ClusterPoint::Extra::ClusterExc);
    CHECK(c.points[2].cluster_exc == 0);
}

TEST_CASE("share lines override the attach-site default") {
    GermModel g = parse_spec(
        "mldsurf-spec v1\n"
        "germ smooth\n"
        "branch coeff=1/2 at=origin cluster=1,1\n"
        "branch coeff=1/2 at=origin cluster=1,1\n"
        "share 0 1 2\n");
    CHECK(g.shared_points(0, 1) == 2);
}

TEST_CASE("round trip through serialize_spec is the identity") {
    for (const auto& entry :
         std::filesystem::directory_iterator(std::filesystem::path(FIXTURES_DIR))) {
        if (entry.path().extension() != ".germ") continue;
        GermModel g = load_spec_file(entry.path().string());
        std::string once = serialize_spec(g);
        CHECK(serialize_spec(parse_spec(once)) == once);
    }
}

TEST_CASE("errors carry 1-based line numbers") {
    CHECK(contains(error_of(""), "line 1"));
    CHECK(contains(error_of("nonsense v1\n"), "line 1"));
    CHECK(contains(error_of("mldsurf-spec v1\nvertex F1 weight=2\n"), "line 2"));
    CHECK(contains(error_of("mldsurf-spec v1\ngerm resolved\n\nedge F1 F2\n"), "line 4"));
    std::string e = error_of(
        "mldsurf-spec v1\n"
        "germ resolved\n"
        "vertex F1 weight=2\n"
        "vertex F1 weight=2\n");
    CHECK(contains(e, "line 4"));
    CHECK(contains(e, "duplicate"));
}

TEST_CASE("unknown keys and malformed values are rejected") {
    CHECK(contains(error_of("mldsurf-spec v1\ngerm resolved\nvertex F1 weight=2 color=red\n"),
                   "unknown vertex key"));
    CHECK(contains(error_of("mldsurf-spec v1\ngerm smooth\nbranch coeff=1/2 at=origin size=3\n"),
                   "unknown branch key"));
    CHECK(contains(error_of("mldsurf-spec v1\ngerm smooth\nfrobnicate\n"), "unknown keyword"));
    CHECK(contains(error_of("mldsurf-spec v1\ngerm smooth\nbranch coeff=half at=origin\n"),
                   "malformed rational"));
    CHECK(contains(error_of("mldsurf-spec v1\ngerm resolved\nvertex F1 weight=x\n"),
                   "malformed integer"));
    CHECK(contains(
        error_of("mldsurf-spec v1\ngerm smooth\nbranch coeff=1/2 at=origin cluster=1@z:3\n"),
        "unknown cluster annotation"));
    CHECK(contains(error_of("mldsurf-spec v1\ngerm smooth\nbranch coeff=1/2 at=F1\n"),
                   "unknown curve"));  // interior site on a smooth germ fails validation
}

TEST_CASE("share index errors") {
    std::string e = error_of(
        "mldsurf-spec v1\n"
        "germ smooth\n"
        "branch coeff=1/2 at=origin\n"
        "share 0 5 1\n");
    CHECK(contains(e, "line 4"));
    CHECK(contains(e, "out of range"));
}

TEST_CASE("model-level validation still reports on parse") {
    // weight 1 is rejected by GermModel, surfaced through parse_spec
    std::string e = error_of("mldsurf-spec v1\ngerm resolved\nvertex F1 weight=1\n");
    CHECK(contains(e, "weight"));
}
