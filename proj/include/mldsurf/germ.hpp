#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mldsurf/dual_graph.hpp"
#include "mldsurf/rational.hpp"

namespace mldsurf {

struct GermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One infinitely-near point of a branch. Point j (j >= 1) always lies on the
/// exceptional curve of the blow-up at point j-1; `extra` names one additional
/// curve through it: an ambient curve of the attach site (tangency to that
/// curve) or the exceptional curve created at an earlier cluster point
/// (a satellite point).
struct ClusterPoint {
    long long mult = 1;
    enum class Extra { None, Ambient, ClusterExc };
    Extra extra = Extra::None;
    std::string ambient;    // vertex id, when extra == Ambient
    int cluster_exc = -1;   // earlier point index, when extra == ClusterExc
};

/// The multiplicity sequence of one analytic curve branch. Beyond its last
/// point the branch is smooth and transverse to everything it meets.
struct BranchCluster {
    std::vector<ClusterPoint> points;

    static BranchCluster smooth() { return BranchCluster{{ClusterPoint{}}}; }
    /// The standard cusp x^2 = y^3: multiplicities (2,1,1), last point satellite.
    static BranchCluster cusp();

    size_t size() const { return points.size(); }
    long long mult_at_origin() const { return points.empty() ? 0 : points[0].mult; }
};

/// Noether's formula: the local intersection number of two branches sharing
/// their first `shared_points` infinitely near points.
Rat local_intersection(const BranchCluster& a, const BranchCluster& b, size_t shared_points);

enum class SiteKind {
    Origin,        // the closed point of a smooth germ
    Interior,      // interior point of one exceptional curve
    Intersection,  // a point of F_i n F_j
    Free           // off the exceptional locus (inert for discrepancies at x)
};

struct AttachSite {
    SiteKind kind = SiteKind::Origin;
    std::string v1, v2;
};

struct BoundaryBranch {
    Rat coeff;
    AttachSite attach;
    BranchCluster cluster = BranchCluster::smooth();
};

/// A surface germ presented by the weighted dual graph of its minimal
/// resolution (empty graph: the smooth germ) together with boundary branches.
/// Validated on construction: weights >= 2, connected, negative definite
/// intersection matrix, coefficients in (0,1], consistent attach sites and
/// cluster data. Branches with coefficient 0 are pruned.
class GermModel {
public:
    static GermModel smooth(std::vector<BoundaryBranch> boundary,
                            std::vector<std::vector<size_t>> shared = {});
    static GermModel resolved(WeightedDualGraph graph, std::vector<BoundaryBranch> boundary,
                              std::vector<std::vector<size_t>> shared = {});

    const WeightedDualGraph& graph() const { return graph_; }
    const std::vector<BoundaryBranch>& boundary() const { return boundary_; }
    bool is_smooth_germ() const { return graph_.empty(); }
    bool has_boundary() const { return !boundary_.empty(); }

    /// Number of infinitely near points shared by branches a and b.
    size_t shared_points(size_t a, size_t b) const;
    void set_shared_points(size_t a, size_t b, size_t k);

    /// Local intersection number of the branch with exceptional curve `v`
    /// (before any blow-up): sum of cluster multiplicities at shared points.
    Rat branch_curve_intersection(size_t branch, int v) const;

private:
    GermModel() = default;
    void validate();

    WeightedDualGraph graph_;
    std::vector<BoundaryBranch> boundary_;
    std::vector<std::vector<size_t>> shared_;  // symmetric, diagonal unused
};

/// Depth of contact of the branch's cluster with ambient curve `id`: the
/// number of leading cluster points lying on it (0 if the attach site does
/// not involve the curve).
size_t ambient_contact_depth(const BoundaryBranch& b, const std::string& id);

}  // namespace mldsurf
