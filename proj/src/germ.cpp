#include "mldsurf/germ.hpp"

#include <algorithm>

namespace mldsurf {

BranchCluster BranchCluster::cusp() {
    BranchCluster c;
    c.points.push_back({2});
    c.points.push_back({1});
    ClusterPoint sat{1};
    sat.extra = ClusterPoint::Extra::ClusterExc;
    sat.cluster_exc = 0;
    c.points.push_back(sat);
    return c;
}

Rat local_intersection(const BranchCluster& a, const BranchCluster& b, size_t shared_points) {
    if (shared_points > a.size() || shared_points > b.size())
        throw GermError("local_intersection: branches cannot share points beyond their clusters");
    Rat sum(0);
    for (size_t i = 0; i < shared_points; ++i)
        sum += Rat(a.points[i].mult * b.points[i].mult);
    return sum;
}

namespace {

std::vector<std::string> site_curves(const AttachSite& s) {
    switch (s.kind) {
        case SiteKind::Interior: return {s.v1};
        case SiteKind::Intersection: return {s.v1, s.v2};
        default: return {};
    }
}

void validate_cluster(const BoundaryBranch& b) {
    const auto& pts = b.cluster.points;
    if (pts.empty()) throw GermError("branch cluster must contain at least one point");
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].mult < 1) throw GermError("cluster multiplicities must be positive");
        if (i > 0 && pts[i].mult > pts[i - 1].mult)
            throw GermError("cluster multiplicities must weakly decrease");
    }
    if (pts[0].extra != ClusterPoint::Extra::None)
        throw GermError("the first cluster point's incidences come from the attach site");
    auto ambients = site_curves(b.attach);
    for (size_t i = 1; i < pts.size(); ++i) {
        const auto& p = pts[i];
        if (p.extra == ClusterPoint::Extra::Ambient) {
            if (std::find(ambients.begin(), ambients.end(), p.ambient) == ambients.end())
                throw GermError("cluster tangency refers to a curve not at the attach site");
            // contact with an ambient curve must be a contiguous prefix
            if (i > 1 && !(pts[i - 1].extra == ClusterPoint::Extra::Ambient && pts[i - 1].ambient == p.ambient))
                throw GermError("ambient contact must be a contiguous run of leading cluster points");
        } else if (p.extra == ClusterPoint::Extra::ClusterExc) {
            if (p.cluster_exc < 0 || static_cast<size_t>(p.cluster_exc) + 2 > i)
                throw GermError("satellite reference must point at least two steps back");
            // the referenced exceptional curve still passes through the previous
            // point: either p_{i-1} is its first neighborhood or a satellite of it
            const auto& prev = pts[i - 1];
            bool reachable = static_cast<size_t>(p.cluster_exc) + 2 == i ||
                             (prev.extra == ClusterPoint::Extra::ClusterExc &&
                              prev.cluster_exc == p.cluster_exc);
            if (!reachable)
                throw GermError("satellite reference to a curve not through the previous point");
        }
    }
    // proximity equality for an irreducible branch: each multiplicity equals
    // the sum over its proximate points, with the smooth transverse
    // continuation beyond the last point counting 1. Splitting curves must be
    // modeled as several branches with shared points.
    for (size_t k = 0; k < pts.size(); ++k) {
        long long prox = k + 1 < pts.size() ? pts[k + 1].mult : 1;
        for (size_t j = k + 2; j < pts.size(); ++j)
            if (pts[j].extra == ClusterPoint::Extra::ClusterExc &&
                static_cast<size_t>(pts[j].cluster_exc) == k)
                prox += pts[j].mult;
        if (prox != pts[k].mult) throw GermError("cluster violates proximity equality");
    }
}

bool same_attach_point(const AttachSite& a, const AttachSite& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case SiteKind::Origin: return true;
        case SiteKind::Intersection:
            return (a.v1 == b.v1 && a.v2 == b.v2) || (a.v1 == b.v2 && a.v2 == b.v1);
        default: return false;  // interior/free attachments are at generic points
    }
}

}  // namespace

size_t ambient_contact_depth(const BoundaryBranch& b, const std::string& id) {
    auto curves = site_curves(b.attach);
    if (std::find(curves.begin(), curves.end(), id) == curves.end()) return 0;
    size_t depth = 1;
    const auto& pts = b.cluster.points;
    while (depth < pts.size() && pts[depth].extra == ClusterPoint::Extra::Ambient &&
           pts[depth].ambient == id)
        ++depth;
    return depth;
}

GermModel GermModel::smooth(std::vector<BoundaryBranch> boundary,
                            std::vector<std::vector<size_t>> shared) {
    GermModel g;
    g.boundary_ = std::move(boundary);
    g.shared_ = std::move(shared);
    g.validate();
    return g;
}

GermModel GermModel::resolved(WeightedDualGraph graph, std::vector<BoundaryBranch> boundary,
                              std::vector<std::vector<size_t>> shared) {
    GermModel g;
    g.graph_ = std::move(graph);
    g.boundary_ = std::move(boundary);
    g.shared_ = std::move(shared);
    g.validate();
    return g;
}

void GermModel::validate() {
    if (!graph_.empty()) {
        if (!graph_.connected()) throw GermError("exceptional locus must be connected");
        for (const auto& v : graph_.vertices) {
            if (v.weight < 2)
                throw GermError("minimal resolution cannot contain a curve of weight < 2: " + v.id);
            if (v.genus < 0 || v.nodes < 0) throw GermError("negative genus or node count: " + v.id);
            if (!v.exceptional) throw GermError("germ graph vertices must be exceptional curves");
        }
        for (size_t i = 0; i < graph_.size(); ++i)
            for (size_t j = i + 1; j < graph_.size(); ++j)
                if (graph_.vertices[i].id == graph_.vertices[j].id)
                    throw GermError("duplicate vertex id: " + graph_.vertices[i].id);
        if (!is_negative_definite(intersection_matrix(graph_)))
            throw GermError("intersection matrix is not negative definite");
    }

    // prune zero-coefficient branches before validating the rest
    boundary_.erase(std::remove_if(boundary_.begin(), boundary_.end(),
                                   [](const BoundaryBranch& b) { return b.coeff == Rat(0); }),
                    boundary_.end());

    for (const auto& b : boundary_) {
        if (b.coeff < Rat(0) || b.coeff > Rat(1))
            throw GermError("boundary coefficients must lie in [0,1]");
        switch (b.attach.kind) {
            case SiteKind::Origin:
                if (!graph_.empty())
                    throw GermError("origin attachment is only meaningful on the smooth germ");
                break;
            case SiteKind::Free:
                if (graph_.empty()) throw GermError("free attachment requires a resolved germ");
                break;
            case SiteKind::Interior:
                if (graph_.index_of(b.attach.v1) < 0)
                    throw GermError("branch attached to unknown curve: " + b.attach.v1);
                break;
            case SiteKind::Intersection: {
                int i = graph_.index_of(b.attach.v1);
                int j = graph_.index_of(b.attach.v2);
                if (i < 0 || j < 0 || graph_.edge_mult(i, j) == 0)
                    throw GermError("branch attached to a non-existent intersection " + b.attach.v1 +
                                    "^" + b.attach.v2);
                break;
            }
        }
        validate_cluster(b);
    }

    const size_t n = boundary_.size();
    if (shared_.empty()) {
        shared_.assign(n, std::vector<size_t>(n, 0));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a + 1; b < n; ++b)
                if (same_attach_point(boundary_[a].attach, boundary_[b].attach))
                    shared_[a][b] = shared_[b][a] = 1;
    }
    if (shared_.size() != n) throw GermError("sharing matrix size mismatch");
    for (size_t a = 0; a < n; ++a) {
        if (shared_[a].size() != n) throw GermError("sharing matrix size mismatch");
        for (size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            size_t k = shared_[a][b];
            if (k != shared_[b][a]) throw GermError("sharing matrix must be symmetric");
            if (k > std::min(boundary_[a].cluster.size(), boundary_[b].cluster.size()))
                throw GermError("branches cannot share points beyond their clusters");
            if (k >= 1 && !same_attach_point(boundary_[a].attach, boundary_[b].attach))
                throw GermError("branches sharing a point must have the same attach point");
            for (size_t i = 1; i < k; ++i) {
                const auto& p = boundary_[a].cluster.points[i];
                const auto& q = boundary_[b].cluster.points[i];
                if (p.extra != q.extra || p.ambient != q.ambient || p.cluster_exc != q.cluster_exc)
                    throw GermError("shared cluster points must have identical incidences");
            }
        }
    }
}

size_t GermModel::shared_points(size_t a, size_t b) const {
    if (a >= boundary_.size() || b >= boundary_.size()) throw GermError("branch index out of range");
    if (a == b) return boundary_[a].cluster.size();
    return shared_[a][b];
}

void GermModel::set_shared_points(size_t a, size_t b, size_t k) {
    if (a >= boundary_.size() || b >= boundary_.size() || a == b)
        throw GermError("branch index out of range");
    shared_[a][b] = shared_[b][a] = k;
    validate();
}

Rat GermModel::branch_curve_intersection(size_t branch, int v) const {
    if (branch >= boundary_.size()) throw GermError("branch index out of range");
    if (v < 0 || v >= static_cast<int>(graph_.size())) throw GermError("vertex index out of range");
    const BoundaryBranch& b = boundary_[branch];
    size_t depth = ambient_contact_depth(b, graph_.vertices[v].id);
    Rat sum(0);
    for (size_t i = 0; i < depth; ++i) sum += Rat(b.cluster.points[i].mult);
    return sum;
}

}  // namespace mldsurf
