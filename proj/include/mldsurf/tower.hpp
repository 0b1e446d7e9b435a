#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mldsurf/discrepancy.hpp"
#include "mldsurf/germ.hpp"

namespace mldsurf {

/// A curve tracked on the top model of a tower: either an exceptional curve
/// of the base resolution or one created by a blow-up. `gamma` is the ledger
/// value 1 - a(F, X, B).
struct TowerCurve {
    std::string id;
    long long self_int = -1;
    long long genus = 0;
    long long nodes = 0;
    Rat gamma;
    bool from_base = false;
};

/// A combinatorial point on the top model: the tracked curves and boundary
/// branches passing through it. `node_of` selects the self-node of a nodal
/// curve instead.
struct PointSpec {
    std::vector<int> curves;
    std::vector<size_t> branches;
    int node_of = -1;
};

/// An immutable sequence of combinatorial point blow-ups over a germ.
/// Blowing up returns a new tower; every quantity (self-intersections, the
/// gamma ledger, branch cluster positions, pairwise branch sharing) is exact.
class BlowupTower {
public:
    explicit BlowupTower(GermModel germ);

    const GermModel& germ() const { return *germ_; }
    size_t curve_count() const { return curves_.size(); }
    const TowerCurve& curve(size_t i) const { return curves_[i]; }
    long long edge(int a, int b) const;
    size_t steps() const { return step_desc_.size(); }
    const std::vector<std::string>& step_descriptions() const { return step_desc_; }
    /// Most recently created exceptional curve; -1 before the first blow-up.
    int last_curve() const { return last_; }

    /// Validates and completes a point spec: the branch set is closed under
    /// sharing and the curve set is derived from the branches' incidences.
    /// Throws GermError on inconsistent input.
    PointSpec canonical_point(PointSpec p) const;

    BlowupTower blow_up(const PointSpec& p) const;

    /// All distinct combinatorial points over x on the top model, optionally
    /// restricted to points on curve `on` (-1: no restriction). Before the
    /// first blow-up of a smooth germ this is the single point x.
    std::vector<PointSpec> candidate_points(int on) const;

    // --- incidence queries on the top model ---
    std::vector<int> branch_curves(size_t b) const;
    bool branch_started(size_t b) const { return branch_[b].pos > 0; }
    bool branch_exhausted(size_t b) const;
    long long branch_mult(size_t b) const;
    size_t shared_remaining(size_t a, size_t b) const;
    /// Local intersection of branch b's strict transform with a tracked curve.
    Rat branch_curve_intersection(size_t b, int curve) const;
    Rat branch_branch_intersection(size_t a, size_t b) const;
    /// Multiplicity of the sub-boundary (gamma-weighted curves plus
    /// coefficient-weighted branches) at the point.
    Rat boundary_mult_at(const PointSpec& p) const;

    /// Dual graph of the top model; branch strict transforms appear as
    /// non-exceptional ("black") vertices when requested.
    WeightedDualGraph dual_graph(bool include_branches) const;

    /// Coefficients recomputed from scratch: the full pullback system on the
    /// top model's exceptional configuration with strict-transform boundary
    /// products. Equals the gamma ledger; used as a cross-check.
    RatVector pullback_coefficients() const;

    /// Replaces the gamma ledger (used for pinned extraction checks).
    BlowupTower with_gammas(const RatVector& gammas) const;

private:
    struct BranchState {
        size_t pos = 0;
        int home = -1;
        std::vector<int> exc_by_point;
    };

    bool point_lies_on(size_t b, size_t i, int curve) const;
    bool branch_inert(size_t b) const;  // attached off the exceptional locus

    std::shared_ptr<const GermModel> germ_;
    std::vector<TowerCurve> curves_;
    std::map<std::pair<int, int>, long long> edges_;
    std::vector<BranchState> branch_;
    std::vector<std::vector<size_t>> shared_;
    std::vector<std::string> step_desc_;
    int last_ = -1;
    int created_ = 0;
};

/// A prime divisor over the germ presented by the canonical tower reaching it
/// (base vertices have an empty tower).
struct DivisorOverGerm {
    std::shared_ptr<const BlowupTower> tower;  // top model; divisor = last curve
    Rat a;
    std::string name;
    int base_vertex = -1;
    bool on_base() const { return base_vertex >= 0; }
};

std::vector<DivisorOverGerm> enumerate_divisors(const GermModel& g, int max_depth);

struct BruteForceResult {
    Rat value;
    std::vector<DivisorOverGerm> argmin;
    bool pruned = false;
    /// True when every abandoned subtree was cut by a sound bound, so `value`
    /// is the exact mld (not merely the depth-limited minimum).
    bool complete = true;
};

BruteForceResult mld_bruteforce(const GermModel& g, int max_depth);

/// Blows up until the configuration near x is simple normal crossing.
BlowupTower resolve_to_snc(BlowupTower t);
BlowupTower resolve_pair(const GermModel& g);

/// Reads the pair's positivity class off a resolved (SNC) tower.
PairStatus status_of_resolved(const BlowupTower& t);

/// Kollar/potential-lc-place criterion for a tower divisor, relative to
/// X at x (B = 0): pinned pullback system on the tower's exceptional
/// configuration.
KollarStatus tower_divisor_status(const BlowupTower& t, int divisor);

/// Pair-relative potential lc place: pins the divisor's coefficient to 1 with
/// the boundary included and checks the resulting sub-pair stays lc when the
/// remaining clusters are resolved.
bool tower_divisor_plc_of_pair(const BlowupTower& t, int divisor);

}  // namespace mldsurf
