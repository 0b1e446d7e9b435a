#pragma once

#include "mldsurf/germ.hpp"
#include "mldsurf/linalg.hpp"

namespace mldsurf {

/// Exact log discrepancies a(F_i, X, B) per exceptional curve of the minimal
/// resolution, in vertex order. Coefficients c_i = 1 - a_i satisfy the
/// pullback system sum_i c_i (F_i . F_j) = -(K_Y + B_Y) . F_j for all j.
struct DiscrepancyVector {
    RatVector a;

    RatVector coefficients() const {
        RatVector c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = Rat(1) - a[i];
        return c;
    }
};

/// Solves the pullback system K + sum_i c_i F_i = (pulled back class) on an
/// arbitrary negative-definite configuration: sum_i c_i (F_i . F_j) =
/// -(K . F_j) - extra_j, where extra_j collects boundary products B_Y . F_j.
RatVector solve_pullback(const WeightedDualGraph& g, const RatVector& extra);

/// Same system with the coefficient of vertex `e` pinned to 1; the returned
/// vector has c[e] = 1 and the unique solution elsewhere. These are the
/// coefficients of the pair on the extraction of `e` pulled back to the
/// resolution.
RatVector solve_pinned(const WeightedDualGraph& g, int e, const RatVector& extra);

/// B_Y . F_j for each vertex j of the germ's graph.
RatVector boundary_products(const GermModel& g);

DiscrepancyVector solve_discrepancies(const GermModel& g);

struct MldResult {
    Rat value;
    std::vector<int> argmin;  // vertex indices attaining the minimum
};

/// Minimum of a(F_i, X, B) over the curves of the minimal resolution.
MldResult mld_on_resolution(const GermModel& g);

/// Coefficients of (W, E_W [+ B_W]) pulled back to Y, where W -> X extracts
/// vertex `e` alone. Entry e equals 1.
RatVector extraction_coefficients(const GermModel& g, int e, bool include_boundary);

struct KollarStatus {
    bool is_kollar = false;
    bool is_potential_lc_place = false;
};

/// Plt/lc criterion on the extraction of `e` with B = 0: Kollar component iff
/// every pinned coefficient is < 1, potential lc place of X at x iff all <= 1.
/// Requires X at x klt (negative definite and a(F_i, X, 0) > 0 for all i).
KollarStatus kollar_component_status(const GermModel& g, int e);

struct PairStatus {
    bool lc = false;
    bool klt = false;
    bool plt = false;
    bool dlt = false;
    bool log_smooth = false;  // the germ itself is log smooth at x
};

/// Classifies the positivity of (X at x, B); resolves non-transverse boundary
/// clusters internally before reading off coefficients.
PairStatus pair_status(const GermModel& g);

}  // namespace mldsurf
