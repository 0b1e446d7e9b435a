#include "mldsurf/discrepancy.hpp"

namespace mldsurf {

RatVector solve_pullback(const WeightedDualGraph& g, const RatVector& extra) {
    const size_t n = g.size();
    if (extra.size() != n) throw GermError("solve_pullback: extra term size mismatch");
    RatMatrix m = intersection_matrix(g);
    if (!is_negative_definite(m)) throw GermError("solve_pullback: configuration not negative definite");
    RatVector rhs(n);
    for (size_t j = 0; j < n; ++j) rhs[j] = Rat(-g.canonical_degree(static_cast<int>(j))) - extra[j];
    auto x = solve_linear(std::move(m), std::move(rhs));
    if (!x) throw GermError("solve_pullback: singular system");  // impossible under the precondition
    return *x;
}

RatVector solve_pinned(const WeightedDualGraph& g, int e, const RatVector& extra) {
    const int n = static_cast<int>(g.size());
    if (e < 0 || e >= n) throw GermError("solve_pinned: vertex out of range");
    if (extra.size() != static_cast<size_t>(n)) throw GermError("solve_pinned: extra term size mismatch");
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (i != e) keep.push_back(i);
    const size_t k = keep.size();
    RatMatrix m(k, RatVector(k));
    RatVector rhs(k);
    for (size_t r = 0; r < k; ++r) {
        int j = keep[r];
        for (size_t c = 0; c < k; ++c) {
            int i = keep[c];
            m[r][c] = i == j ? Rat(-g.vertices[i].weight) : Rat(g.edge_mult(i, j));
        }
        rhs[r] = Rat(-g.canonical_degree(j)) - extra[j] - Rat(g.edge_mult(e, j));
    }
    auto x = solve_linear(std::move(m), std::move(rhs));
    if (!x) throw GermError("solve_pinned: singular system");
    RatVector c(n, Rat(1));
    for (size_t r = 0; r < k; ++r) c[keep[r]] = (*x)[r];
    return c;
}

RatVector boundary_products(const GermModel& g) {
    const size_t n = g.graph().size();
    RatVector out(n, Rat(0));
    for (size_t b = 0; b < g.boundary().size(); ++b)
        for (size_t j = 0; j < n; ++j)
            out[j] += g.boundary()[b].coeff * g.branch_curve_intersection(b, static_cast<int>(j));
    return out;
}

DiscrepancyVector solve_discrepancies(const GermModel& g) {
    if (g.is_smooth_germ()) return {};
    RatVector c = solve_pullback(g.graph(), boundary_products(g));
    DiscrepancyVector d;
    d.a.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) d.a[i] = Rat(1) - c[i];
    return d;
}

MldResult mld_on_resolution(const GermModel& g) {
    DiscrepancyVector d = solve_discrepancies(g);
    if (d.a.empty()) throw GermError("mld_on_resolution: smooth germ has no exceptional curves");
    MldResult r;
    r.value = d.a[0];
    for (const Rat& a : d.a)
        if (a < r.value) r.value = a;
    for (size_t i = 0; i < d.a.size(); ++i)
        if (d.a[i] == r.value) r.argmin.push_back(static_cast<int>(i));
    return r;
}

RatVector extraction_coefficients(const GermModel& g, int e, bool include_boundary) {
    RatVector extra(g.graph().size(), Rat(0));
    if (include_boundary) extra = boundary_products(g);
    return solve_pinned(g.graph(), e, extra);
}

KollarStatus kollar_component_status(const GermModel& g, int e) {
    if (g.is_smooth_germ()) throw GermError("kollar_component_status: germ has no exceptional curves");
    // precondition: X at x is klt
    RatVector c0 = solve_pullback(g.graph(), RatVector(g.graph().size(), Rat(0)));
    for (const Rat& c : c0)
        if (c >= Rat(1)) throw GermError("kollar_component_status: X at x is not klt");
    RatVector c = solve_pinned(g.graph(), e, RatVector(g.graph().size(), Rat(0)));
    KollarStatus s;
    s.is_kollar = true;
    s.is_potential_lc_place = true;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (i == e) continue;
        if (c[i] >= Rat(1)) s.is_kollar = false;
        if (c[i] > Rat(1)) s.is_potential_lc_place = false;
    }
    return s;
}

}  // namespace mldsurf
