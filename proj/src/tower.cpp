#include "mldsurf/tower.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace mldsurf {

namespace {

std::string join_ids(const std::vector<std::string>& ids, const char* sep) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += ids[i];
    }
    return out;
}

}  // namespace

BlowupTower::BlowupTower(GermModel germ) : germ_(std::make_shared<GermModel>(std::move(germ))) {
    const auto& g = germ_->graph();
    DiscrepancyVector d = solve_discrepancies(*germ_);
    for (size_t i = 0; i < g.size(); ++i) {
        TowerCurve c;
        c.id = g.vertices[i].id;
        c.self_int = -g.vertices[i].weight;
        c.genus = g.vertices[i].genus;
        c.nodes = g.vertices[i].nodes;
        c.gamma = Rat(1) - d.a[i];
        c.from_base = true;
        curves_.push_back(std::move(c));
    }
    edges_ = g.edges;
    const size_t nb = germ_->boundary().size();
    branch_.resize(nb);
    shared_.assign(nb, std::vector<size_t>(nb, 0));
    for (size_t a = 0; a < nb; ++a)
        for (size_t b = 0; b < nb; ++b)
            if (a != b) shared_[a][b] = germ_->shared_points(a, b);
}

long long BlowupTower::edge(int a, int b) const {
    if (a == b) return 0;
    auto key = std::minmax(a, b);
    auto it = edges_.find({key.first, key.second});
    return it == edges_.end() ? 0 : it->second;
}

bool BlowupTower::branch_inert(size_t b) const {
    return germ_->boundary()[b].attach.kind == SiteKind::Free;
}

bool BlowupTower::branch_exhausted(size_t b) const {
    return branch_[b].pos >= germ_->boundary()[b].cluster.size();
}

long long BlowupTower::branch_mult(size_t b) const {
    if (b >= branch_.size()) throw GermError("branch index out of range");
    if (branch_exhausted(b)) return 1;
    return germ_->boundary()[b].cluster.points[branch_[b].pos].mult;
}

size_t BlowupTower::shared_remaining(size_t a, size_t b) const {
    if (a >= branch_.size() || b >= branch_.size()) throw GermError("branch index out of range");
    if (a == b) return germ_->boundary()[a].cluster.size() - branch_[a].pos;
    return shared_[a][b];
}

std::vector<int> BlowupTower::branch_curves(size_t b) const {
    if (b >= branch_.size()) throw GermError("branch index out of range");
    const BoundaryBranch& br = germ_->boundary()[b];
    const BranchState& st = branch_[b];
    if (branch_inert(b)) return {};
    if (st.pos == 0) {
        std::vector<int> out;
        if (br.attach.kind == SiteKind::Interior || br.attach.kind == SiteKind::Intersection) {
            out.push_back(germ_->graph().index_of(br.attach.v1));
            if (br.attach.kind == SiteKind::Intersection)
                out.push_back(germ_->graph().index_of(br.attach.v2));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    if (branch_exhausted(b)) return {st.home};
    std::vector<int> out{st.home};
    const ClusterPoint& p = br.cluster.points[st.pos];
    if (p.extra == ClusterPoint::Extra::Ambient) {
        out.push_back(germ_->graph().index_of(p.ambient));
    } else if (p.extra == ClusterPoint::Extra::ClusterExc) {
        int c = st.exc_by_point[static_cast<size_t>(p.cluster_exc)];
        if (c != st.home) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Does cluster point i (i >= current position) of branch b lie on the curve?
bool BlowupTower::point_lies_on(size_t b, size_t i, int curve) const {
    const BoundaryBranch& br = germ_->boundary()[b];
    const BranchState& st = branch_[b];
    const TowerCurve& c = curves_[curve];
    if (c.from_base) return i < ambient_contact_depth(br, c.id);
    for (size_t k = 0; k < st.exc_by_point.size(); ++k) {
        if (st.exc_by_point[k] != curve) continue;
        if (i == k + 1) return true;
        const ClusterPoint& p = br.cluster.points[i];
        if (p.extra == ClusterPoint::Extra::ClusterExc && static_cast<size_t>(p.cluster_exc) == k)
            return true;
    }
    return false;
}

Rat BlowupTower::branch_curve_intersection(size_t b, int curve) const {
    if (b >= branch_.size()) throw GermError("branch index out of range");
    if (curve < 0 || curve >= static_cast<int>(curves_.size()))
        throw GermError("curve index out of range");
    if (branch_inert(b)) return Rat(0);
    if (branch_exhausted(b)) return curve == branch_[b].home ? Rat(1) : Rat(0);
    const BoundaryBranch& br = germ_->boundary()[b];
    Rat sum(0);
    for (size_t i = branch_[b].pos; i < br.cluster.size(); ++i)
        if (point_lies_on(b, i, curve)) sum += Rat(br.cluster.points[i].mult);
    return sum;
}

Rat BlowupTower::branch_branch_intersection(size_t a, size_t b) const {
    if (a == b) throw GermError("branch self-intersection is not defined");
    size_t k = shared_remaining(a, b);
    const auto& pa = germ_->boundary()[a].cluster.points;
    const auto& pb = germ_->boundary()[b].cluster.points;
    Rat sum(0);
    for (size_t i = 0; i < k; ++i)
        sum += Rat(pa[branch_[a].pos + i].mult * pb[branch_[b].pos + i].mult);
    return sum;
}

Rat BlowupTower::boundary_mult_at(const PointSpec& p) const {
    if (p.node_of >= 0) return Rat(2) * curves_[p.node_of].gamma;
    Rat s(0);
    for (int c : p.curves) s += curves_[c].gamma;
    for (size_t b : p.branches) s += germ_->boundary()[b].coeff * Rat(branch_mult(b));
    return s;
}

PointSpec BlowupTower::canonical_point(PointSpec p) const {
    if (p.node_of >= 0) {
        if (p.node_of >= static_cast<int>(curves_.size()) || curves_[p.node_of].nodes < 1)
            throw GermError("node blow-up of a curve without a node");
        if (!p.branches.empty()) throw GermError("branches cannot pass through a node point");
        p.curves = {p.node_of};
        return p;
    }
    if (germ_->is_smooth_germ() && steps() == 0) {
        // the only point over x is x itself; every branch passes through it
        PointSpec q;
        for (size_t b = 0; b < branch_.size(); ++b)
            if (!branch_inert(b)) q.branches.push_back(b);
        for (size_t i = 0; i < q.branches.size(); ++i)
            for (size_t j = i + 1; j < q.branches.size(); ++j)
                if (shared_remaining(q.branches[i], q.branches[j]) < 1)
                    throw GermError("branches through the origin must share it");
        return q;
    }
    if (!p.branches.empty()) {
        std::set<size_t> s(p.branches.begin(), p.branches.end());
        for (size_t b : s)
            if (branch_inert(b)) throw GermError("branch lies off the exceptional locus");
        // close under sharing
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t b : std::vector<size_t>(s.begin(), s.end()))
                for (size_t c = 0; c < branch_.size(); ++c)
                    if (!s.count(c) && shared_remaining(b, c) >= 1) {
                        s.insert(c);
                        grew = true;
                    }
        }
        for (size_t a : s)
            for (size_t b : s)
                if (a < b && shared_remaining(a, b) < 1)
                    throw GermError("branches do not pass through a common point");
        std::set<int> curves;
        for (size_t b : s) {
            auto bc = branch_curves(b);
            curves.insert(bc.begin(), bc.end());
        }
        for (size_t b : s) {
            auto bc = branch_curves(b);
            if (std::set<int>(bc.begin(), bc.end()) != curves)
                throw GermError("branches at a common point disagree on incident curves");
        }
        for (int c : p.curves)
            if (!curves.count(c)) throw GermError("listed curve does not pass through the branch point");
        p.branches.assign(s.begin(), s.end());
        p.curves.assign(curves.begin(), curves.end());
        return p;
    }
    std::sort(p.curves.begin(), p.curves.end());
    p.curves.erase(std::unique(p.curves.begin(), p.curves.end()), p.curves.end());
    for (int c : p.curves)
        if (c < 0 || c >= static_cast<int>(curves_.size())) throw GermError("curve index out of range");
    if (p.curves.size() == 1) return p;
    if (p.curves.size() != 2) throw GermError("a point lies on one or two curves");
    long long m = edge(p.curves[0], p.curves[1]);
    if (m == 0) throw GermError("curves do not meet");
    // intersection points occupied by branch groups are not available here
    long long occupied = 0;
    std::vector<char> seen(branch_.size(), 0);
    for (size_t b = 0; b < branch_.size(); ++b) {
        if (seen[b] || branch_inert(b)) continue;
        std::vector<size_t> group{b};
        seen[b] = 1;
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t c = 0; c < branch_.size(); ++c)
                if (!seen[c] && shared_remaining(group[i], c) >= 1) {
                    seen[c] = 1;
                    group.push_back(c);
                }
        auto bc = branch_curves(group[0]);
        if (bc == p.curves) ++occupied;
    }
    if (occupied >= m) throw GermError("every intersection point of the two curves carries a branch");
    return p;
}

BlowupTower BlowupTower::blow_up(const PointSpec& raw) const {
    PointSpec p = canonical_point(raw);
    BlowupTower t(*this);
    t.created_ += 1;
    TowerCurve e;
    e.id = "E" + std::to_string(t.created_);
    e.self_int = -1;
    e.from_base = false;

    std::ostringstream desc;
    if (p.node_of >= 0) {
        TowerCurve& f = t.curves_[p.node_of];
        e.gamma = Rat(2) * f.gamma - Rat(1);
        f.self_int -= 4;
        f.nodes -= 1;
        int ei = static_cast<int>(t.curves_.size());
        t.curves_.push_back(e);
        auto key = std::minmax(p.node_of, ei);
        t.edges_[{key.first, key.second}] += 2;
        t.last_ = ei;
        desc << "node(" << t.curves_[p.node_of].id << ")";
        t.step_desc_.push_back(desc.str());
        return t;
    }

    if (p.curves.size() > 2) throw GermError("a point lies on at most two curves");
    e.gamma = boundary_mult_at(p) - Rat(1);
    int ei = static_cast<int>(t.curves_.size());
    t.curves_.push_back(e);
    for (int c : p.curves) {
        t.curves_[c].self_int -= 1;
        auto key = std::minmax(c, ei);
        t.edges_[{key.first, key.second}] += 1;
    }
    if (p.curves.size() == 2) {
        auto key = std::minmax(p.curves[0], p.curves[1]);
        auto it = t.edges_.find({key.first, key.second});
        if (it == t.edges_.end() || it->second < 1)
            throw GermError("internal: blown point claims a missing intersection");
        if (--it->second == 0) t.edges_.erase(it);
    }
    for (size_t b : p.branches) {
        BranchState& st = t.branch_[b];
        if (!branch_exhausted(b)) {
            st.exc_by_point.push_back(ei);
            st.pos += 1;
        }
        st.home = ei;
    }
    for (size_t i = 0; i < p.branches.size(); ++i)
        for (size_t j = i + 1; j < p.branches.size(); ++j) {
            size_t a = p.branches[i], b = p.branches[j];
            if (t.shared_[a][b] > 0) {
                t.shared_[a][b] -= 1;
                t.shared_[b][a] -= 1;
            }
        }
    t.last_ = ei;

    std::vector<std::string> parts;
    for (int c : p.curves) parts.push_back(curves_[c].id);
    for (size_t b : p.branches) parts.push_back("b" + std::to_string(b));
    desc << (parts.empty() ? std::string("x") : join_ids(parts, "^"));
    t.step_desc_.push_back(desc.str());
    return t;
}

std::vector<PointSpec> BlowupTower::candidate_points(int on) const {
    std::vector<PointSpec> out;
    if (germ_->is_smooth_germ() && steps() == 0) {
        out.push_back(canonical_point(PointSpec{}));
        return out;
    }
    auto wanted = [&](const PointSpec& p) {
        if (on < 0) return true;
        if (p.node_of == on) return true;
        return std::find(p.curves.begin(), p.curves.end(), on) != p.curves.end();
    };
    // branch group points
    std::vector<char> seen(branch_.size(), 0);
    std::vector<std::vector<size_t>> groups;
    for (size_t b = 0; b < branch_.size(); ++b) {
        if (seen[b] || branch_inert(b)) continue;
        std::vector<size_t> group{b};
        seen[b] = 1;
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t c = 0; c < branch_.size(); ++c)
                if (!seen[c] && shared_remaining(group[i], c) >= 1) {
                    seen[c] = 1;
                    group.push_back(c);
                }
        groups.push_back(group);
    }
    for (const auto& group : groups) {
        PointSpec p;
        p.branches = group;
        std::set<int> curves;
        for (size_t b : group) {
            auto bc = branch_curves(b);
            curves.insert(bc.begin(), bc.end());
        }
        p.curves.assign(curves.begin(), curves.end());
        if (wanted(p)) out.push_back(std::move(p));
    }
    // unoccupied curve intersection points
    for (const auto& [eg, mult] : edges_) {
        PointSpec p;
        p.curves = {eg.first, eg.second};
        if (!wanted(p)) continue;
        long long occupied = 0;
        for (const auto& group : groups)
            if (branch_curves(group[0]) == p.curves) ++occupied;
        if (occupied < mult) out.push_back(std::move(p));
    }
    // a generic point of each curve
    for (int c = 0; c < static_cast<int>(curves_.size()); ++c) {
        PointSpec p;
        p.curves = {c};
        if (wanted(p)) out.push_back(std::move(p));
    }
    // node points
    for (int c = 0; c < static_cast<int>(curves_.size()); ++c)
        if (curves_[c].nodes >= 1) {
            PointSpec p;
            p.node_of = c;
            p.curves = {c};
            if (wanted(p)) out.push_back(std::move(p));
        }
    return out;
}

WeightedDualGraph BlowupTower::dual_graph(bool include_branches) const {
    WeightedDualGraph g;
    for (const TowerCurve& c : curves_) {
        Vertex v;
        v.id = c.id;
        v.weight = -c.self_int;
        v.genus = c.genus;
        v.nodes = c.nodes;
        g.add_vertex(std::move(v));
    }
    for (const auto& [e, m] : edges_) g.add_edge(e.first, e.second, m);
    if (!include_branches) return g;
    const int nc = static_cast<int>(curves_.size());
    for (size_t b = 0; b < branch_.size(); ++b) {
        Vertex v;
        v.id = "b" + std::to_string(b);
        v.weight = 0;
        v.exceptional = false;
        g.add_vertex(std::move(v));
    }
    for (size_t b = 0; b < branch_.size(); ++b) {
        for (int c = 0; c < nc; ++c) {
            Rat m = branch_curve_intersection(b, c);
            if (m > Rat(0)) g.add_edge(nc + static_cast<int>(b), c, m.numerator());
        }
        for (size_t a = 0; a < b; ++a) {
            Rat m = branch_branch_intersection(a, b);
            if (m > Rat(0))
                g.add_edge(nc + static_cast<int>(a), nc + static_cast<int>(b), m.numerator());
        }
    }
    return g;
}

RatVector BlowupTower::pullback_coefficients() const {
    WeightedDualGraph g = dual_graph(false);
    RatVector extra(g.size(), Rat(0));
    for (size_t b = 0; b < branch_.size(); ++b)
        for (size_t j = 0; j < g.size(); ++j)
            extra[j] += germ_->boundary()[b].coeff * branch_curve_intersection(b, static_cast<int>(j));
    return solve_pullback(g, extra);
}

BlowupTower BlowupTower::with_gammas(const RatVector& gammas) const {
    if (gammas.size() != curves_.size()) throw GermError("with_gammas: size mismatch");
    BlowupTower t(*this);
    for (size_t i = 0; i < gammas.size(); ++i) t.curves_[i].gamma = gammas[i];
    return t;
}

namespace {

std::string divisor_name(const BlowupTower& t) {
    const TowerCurve& c = t.curve(static_cast<size_t>(t.last_curve()));
    return c.id + "(" + join_ids(t.step_descriptions(), "; ") + ")";
}

DivisorOverGerm make_divisor(BlowupTower child) {
    DivisorOverGerm d;
    d.a = Rat(1) - child.curve(static_cast<size_t>(child.last_curve())).gamma;
    d.name = divisor_name(child);
    d.tower = std::make_shared<BlowupTower>(std::move(child));
    return d;
}

std::vector<DivisorOverGerm> base_divisors(const GermModel& g) {
    std::vector<DivisorOverGerm> out;
    if (g.is_smooth_germ()) return out;
    DiscrepancyVector d = solve_discrepancies(g);
    auto base = std::make_shared<BlowupTower>(g);
    for (size_t i = 0; i < d.a.size(); ++i) {
        DivisorOverGerm div;
        div.tower = base;
        div.a = d.a[i];
        div.name = g.graph().vertices[i].id;
        div.base_vertex = static_cast<int>(i);
        out.push_back(std::move(div));
    }
    return out;
}

void enumerate_rec(const BlowupTower& t, int depth, std::vector<DivisorOverGerm>& out) {
    if (depth <= 0) return;
    for (const PointSpec& q : t.candidate_points(t.last_curve())) {
        BlowupTower child = t.blow_up(q);
        if (depth > 1) enumerate_rec(child, depth - 1, out);
        out.push_back(make_divisor(std::move(child)));
    }
}

// All coefficients through the point are < 1 and every branch is exhausted:
// the first blow-up attains the minimum over the point and everything deeper
// is strictly larger.
bool rule_a(const BlowupTower& t, const PointSpec& q) {
    if (q.node_of >= 0) return false;
    for (size_t b : q.branches) {
        if (!t.branch_exhausted(b)) return false;
        if (t.germ().boundary()[b].coeff >= Rat(1)) return false;
    }
    for (int c : q.curves)
        if (t.curve(static_cast<size_t>(c)).gamma >= Rat(1)) return false;
    return true;
}

// Lower bound over the point from the local product with the last curve C:
// if (B . C)_q < 1 with B the positive part away from C, every divisor with
// center over q has log discrepancy > 1 - max(0, gamma(C)).
std::optional<Rat> rule_b(const BlowupTower& t, const PointSpec& q, int c_last) {
    if (q.node_of >= 0) return std::nullopt;
    if (std::find(q.curves.begin(), q.curves.end(), c_last) == q.curves.end()) return std::nullopt;
    Rat s(0);
    for (int c : q.curves) {
        if (c == c_last) continue;
        Rat g = t.curve(static_cast<size_t>(c)).gamma;
        if (g > Rat(0)) s += g;  // curves meet C transversally at q
    }
    for (size_t b : q.branches)
        s += t.germ().boundary()[b].coeff * t.branch_curve_intersection(b, c_last);
    if (s >= Rat(1)) return std::nullopt;
    Rat g = t.curve(static_cast<size_t>(c_last)).gamma;
    return Rat(1) - std::max(Rat(0), g);
}

struct SearchState {
    bool have_best = false;
    Rat best;
    std::vector<DivisorOverGerm> argmin;
    bool pruned = false;
    bool complete = true;
};

void search_rec(const BlowupTower& t, int depth, SearchState& s) {
    for (const PointSpec& raw : t.candidate_points(t.last_curve())) {
        PointSpec q = t.canonical_point(raw);
        bool ra = rule_a(t, q);
        Rat a_q = Rat(2) - t.boundary_mult_at(q);
        if (ra && s.have_best && a_q > s.best) continue;
        if (t.last_curve() >= 0) {
            auto rb = rule_b(t, q, t.last_curve());
            if (rb && s.have_best && *rb >= s.best) {
                s.pruned = true;
                continue;
            }
        }
        if (depth <= 0) {
            s.complete = false;
            continue;
        }
        BlowupTower child = t.blow_up(q);
        DivisorOverGerm d = make_divisor(child);
        if (!s.have_best || d.a < s.best) {
            s.have_best = true;
            s.best = d.a;
            s.argmin.clear();
            s.argmin.push_back(d);
        } else if (d.a == s.best) {
            s.argmin.push_back(d);
        }
        if (ra) continue;  // deeper divisors over q are strictly larger
        search_rec(child, depth - 1, s);
    }
}

}  // namespace

std::vector<DivisorOverGerm> enumerate_divisors(const GermModel& g, int max_depth) {
    std::vector<DivisorOverGerm> out = base_divisors(g);
    enumerate_rec(BlowupTower(g), max_depth, out);
    return out;
}

BruteForceResult mld_bruteforce(const GermModel& g, int max_depth) {
    SearchState s;
    for (DivisorOverGerm& d : base_divisors(g)) {
        if (!s.have_best || d.a < s.best) {
            s.have_best = true;
            s.best = d.a;
            s.argmin.clear();
            s.argmin.push_back(std::move(d));
        } else if (d.a == s.best) {
            s.argmin.push_back(std::move(d));
        }
    }
    search_rec(BlowupTower(g), max_depth, s);
    if (!s.have_best) throw GermError("mld_bruteforce: no divisor enumerated at this depth");
    BruteForceResult r;
    r.value = s.best;
    r.argmin = std::move(s.argmin);
    r.pruned = s.pruned;
    r.complete = s.complete;
    return r;
}

namespace {

// A branch group point that is not simple normal crossing.
std::optional<PointSpec> find_bad_point(const BlowupTower& t) {
    const size_t nb = t.germ().boundary().size();
    std::vector<char> seen(nb, 0);
    for (size_t b = 0; b < nb; ++b) {
        if (seen[b]) continue;
        seen[b] = 1;
        if (t.germ().boundary()[b].attach.kind == SiteKind::Free) continue;
        std::vector<size_t> group{b};
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t c = 0; c < nb; ++c)
                if (!seen[c] && t.shared_remaining(group[i], c) >= 1) {
                    seen[c] = 1;
                    group.push_back(c);
                }
        PointSpec p;
        p.branches = group;
        std::set<int> curves;
        for (size_t x : group) {
            auto bc = t.branch_curves(x);
            curves.insert(bc.begin(), bc.end());
        }
        p.curves.assign(curves.begin(), curves.end());
        bool bad = p.curves.size() + p.branches.size() > 2;
        for (size_t x : group) {
            if (t.branch_mult(x) > 1) bad = true;
            for (int c : p.curves)
                if (t.branch_curve_intersection(x, c) >= Rat(2)) bad = true;
        }
        for (size_t i = 0; i < group.size() && !bad; ++i)
            for (size_t j = i + 1; j < group.size(); ++j)
                if (t.shared_remaining(group[i], group[j]) >= 2) bad = true;
        if (bad) return p;
    }
    return std::nullopt;
}

}  // namespace

BlowupTower resolve_to_snc(BlowupTower t) {
    for (int guard = 0; guard < 10000; ++guard) {
        auto bad = find_bad_point(t);
        if (!bad) return t;
        t = t.blow_up(*bad);
    }
    throw GermError("resolve_to_snc: resolution did not terminate");
}

BlowupTower resolve_pair(const GermModel& g) { return resolve_to_snc(BlowupTower(g)); }

PairStatus status_of_resolved(const BlowupTower& t) {
    PairStatus s;
    s.lc = true;
    s.klt = true;
    bool exc_lt_one = true;
    for (size_t c = 0; c < t.curve_count(); ++c) {
        const Rat& g = t.curve(c).gamma;
        if (g > Rat(1)) s.lc = false;
        if (g >= Rat(1)) {
            s.klt = false;
            exc_lt_one = false;
        }
    }
    bool coeff_one_pair = false;
    const auto& boundary = t.germ().boundary();
    for (size_t b = 0; b < boundary.size(); ++b) {
        if (boundary[b].coeff >= Rat(1)) s.klt = false;
        for (size_t a = 0; a < b; ++a)
            if (boundary[a].coeff == Rat(1) && boundary[b].coeff == Rat(1) &&
                t.shared_remaining(a, b) >= 1)
                coeff_one_pair = true;
    }
    s.plt = exc_lt_one && !coeff_one_pair;
    s.log_smooth = t.germ().is_smooth_germ() && t.steps() == 0;
    s.dlt = s.plt || (s.log_smooth && s.lc);
    if (!s.lc) s.klt = s.plt = s.dlt = false;
    return s;
}

PairStatus pair_status(const GermModel& g) { return status_of_resolved(resolve_pair(g)); }

KollarStatus tower_divisor_status(const BlowupTower& t, int divisor) {
    if (divisor < 0 || divisor >= static_cast<int>(t.curve_count()))
        throw GermError("tower_divisor_status: curve index out of range");
    WeightedDualGraph g = t.dual_graph(false);
    RatVector zero(g.size(), Rat(0));
    for (const Rat& c : solve_pullback(g, zero))
        if (c >= Rat(1)) throw GermError("tower_divisor_status: X at x is not klt");
    RatVector c = solve_pinned(g, divisor, zero);
    KollarStatus s;
    s.is_kollar = true;
    s.is_potential_lc_place = true;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (i == divisor) continue;
        if (c[i] >= Rat(1)) s.is_kollar = false;
        if (c[i] > Rat(1)) s.is_potential_lc_place = false;
    }
    return s;
}

bool tower_divisor_plc_of_pair(const BlowupTower& t, int divisor) {
    if (divisor < 0 || divisor >= static_cast<int>(t.curve_count()))
        throw GermError("tower_divisor_plc_of_pair: curve index out of range");
    WeightedDualGraph g = t.dual_graph(false);
    RatVector extra(g.size(), Rat(0));
    for (size_t b = 0; b < t.germ().boundary().size(); ++b)
        for (size_t j = 0; j < g.size(); ++j)
            extra[j] += t.germ().boundary()[b].coeff *
                        t.branch_curve_intersection(b, static_cast<int>(j));
    RatVector c = solve_pinned(g, divisor, extra);
    for (const Rat& ci : c)
        if (ci > Rat(1)) return false;
    // the pinned coefficients define a sub-pair; it is lc iff it stays at most
    // 1 on a resolution of the remaining cluster points
    BlowupTower pinned = resolve_to_snc(t.with_gammas(c));
    for (size_t i = 0; i < pinned.curve_count(); ++i)
        if (pinned.curve(i).gamma > Rat(1)) return false;
    return true;
}

}  // namespace mldsurf
