#include "mldsurf/classifier.hpp"

#include <algorithm>
#include <sstream>

namespace mldsurf {

namespace {

// Kollar / potential-lc-place flags from the pinned system with B = 0,
// without the klt gate (case 3 germs are handled by the same criterion).
std::pair<bool, bool> pinned_flags(const WeightedDualGraph& g, int e) {
    RatVector c = solve_pinned(g, e, RatVector(g.size(), Rat(0)));
    bool kollar = true, plc = true;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (i == e) continue;
        if (c[i] >= Rat(1)) kollar = false;
        if (c[i] > Rat(1)) plc = false;
    }
    return {kollar, plc};
}

DivisorReport report_divisor(const GermModel& g, const DivisorOverGerm& d) {
    DivisorReport r;
    r.name = d.name;
    r.a = d.a;
    r.on_base = d.on_base();
    if (d.on_base()) {
        auto [k, p] = pinned_flags(g.graph(), d.base_vertex);
        r.is_kollar = k;
        r.is_potential_lc_place = p;
    } else {
        auto [k, p] = pinned_flags(d.tower->dual_graph(false), d.tower->last_curve());
        r.is_kollar = k;
        r.is_potential_lc_place = p;
    }
    return r;
}

bool x_is_klt(const GermModel& g) {
    if (g.is_smooth_germ()) return true;
    RatVector c = solve_pullback(g.graph(), RatVector(g.graph().size(), Rat(0)));
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x < Rat(1); });
}

// Declarative potential-lc-place criterion for a Du Val D_m vertex: the fork,
// or a vertex whose two other fork branches both have length 1.
bool duval_d_plc_declared(const WeightedDualGraph& g, int v) {
    GraphStructure s = structure(g);
    if (s.forks.size() != 1) return false;
    if (v == s.forks[0]) return true;
    for (const auto& br : s.branches)
        if (std::find(br.begin(), br.end(), v) == br.end() && br.size() != 1) return false;
    return true;
}

}  // namespace

DltKind dlt_kind(const GermModel& g) {
    PairStatus s = pair_status(g);
    if (!s.lc) throw GermError("dlt_kind: pair is not lc");
    if (s.plt) return DltKind::Plt;
    if (s.dlt) return DltKind::LogSmoothDlt;
    return DltKind::NotDlt;
}

ClassificationReport classify(const GermModel& g, int depth) {
    if (depth < 1) throw GermError("classify: depth must be positive");
    ClassificationReport r;
    r.pair = pair_status(g);
    if (!r.pair.lc) throw GermError("classify: pair is not lc");
    r.sing = classify_graph(g.graph());
    r.x_klt = x_is_klt(g);

    BruteForceResult bf = mld_bruteforce(g, depth);
    r.mld = bf.value;
    r.search_complete = bf.complete;
    for (const DivisorOverGerm& d : bf.argmin) r.computing_set.push_back(report_divisor(g, d));

    auto violate = [&](const std::string& msg) {
        r.consistency = false;
        r.violations.push_back(msg);
    };

    if (!r.x_klt) {
        r.case_label = "3";
        r.note = "mld 0; the computing set lists lc places found within depth " +
                 std::to_string(depth) + " and may be infinite";
        if (r.mld != Rat(0)) violate("case 3 germ with nonzero mld " + to_string(r.mld));
        for (const auto& d : r.computing_set)
            if (!d.is_potential_lc_place) violate(d.name + " is not a potential lc place");
        return r;
    }

    if (r.pair.dlt) {
        bool chainlike = r.sing.tag == SingularityClass::Smooth || r.sing.tag == SingularityClass::A;
        bool de = r.sing.tag == SingularityClass::D || r.sing.tag == SingularityClass::E;
        if (!chainlike && !de)
            throw GermError("classify: klt singularity outside the A/D/E catalog");
        if (chainlike) {
            r.case_label = "1.a";
            for (const auto& d : r.computing_set)
                if (!d.is_kollar) violate(d.name + " is not a Kollar component");
            return r;
        }
        bool duval_no_boundary = r.sing.du_val && !g.has_boundary();
        r.case_label = duval_no_boundary ? "1.b.iv" : "1.b.iii";

        GraphStructure s = structure(g.graph());
        if (s.forks.size() != 1) {
            violate("D/E graph without a unique fork");
            return r;
        }
        const int fork = s.forks[0];
        const std::string fork_id = g.graph().vertices[fork].id;
        // (1.b.i) the unique Kollar member is the fork
        int kollar_members = 0;
        for (const auto& d : r.computing_set) {
            if (!d.is_kollar) continue;
            ++kollar_members;
            if (!d.on_base || d.name != fork_id) violate("Kollar member " + d.name + " is not the fork");
        }
        if (kollar_members != 1)
            violate("expected exactly one Kollar member, found " + std::to_string(kollar_members));
        // (1.b.ii) every member lies on the minimal resolution
        for (const auto& d : r.computing_set)
            if (!d.on_base) violate(d.name + " lies outside Exc(f)");

        if (r.case_label == "1.b.iii") {
            for (const auto& d : r.computing_set)
                if (!d.is_potential_lc_place) violate(d.name + " is not a potential lc place");
            if (r.sing.tag == SingularityClass::E &&
                (r.computing_set.size() != 1 || r.computing_set[0].name != fork_id))
                violate("E-type: computing set should be the fork alone");
        } else {
            if (r.computing_set.size() != g.graph().size())
                violate("Du Val: computing set should be all of Exc(f)");
            for (const auto& d : r.computing_set) {
                if (!d.on_base) continue;
                int v = g.graph().index_of(d.name);
                bool declared = r.sing.tag == SingularityClass::E
                                    ? v == fork
                                    : duval_d_plc_declared(g.graph(), v);
                if (declared != d.is_potential_lc_place)
                    violate(d.name + ": declarative plc " + (declared ? "true" : "false") +
                            " vs computed " + (d.is_potential_lc_place ? "true" : "false"));
            }
        }
        return r;
    }

    r.case_label = "2";
    r.note = "mld 0; the computing set lists lc places found within depth " +
             std::to_string(depth) + " and may be infinite";
    if (r.mld != Rat(0)) violate("case 2 germ with nonzero mld " + to_string(r.mld));
    for (const auto& d : r.computing_set)
        if (!d.is_potential_lc_place) violate(d.name + " is not a potential lc place");
    if (std::none_of(r.computing_set.begin(), r.computing_set.end(),
                     [](const DivisorReport& d) { return d.is_kollar; }))
        violate("no Kollar member found in the computing set");
    if (g.is_smooth_germ())
        for (const auto& d : r.computing_set)
            if (!d.is_kollar) violate(d.name + " is not a Kollar component (smooth case)");
    return r;
}

TheoremCheck verify_theorem(const GermModel& g, int depth) {
    TheoremCheck c;
    ClassificationReport r = classify(g, depth);
    c.pass = r.consistency;
    if (!c.pass) {
        std::ostringstream os;
        os << "case " << r.case_label << ": ";
        for (size_t i = 0; i < r.violations.size(); ++i) {
            if (i) os << "; ";
            os << r.violations[i];
        }
        c.counterexample = os.str();
    }
    return c;
}

std::string render_report(const ClassificationReport& r) {
    std::ostringstream os;
    os << "case: " << r.case_label << "\n";
    os << "mld: " << to_string(r.mld) << "\n";
    os << "singularity: " << tag_name(r.sing.tag);
    if (r.sing.tag == SingularityClass::A || r.sing.tag == SingularityClass::D ||
        r.sing.tag == SingularityClass::E || r.sing.tag == SingularityClass::H)
        os << r.sing.m;
    os << (r.sing.du_val ? " du_val" : "") << "\n";
    os << "x_klt: " << (r.x_klt ? "true" : "false") << "\n";
    os << "pair: lc=" << (r.pair.lc ? "1" : "0") << " klt=" << (r.pair.klt ? "1" : "0")
       << " plt=" << (r.pair.plt ? "1" : "0") << " dlt=" << (r.pair.dlt ? "1" : "0") << "\n";
    os << "search_complete: " << (r.search_complete ? "true" : "false") << "\n";
    os << "computing_set: " << r.computing_set.size() << "\n";
    for (const auto& d : r.computing_set)
        os << "divisor: name=" << d.name << " a=" << to_string(d.a)
           << " base=" << (d.on_base ? "1" : "0") << " kollar=" << (d.is_kollar ? "1" : "0")
           << " plc=" << (d.is_potential_lc_place ? "1" : "0") << "\n";
    os << "consistency: " << (r.consistency ? "true" : "false") << "\n";
    for (const auto& v : r.violations) os << "violation: " << v << "\n";
    if (!r.note.empty()) os << "note: " << r.note << "\n";
    return os.str();
}

}  // namespace mldsurf
