#include "mldsurf/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mldsurf {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw GermError("line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& s, int line, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(line, "malformed integer for " + what + ": '" + s + "'");
    }
}

// "key=value" -> pair; plain tokens have an empty key.
std::pair<std::string, std::string> split_kv(const std::string& t) {
    auto eq = t.find('=');
    if (eq == std::string::npos) return {"", t};
    return {t.substr(0, eq), t.substr(eq + 1)};
}

BranchCluster parse_cluster(const std::string& s, int line) {
    BranchCluster c;
    std::stringstream ss(s);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        if (entry.empty()) fail(line, "empty cluster entry");
        ClusterPoint p;
        auto at = entry.find('@');
        std::string mult = entry.substr(0, at);
        p.mult = parse_int(mult, line, "cluster multiplicity");
        if (at != std::string::npos) {
            std::string ann = entry.substr(at + 1);
            if (ann.rfind("v:", 0) == 0) {
                p.extra = ClusterPoint::Extra::Ambient;
                p.ambient = ann.substr(2);
                if (p.ambient.empty()) fail(line, "cluster annotation @v: needs a vertex id");
            } else if (ann.rfind("e:", 0) == 0) {
                p.extra = ClusterPoint::Extra::ClusterExc;
                p.cluster_exc = static_cast<int>(parse_int(ann.substr(2), line, "cluster point index"));
            } else {
                fail(line, "unknown cluster annotation '@" + ann + "' (expected @v:<id> or @e:<k>)");
            }
        }
        c.points.push_back(std::move(p));
    }
    if (c.points.empty()) fail(line, "empty cluster");
    return c;
}

AttachSite parse_site(const std::string& s, bool smooth, int line) {
    AttachSite a;
    if (s == "origin") {
        a.kind = SiteKind::Origin;
        if (!smooth) fail(line, "at=origin is only valid for a smooth germ");
    } else if (s == "free") {
        a.kind = SiteKind::Free;
    } else if (auto caret = s.find('^'); caret != std::string::npos) {
        a.kind = SiteKind::Intersection;
        a.v1 = s.substr(0, caret);
        a.v2 = s.substr(caret + 1);
        if (a.v1.empty() || a.v2.empty()) fail(line, "malformed intersection site '" + s + "'");
    } else {
        a.kind = SiteKind::Interior;
        a.v1 = s;
        if (a.v1.empty()) fail(line, "empty attach site");
    }
    return a;
}

}  // namespace

GermModel parse_spec(const std::string& text) {
    std::vector<Line> lines;
    {
        std::stringstream ss(text);
        std::string raw;
        int n = 0;
        while (std::getline(ss, raw)) {
            ++n;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
            std::stringstream ls(raw);
            Line l{n, {}};
            std::string tok;
            while (ls >> tok) l.tokens.push_back(tok);
            if (!l.tokens.empty()) lines.push_back(std::move(l));
        }
    }
    if (lines.empty()) throw GermError("line 1: missing header 'mldsurf-spec v1'");
    if (lines[0].tokens != std::vector<std::string>{"mldsurf-spec", "v1"})
        fail(lines[0].number, "missing or unsupported header (expected 'mldsurf-spec v1')");

    bool have_kind = false, smooth = false;
    WeightedDualGraph graph;
    std::vector<BoundaryBranch> branches;
    struct ShareLine {
        int line;
        size_t a, b, k;
    };
    std::vector<ShareLine> shares;

    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& l = lines[li];
        const auto& t = l.tokens;
        const std::string& kw = t[0];
        if (kw == "germ") {
            if (have_kind) fail(l.number, "duplicate germ line");
            if (t.size() != 2 || (t[1] != "smooth" && t[1] != "resolved"))
                fail(l.number, "expected 'germ smooth' or 'germ resolved'");
            smooth = t[1] == "smooth";
            have_kind = true;
        } else if (kw == "vertex") {
            if (!have_kind) fail(l.number, "germ line must come first");
            if (smooth) fail(l.number, "a smooth germ has no vertices");
            if (t.size() < 3) fail(l.number, "vertex needs an id and weight=<n>");
            Vertex v;
            v.id = t[1];
            bool have_weight = false;
            for (size_t i = 2; i < t.size(); ++i) {
                auto [k, val] = split_kv(t[i]);
                if (k == "weight") {
                    v.weight = parse_int(val, l.number, "weight");
                    have_weight = true;
                } else if (k == "genus") {
                    v.genus = parse_int(val, l.number, "genus");
                } else if (k == "nodes") {
                    v.nodes = parse_int(val, l.number, "nodes");
                } else {
                    fail(l.number, "unknown vertex key '" + t[i] + "'");
                }
            }
            if (!have_weight) fail(l.number, "vertex needs weight=<n>");
            if (graph.index_of(v.id) >= 0) fail(l.number, "duplicate vertex id '" + v.id + "'");
            graph.add_vertex(std::move(v));
        } else if (kw == "edge") {
            if (smooth || !have_kind) fail(l.number, "edge outside a resolved germ");
            if (t.size() < 3 || t.size() > 4) fail(l.number, "edge needs two vertex ids");
            int a = graph.index_of(t[1]), b = graph.index_of(t[2]);
            if (a < 0) fail(l.number, "unknown vertex '" + t[1] + "'");
            if (b < 0) fail(l.number, "unknown vertex '" + t[2] + "'");
            long long mult = 1;
            if (t.size() == 4) {
                auto [k, val] = split_kv(t[3]);
                if (k != "mult") fail(l.number, "unknown edge key '" + t[3] + "'");
                mult = parse_int(val, l.number, "mult");
            }
            if (a == b) fail(l.number, "self-edges are not representable (use nodes=)");
            if (mult < 1) fail(l.number, "edge multiplicity must be positive");
            graph.add_edge(a, b, mult);
        } else if (kw == "branch") {
            if (!have_kind) fail(l.number, "germ line must come first");
            BoundaryBranch b;
            bool have_coeff = false, have_at = false;
            for (size_t i = 1; i < t.size(); ++i) {
                auto [k, val] = split_kv(t[i]);
                if (k == "coeff") {
                    auto r = parse_rational(val);
                    if (!r) fail(l.number, "malformed rational '" + val + "'");
                    b.coeff = *r;
                    have_coeff = true;
                } else if (k == "at") {
                    b.attach = parse_site(val, smooth, l.number);
                    have_at = true;
                } else if (k == "cluster") {
                    b.cluster = parse_cluster(val, l.number);
                } else {
                    fail(l.number, "unknown branch key '" + t[i] + "'");
                }
            }
            if (!have_coeff) fail(l.number, "branch needs coeff=<p/q>");
            if (!have_at) fail(l.number, "branch needs at=<site>");
            branches.push_back(std::move(b));
        } else if (kw == "share") {
            if (t.size() != 4) fail(l.number, "share needs: share <b1> <b2> <k>");
            ShareLine s;
            s.line = l.number;
            s.a = static_cast<size_t>(parse_int(t[1], l.number, "branch index"));
            s.b = static_cast<size_t>(parse_int(t[2], l.number, "branch index"));
            s.k = static_cast<size_t>(parse_int(t[3], l.number, "shared point count"));
            shares.push_back(s);
        } else {
            fail(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_kind) throw GermError("line 1: missing 'germ smooth|resolved' line");
    if (!smooth && graph.empty()) throw GermError("resolved germ needs at least one vertex");

    const size_t nb = branches.size();
    try {
        GermModel g = smooth ? GermModel::smooth(std::move(branches))
                             : GermModel::resolved(std::move(graph), std::move(branches));
        for (const ShareLine& s : shares) {
            if (s.a >= nb || s.b >= nb || s.a == s.b)
                fail(s.line, "share indices out of range");
            g.set_shared_points(s.a, s.b, s.k);
        }
        return g;
    } catch (const GermError&) {
        throw;
    }
}

GermModel load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GermError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

namespace {

std::string site_to_string(const AttachSite& a) {
    switch (a.kind) {
        case SiteKind::Origin: return "origin";
        case SiteKind::Free: return "free";
        case SiteKind::Interior: return a.v1;
        case SiteKind::Intersection: return a.v1 + "^" + a.v2;
    }
    return "origin";
}

std::string cluster_to_string(const BranchCluster& c) {
    std::string out;
    for (size_t i = 0; i < c.points.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.points[i].mult);
        if (c.points[i].extra == ClusterPoint::Extra::Ambient)
            out += "@v:" + c.points[i].ambient;
        else if (c.points[i].extra == ClusterPoint::Extra::ClusterExc)
            out += "@e:" + std::to_string(c.points[i].cluster_exc);
    }
    return out;
}

}  // namespace

std::string serialize_spec(const GermModel& g) {
    std::ostringstream os;
    os << "mldsurf-spec v1\n";
    os << "germ " << (g.is_smooth_germ() ? "smooth" : "resolved") << "\n";
    for (const Vertex& v : g.graph().vertices) {
        os << "vertex " << v.id << " weight=" << v.weight;
        if (v.genus) os << " genus=" << v.genus;
        if (v.nodes) os << " nodes=" << v.nodes;
        os << "\n";
    }
    for (const auto& [e, m] : g.graph().edges) {
        os << "edge " << g.graph().vertices[e.first].id << " " << g.graph().vertices[e.second].id;
        if (m != 1) os << " mult=" << m;
        os << "\n";
    }
    for (const BoundaryBranch& b : g.boundary())
        os << "branch coeff=" << to_string(b.coeff) << " at=" << site_to_string(b.attach)
           << " cluster=" << cluster_to_string(b.cluster) << "\n";
    for (size_t a = 0; a < g.boundary().size(); ++a)
        for (size_t b = a + 1; b < g.boundary().size(); ++b)
            os << "share " << a << " " << b << " " << g.shared_points(a, b) << "\n";
    return os.str();
}

}  // namespace mldsurf
