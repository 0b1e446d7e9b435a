#include "mldsurf/dual_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mldsurf {

int WeightedDualGraph::add_vertex(Vertex v) {
    vertices.push_back(std::move(v));
    return static_cast<int>(vertices.size()) - 1;
}

void WeightedDualGraph::add_edge(int a, int b, long long mult) {
    if (a == b) throw std::invalid_argument("add_edge: loops are not representable (use Vertex::nodes)");
    if (a < 0 || b < 0 || a >= static_cast<int>(vertices.size()) || b >= static_cast<int>(vertices.size()))
        throw std::out_of_range("add_edge: vertex out of range");
    if (mult <= 0) throw std::invalid_argument("add_edge: multiplicity must be positive");
    auto key = std::minmax(a, b);
    edges[{key.first, key.second}] += mult;
}

int WeightedDualGraph::index_of(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

long long WeightedDualGraph::edge_mult(int a, int b) const {
    if (a == b) return 0;
    auto key = std::minmax(a, b);
    auto it = edges.find({key.first, key.second});
    return it == edges.end() ? 0 : it->second;
}

std::vector<int> WeightedDualGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [e, m] : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int WeightedDualGraph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

long long WeightedDualGraph::degree_with_mult(int v) const {
    long long d = 0;
    for (const auto& [e, m] : edges)
        if (e.first == v || e.second == v) d += m;
    return d;
}

bool WeightedDualGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool WeightedDualGraph::simple() const {
    return std::all_of(edges.begin(), edges.end(), [](const auto& e) { return e.second == 1; });
}

long long WeightedDualGraph::canonical_degree(int v) const {
    const Vertex& x = vertices[v];
    return -2 + x.weight + 2 * (x.genus + x.nodes);
}

RatMatrix intersection_matrix(const WeightedDualGraph& g) {
    const size_t n = g.size();
    RatMatrix m(n, RatVector(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = Rat(-g.vertices[i].weight);
    for (const auto& [e, mult] : g.edges) {
        m[e.first][e.second] = Rat(mult);
        m[e.second][e.first] = Rat(mult);
    }
    return m;
}

GraphStructure structure(const WeightedDualGraph& g) {
    GraphStructure s;
    const int n = static_cast<int>(g.size());
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 3) s.forks.push_back(v);
        if (d <= 1) s.tails.push_back(v);
    }
    long long total_mult = 0;
    for (const auto& [e, m] : g.edges) total_mult += m;
    bool circle = n >= 2 && g.connected() && total_mult == n;
    if (circle)
        for (int v = 0; v < n; ++v)
            if (g.degree_with_mult(v) != 2) circle = false;
    s.is_circle = circle;
    bool chain = n >= 1 && g.connected() && g.simple() && total_mult == n - 1;
    if (chain)
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 2) chain = false;
    s.is_chain = chain;
    if (s.forks.size() == 1) {
        // branches: connected components after deleting the fork
        int fork = s.forks[0];
        std::vector<char> seen(n, 0);
        seen[fork] = 1;
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            std::vector<int> comp;
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (int w : g.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            s.branches.push_back(std::move(comp));
        }
    }
    return s;
}

namespace {

bool plain_rational(const WeightedDualGraph& g) {
    return std::all_of(g.vertices.begin(), g.vertices.end(),
                       [](const Vertex& v) { return v.genus == 0 && v.nodes == 0; });
}

bool all_weight_two(const WeightedDualGraph& g) {
    return std::all_of(g.vertices.begin(), g.vertices.end(),
                       [](const Vertex& v) { return v.weight == 2; });
}

// Leaves of weight 2 adjacent to v.
std::vector<int> weight2_leaves(const WeightedDualGraph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (g.degree(w) == 1 && g.vertices[w].weight == 2) out.push_back(w);
    return out;
}

}  // namespace

SingularityClass classify_graph(const WeightedDualGraph& g) {
    SingularityClass cls;
    const int n = static_cast<int>(g.size());
    cls.m = n;
    if (n == 0) {
        cls.tag = SingularityClass::Smooth;
        return cls;
    }
    if (!g.connected()) return cls;

    if (n == 1) {
        const Vertex& v = g.vertices[0];
        if (v.genus == 1 && v.nodes == 0) cls.tag = SingularityClass::B;
        else if (v.genus == 0 && v.nodes == 1) cls.tag = SingularityClass::C;
        else if (v.genus == 0 && v.nodes == 0) cls.tag = SingularityClass::A;
        cls.du_val = cls.tag == SingularityClass::A && v.weight == 2;
        return cls;
    }
    if (!plain_rational(g)) return cls;

    GraphStructure s = structure(g);
    if (s.is_circle) {
        cls.tag = SingularityClass::F;
        return cls;
    }
    if (s.is_chain) {
        cls.tag = SingularityClass::A;
        cls.du_val = all_weight_two(g);
        return cls;
    }
    if (!g.simple()) return cls;

    // H_5: one degree-4 vertex with four weight-2 leaves.
    if (n == 5) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 4 && static_cast<int>(weight2_leaves(g, v).size()) == 4) {
                cls.tag = SingularityClass::H;
                return cls;
            }
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 3) return cls;

    if (s.forks.size() == 2 && n >= 6) {
        // H_m, m >= 6: two forks joined by a chain, each fork carrying two
        // weight-2 leaves.
        bool ok = true;
        for (int f : s.forks)
            if (static_cast<int>(weight2_leaves(g, f).size()) != 2) ok = false;
        if (ok && static_cast<int>(s.tails.size()) == 4) {
            cls.tag = SingularityClass::H;
            return cls;
        }
        return cls;
    }
    if (s.forks.size() != 1) return cls;

    std::vector<size_t> lens;
    for (const auto& b : s.branches) lens.push_back(b.size());
    std::sort(lens.begin(), lens.end());
    if (lens.size() != 3) return cls;

    // D_m: branches (m-3, 1, 1) with two weight-2 length-1 branches.
    if (lens[0] == 1 && lens[1] == 1) {
        int short_weight2 = 0;
        for (const auto& b : s.branches)
            if (b.size() == 1 && g.vertices[b[0]].weight == 2) ++short_weight2;
        if (short_weight2 >= 2 && n >= 4) {
            cls.tag = SingularityClass::D;
            cls.du_val = all_weight_two(g);
            return cls;
        }
    }
    if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
        cls.tag = SingularityClass::E;
        cls.du_val = all_weight_two(g);
        return cls;
    }
    return cls;
}

const char* tag_name(SingularityClass::Tag t) {
    switch (t) {
        case SingularityClass::Smooth: return "Smooth";
        case SingularityClass::A: return "A";
        case SingularityClass::D: return "D";
        case SingularityClass::E: return "E";
        case SingularityClass::B: return "B";
        case SingularityClass::C: return "C";
        case SingularityClass::F: return "F";
        case SingularityClass::H: return "H";
        default: return "Other";
    }
}

std::string to_dot(const WeightedDualGraph& g) {
    std::ostringstream os;
    os << "graph dual {\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices) {
        os << "  \"" << v.id << "\" [label=\"" << v.id << ":" << v.weight << "\"";
        if (!v.exceptional) os << ", style=filled, fillcolor=black, fontcolor=white";
        os << "];\n";
    }
    for (const auto& [e, mult] : g.edges)
        for (long long k = 0; k < mult; ++k)
            os << "  \"" << g.vertices[e.first].id << "\" -- \"" << g.vertices[e.second].id << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace mldsurf
