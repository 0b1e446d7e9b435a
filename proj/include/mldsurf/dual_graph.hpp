#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mldsurf/linalg.hpp"

namespace mldsurf {

/// One curve of a configuration. `weight` is e = -F^2; `genus` the geometric
/// genus and `nodes` the number of self-nodes (arithmetic genus = genus + nodes).
/// Non-exceptional curves (strict transforms of boundary components) are drawn
/// as black dots and carry no meaningful weight.
struct Vertex {
    std::string id;
    long long weight = 2;
    long long genus = 0;
    long long nodes = 0;
    bool exceptional = true;
};

class WeightedDualGraph {
public:
    std::vector<Vertex> vertices;
    // i < j -> C_i . C_j; absent pairs do not meet.
    std::map<std::pair<int, int>, long long> edges;

    int add_vertex(Vertex v);
    void add_edge(int a, int b, long long mult = 1);

    /// Index of the vertex with the given id, or -1.
    int index_of(const std::string& id) const;
    long long edge_mult(int a, int b) const;
    std::vector<int> neighbors(int v) const;
    /// Number of distinct neighbors (the fork/tail count).
    int degree(int v) const;
    /// Sum of edge multiplicities at v.
    long long degree_with_mult(int v) const;

    bool empty() const { return vertices.empty(); }
    size_t size() const { return vertices.size(); }
    bool connected() const;
    bool simple() const;  // all edge multiplicities equal 1

    /// -2 - F^2 + 2 * (arithmetic genus), by adjunction.
    long long canonical_degree(int v) const;
};

/// Intersection matrix {(C_i . C_j)}: diagonal -weight, off-diagonal the edge
/// multiplicities.
RatMatrix intersection_matrix(const WeightedDualGraph& g);

struct GraphStructure {
    std::vector<int> forks;             // vertices with exactly 3 distinct neighbors
    std::vector<int> tails;             // vertices with at most 1 distinct neighbor
    std::vector<std::vector<int>> branches;  // components after deleting the fork (unique fork only)
    bool is_chain = false;
    bool is_circle = false;
};

GraphStructure structure(const WeightedDualGraph& g);

struct SingularityClass {
    enum Tag { Smooth, A, D, E, B, C, F, H, Other };
    Tag tag = Other;
    int m = 0;  // number of exceptional curves, for A/D/E/H
    bool du_val = false;
};

/// Matches the graph against the catalog of minimal-resolution shapes:
/// A_m chains, D_m forks, E_6/7/8, and the lc-but-not-klt list (B: elliptic
/// vertex, C: nodal rational vertex, F: circle, H_m: chain with paired
/// weight-2 leaves). Anything else classifies as Other.
SingularityClass classify_graph(const WeightedDualGraph& g);

const char* tag_name(SingularityClass::Tag t);

/// DOT output; non-exceptional curves are filled black, labels are "id:weight".
std::string to_dot(const WeightedDualGraph& g);

}  // namespace mldsurf
