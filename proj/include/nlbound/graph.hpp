#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlbound/errors.hpp"

namespace nlbound {

// Nonincreasing degree sequence with its pendant (degree-1) count.
// Construction validates positivity, even sum and the Erdos-Gallai
// inequalities, so a DegreeSequence is always graphical.
struct DegreeSequence {
    std::vector<int> values;  // d1 >= d2 >= ... >= dn >= 1
    int pendant_count = 0;    // number of trailing 1s

    static DegreeSequence from_values(std::vector<int> degrees);

    int n() const { return static_cast<int>(values.size()); }
    long long edge_count() const;
};

// Simple undirected graph: vertex count + edge set, immutable after
// construction.  Vertices are 0-based in this API; the 1-based convention of
// the text formats is handled by the parser.
class Graph {
public:
    // Validates simplicity (no self-loops, no duplicates, vertices in range).
    // With require_connected, also rejects isolated vertices and disconnected
    // inputs; generators pass false and filter on is_connected() themselves.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                                bool require_connected = true);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // normalized (i < j), sorted lexicographically
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    std::span<const int> neighbors(int v) const;

    bool is_connected() const { return connected_; }
    bool is_bipartite() const { return bipartite_; }

    DegreeSequence degree_sequence() const;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<int> adj_flat_;   // CSR adjacency
    std::vector<int> adj_start_;
    bool connected_ = false;
    bool bipartite_ = false;
};

// Edge-list text format: first line "n m", then m lines "i j" with 1-based
// vertex ids; lines starting with '#' are comments.
Graph parse_edge_list(std::istream& in, bool require_connected = true);
Graph load_edge_list(const std::string& path, bool require_connected = true);
void write_edge_list(std::ostream& out, const Graph& g);

// "7,6,5,4,..." -> validated degree sequence
DegreeSequence parse_degree_sequence(const std::string& text);

}  // namespace nlbound
