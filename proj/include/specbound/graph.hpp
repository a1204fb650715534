#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace specbound {

// Simple undirected graph: vertex count plus a sorted, deduplicated list of
// edges {u, v} with u < v. Immutable after construction, so values can be
// shared freely across threads.
class Graph {
public:
    using Edge = std::pair<int, int>;

    // Normalizes edge orientation, sorts and deduplicates. Throws SelfLoop
    // for u == v and VertexOutOfRange for endpoints outside [0, n).
    Graph(int n, std::vector<Edge> edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    std::vector<int> degrees() const;

    // Row-major n*n dense 0/1 matrix.
    std::vector<double> adjacency_matrix() const;

    // One bitmask row per vertex; requires n <= 64.
    std::vector<std::uint64_t> adjacency_bits() const;

    std::vector<std::vector<int>> adjacency_lists() const;

    bool is_connected() const;

    // New graph with vertex i renamed to perm[i]; perm must be a permutation
    // of 0..n-1.
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

}  // namespace specbound
