#include "specbound/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "specbound/errors.hpp"

namespace specbound {

Graph::Graph(int n, std::vector<Edge> edge_list) : n_(n) {
    if (n < 1) throw BadParams("graph needs at least one vertex");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw VertexOutOfRange("edge endpoint outside [0, " + std::to_string(n) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<double> Graph::adjacency_matrix() const {
    std::vector<double> a(static_cast<std::size_t>(n_) * n_, 0.0);
    for (auto [u, v] : edges_) {
        a[static_cast<std::size_t>(u) * n_ + v] = 1.0;
        a[static_cast<std::size_t>(v) * n_ + u] = 1.0;
    }
    return a;
}

std::vector<std::uint64_t> Graph::adjacency_bits() const {
    if (n_ > 64) throw TooLarge("bitmask adjacency requires n <= 64");
    std::vector<std::uint64_t> rows(n_, 0);
    for (auto [u, v] : edges_) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return rows;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool Graph::is_connected() const {
    if (n_ == 1) return true;
    auto adj = adjacency_lists();
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (auto [u, v] : edges_) mapped.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(mapped));
}

}  // namespace specbound
