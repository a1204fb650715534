#include "test_util.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace testutil {

using specbound::Graph;
using u64 = std::uint64_t;

specbound::Graph to_graph(const SmallGraph& sg) {
    std::vector<Graph::Edge> edges;
    int k = 0;
    for (int j = 1; j < sg.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (sg.mask >> k & 1) edges.emplace_back(i, j);
    return Graph(sg.n, std::move(edges));
}

SmallGraph from_graph(const specbound::Graph& g) {
    SmallGraph sg{g.num_vertices(), 0};
    for (auto [u, v] : g.edges())
        sg.mask |= u64{1} << (static_cast<u64>(v) * (v - 1) / 2 + u);
    return sg;
}

namespace {

struct CanonSearch {
    int n = 0;
    int total_bits = 0;
    std::array<std::uint16_t, 12> adj{};
    std::array<int, 12> perm{};
    std::uint16_t used = 0;
    u64 best = ~u64{0};
    bool have_best = false;

    void rec(int level, u64 prefix, int bits) {
        if (level == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        std::uint16_t tried = 0;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            // interchangeable with a vertex already tried at this level: the
            // subtrees are identical, skip
            bool twin = false;
            for (int u = 0; u < v && !twin; ++u) {
                if (!(tried >> u & 1)) continue;
                std::uint16_t strip =
                    static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
                if ((adj[u] & strip) == (adj[v] & strip)) twin = true;
            }
            if (twin) continue;
            tried |= static_cast<std::uint16_t>(1u << v);

            u64 row = 0;
            for (int i = 0; i < level; ++i)
                row = row << 1 | (adj[v] >> perm[i] & 1);
            u64 next = prefix << level | row;
            int next_bits = bits + level;
            if (have_best && next > (best >> (total_bits - next_bits))) continue;

            perm[level] = v;
            used |= static_cast<std::uint16_t>(1u << v);
            rec(level + 1, next, next_bits);
            used &= static_cast<std::uint16_t>(~(1u << v));
        }
    }
};

}  // namespace

u64 canonical_mask(const SmallGraph& sg) {
    if (sg.n > 10) throw std::invalid_argument("canonical_mask: n > 10");
    CanonSearch cs;
    cs.n = sg.n;
    cs.total_bits = sg.n * (sg.n - 1) / 2;
    int k = 0;
    for (int j = 1; j < sg.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (sg.mask >> k & 1) {
                cs.adj[i] |= static_cast<std::uint16_t>(1u << j);
                cs.adj[j] |= static_cast<std::uint16_t>(1u << i);
            }
    cs.rec(0, 0, 0);

    // best is a concatenation of per-level rows; repack into the edge-mask
    // bit order (it is the same order: level L contributes bits to pairs
    // (i, L) for i < L, most significant first within the level)
    u64 repacked = 0;
    int consumed = cs.total_bits;
    for (int level = 1; level < sg.n; ++level) {
        for (int i = 0; i < level; ++i) {
            --consumed;
            u64 bit = cs.best >> consumed & 1;
            // the row was built most-significant = perm[0]; bit index i of
            // level corresponds to pair (i, level)
            repacked |= bit << (static_cast<u64>(level) * (level - 1) / 2 + i);
        }
    }
    return repacked;
}

std::vector<SmallGraph> all_graphs(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("all_graphs: need 1 <= n <= 10");
    static std::vector<std::vector<SmallGraph>> cache(11);
    if (!cache[n].empty()) return cache[n];
    std::vector<u64> reps{0};  // single vertex
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<u64> seen;
        std::vector<u64> next;
        int base_bits = (size - 1) * (size - 2) / 2;
        for (u64 rep : reps) {
            for (u64 nb = 0; nb < (u64{1} << (size - 1)); ++nb) {
                // append vertex size-1 with neighborhood nb
                u64 mask = rep;
                for (int i = 0; i < size - 1; ++i)
                    if (nb >> i & 1) mask |= u64{1} << (base_bits + i);
                u64 canon = canonical_mask({size, mask});
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        reps = std::move(next);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<SmallGraph> out;
    out.reserve(reps.size());
    for (u64 m : reps) out.push_back({n, m});
    cache[n] = out;
    return out;
}

std::vector<SmallGraph> connected_graphs(int n) {
    std::vector<SmallGraph> out;
    for (const SmallGraph& sg : all_graphs(n))
        if (to_graph(sg).is_connected()) out.push_back(sg);
    return out;
}

namespace {

bool color_rec(const std::vector<std::vector<int>>& adj, std::vector<int>& color,
               int v, int k) {
    if (v == static_cast<int>(adj.size())) return true;
    int max_used = -1;
    for (int u = 0; u < v; ++u) max_used = std::max(max_used, color[u]);
    int limit = std::min(k - 1, max_used + 1);  // symmetry break on new colors
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u : adj[v])
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (color_rec(adj, color, v + 1, k)) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

bool brute_force_colorable(const specbound::Graph& g, int k) {
    auto adj = g.adjacency_lists();
    std::vector<int> color(g.num_vertices(), -1);
    return color_rec(adj, color, 0, k);
}

int brute_force_chromatic(const specbound::Graph& g) {
    for (int k = 1; k <= g.num_vertices(); ++k)
        if (brute_force_colorable(g, k)) return k;
    return g.num_vertices();
}

int bareiss_adjacency_rank(const specbound::Graph& g) {
    const int n = g.num_vertices();
    if (n > 12) throw std::invalid_argument("bareiss rank: n > 12");
    std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        m[static_cast<std::size_t>(u) * n + v] = 1;
        m[static_cast<std::size_t>(v) * n + u] = 1;
    }
    auto at = [&](int i, int j) -> long long& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    long long prev = 1;
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        for (int j = 0; j < n; ++j) std::swap(at(pi, j), at(k, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, pj), at(i, k));
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(at(i, j)) * at(k, k) -
                               static_cast<__int128>(at(i, k)) * at(k, j);
                at(i, j) = static_cast<long long>(num / prev);
            }
        prev = at(k, k);
        ++rank;
    }
    return rank;
}

specbound::Graph random_connected_graph(int n, std::mt19937& rng) {
    for (;;) {
        std::vector<Graph::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
}

}  // namespace testutil
