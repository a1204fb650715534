#include "specbound/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

using u64 = std::uint64_t;

inline u64 bit(int v) { return u64{1} << v; }

struct ColoringSearch {
    int n;
    std::vector<u64> adj;
    std::vector<int> degree;
    std::vector<int> color;                 // -1 = uncolored
    std::vector<std::array<int, 64>> hits;  // hits[v][c]: colored neighbors of v with c
    std::vector<int> sat;                   // distinct neighbor colors
    int best;

    explicit ColoringSearch(const Graph& g)
        : n(g.num_vertices()),
          adj(g.adjacency_bits()),
          degree(g.degrees()),
          color(n, -1),
          hits(n),
          sat(n, 0),
          best(n + 1) {
        for (auto& h : hits) h.fill(0);
    }

    int pick() const {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] >= 0) continue;
            if (v < 0 || sat[u] > sat[v] ||
                (sat[u] == sat[v] && degree[u] > degree[v]))
                v = u;
        }
        return v;
    }

    void assign(int v, int c) {
        color[v] = c;
        for (u64 m = adj[v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (hits[w][c]++ == 0) ++sat[w];
        }
    }

    void unassign(int v, int c) {
        color[v] = -1;
        for (u64 m = adj[v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (--hits[w][c] == 0) --sat[w];
        }
    }

    void dive(int colored, int used) {
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        int v = pick();
        for (int c = 0; c < used && used < best; ++c) {
            if (hits[v][c]) continue;
            assign(v, c);
            dive(colored + 1, used);
            unassign(v, c);
        }
        if (used + 1 < best) {
            assign(v, used);
            dive(colored + 1, used + 1);
            unassign(v, used);
        }
    }
};

int greedy_dsatur(const Graph& g) {
    ColoringSearch s(g);
    int used = 0;
    for (int step = 0; step < s.n; ++step) {
        int v = s.pick();
        int c = 0;
        while (s.hits[v][c]) ++c;
        s.assign(v, c);
        used = std::max(used, c + 1);
    }
    return used;
}

int greedy_clique(const std::vector<u64>& adj, const std::vector<int>& degree) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (int start = 0; start < n; ++start) {
        u64 cand = adj[start];
        int size = 1;
        while (cand) {
            int pick = -1;
            for (u64 m = cand; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (pick < 0 || degree[v] > degree[pick]) pick = v;
            }
            ++size;
            cand &= adj[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

struct CliqueSearch {
    std::vector<u64> adj;
    int best = 0;

    void expand(u64 cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        // greedy coloring of the candidate set; color index bounds any
        // clique extension through that vertex
        int order[64], col[64], cnt = 0;
        u64 uncolored = cand;
        for (int c = 1; uncolored; ++c) {
            u64 q = uncolored;
            while (q) {
                int v = std::countr_zero(q);
                q &= ~(adj[v] | bit(v));
                uncolored &= ~bit(v);
                order[cnt] = v;
                col[cnt] = c;
                ++cnt;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + col[i] <= best) return;
            int v = order[i];
            expand(cand & adj[v], size + 1);
            cand &= ~bit(v);
        }
    }
};

void check_cap(const Graph& g, int cap, const char* what) {
    int limit = std::min(cap, 64);
    if (g.num_vertices() > limit)
        throw TooLarge(std::string(what) + " limited to n <= " +
                       std::to_string(limit));
}

}  // namespace

int chromatic_number(const Graph& g, int cap) {
    check_cap(g, cap, "exact chromatic number");
    if (g.num_edges() == 0) return 1;

    int ub = greedy_dsatur(g);
    ColoringSearch s(g);
    int lb = greedy_clique(s.adj, s.degree);
    if (lb == ub) return ub;

    s.best = ub;
    s.dive(0, 0);
    return s.best;
}

int clique_number(const Graph& g, int cap) {
    check_cap(g, cap, "exact clique number");
    if (g.num_edges() == 0) return 1;

    CliqueSearch cs{g.adjacency_bits()};
    cs.best = greedy_clique(cs.adj, g.degrees());
    u64 all = g.num_vertices() == 64 ? ~u64{0}
                                     : (bit(g.num_vertices()) - 1);
    cs.expand(all, 0);
    return cs.best;
}

std::optional<int> conclude_quantum(const Graph& g, const BoundReport& report,
                                    int cap) {
    int chi = chromatic_number(g, cap);
    if (std::ceil(report.f_best - 1e-9) >= chi) return chi;
    return std::nullopt;
}

}  // namespace specbound
