#include "specbound/named_graphs.hpp"

#include <numeric>
#include <string>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

using Edges = std::vector<Graph::Edge>;

void need(bool ok, const char* what) {
    if (!ok) throw BadParams(what);
}

Graph complete(long n) {
    need(n >= 1, "complete: need n >= 1");
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(static_cast<int>(n), std::move(e));
}

Graph cycle(long n) {
    need(n >= 3, "cycle: need n >= 3");
    Edges e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, static_cast<int>((i + 1) % n));
    return Graph(static_cast<int>(n), std::move(e));
}

// S_n on n vertices: center 0 joined to 1..n-1
Graph star(long n) {
    need(n >= 1, "star: need n >= 1");
    Edges e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(static_cast<int>(n), std::move(e));
}

Graph path(long n) {
    need(n >= 1, "path: need n >= 1");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(static_cast<int>(n), std::move(e));
}

Graph complete_multipartite(const std::vector<long>& sizes) {
    need(!sizes.empty(), "complete_multipartite: need at least one part");
    long total = 0;
    for (long s : sizes) {
        need(s >= 1, "complete_multipartite: part sizes must be >= 1");
        total += s;
    }
    need(total <= 1'000'000, "complete_multipartite: too many vertices");
    std::vector<int> part_of(total);
    int v = 0;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        for (long i = 0; i < sizes[p]; ++i) part_of[v++] = static_cast<int>(p);
    Edges e;
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b)
            if (part_of[a] != part_of[b]) e.emplace_back(a, b);
    return Graph(static_cast<int>(total), std::move(e));
}

// balanced Turan graph: r parts of part_size vertices each
Graph turan(long part_size, long parts) {
    need(part_size >= 1 && parts >= 1, "turan: need part_size >= 1 and parts >= 1");
    return complete_multipartite(std::vector<long>(parts, part_size));
}

Graph kneser(long n, long k) {
    need(k >= 1 && n >= 2 * k, "kneser: need 1 <= k <= n/2");
    need(n <= 30, "kneser: n too large");
    std::vector<unsigned> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == k) subsets.push_back(mask);
    Edges e;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0)
                e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(subsets.size()), std::move(e));
}

Graph petersen() { return kneser(5, 2); }

// 12-vertex Tilley graph: the icosahedron with one edge removed. Vertices:
// 0 apex, 1..5 upper pentagon, 6..10 lower pentagon, 11 apex; edge {1,2}
// dropped. The spectrum, clique and chromatic numbers are pinned by tests.
Graph tilley() {
    Edges e;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int l = 6 + i, ln = 6 + (i + 1) % 5;
        e.emplace_back(0, u);
        e.emplace_back(11, l);
        e.emplace_back(u, un);
        e.emplace_back(l, ln);
        e.emplace_back(u, l);
        e.emplace_back(un, l);
    }
    std::erase(e, Graph::Edge{1, 2});
    return Graph(12, std::move(e));
}

// 7-vertex graph: K4 on {0,1,2,3}, vertex 4 joined to 2 and 3, pendants 5,6 on 4
Graph h2() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {2, 4}, {3, 4}, {4, 5}, {4, 6}});
}

// 3x3 rook's graph: cells adjacent in same row or column
Graph gq_2_1() {
    Edges e;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            if (a / 3 == b / 3 || a % 3 == b % 3) e.emplace_back(a, b);
    return Graph(9, std::move(e));
}

// Collinearity graph of GQ(2,4): the 27 nonzero zeros of the elliptic form
// Q(x) = x1 x2 + x3 x4 + x5 + x5 x6 + x6 over F_2^6, two points adjacent
// when their span lies on the quadric.
Graph gq_2_4() {
    auto quad = [](unsigned x) -> unsigned {
        unsigned b1 = x & 1, b2 = (x >> 1) & 1, b3 = (x >> 2) & 1;
        unsigned b4 = (x >> 3) & 1, b5 = (x >> 4) & 1, b6 = (x >> 5) & 1;
        return (b1 & b2) ^ (b3 & b4) ^ b5 ^ (b5 & b6) ^ b6;
    };
    std::vector<unsigned> pts;
    for (unsigned x = 1; x < 64; ++x)
        if (quad(x) == 0) pts.push_back(x);
    Edges e;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (quad(pts[a] ^ pts[b]) == 0)
                e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(pts.size()), std::move(e));
}

}  // namespace

Graph named_graph(std::string_view name, const std::vector<long>& params) {
    auto arity = [&](std::size_t k, const char* what) {
        if (params.size() != k) throw BadParams(what);
    };
    if (name == "complete") {
        arity(1, "complete: expects n");
        return complete(params[0]);
    }
    if (name == "cycle") {
        arity(1, "cycle: expects n");
        return cycle(params[0]);
    }
    if (name == "star") {
        arity(1, "star: expects n");
        return star(params[0]);
    }
    if (name == "path") {
        arity(1, "path: expects n");
        return path(params[0]);
    }
    if (name == "turan") {
        arity(2, "turan: expects part_size parts");
        return turan(params[0], params[1]);
    }
    if (name == "complete_multipartite") return complete_multipartite(params);
    if (name == "kneser") {
        arity(2, "kneser: expects n k");
        return kneser(params[0], params[1]);
    }
    if (name == "petersen") {
        arity(0, "petersen: expects no params");
        return petersen();
    }
    if (name == "tilley") {
        arity(0, "tilley: expects no params");
        return tilley();
    }
    if (name == "h2") {
        arity(0, "h2: expects no params");
        return h2();
    }
    if (name == "gq_2_1") {
        arity(0, "gq_2_1: expects no params");
        return gq_2_1();
    }
    if (name == "gq_2_4") {
        arity(0, "gq_2_4: expects no params");
        return gq_2_4();
    }
    throw UnknownName("unknown graph name: " + std::string(name));
}

}  // namespace specbound
