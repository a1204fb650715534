#include "specbound/graph6.hpp"

#include <cstddef>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::int64_t decode_size(std::string_view& s) {
    auto take = [&]() -> int {
        if (s.empty()) throw MalformedGraph6("truncated size field");
        unsigned char c = static_cast<unsigned char>(s.front());
        s.remove_prefix(1);
        if (c < kBias || c > kMaxByte)
            throw MalformedGraph6("size byte outside [63,126]");
        return c - kBias;
    };
    int first = take();
    if (first < 63) return first;
    // first byte was '~': 3-byte or 6-byte form
    if (s.empty()) throw MalformedGraph6("truncated size field");
    int groups = 3;
    if (static_cast<unsigned char>(s.front()) == kMaxByte) {
        s.remove_prefix(1);
        groups = 6;
    }
    std::int64_t n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | take();
    return n;
}

}  // namespace

Graph parse_graph6(std::string_view line, std::int64_t max_n) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw MalformedGraph6("empty line");
    if (line.front() == ':' || line.front() == ';')
        throw UnsupportedFormat("sparse6 input is not supported");
    if (line.front() == '&')
        throw UnsupportedFormat("digraph6 input is not supported");
    if (line.starts_with(">>"))
        throw MalformedGraph6("unexpected format header");

    std::string_view rest = line;
    std::int64_t n = decode_size(rest);
    if (n < 1) throw MalformedGraph6("vertex count must be at least 1");
    if (n > max_n)
        throw Overflow("vertex count " + std::to_string(n) + " exceeds limit " +
                       std::to_string(max_n));

    std::int64_t nbits = n * (n - 1) / 2;
    std::int64_t nbytes = (nbits + 5) / 6;
    if (static_cast<std::int64_t>(rest.size()) != nbytes)
        throw MalformedGraph6("expected " + std::to_string(nbytes) +
                              " data bytes, got " + std::to_string(rest.size()));

    std::vector<Graph::Edge> edges;
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            unsigned char c = static_cast<unsigned char>(rest[k / 6]);
            if (c < kBias || c > kMaxByte)
                throw MalformedGraph6("data byte outside [63,126]");
            if ((c - kBias) >> (5 - k % 6) & 1) edges.emplace_back(i, j);
        }
    }
    // trailing pad bits must be zero
    for (; k < nbytes * 6; ++k) {
        unsigned char c = static_cast<unsigned char>(rest[k / 6]);
        if (c < kBias || c > kMaxByte)
            throw MalformedGraph6("data byte outside [63,126]");
        if ((c - kBias) >> (5 - k % 6) & 1)
            throw MalformedGraph6("nonzero padding bits");
    }

    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    std::int64_t n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }

    std::int64_t nbits = n * (n - 1) / 2;
    std::size_t header = out.size();
    out.resize(header + (nbits + 5) / 6, static_cast<char>(kBias));
    for (auto [u, v] : g.edges()) {
        std::int64_t k = static_cast<std::int64_t>(v) * (v - 1) / 2 + u;
        out[header + k / 6] += static_cast<char>(1 << (5 - k % 6));
    }
    return out;
}

}  // namespace specbound
