#include "specbound/edgelist.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

std::string_view strip(std::string_view s) {
    auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

long parse_int(std::string_view tok, std::string_view line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad integer in line: " + std::string(line));
    return value;
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
    long n = -1;
    std::vector<Graph::Edge> edges;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        std::string_view line = strip(raw);
        if (line.empty()) continue;

        std::vector<std::string_view> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) toks.push_back(line.substr(i, j - i));
            i = j;
        }

        if (n < 0) {
            if (toks.size() != 1)
                throw ParseError("expected vertex count on first line");
            n = parse_int(toks[0], line);
            if (n < 1) throw ParseError("vertex count must be at least 1");
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("expected \"u v\" in line: " + std::string(line));
        long u = parse_int(toks[0], line);
        long v = parse_int(toks[1], line);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw VertexOutOfRange("vertex outside [0, " + std::to_string(n) +
                                   ") in line: " + std::string(line));
        if (u == v) throw SelfLoop("self-loop in line: " + std::string(line));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (n < 0) throw ParseError("empty edge-list input");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edgelist(const Graph& g) {
    std::string out = std::to_string(g.num_vertices());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

}  // namespace specbound
