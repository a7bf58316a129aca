#include "dbclosure/edge_list_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "dbclosure/errors.hpp"

namespace dbclosure {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": not an integer: '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph read_edge_list(std::istream &in) {
    std::string line;
    int line_no = 0;
    std::optional<int> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;
        if (!n) {
            if (toks.size() != 1)
                throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
            const long long value = parse_int(toks[0], line_no);
            if (value < 1 || value > 1'000'000)
                throw ParseError("line " + std::to_string(line_no) + ": vertex count out of range");
            n = static_cast<int>(value);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        const long long u = parse_int(toks[0], line_no);
        const long long v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0 || u >= *n || v >= *n)
            throw IndexOutOfRange("line " + std::to_string(line_no) + ": endpoint out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (!n)
        throw ParseError("missing vertex count");
    return Graph::from_edge_list(*n, edges);
}

Graph read_edge_list_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << g.order() << '\n';
    for (const Edge &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

} // namespace dbclosure
