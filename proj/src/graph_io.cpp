#include "homhom/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace homhom {

namespace {

    std::string_view trim(std::string_view s)
    {
        const auto ws = " \t\r\n";
        auto b = s.find_first_not_of(ws);
        if (b == std::string_view::npos)
            return {};
        auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    }

    int graph6_byte(char c)
    {
        int value = static_cast<unsigned char>(c) - 63;
        if (value < 0 || value > 63)
            throw ParseError(std::string("graph6: byte out of range: '") + c + "'");
        return value;
    }

    std::vector<std::string_view> meaningful_lines(std::string_view text)
    {
        std::vector<std::string_view> out;
        while (!text.empty()) {
            auto nl = text.find('\n');
            auto line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (!line.empty())
                out.push_back(line);
        }
        return out;
    }

    std::vector<long> integers(std::string_view line)
    {
        std::vector<long> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            if (i == line.size())
                break;
            long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
                throw ParseError("edge list: expected integers on line '" + std::string(line) + "'");
            out.push_back(value);
            i = static_cast<std::size_t>(ptr - line.data());
        }
        return out;
    }

} // namespace

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6: orders above 258047 are not supported");
        if (text.size() < 4)
            throw ParseError("graph6: truncated size field");
        n = (graph6_byte(text[1]) << 12) | (graph6_byte(text[2]) << 6) | graph6_byte(text[3]);
        pos = 4;
    } else {
        n = graph6_byte(text[0]);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph6: order " + std::to_string(n) + " outside 1..64");

    const std::size_t pair_bits = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t expected = (pair_bits + 5) / 6;
    if (text.size() - pos != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                         std::to_string(text.size() - pos));

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = graph6_byte(text[pos + bit / 6]);
            if ((chunk >> (5 - bit % 6)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    // Padding bits must be zero.
    for (; bit < expected * 6; ++bit)
        if ((graph6_byte(text[pos + bit / 6]) >> (5 - bit % 6)) & 1)
            throw ParseError("graph6: nonzero padding bits");
    return Graph::from_rows(rows);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    auto lines = meaningful_lines(text);
    if (lines.empty())
        throw ParseError("edge list: missing 'n m' header");
    auto head = integers(lines[0]);
    if (head.size() != 2)
        throw ParseError("edge list: header must be 'n m'");
    const long n = head[0];
    const long m = head[1];
    if (n < 1 || n > kMaxVertices)
        throw ParseError("edge list: order " + std::to_string(n) + " outside 1..64");
    if (m < 0 || static_cast<std::size_t>(m) != lines.size() - 1)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto uv = integers(lines[k]);
        if (uv.size() != 2)
            throw ParseError("edge list: expected 'u v' on line '" + std::string(lines[k]) + "'");
        if (!(0 <= uv[0] && uv[0] < uv[1] && uv[1] < n))
            throw ParseError("edge list: edge must satisfy 0 <= u < v < n: '" + std::string(lines[k]) + "'");
        for (const auto& e : edges)
            if (e.u == uv[0] && e.v == uv[1])
                throw ParseError("edge list: repeated edge '" + std::string(lines[k]) + "'");
        edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& e : edges)
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph_auto(std::string_view text)
{
    auto lines = meaningful_lines(text);
    if (lines.empty())
        throw ParseError("no graph in input");
    bool looks_like_edges = true;
    try {
        looks_like_edges = integers(lines[0]).size() == 2;
    } catch (const ParseError&) {
        looks_like_edges = false;
    }
    if (looks_like_edges)
        return parse_edge_list(text);
    if (lines.size() != 1)
        throw ParseError("graph6 input must be a single line");
    return parse_graph6(lines[0]);
}

} // namespace homhom
