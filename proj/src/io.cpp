#include "gnc/io.hpp"

#include "gnc/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gnc {

namespace {

constexpr int graph6_bias = 63;
constexpr std::string_view graph6_header = ">>graph6<<";

int graph6_value(std::string_view text, std::size_t pos, std::size_t base)
{
    if (pos >= text.size()) throw ParseError("graph6 record truncated", base + pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < graph6_bias || c > graph6_bias + 63)
        throw ParseError("graph6 byte out of range 63..126", base + pos);
    return c - graph6_bias;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.substr(0, graph6_header.size()) == graph6_header) {
        text.remove_prefix(graph6_header.size());
        base = graph6_header.size();
    }
    if (text.empty()) throw ParseError("empty graph6 record", base);

    std::size_t pos = 0;
    long n = graph6_value(text, pos++, base);
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~')
            throw ParseError("graph6 order beyond 258047 is not supported", base + pos);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | graph6_value(text, pos++, base);
        if (n < 63) throw ParseError("non-canonical graph6 length prefix", base);
    }
    if (n > max_order)
        throw ParseError("graph order " + std::to_string(n) + " exceeds " + std::to_string(max_order), base);

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(bytes),
                         base + std::min(text.size(), pos + bytes));

    GraphBuilder b(order);
    std::size_t k = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            const int chunk = graph6_value(text, pos + k / 6, base);
            if ((chunk >> (5 - k % 6)) & 1) b.add_edge(u, v);
        }
    if (bytes > 0) {
        const std::size_t last = pos + bytes - 1;
        const int chunk = graph6_value(text, last, base);
        const int pad = static_cast<int>(bytes * 6 - bits);
        if (chunk & ((1 << pad) - 1)) throw ParseError("nonzero graph6 padding bits", base + last);
    }
    return b.build();
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + graph6_bias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_bias));
    }
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + graph6_bias));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + graph6_bias));
    return out;
}

namespace {

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;

    // Next line that is neither blank nor a comment; sets offset to its start.
    bool next(std::string_view& line, std::size_t& offset)
    {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            offset = pos;
            line = text.substr(pos, end - pos);
            pos = end + 1;
            std::string_view t = trim(line);
            if (t.empty() || t.front() == '#') continue;
            line = t;
            return true;
        }
        return false;
    }
};

std::vector<long> parse_ints(std::string_view line, std::size_t offset)
{
    std::vector<long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
            throw ParseError("expected an integer", offset + i);
        i = static_cast<std::size_t>(ptr - line.data());
        out.push_back(value);
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    LineCursor cursor{text};
    std::string_view line;
    std::size_t offset = 0;
    if (!cursor.next(line, offset)) throw ParseError("empty edge list", 0);
    const auto header = parse_ints(line, offset);
    if (header.size() != 2) throw ParseError("edge list header must be \"n m\"", offset);
    const long n = header[0];
    const long m = header[1];
    if (n < 0 || n > max_order)
        throw ParseError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_order), offset);
    if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range", offset);

    GraphBuilder b(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!cursor.next(line, offset))
            throw ParseError("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges",
                             text.size());
        const auto uv = parse_ints(line, offset);
        if (uv.size() != 2) throw ParseError("edge line must be \"u v\"", offset);
        const long u = uv[0];
        const long v = uv[1];
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", offset);
        if (u == v) throw ParseError("loop edge", offset);
        if (b.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("duplicate edge", offset);
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (cursor.next(line, offset)) throw ParseError("trailing content after edge list", offset);
    return b.build();
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

GraphFormat detect_format(std::string_view text)
{
    LineCursor cursor{text};
    std::string_view line;
    std::size_t offset = 0;
    if (cursor.next(line, offset) && std::isdigit(static_cast<unsigned char>(line.front())))
        return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::Auto) format = detect_format(text);
    if (format == GraphFormat::EdgeList) return {parse_edge_list(text)};

    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!trim(line).empty()) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string("line starting at byte ") + std::to_string(pos) + ": " + e.what(),
                                 pos + e.offset());
            }
        }
        pos = end + 1;
    }
    if (out.empty()) throw ParseError("no graph found in input", 0);
    return out;
}

std::string read_all(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_all(in);
}

} // namespace gnc
