#include "isolate/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "isolate/errors.hpp"

namespace isolate {

namespace {

struct Cursor {
    const std::string &text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
    void skip_blank_lines() {
        while (!done()) {
            skip_spaces();
            if (!done() && peek() == '\n') advance();
            else break;
        }
    }
    long long read_int(const char *what) {
        skip_spaces();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(std::string("expected ") + what, line, col);
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) throw parse_error(std::string(what) + " too large", line, col);
            advance();
        }
        return v;
    }
};

} // namespace

Graph parse_edge_list(const std::string &text) {
    Cursor c{text};
    c.skip_blank_lines();
    int n = static_cast<int>(c.read_int("vertex count"));
    c.skip_spaces();
    if (!c.done() && c.peek() != '\n') throw parse_error("trailing text after vertex count", c.line, c.col);
    std::vector<std::pair<int, int>> edges;
    while (true) {
        c.skip_blank_lines();
        if (c.done()) break;
        int uline = c.line, ucol = c.col;
        int u = static_cast<int>(c.read_int("vertex index"));
        c.skip_spaces();
        int vline = c.line, vcol = c.col;
        int v = static_cast<int>(c.read_int("vertex index"));
        c.skip_spaces();
        if (!c.done() && c.peek() != '\n') throw parse_error("trailing text after edge", c.line, c.col);
        if (u >= n) throw parse_error("vertex index " + std::to_string(u) + " not below " + std::to_string(n), uline, ucol);
        if (v >= n) throw parse_error("vertex index " + std::to_string(v) + " not below " + std::to_string(n), vline, vcol);
        if (u == v) throw parse_error("loop edge at vertex " + std::to_string(u), uline, ucol);
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph &g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph6(const std::string &text) {
    // strip one trailing newline / surrounding whitespace
    std::size_t b = 0, e = text.size();
    while (e > b && (text[e - 1] == '\n' || text[e - 1] == '\r' || text[e - 1] == ' ')) --e;
    while (b < e && (text[b] == ' ')) ++b;
    if (b == e) throw parse_error("empty graph6 input", 1, 1);
    // optional header used by some tools
    const std::string header = ">>graph6<<";
    if (text.compare(b, header.size(), header) == 0) b += header.size();
    std::size_t start = b;
    int nbyte = static_cast<unsigned char>(text[b]);
    if (nbyte < 63 || nbyte > 63 + 62)
        throw parse_error("unsupported graph6 length byte", 1, static_cast<int>(b - start + 1));
    int n = nbyte - 63;
    ++b;
    int bits_needed = n * (n - 1) / 2;
    int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(e - b) != bytes_needed)
        throw parse_error("graph6 body has " + std::to_string(e - b) + " bytes, expected " + std::to_string(bytes_needed),
                          1, static_cast<int>(b - start + 1));
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(text[b + bit / 6]);
            if (byte < 63 || byte > 126)
                throw parse_error("graph6 byte out of range", 1, static_cast<int>(b + bit / 6 - start + 1));
            int val = byte - 63;
            if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (std::size_t k = b; k < e; ++k) {
        int byte = static_cast<unsigned char>(text[k]);
        if (byte < 63 || byte > 126)
            throw parse_error("graph6 byte out of range", 1, static_cast<int>(k - start + 1));
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph &g) {
    if (g.n() > 62) throw parameter_error("graph6 output limited to 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int bits = g.n() * (g.n() - 1) / 2;
    int nbytes = (bits + 5) / 6;
    std::vector<int> vals(nbytes, 0);
    int bit = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) vals[bit / 6] |= 1 << (5 - bit % 6);
    for (int v : vals) out.push_back(static_cast<char>(v + 63));
    return out;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open file for writing: " + path);
    out << content;
}

Graph load_graph_file(const std::string &path) {
    std::string text = read_text_file(path);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) return parse_graph6(text);
    return parse_edge_list(text);
}

} // namespace isolate
