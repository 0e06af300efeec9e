#include "dbgmatch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "dbgmatch/error.hpp"

namespace dbgmatch::io {

DisplayMap::DisplayMap(std::string chars) : chars_(std::move(chars)) {
    reverse_.fill(-1);
    if (chars_.empty() || chars_.size() > 256) {
        throw Error(ErrorCode::Range, "display map needs between 1 and 256 characters");
    }
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        auto& slot = reverse_[static_cast<unsigned char>(chars_[i])];
        if (slot != -1) {
            throw Error(ErrorCode::InvariantViolation, std::string("display character '") + chars_[i] + "' repeats");
        }
        slot = static_cast<int>(i);
    }
}

DisplayMap DisplayMap::npc() { return DisplayMap("$#01"); }

DisplayMap DisplayMap::digits(unsigned sigma) {
    if (sigma == 0 || sigma > 10) {
        throw Error(ErrorCode::Range, "digit display supports 1..10 symbols");
    }
    return DisplayMap(std::string("0123456789").substr(0, sigma));
}

char DisplayMap::to_char(Symbol s) const {
    if (s.value >= chars_.size()) {
        throw Error(ErrorCode::AlphabetRange, "symbol " + std::to_string(s.value) + " has no display character");
    }
    return chars_[s.value];
}

Symbol DisplayMap::to_symbol(char c) const {
    int v = reverse_[static_cast<unsigned char>(c)];
    if (v < 0) {
        throw Error(ErrorCode::AlphabetRange, std::string("character '") + c + "' is not in the display map");
    }
    return sym(static_cast<unsigned>(v));
}

std::string DisplayMap::render(std::span<const Symbol> s) const {
    std::string out;
    out.reserve(s.size());
    for (Symbol c : s) {
        out.push_back(to_char(c));
    }
    return out;
}

SymbolString DisplayMap::parse(std::string_view text) const {
    SymbolString out;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            continue;
        }
        out.push_back(to_symbol(c));
    }
    return out;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Non-blank lines that are not comments.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty() && tokens.front().text.front() != '#') {
            out.push_back({number, std::move(tokens)});
        }
        pos = end + 1;
    }
    return out;
}

std::uint64_t parse_uint(const Line& line, const Token& tok, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(line.number, tok.column, "expected " + std::string(what) + ", got '" +
                                                      std::string(tok.text) + "'");
    }
    return value;
}

std::uint64_t parse_keyed(const Line& line, const Token& tok, std::string_view key) {
    const std::string prefix = std::string(key) + "=";
    if (tok.text.substr(0, prefix.size()) != prefix) {
        throw ParseError(line.number, tok.column, "expected " + prefix + "<int>");
    }
    Token value{tok.text.substr(prefix.size()), tok.column + prefix.size()};
    return parse_uint(line, value, std::string(key) + " value");
}

void expect_arity(const Line& line, std::size_t count, std::string_view record) {
    if (line.tokens.size() != count) {
        const std::size_t column = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
        throw ParseError(line.number, column, "'" + std::string(record) + "' record takes " +
                                                  std::to_string(count - 1) + " fields");
    }
}

Symbol parse_symbol(const Line& line, const Token& tok, unsigned sigma) {
    auto v = parse_uint(line, tok, "symbol");
    if (v >= sigma) {
        throw ParseError(line.number, tok.column,
                         "symbol " + std::to_string(v) + " outside alphabet of size " + std::to_string(sigma));
    }
    return sym(static_cast<unsigned>(v));
}

} // namespace

GraphFile parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing 'dbg k=<int> sigma=<int>' header");
    }
    const Line& header = lines.front();
    if (header.tokens.front().text != "dbg") {
        throw ParseError(header.number, header.tokens.front().column, "expected 'dbg' header");
    }
    expect_arity(header, 3, "dbg");
    const auto k = parse_keyed(header, header.tokens[1], "k");
    const auto sigma = parse_keyed(header, header.tokens[2], "sigma");
    if (sigma == 0 || sigma > 256) {
        throw ParseError(header.number, header.tokens[2].column, "sigma must be in [1, 256]");
    }

    struct Decl {
        Symbol label;
        std::size_t line;
    };
    std::map<std::uint64_t, Decl> vertices;
    struct EdgeDecl {
        std::uint64_t tail, head;
        const Line* line;
    };
    std::vector<EdgeDecl> edges;
    std::map<std::uint64_t, SymbolString> implicit;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string_view kind = line.tokens.front().text;
        if (kind == "v") {
            expect_arity(line, 3, "v");
            auto id = parse_uint(line, line.tokens[1], "vertex id");
            Symbol label = parse_symbol(line, line.tokens[2], static_cast<unsigned>(sigma));
            if (!vertices.emplace(id, Decl{label, line.number}).second) {
                throw ParseError(line.number, line.tokens[1].column, "vertex " + std::to_string(id) + " declared twice");
            }
        } else if (kind == "e") {
            expect_arity(line, 3, "e");
            edges.push_back({parse_uint(line, line.tokens[1], "tail id"), parse_uint(line, line.tokens[2], "head id"),
                             &line});
        } else if (kind == "il") {
            if (k == 0) {
                throw ParseError(line.number, 1, "implicit labels need k >= 1");
            }
            expect_arity(line, 2 + k, "il");
            auto id = parse_uint(line, line.tokens[1], "vertex id");
            SymbolString label;
            for (std::size_t t = 2; t < line.tokens.size(); ++t) {
                label.push_back(parse_symbol(line, line.tokens[t], static_cast<unsigned>(sigma)));
            }
            if (!implicit.emplace(id, std::move(label)).second) {
                throw ParseError(line.number, line.tokens[1].column,
                                 "implicit label of vertex " + std::to_string(id) + " given twice");
            }
        } else {
            throw ParseError(line.number, line.tokens.front().column, "unknown record '" + std::string(kind) + "'");
        }
    }

    GraphFile out{LabeledDigraph(static_cast<unsigned>(sigma)), k, {}};
    std::uint64_t expected = 0;
    for (const auto& [id, decl] : vertices) {
        if (id != expected) {
            throw ParseError(decl.line, 3, "vertex ids must be 0..n-1; missing " + std::to_string(expected));
        }
        out.graph.add_vertex(decl.label);
        ++expected;
    }
    for (const auto& e : edges) {
        for (auto [id, col] : {std::pair{e.tail, e.line->tokens[1].column}, std::pair{e.head, e.line->tokens[2].column}}) {
            if (!vertices.count(id)) {
                throw ParseError(e.line->number, col, "edge endpoint " + std::to_string(id) + " is not a declared vertex");
            }
        }
        out.graph.add_edge(static_cast<VertexId>(e.tail), static_cast<VertexId>(e.head));
    }
    if (!implicit.empty()) {
        out.implicit.resize(vertices.size());
        for (auto& [id, label] : implicit) {
            if (!vertices.count(id)) {
                throw ParseError(0, 0, "implicit label for undeclared vertex " + std::to_string(id));
            }
            out.implicit[id] = std::move(label);
        }
        for (std::size_t id = 0; id < out.implicit.size(); ++id) {
            if (out.implicit[id].empty()) {
                throw ParseError(vertices.at(id).line, 1, "vertex " + std::to_string(id) + " has no implicit label");
            }
        }
    }
    return out;
}

DeBruijnGraph GraphFile::to_de_bruijn() const {
    if (!has_implicit_labels()) {
        return compute_implicit_labels(graph, k);
    }
    DeBruijnGraph out(graph, k);
    for (VertexId v = 0; v < implicit.size(); ++v) {
        out.set_implicit_label(v, implicit[v]);
    }
    return out;
}

GraphFile read_graph(const std::string& path) { return parse_graph(read_file(path)); }

namespace {

void write_body(std::ostringstream& os, const LabeledDigraph& g) {
    for (VertexId v : g.vertices()) {
        os << "v " << v << ' ' << unsigned{g.label(v).value} << '\n';
    }
    for (const auto& [tail, head] : g.edges()) {
        os << "e " << tail << ' ' << head << '\n';
    }
}

} // namespace

std::string write_graph(const LabeledDigraph& graph, std::size_t k) {
    const LabeledDigraph g = graph.compacted();
    std::ostringstream os;
    os << "dbg k=" << k << " sigma=" << g.sigma() << '\n';
    write_body(os, g);
    return os.str();
}

std::string write_graph(const DeBruijnGraph& graph) {
    const DeBruijnGraph g = graph.compacted();
    std::ostringstream os;
    os << "dbg k=" << g.order() << " sigma=" << g.base().sigma() << '\n';
    write_body(os, g.base());
    for (VertexId v : g.base().vertices()) {
        if (!g.has_implicit_label(v)) {
            continue;
        }
        os << "il " << v;
        for (Symbol s : g.implicit_label(v)) {
            os << ' ' << unsigned{s.value};
        }
        os << '\n';
    }
    return os.str();
}

Pattern parse_pattern(std::string_view text, unsigned sigma) {
    SymbolString symbols;
    for (const Line& line : content_lines(text)) {
        for (const Token& tok : line.tokens) {
            symbols.push_back(parse_symbol(line, tok, sigma));
        }
    }
    if (symbols.empty()) {
        throw ParseError(1, 1, "pattern is empty");
    }
    return Pattern(std::move(symbols));
}

Pattern read_pattern(const std::string& path, unsigned sigma) { return parse_pattern(read_file(path), sigma); }

std::string write_pattern(const Pattern& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            os << ' ';
        }
        os << unsigned{p.symbols()[i].value};
    }
    os << '\n';
    return os.str();
}

OvInstance parse_ov(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty() || lines.front().tokens.front().text != "ov") {
        throw ParseError(lines.empty() ? 1 : lines.front().number, 1, "missing 'ov N=<int> d=<int>' header");
    }
    const Line& header = lines.front();
    expect_arity(header, 3, "ov");
    const auto n = parse_keyed(header, header.tokens[1], "N");
    const auto d = parse_keyed(header, header.tokens[2], "d");
    if (lines.size() != 1 + 2 * n) {
        const std::size_t at = lines.size() > 1 + 2 * n ? lines[1 + 2 * n].number : lines.back().number + 1;
        throw ParseError(at, 1, "expected " + std::to_string(2 * n) + " vector lines, found " +
                                    std::to_string(lines.size() - 1));
    }
    OvInstance ov;
    ov.dim = d;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const Line& line = lines[1 + i];
        std::vector<std::uint8_t> bits;
        for (const Token& tok : line.tokens) {
            for (std::size_t c = 0; c < tok.text.size(); ++c) {
                if (tok.text[c] != '0' && tok.text[c] != '1') {
                    throw ParseError(line.number, tok.column + c, "vector entries must be 0 or 1");
                }
                bits.push_back(static_cast<std::uint8_t>(tok.text[c] - '0'));
            }
        }
        if (bits.size() != d) {
            throw ParseError(line.number, 1, "vector has " + std::to_string(bits.size()) + " entries, expected " +
                                                 std::to_string(d));
        }
        (i < n ? ov.a : ov.b).push_back(std::move(bits));
    }
    return ov;
}

OvInstance read_ov(const std::string& path) { return parse_ov(read_file(path)); }

std::string write_ov(const OvInstance& ov) {
    std::ostringstream os;
    os << "ov N=" << ov.size() << " d=" << ov.dim << '\n';
    for (const auto* set : {&ov.a, &ov.b}) {
        for (const auto& v : *set) {
            for (auto bit : v) {
                os << static_cast<char>('0' + bit);
            }
            os << '\n';
        }
    }
    return os.str();
}

HamInstance ham_from_graph(const LabeledDigraph& g) {
    std::vector<VertexId> mapping;
    const LabeledDigraph dense = g.compacted(&mapping);
    return HamInstance::from_edges(dense.vertex_count(), dense.edges());
}

std::string write_meta(const InstanceBundle& b) {
    std::ostringstream os;
    if (const auto* p = std::get_if<NpcParams>(&b.params)) {
        os << "kind npc\n"
           << "delta " << b.delta << '\n'
           << "param n " << p->n << '\n'
           << "param ell " << p->ell << '\n'
           << "param W " << p->width << '\n'
           << "param k " << p->k << '\n';
    } else {
        const auto& q = std::get<OvParams>(b.params);
        os << "kind seth\n"
           << "delta " << b.delta << '\n'
           << "param N " << q.count << '\n'
           << "param d " << q.dim << '\n'
           << "param c " << q.fan_depth << '\n'
           << "param k " << q.k << '\n'
           << "param ell " << q.ell << '\n'
           << "param t " << q.t << '\n';
    }
    os << "pattern_length " << b.pattern.size() << '\n'
       << "vertices " << b.graph.base().vertex_count() << '\n'
       << "edges " << b.graph.base().edge_count() << '\n';
    for (const auto& [orig, phi] : b.marked) {
        os << "m " << orig << ' ' << phi << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Parse, "cannot write " + path);
    }
    out << contents;
}

} // namespace dbgmatch::io
