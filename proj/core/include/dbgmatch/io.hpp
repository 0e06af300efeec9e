#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/graph.hpp"
#include "dbgmatch/instance.hpp"
#include "dbgmatch/matchers.hpp"

namespace dbgmatch::io {

/// Bijection between symbols and printable characters.
class DisplayMap {
public:
    explicit DisplayMap(std::string chars);

    /// {0:'$', 1:'#', 2:'0', 3:'1'}
    static DisplayMap npc();
    /// Symbols rendered as their digits.
    static DisplayMap digits(unsigned sigma);

    unsigned sigma() const noexcept { return static_cast<unsigned>(chars_.size()); }
    char to_char(Symbol s) const;
    Symbol to_symbol(char c) const;

    std::string render(std::span<const Symbol> s) const;
    SymbolString parse(std::string_view text) const;

private:
    std::string chars_;
    std::array<int, 256> reverse_{};
};

/// Contents of a graph file; `implicit` is empty when the file has no il lines.
struct GraphFile {
    LabeledDigraph graph;
    std::size_t k = 0;
    std::vector<SymbolString> implicit;

    bool has_implicit_labels() const noexcept { return !implicit.empty(); }
    /// Uses the stored implicit labels, or derives them when absent.
    DeBruijnGraph to_de_bruijn() const;
};

GraphFile parse_graph(std::string_view text);
GraphFile read_graph(const std::string& path);

/// Canonical form: header, v lines, e lines, il lines, each in id order.
/// Dead slots are compacted away first.
std::string write_graph(const LabeledDigraph& g, std::size_t k = 0);
std::string write_graph(const DeBruijnGraph& g);

Pattern parse_pattern(std::string_view text, unsigned sigma);
Pattern read_pattern(const std::string& path, unsigned sigma);
std::string write_pattern(const Pattern& p);

OvInstance parse_ov(std::string_view text);
OvInstance read_ov(const std::string& path);
std::string write_ov(const OvInstance& ov);

HamInstance ham_from_graph(const LabeledDigraph& g);

/// Parameter block and marked map of a bundle as `key value` lines.
std::string write_meta(const InstanceBundle& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace dbgmatch::io
