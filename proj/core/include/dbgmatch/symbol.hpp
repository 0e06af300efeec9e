#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace dbgmatch {

/// One alphabet symbol; valid symbols of a graph satisfy value < sigma.
struct Symbol {
    std::uint8_t value = 0;

    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

static_assert(sizeof(Symbol) == 1);

using SymbolString = std::vector<Symbol>;

constexpr Symbol sym(unsigned v) { return Symbol{static_cast<std::uint8_t>(v)}; }

SymbolString symbols_from(std::initializer_list<unsigned> values);

/// Appends `count` copies of `s`.
void append_run(SymbolString& out, Symbol s, std::size_t count);

void append(SymbolString& out, const SymbolString& tail);

struct SymbolStringHash {
    std::size_t operator()(const SymbolString& s) const noexcept {
        std::string_view bytes(reinterpret_cast<const char*>(s.data()), s.size());
        return std::hash<std::string_view>{}(bytes);
    }
};

} // namespace dbgmatch
