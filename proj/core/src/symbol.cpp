#include "dbgmatch/symbol.hpp"

namespace dbgmatch {

SymbolString symbols_from(std::initializer_list<unsigned> values) {
    SymbolString out;
    out.reserve(values.size());
    for (unsigned v : values) {
        out.push_back(sym(v));
    }
    return out;
}

void append_run(SymbolString& out, Symbol s, std::size_t count) {
    out.insert(out.end(), count, s);
}

void append(SymbolString& out, const SymbolString& tail) {
    out.insert(out.end(), tail.begin(), tail.end());
}

} // namespace dbgmatch
