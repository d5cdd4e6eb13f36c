#include "trilog/symbols.hpp"

#include <stdexcept>

namespace trilog {

const char* to_string(SymbolKind kind) {
    switch (kind) {
        case SymbolKind::KummerCocycle: return "kummer-cocycle";
        case SymbolKind::Cyclotomic: return "cyclotomic";
        case SymbolKind::PolylogChar: return "polylog-char";
        case SymbolKind::GaloisPolylog: return "galois-polylog";
        case SymbolKind::GaloisZeta: return "galois-zeta";
        case SymbolKind::ComplexLog: return "complex-log";
        case SymbolKind::ComplexPolylog: return "complex-polylog";
        case SymbolKind::ComplexZeta: return "complex-zeta";
        case SymbolKind::Generic: return "generic";
    }
    return "?";
}

Symbol SymbolRegistry::add(const std::string& name, SymbolKind kind) {
    if (by_name_.count(name))
        throw std::invalid_argument("symbol already registered: " + name);
    std::uint32_t id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    kinds_.push_back(kind);
    by_name_[name] = id;
    return Symbol{id};
}

Symbol SymbolRegistry::intern(const std::string& name, SymbolKind kind) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        if (kinds_[it->second] != kind)
            throw std::invalid_argument("symbol re-interned with different kind: " + name);
        return Symbol{it->second};
    }
    return add(name, kind);
}

Symbol SymbolRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("unknown symbol: " + name);
    return Symbol{it->second};
}

}  // namespace trilog
