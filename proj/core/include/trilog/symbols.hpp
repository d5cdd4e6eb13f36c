#pragma once

// Named transcendental symbols (rho_z, chi, Li3_z, ...) and the registry
// that owns them. A registry is append-only; MPoly values reference it by
// shared pointer and refuse to mix symbols from different registries.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace trilog {

enum class SymbolKind {
    KummerCocycle,
    Cyclotomic,
    PolylogChar,
    GaloisPolylog,
    GaloisZeta,
    ComplexLog,
    ComplexPolylog,
    ComplexZeta,
    Generic,
};

const char* to_string(SymbolKind kind);

struct Symbol {
    std::uint32_t id = 0;
    friend bool operator==(Symbol, Symbol) = default;
    friend auto operator<=>(Symbol, Symbol) = default;
};

class SymbolRegistry {
public:
    /// Registers a new symbol. Names are unique; re-registering an existing
    /// name is an error.
    Symbol add(const std::string& name, SymbolKind kind);

    /// Returns the existing symbol of this name, or registers it.
    Symbol intern(const std::string& name, SymbolKind kind);

    bool contains(const std::string& name) const { return by_name_.count(name) != 0; }
    Symbol find(const std::string& name) const;

    const std::string& name(Symbol s) const { return names_.at(s.id); }
    SymbolKind kind(Symbol s) const { return kinds_.at(s.id); }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::vector<SymbolKind> kinds_;
    std::map<std::string, std::uint32_t> by_name_;
};

using RegistryPtr = std::shared_ptr<SymbolRegistry>;

inline RegistryPtr make_registry() { return std::make_shared<SymbolRegistry>(); }

}  // namespace trilog
