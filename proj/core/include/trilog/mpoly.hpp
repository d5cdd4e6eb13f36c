#pragma once

// Sparse multivariate polynomials over the rationals in registry symbols.
// Exponent vectors are stored sparsely (symbol id -> exponent); zero
// coefficients are never stored, so equality is structural. No symbolic
// relations are built in: zeta2 is not pi^2/6 unless a substitution says so.

#include "trilog/rational.hpp"
#include "trilog/symbols.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trilog {

struct Monomial {
    // (symbol id, exponent) pairs, sorted by id, exponents > 0.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [id, e] : factors) d += e;
        return d;
    }
    bool empty() const { return factors.empty(); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    static Monomial one() { return {}; }
    static Monomial var(Symbol s, std::uint32_t e = 1) {
        Monomial m;
        if (e) m.factors.push_back({s.id, e});
        return m;
    }
    Monomial operator*(const Monomial& o) const;
};

class MPoly {
public:
    MPoly() = default;
    MPoly(long long v) { if (v) terms_[Monomial::one()] = Rational(v); }
    MPoly(const Rational& v) { if (v != 0) terms_[Monomial::one()] = v; }
    MPoly(RegistryPtr reg, const Rational& v) : reg_(std::move(reg)) {
        if (v != 0) terms_[Monomial::one()] = v;
    }

    static MPoly variable(RegistryPtr reg, Symbol s);

    const RegistryPtr& registry() const { return reg_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly& operator*=(const Rational& c);
    friend MPoly operator*(MPoly a, const Rational& c) { a *= c; return a; }
    friend MPoly operator*(const Rational& c, MPoly a) { a *= c; return a; }
    MPoly operator/(const Rational& c) const;
    MPoly operator/(long long c) const { return *this / Rational(c); }

    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    /// Ring homomorphism: replaces assigned symbols by polynomials and keeps
    /// the rest. All assignment values must share one registry (which becomes
    /// the registry of the result together with any unassigned symbols).
    MPoly substitute(const std::map<Symbol, MPoly>& assignment) const;

    /// Collects the ids of symbols that actually occur.
    std::vector<std::uint32_t> used_symbols() const;

    /// Canonical text form, e.g. "3/2*rho_z^2*chi + 2". Terms are ordered by
    /// (total degree, exponent vector); factors print in registry order.
    std::string to_string() const;

    /// Least common multiple of coefficient denominators.
    BigInt denominator_lcm() const;

private:
    void set(const Monomial& m, const Rational& c) {
        if (c == 0) terms_.erase(m); else terms_[m] = c;
    }
    void add_term(const Monomial& m, const Rational& c);
    static RegistryPtr unify(const RegistryPtr& a, const RegistryPtr& b);

    RegistryPtr reg_;  // null for pure constants
    std::map<Monomial, Rational> terms_;
};

/// Convenience: x as a degree-1 polynomial.
inline MPoly sym(RegistryPtr reg, Symbol s) { return MPoly::variable(std::move(reg), s); }

}  // namespace trilog
