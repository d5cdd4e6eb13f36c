#include "trilog/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trilog {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), ae = factors.end();
    auto b = o.factors.begin(), be = o.factors.end();
    while (a != ae && b != be) {
        if (a->first < b->first) r.factors.push_back(*a++);
        else if (b->first < a->first) r.factors.push_back(*b++);
        else { r.factors.push_back({a->first, a->second + b->second}); ++a; ++b; }
    }
    r.factors.insert(r.factors.end(), a, ae);
    r.factors.insert(r.factors.end(), b, be);
    return r;
}

MPoly MPoly::variable(RegistryPtr reg, Symbol s) {
    MPoly p;
    p.reg_ = std::move(reg);
    p.terms_[Monomial::var(s)] = 1;
    return p;
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

unsigned MPoly::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

RegistryPtr MPoly::unify(const RegistryPtr& a, const RegistryPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    throw std::invalid_argument("symbol registry mismatch");
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    reg_ = unify(reg_, o.reg_);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    reg_ = unify(reg_, o.reg_);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    r.reg_ = MPoly::unify(a.reg_, b.reg_);
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    MPoly r(*this);
    for (auto& [m, v] : r.terms_) v /= c;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1);
    r.reg_ = reg_;
    MPoly base(*this);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MPoly MPoly::substitute(const std::map<Symbol, MPoly>& assignment) const {
    // Registry of the image: unify all assignment values; unassigned symbols
    // keep this polynomial's registry, so mixing is rejected unless the
    // registries agree.
    RegistryPtr target;
    for (auto& [s, v] : assignment) target = unify(target, v.registry());

    MPoly result;
    for (auto& [m, c] : terms_) {
        MPoly term(c);
        Monomial passthrough;
        for (auto& [id, e] : m.factors) {
            auto it = assignment.find(Symbol{id});
            if (it == assignment.end()) passthrough.factors.push_back({id, e});
            else term = term * it->second.pow(e);
        }
        if (!passthrough.empty()) {
            MPoly keep;
            keep.reg_ = reg_;
            keep.terms_[passthrough] = 1;
            term = term * keep;
        }
        result += term;
    }
    if (result.terms_.empty()) result.reg_ = unify(target, result.reg_);
    return result;
}

std::vector<std::uint32_t> MPoly::used_symbols() const {
    std::vector<std::uint32_t> ids;
    for (auto& [m, c] : terms_)
        for (auto& [id, e] : m.factors) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

BigInt MPoly::denominator_lcm() const {
    BigInt l = 1;
    for (auto& [m, c] : terms_) l = lcm(l, rat_den(c));
    return l;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Sort terms by (degree, exponent vector) for a stable canonical form.
    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(terms_.size());
    for (auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        unsigned da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da < db;
        return a->first < b->first;
    });

    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && !m.empty();
        if (!unit_coeff) out << rat_to_string(a);
        bool need_star = !unit_coeff;
        for (auto& [id, e] : m.factors) {
            if (need_star) out << "*";
            need_star = true;
            out << (reg_ ? reg_->name(Symbol{id}) : ("#" + std::to_string(id)));
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace trilog
