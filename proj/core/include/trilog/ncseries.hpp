#pragma once

// Truncated non-commutative formal power series in X, Y with coefficients in
// an exact commutative ring (Rational or MPoly). The truncation degree is an
// immutable parameter of each series; operations between series of different
// truncation are an error rather than a silent re-truncation.

#include "trilog/mpoly.hpp"
#include "trilog/rational.hpp"
#include "trilog/word.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace trilog {

inline std::string coeff_to_string(const Rational& r) { return rat_to_string(r); }
inline std::string coeff_to_string(const MPoly& p) { return p.to_string(); }

template <class R>
struct GroupLikeResult {
    bool ok = true;
    Word u, v;  // violating pair when !ok
    R lhs, rhs;
    explicit operator bool() const { return ok; }
};

template <class R>
class NCSeries {
public:
    explicit NCSeries(unsigned trunc) : trunc_(trunc) {}

    static NCSeries zero(unsigned trunc) { return NCSeries(trunc); }
    static NCSeries one(unsigned trunc) {
        NCSeries s(trunc);
        s.set(Word::empty(), R(1));
        return s;
    }
    static NCSeries letter(unsigned trunc, Letter l, R c = R(1)) {
        NCSeries s(trunc);
        s.set(l == Letter::X ? Word::x() : Word::y(), std::move(c));
        return s;
    }

    unsigned trunc() const { return trunc_; }
    const std::map<Word, R>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    R coeff(const Word& w) const {
        if (w.degree() > trunc_) throw std::domain_error("word degree exceeds truncation");
        auto it = c_.find(w);
        return it == c_.end() ? R{} : it->second;
    }
    R constant_term() const { return coeff(Word::empty()); }

    void set(const Word& w, R v) {
        if (w.degree() > trunc_) throw std::domain_error("word degree exceeds truncation");
        if (v == R{}) c_.erase(w);
        else c_[w] = std::move(v);
    }
    void add_to(const Word& w, const R& v) {
        if (w.degree() > trunc_) return;  // discarded by truncation
        auto it = c_.find(w);
        if (it == c_.end()) {
            if (!(v == R{})) c_.emplace(w, v);
        } else {
            it->second += v;
            if (it->second == R{}) c_.erase(it);
        }
    }

    NCSeries operator-() const {
        NCSeries r(trunc_);
        for (auto& [w, c] : c_) r.c_[w] = -c;
        return r;
    }
    NCSeries& operator+=(const NCSeries& o) {
        check_compatible(o);
        for (auto& [w, c] : o.c_) add_to(w, c);
        return *this;
    }
    NCSeries& operator-=(const NCSeries& o) {
        check_compatible(o);
        for (auto& [w, c] : o.c_) add_to(w, -c);
        return *this;
    }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) { a += b; return a; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { a -= b; return a; }

    NCSeries scaled(const R& k) const {
        NCSeries r(trunc_);
        for (auto& [w, c] : c_) r.set(w, c * k);
        return r;
    }
    NCSeries scaled(const Rational& k) const {
        NCSeries r(trunc_);
        for (auto& [w, c] : c_) r.set(w, c * k);
        return r;
    }

    /// Concatenation product, truncated.
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b) {
        a.check_compatible(b);
        NCSeries r(a.trunc_);
        for (auto& [wa, ca] : a.c_) {
            if (wa.degree() > a.trunc_) continue;
            for (auto& [wb, cb] : b.c_) {
                if (wa.degree() + wb.degree() > a.trunc_) continue;
                r.add_to(wa * wb, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    /// exp of a series with zero constant term, by Horner powering with exact
    /// division by factorial steps.
    NCSeries exp() const {
        if (!(constant_term() == R{}))
            throw std::domain_error("exp requires zero constant term");
        NCSeries e = one(trunc_);
        for (unsigned k = trunc_; k >= 1; --k) {
            e = one(trunc_) + (*this * e).scaled(Rational(1, k));
        }
        return e;
    }

    /// log of a series with constant term 1.
    NCSeries log() const {
        if (!(constant_term() == R(1)))
            throw std::domain_error("log requires constant term 1");
        NCSeries u = *this - one(trunc_);
        NCSeries s = zero(trunc_);
        for (unsigned k = trunc_; k >= 1; --k) {
            NCSeries c = zero(trunc_);
            c.set(Word::empty(), R(1) * Rational(1, k));
            s = c - (u * s);
        }
        return u * s;
    }

    /// Multiplicative inverse of a series with constant term 1.
    NCSeries inverse() const {
        if (!(constant_term() == R(1)))
            throw std::domain_error("inverse requires constant term 1");
        NCSeries u = one(trunc_) - *this;
        NCSeries r = one(trunc_);
        for (unsigned k = 0; k < trunc_; ++k) r = one(trunc_) + (u * r);
        return r;
    }

    /// Continuous algebra homomorphism sending X, Y to the given images
    /// (which must have zero constant term).
    NCSeries substitute(const NCSeries& img_x, const NCSeries& img_y) const {
        check_compatible(img_x);
        check_compatible(img_y);
        if (!(img_x.constant_term() == R{}) || !(img_y.constant_term() == R{}))
            throw std::domain_error("letter image must have zero constant term");
        NCSeries r(trunc_);
        for (auto& [w, c] : c_) {
            NCSeries img = one(trunc_);
            for (unsigned i = 0; i < w.degree() && !img.is_zero(); ++i)
                img = img * (w.at(i) == Letter::X ? img_x : img_y);
            r += img.scaled(c);
        }
        return r;
    }

    /// Letters exchanged: f(Y, X).
    NCSeries swap_letters() const {
        NCSeries r(trunc_);
        for (auto& [w, c] : c_) r.c_[w.swapped()] = c;
        return r;
    }

    /// Words of degree exactly d.
    NCSeries graded_part(unsigned d) const {
        NCSeries r(trunc_);
        for (auto& [w, c] : c_)
            if (w.degree() == d) r.c_[w] = c;
        return r;
    }

    /// Shuffle-relation certificate: for every pair of nonempty words u, v
    /// with |u|+|v| <= trunc, the coefficients must satisfy
    /// sum_{w in u sha v} c_w = c_u * c_v. Returns the first violating pair.
    GroupLikeResult<R> is_group_like() const {
        GroupLikeResult<R> res;
        if (!(constant_term() == R(1))) {
            res.ok = false;
            res.lhs = constant_term();
            res.rhs = R(1);
            return res;
        }
        for (unsigned du = 1; du + 1 <= trunc_; ++du) {
            for (unsigned dv = du; du + dv <= trunc_; ++dv) {
                for (const Word& u : words_of_degree(du)) {
                    for (const Word& v : words_of_degree(dv)) {
                        if (dv == du && v < u) continue;
                        R lhs = coeff(u) * coeff(v);
                        R rhs{};
                        for (auto& [w, mult] : shuffle(u, v))
                            rhs += coeff(w) * Rational(mult);
                        if (!(lhs == rhs)) {
                            res.ok = false;
                            res.u = u;
                            res.v = v;
                            res.lhs = lhs;
                            res.rhs = rhs;
                            return res;
                        }
                    }
                }
            }
        }
        return res;
    }

    /// Text form: one `word<TAB>coefficient` line per stored word, in
    /// canonical order; the empty word prints as "1".
    std::string serialize() const {
        std::ostringstream out;
        for (auto& [w, c] : c_) out << w.str() << "\t" << coeff_to_string(c) << "\n";
        return out.str();
    }

private:
    void check_compatible(const NCSeries& o) const {
        if (trunc_ != o.trunc_) throw std::invalid_argument("series truncation mismatch");
    }

    unsigned trunc_;
    std::map<Word, R> c_;  // no zero coefficients stored
};

using RatSeries = NCSeries<Rational>;
using PolySeries = NCSeries<MPoly>;

}  // namespace trilog
