#pragma once

// Free Lie algebra on {X, Y} in the Lyndon basis: word enumeration, standard
// factorization, bracket expansion into the associative envelope, the
// degree-by-degree Lie-membership solve, BCH, and the phi_3 linear form.
//
// The bracketing convention is [A,B] = AB - BA; the Lyndon word XYY carries
// the bracket [[X,Y],Y]. Expansion of a Lyndon bracket is unitriangular:
// b(w) = w + (lexicographically larger words), which makes the membership
// solve a plain back-substitution.

#include "trilog/ncseries.hpp"
#include "trilog/word.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace trilog {

/// True iff w is strictly smaller than all of its proper rotations.
inline bool is_lyndon(const Word& w) {
    unsigned n = w.degree();
    if (n == 0) return false;
    const std::string& s = w.letters();
    for (unsigned r = 1; r < n; ++r) {
        std::string rot = s.substr(r) + s.substr(0, r);
        if (!(s < rot)) return false;
    }
    return n >= 1;
}

/// All Lyndon words of degree <= n, ordered by (degree, lex).
inline std::vector<Word> lyndon_words(unsigned n) {
    std::vector<Word> out;
    for (unsigned d = 1; d <= n; ++d)
        for (const Word& w : words_of_degree(d))
            if (is_lyndon(w)) out.push_back(w);
    return out;
}

inline std::vector<Word> lyndon_words_of_degree(unsigned d) {
    std::vector<Word> out;
    for (const Word& w : words_of_degree(d))
        if (is_lyndon(w)) out.push_back(w);
    return out;
}

/// Standard factorization w = u * v of a Lyndon word of degree >= 2, with v
/// the longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.degree() < 2) throw std::invalid_argument("letters have no factorization");
    for (unsigned i = 1; i < w.degree(); ++i) {
        Word v = w.suffix_from(i);
        if (is_lyndon(v)) return {w.prefix(i), v};
    }
    throw std::logic_error("not a Lyndon word: " + w.str());
}

/// Word expansion (with integer coefficients) of the Lyndon bracket b(w).
inline std::map<Word, long long> bracket_expansion(const Word& w) {
    if (w.degree() == 1) return {{w, 1}};
    auto [u, v] = standard_factorization(w);
    auto eu = bracket_expansion(u);
    auto ev = bracket_expansion(v);
    std::map<Word, long long> out;
    for (auto& [a, ca] : eu)
        for (auto& [b, cb] : ev) {
            out[a * b] += ca * cb;
            out[b * a] -= ca * cb;
        }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

/// An element of the free Lie algebra, coefficients on Lyndon brackets.
template <class R>
class LieElement {
public:
    explicit LieElement(unsigned trunc) : trunc_(trunc) {}

    static LieElement zero(unsigned trunc) { return LieElement(trunc); }
    static LieElement letter(unsigned trunc, Letter l, R c = R(1)) {
        LieElement e(trunc);
        e.set(l == Letter::X ? Word::x() : Word::y(), std::move(c));
        return e;
    }

    unsigned trunc() const { return trunc_; }
    const std::map<Word, R>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    R coeff(const Word& lyndon) const {
        auto it = c_.find(lyndon);
        return it == c_.end() ? R{} : it->second;
    }
    void set(const Word& lyndon, R v) {
        if (!is_lyndon(lyndon)) throw std::invalid_argument("not a Lyndon word: " + lyndon.str());
        if (lyndon.degree() > trunc_) throw std::domain_error("degree exceeds truncation");
        if (v == R{}) c_.erase(lyndon);
        else c_[lyndon] = std::move(v);
    }
    void add_to(const Word& lyndon, const R& v) {
        auto it = c_.find(lyndon);
        if (it == c_.end()) set(lyndon, v);
        else {
            it->second += v;
            if (it->second == R{}) c_.erase(it);
        }
    }

    LieElement operator-() const {
        LieElement r(trunc_);
        for (auto& [w, c] : c_) r.c_[w] = -c;
        return r;
    }
    LieElement& operator+=(const LieElement& o) {
        for (auto& [w, c] : o.c_) add_to(w, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        for (auto& [w, c] : o.c_) add_to(w, -c);
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { a += b; return a; }
    friend LieElement operator-(LieElement a, const LieElement& b) { a -= b; return a; }
    LieElement scaled(const R& k) const {
        LieElement r(trunc_);
        for (auto& [w, c] : c_) r.set(w, c * k);
        return r;
    }
    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    std::string serialize() const {
        std::ostringstream out;
        for (auto& [w, c] : c_) out << w.str() << "\t" << coeff_to_string(c) << "\n";
        return out.str();
    }

private:
    unsigned trunc_;
    std::map<Word, R> c_;  // keys are Lyndon words
};

template <class R>
NCSeries<R> lie_to_series(const LieElement<R>& l) {
    NCSeries<R> s(l.trunc());
    for (auto& [lw, c] : l.coeffs())
        for (auto& [w, m] : bracket_expansion(lw)) s.add_to(w, c * Rational(m));
    return s;
}

template <class R>
struct LieSolveResult {
    std::optional<LieElement<R>> lie;  // empty if the series is not Lie
    Word witness;                      // first word with nonzero residual
    R residual{};
};

/// Expresses a series (constant term must be zero) in expanded Lyndon
/// brackets, degree by degree. Exact: the back-substitution uses the
/// unitriangularity of bracket expansions in (degree, lex) order.
template <class R>
LieSolveResult<R> try_series_to_lie(const NCSeries<R>& f) {
    LieSolveResult<R> res;
    if (!(f.constant_term() == R{})) {
        res.witness = Word::empty();
        res.residual = f.constant_term();
        return res;
    }
    LieElement<R> lie(f.trunc());
    for (unsigned d = 1; d <= f.trunc(); ++d) {
        NCSeries<R> residual = f.graded_part(d);
        for (const Word& lw : lyndon_words_of_degree(d)) {
            R lam = residual.coeff(lw);
            if (lam == R{}) continue;
            for (auto& [w, m] : bracket_expansion(lw)) residual.add_to(w, -(lam * Rational(m)));
            lie.set(lw, lam);
        }
        if (!residual.is_zero()) {
            auto& [w, c] = *residual.coeffs().begin();
            res.witness = w;
            res.residual = c;
            return res;
        }
    }
    res.lie = std::move(lie);
    return res;
}

template <class R>
LieElement<R> series_to_lie(const NCSeries<R>& f) {
    auto res = try_series_to_lie(f);
    if (!res.lie)
        throw std::domain_error("series is not a Lie element (residual at word " +
                                res.witness.str() + ")");
    return *std::move(res.lie);
}

template <class R>
LieElement<R> lie_bracket(const LieElement<R>& a, const LieElement<R>& b) {
    NCSeries<R> sa = lie_to_series(a), sb = lie_to_series(b);
    return series_to_lie(sa * sb - sb * sa);
}

/// Baker-Campbell-Hausdorff sum log(exp(A) exp(B)), exact up to truncation.
template <class R>
LieElement<R> bch(const LieElement<R>& a, const LieElement<R>& b) {
    if (a.trunc() != b.trunc()) throw std::invalid_argument("series truncation mismatch");
    NCSeries<R> prod = lie_to_series(a).exp() * lie_to_series(b).exp();
    return series_to_lie(prod.log());
}

/// Z = log(exp(-Y) exp(-X)); the degree-1 part is -X-Y.
template <class R>
LieElement<R> z_series(unsigned trunc) {
    return bch(LieElement<R>::letter(trunc, Letter::Y, R(-1)),
               LieElement<R>::letter(trunc, Letter::X, R(-1)));
}

/// Linear form picking the coefficient of [X,[X,Y]]. Equals the coefficient
/// of the word XXY in the expansion, since the complementary degree-3 basis
/// bracket [[X,Y],Y] has no XXY monomial.
template <class R>
R phi3(const LieElement<R>& l) {
    if (l.trunc() < 3) throw std::domain_error("phi3 requires truncation >= 3");
    return lie_to_series(l).coeff(Word("XXY"));
}

/// Lie-algebra endomorphism determined by images of X and Y.
template <class R>
LieElement<R> lie_substitute(const LieElement<R>& l, const LieElement<R>& img_x,
                             const LieElement<R>& img_y) {
    NCSeries<R> s = lie_to_series(l).substitute(lie_to_series(img_x), lie_to_series(img_y));
    return series_to_lie(s);
}

}  // namespace trilog
