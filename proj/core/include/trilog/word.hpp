#pragma once

// Words over the two-letter alphabet {X, Y}, composition multi-indices and
// the shuffle product. Words are ordered by (degree, lexicographic, X < Y);
// that order is used everywhere for canonical maps and text output.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trilog {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

inline char to_char(Letter l) { return l == Letter::X ? 'X' : 'Y'; }

class Word {
public:
    Word() = default;
    explicit Word(std::string s) : s_(std::move(s)) {}

    static Word empty() { return Word(); }
    static Word x() { return Word("X"); }
    static Word y() { return Word("Y"); }
    /// X^m
    static Word xs(unsigned m) { return Word(std::string(m, 'X')); }
    /// Y^m
    static Word ys(unsigned m) { return Word(std::string(m, 'Y')); }

    unsigned degree() const { return static_cast<unsigned>(s_.size()); }
    bool is_empty() const { return s_.empty(); }
    Letter at(unsigned i) const { return s_[i] == 'X' ? Letter::X : Letter::Y; }
    unsigned count(Letter l) const;

    Word operator*(const Word& o) const { return Word(s_ + o.s_); }
    Word prefix(unsigned n) const { return Word(s_.substr(0, n)); }
    Word suffix_from(unsigned i) const { return Word(s_.substr(i)); }

    /// Letters swapped (X <-> Y).
    Word swapped() const;
    Word reversed() const { return Word(std::string(s_.rbegin(), s_.rend())); }

    /// "1" for the empty word, otherwise the letter string.
    std::string str() const { return s_.empty() ? "1" : s_; }
    const std::string& letters() const { return s_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b) {
        if (a.s_.size() != b.s_.size()) return a.s_.size() < b.s_.size();
        return a.s_ < b.s_;
    }

private:
    std::string s_;  // 'X'/'Y' characters
};

/// All words of degree <= n (including the empty word), in canonical order.
std::vector<Word> words_up_to(unsigned n);
/// All words of degree exactly n, lexicographic.
std::vector<Word> words_of_degree(unsigned n);

/// Composition multi-index k = (k_1,...,k_d), all parts >= 1.
struct IndexVector {
    std::vector<unsigned> parts;

    IndexVector() = default;
    IndexVector(std::initializer_list<unsigned> p) : parts(p) { validate(); }
    explicit IndexVector(std::vector<unsigned> p) : parts(std::move(p)) { validate(); }

    unsigned depth() const { return static_cast<unsigned>(parts.size()); }
    unsigned weight() const {
        unsigned w = 0;
        for (unsigned k : parts) w += k;
        return w;
    }
    void validate() const;
    std::string str() const;

    /// (1,...,1,2) of weight k: the tail index of the depth-reduction formulas.
    static IndexVector ones_then_two(unsigned k);
};

/// The regular word w(k) = X^{k_d-1} Y ... X^{k_1-1} Y attached to a
/// composition; it always ends in Y, has degree weight(k) and depth(k)
/// letters Y.
Word regular_word(const IndexVector& k);

/// Shuffle product of two words as a Z-linear combination of words.
std::map<Word, long long> shuffle(const Word& u, const Word& v);

}  // namespace trilog
