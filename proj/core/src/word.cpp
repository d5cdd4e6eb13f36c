#include "trilog/word.hpp"

#include <sstream>
#include <stdexcept>

namespace trilog {

unsigned Word::count(Letter l) const {
    unsigned n = 0;
    for (char c : s_)
        if (c == to_char(l)) ++n;
    return n;
}

Word Word::swapped() const {
    std::string t = s_;
    for (char& c : t) c = (c == 'X') ? 'Y' : 'X';
    return Word(t);
}

std::vector<Word> words_of_degree(unsigned n) {
    std::vector<Word> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::string s(n, 'X');
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) s[i] = 'Y';
        out.push_back(Word(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_up_to(unsigned n) {
    std::vector<Word> out;
    for (unsigned d = 0; d <= n; ++d) {
        auto w = words_of_degree(d);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

void IndexVector::validate() const {
    if (parts.empty()) throw std::invalid_argument("index vector must have depth >= 1");
    for (unsigned k : parts)
        if (k < 1) throw std::invalid_argument("index vector parts must be >= 1");
}

std::string IndexVector::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

IndexVector IndexVector::ones_then_two(unsigned k) {
    if (k < 2) throw std::invalid_argument("weight must be >= 2");
    std::vector<unsigned> p(k - 1, 1);
    p.back() = 2;
    return IndexVector(std::move(p));
}

Word regular_word(const IndexVector& k) {
    std::string s;
    for (auto it = k.parts.rbegin(); it != k.parts.rend(); ++it) {
        s.append(*it - 1, 'X');
        s.push_back('Y');
    }
    return Word(s);
}

namespace {
void shuffle_rec(const std::string& u, std::size_t iu, const std::string& v, std::size_t iv,
                 std::string& acc, std::map<Word, long long>& out) {
    if (iu == u.size() && iv == v.size()) {
        ++out[Word(acc)];
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_rec(u, iu + 1, v, iv, acc, out);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_rec(u, iu, v, iv + 1, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::map<Word, long long> shuffle(const Word& u, const Word& v) {
    std::map<Word, long long> out;
    std::string acc;
    acc.reserve(u.degree() + v.degree());
    shuffle_rec(u.letters(), 0, v.letters(), 0, acc, out);
    return out;
}

}  // namespace trilog
