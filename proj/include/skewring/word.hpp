#pragma once

// The free monoid over a finite ordered alphabet of variables, the
// degree-then-lexicographic order, and the disjointifying translation of
// families of uniform-degree word sets.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "skewring/errors.hpp"

namespace skewring {

using Letter = std::uint32_t;

/// A word over the variable alphabet; letters are 0-based variable indices.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word empty() { return Word{}; }
    static Word single(Letter x) { return Word({x}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t degree() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }

    Word concat(const Word& o) const {
        std::vector<Letter> l = letters_;
        l.insert(l.end(), o.letters_.begin(), o.letters_.end());
        return Word(std::move(l));
    }
    Word operator*(const Word& o) const { return concat(o); }

    /// x^n for a single letter.
    static Word power(Letter x, std::size_t n) {
        return Word(std::vector<Letter>(n, x));
    }

    bool operator==(const Word& o) const = default;

  private:
    std::vector<Letter> letters_;
};

/// Degree first, then leftmost differing letter. Total order.
inline std::strong_ordering compare_lex(const Word& u, const Word& v) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    return std::lexicographical_compare_three_way(u.letters().begin(), u.letters().end(),
                                                  v.letters().begin(), v.letters().end());
}

/// Strict-weak order placing the lex-largest word first; used so that term
/// maps iterate leading term first.
struct PrecDescending {
    bool operator()(const Word& a, const Word& b) const {
        return compare_lex(a, b) == std::strong_ordering::greater;
    }
};

struct PrecAscending {
    bool operator()(const Word& a, const Word& b) const {
        return compare_lex(a, b) == std::strong_ordering::less;
    }
};

/// The index-th word of degree s over d letters, in lex order.
inline Word kth_word_of_degree(std::size_t d, std::size_t s, std::uint64_t index) {
    std::vector<Letter> letters(s);
    for (std::size_t i = s; i-- > 0;) {
        letters[i] = Letter(index % d);
        index /= d;
    }
    if (index != 0) throw DomainError("word index out of range for degree");
    return Word(std::move(letters));
}

/// All words of degree <= max_deg over d letters, ascending in the order.
inline std::vector<Word> words_up_to_degree(std::size_t d, std::size_t max_deg) {
    std::vector<Word> out;
    out.push_back(Word::empty());
    std::uint64_t count = 1;
    for (std::size_t s = 1; s <= max_deg; ++s) {
        count *= d;
        for (std::uint64_t i = 0; i < count; ++i) out.push_back(kth_word_of_degree(d, s, i));
    }
    return out;
}

/// Serialization: single-character names concatenate, otherwise separated by
/// a middle dot; the empty word prints as "1".
inline std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.is_empty()) return "1";
    bool all_single = std::all_of(names.begin(), names.end(),
                                  [](const std::string& n) { return n.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.degree(); ++i) {
        Letter x = w.letters()[i];
        if (x >= names.size()) throw DomainError("letter index out of range");
        if (!all_single && i > 0) out += "·";
        out += names[x];
    }
    return out;
}

inline Word word_from_string(const std::string& s, const std::vector<std::string>& names) {
    if (s == "1") return Word::empty();
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto skip_sep = [&] {
        if (s.compare(pos, 2, "·") == 0) pos += 2;
        else if (pos < s.size() && s[pos] == '.') pos += 1;
    };
    while (pos < s.size()) {
        bool matched = false;
        // longest variable name first
        std::size_t best = 0;
        Letter best_idx = 0;
        for (Letter i = 0; i < names.size(); ++i)
            if (s.compare(pos, names[i].size(), names[i]) == 0 && names[i].size() > best) {
                best = names[i].size();
                best_idx = i;
                matched = true;
            }
        if (!matched) throw DomainError("cannot parse word '" + s + "' at position " +
                                        std::to_string(pos));
        letters.push_back(best_idx);
        pos += best;
        skip_sep();
    }
    return Word(std::move(letters));
}

struct DisjointifyResult {
    std::size_t t = 0;              // common degree of all translated sets
    std::vector<Word> nus;          // nu_i, in the caller's original order
};

/// Given uniform-degree word sets A_1..A_m over an alphabet of size d >= 2,
/// produces words nu_i with deg nu_i = t - n_i such that the translates
/// A_i nu_i are pairwise disjoint and all of degree t.
///
/// Construction: sort so n_1 >= ... >= n_m (stable), pick the least s with
/// d^s > m, take omega_i = the i-th word of degree s in lex order, and set
/// nu_i = x_0^{n_1 - n_i} omega_i, t = n_1 + s.
inline DisjointifyResult disjointify(const std::vector<std::vector<Word>>& family,
                                     std::size_t alphabet_size) {
    const std::size_t m = family.size();
    if (m == 0) throw DomainError("disjointify: empty family");
    std::vector<std::size_t> deg(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (family[i].empty()) throw DomainError("disjointify: empty member set");
        deg[i] = family[i][0].degree();
        for (const Word& w : family[i])
            if (w.degree() != deg[i])
                throw DomainError("disjointify: member set has mixed degrees");
    }
    if (alphabet_size < 2 && m >= 2)
        throw DomainError("disjointify: alphabet of size 1 cannot separate multiple sets");
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    const std::size_t n1 = deg[order[0]];
    std::size_t s = 1;
    if (alphabet_size >= 2) {
        std::uint64_t pw = alphabet_size;
        while (pw <= m) { pw *= alphabet_size; ++s; }
    }
    DisjointifyResult res;
    res.t = n1 + s;
    res.nus.resize(m);
    for (std::size_t rank = 0; rank < m; ++rank) {
        std::size_t i = order[rank];
        Word omega = kth_word_of_degree(alphabet_size, s, rank);
        res.nus[i] = Word::power(0, n1 - deg[i]).concat(omega);
    }
    return res;
}

}  // namespace skewring
