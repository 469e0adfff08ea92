#pragma once

#include "fpalg/error.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fpalg {

// A generator id is a dense index 0..G-1 into a presentation's generator list.
using GenId = unsigned char;

// A word is a finite sequence of generator ids; the empty word is the
// multiplicative identity. basic_string gives cheap compare/concat/SSO.
using Word = std::basic_string<GenId>;

struct Generator {
    int id = 0;
    std::string label;
    int degree = 1;
};

inline Word word_of(std::initializer_list<int> letters) {
    Word w;
    w.reserve(letters.size());
    for (int l : letters) w.push_back(static_cast<GenId>(l));
    return w;
}

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

enum class Ordering { less, equal, greater };

// Degree-lexicographic word order: total degree first, then left-to-right
// comparison of generator ranks. Total, multiplicative, degree-compatible,
// with the empty word as minimum.
struct MonomialOrder {
    std::vector<int> rank;   // rank[id] = position of id in the base order
    std::vector<int> degree; // degree[id] >= 1

    int size() const { return static_cast<int>(rank.size()); }

    long word_degree(const Word& w) const {
        long d = 0;
        for (GenId g : w) {
            if (g >= rank.size())
                throw AlgebraError(Errc::invalid_input,
                                   "unknown generator id " + std::to_string(int(g)));
            d += degree[g];
        }
        return d;
    }

    Ordering compare(const Word& u, const Word& v) const {
        long du = word_degree(u), dv = word_degree(v);
        if (du != dv) return du < dv ? Ordering::less : Ordering::greater;
        const size_t m = std::min(u.size(), v.size());
        for (size_t k = 0; k < m; ++k) {
            int ru = rank[u[k]], rv = rank[v[k]];
            if (ru != rv) return ru < rv ? Ordering::less : Ordering::greater;
        }
        // equal degree and one a prefix of the other forces equality
        if (u.size() != v.size())
            return u.size() < v.size() ? Ordering::less : Ordering::greater;
        return Ordering::equal;
    }

    bool less(const Word& u, const Word& v) const {
        return compare(u, v) == Ordering::less;
    }

    // identity rank, all generators of degree one
    static MonomialOrder deglex(int gens) {
        MonomialOrder o;
        o.rank.resize(gens);
        for (int i = 0; i < gens; ++i) o.rank[i] = i;
        o.degree.assign(gens, 1);
        return o;
    }

    static MonomialOrder deglex(std::vector<int> rank, std::vector<int> degree) {
        if (rank.size() != degree.size())
            throw AlgebraError(Errc::invalid_input, "rank/degree size mismatch");
        for (int d : degree)
            if (d < 1)
                throw AlgebraError(Errc::invalid_input, "generator degree must be >= 1");
        MonomialOrder o;
        o.rank = std::move(rank);
        o.degree = std::move(degree);
        return o;
    }

    bool operator==(const MonomialOrder& o) const {
        return rank == o.rank && degree == o.degree;
    }
};

// Validating comparison entry point.
inline Ordering compare_words(const Word& u, const Word& v, const MonomialOrder& ord) {
    ord.word_degree(u); // validates letters
    ord.word_degree(v);
    return ord.compare(u, v);
}

} // namespace fpalg
