#pragma once

#include "fpalg/rational.hpp"
#include "fpalg/word.hpp"

#include <map>

namespace fpalg {

// Canonical storage order for polynomial terms: word length, then id-wise
// lexicographic. This is a container order, independent of any monomial order;
// leading terms are always taken against an explicit MonomialOrder.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Finite formal sum of (exact rational, word) terms. No zero coefficients are
// ever stored. Immutable value semantics in practice: operations return new
// polynomials.
class NcPoly {
public:
    using TermMap = std::map<Word, Rat, ShortlexLess>;

    NcPoly() = default;

    static NcPoly zero() { return NcPoly(); }

    static NcPoly scalar(const Rat& c) {
        NcPoly p;
        p.add_term(Word(), c);
        return p;
    }

    static NcPoly monomial(Word w, const Rat& c = Rat(1)) {
        NcPoly p;
        p.add_term(std::move(w), c);
        return p;
    }

    static NcPoly generator(int id, const Rat& c = Rat(1)) {
        Word w;
        w.push_back(static_cast<GenId>(id));
        return monomial(std::move(w), c);
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    NcPoly& add_term(Word w, const Rat& c) {
        if (c == 0) return *this;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
        return *this;
    }

    const Rat* coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? nullptr : &it->second;
    }

    NcPoly& operator+=(const NcPoly& q) {
        for (const auto& [w, c] : q.t_) add_term(w, c);
        return *this;
    }

    NcPoly& operator-=(const NcPoly& q) {
        for (const auto& [w, c] : q.t_) add_term(w, -c);
        return *this;
    }

    NcPoly& operator*=(const Rat& c) {
        if (c == 0) {
            t_.clear();
        } else {
            for (auto& [w, v] : t_) v *= c;
        }
        return *this;
    }

    friend NcPoly operator+(NcPoly p, const NcPoly& q) { return p += q; }
    friend NcPoly operator-(NcPoly p, const NcPoly& q) { return p -= q; }
    friend NcPoly operator*(NcPoly p, const Rat& c) { return p *= c; }
    friend NcPoly operator*(const Rat& c, NcPoly p) { return p *= c; }

    NcPoly operator-() const {
        NcPoly p(*this);
        for (auto& [w, v] : p.t_) v = -v;
        return p;
    }

    // Free-algebra product: bilinear extension of word concatenation.
    friend NcPoly operator*(const NcPoly& p, const NcPoly& q) {
        NcPoly r;
        for (const auto& [u, a] : p.t_)
            for (const auto& [v, b] : q.t_) r.add_term(u + v, a * b);
        return r;
    }

    bool operator==(const NcPoly& q) const { return t_ == q.t_; }

    // Largest term under ord; poly must be nonzero.
    std::pair<const Word*, const Rat*> leading(const MonomialOrder& ord) const {
        if (t_.empty())
            throw AlgebraError(Errc::invalid_input, "leading term of zero polynomial");
        const Word* bw = nullptr;
        const Rat* bc = nullptr;
        for (const auto& [w, c] : t_) {
            if (!bw || ord.less(*bw, w)) {
                bw = &w;
                bc = &c;
            }
        }
        return {bw, bc};
    }

    // Max term degree; -1 for the zero polynomial.
    long degree(const MonomialOrder& ord) const {
        long d = -1;
        for (const auto& [w, c] : t_) d = std::max(d, ord.word_degree(w));
        return d;
    }

    bool homogeneous(const MonomialOrder& ord) const {
        long d = -2;
        for (const auto& [w, c] : t_) {
            long dw = ord.word_degree(w);
            if (d == -2)
                d = dw;
            else if (d != dw)
                return false;
        }
        return true;
    }

    int max_letter() const {
        int m = -1;
        for (const auto& [w, c] : t_)
            for (GenId g : w) m = std::max(m, int(g));
        return m;
    }

private:
    TermMap t_;
};

} // namespace fpalg
