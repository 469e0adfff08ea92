#pragma once

#include <gmpxx.h>

#include <string>

namespace fpalg {

// Exact rational scalars. Everything in this library is over the rationals;
// there is no floating point anywhere in the core.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat frac(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace fpalg
