#ifndef FORESTS_RATIONAL_HPP
#define FORESTS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace forests {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational p/q with q > 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

// Parses an integer literal or "p/q". Used for edge lengths and test fixtures.
inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

}  // namespace forests

#endif
