#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace niltrace {

// Exact rational scalar. gmp keeps values in lowest terms with positive
// denominator as long as inputs are canonical, so every constructor here
// canonicalizes.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Used by the CLI document format.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

}  // namespace niltrace
