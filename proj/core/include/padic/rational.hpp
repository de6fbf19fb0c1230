#ifndef PADIC_RATIONAL_HPP
#define PADIC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padic {

using Int = mpz_class;
using Rat = mpq_class;

/// Parse "a", "-a" or "a/b" into a canonicalized rational.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

/// Lowest-terms decimal form; integers print without the "/1".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace padic

#endif
