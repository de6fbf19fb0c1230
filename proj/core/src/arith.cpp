#include "padic/arith.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace padic {

unsigned long vp_int(const Int& n, unsigned long p) {
    if (n == 0) throw std::invalid_argument("vp_int: n must be nonzero");
    Int reduced;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
}

LogVal vp_rat(const Rat& q, unsigned long p) {
    if (q == 0) return XRat::pos_inf();
    long vn = static_cast<long>(vp_int(q.get_num(), p));
    long vd = static_cast<long>(vp_int(q.get_den(), p));
    return LogVal(Rat(vn - vd));
}

unsigned long digit_sum(const Int& n, unsigned long p) {
    if (n < 0) throw std::invalid_argument("digit_sum: n must be nonnegative");
    Int rest = n;
    Int digit;
    unsigned long s = 0;
    while (rest > 0) {
        mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p);
        s += digit.get_ui();
    }
    return s;
}

Rat vp_factorial(unsigned long n, unsigned long p) {
    Rat v(Int(n) - Int(digit_sum(Int(n), p)), Int(p) - 1);
    v.canonicalize();
    return v;
}

LogVal max_subset_valuation(unsigned long s, unsigned long n, unsigned long p) {
    if (n > s) throw std::invalid_argument("max_subset_valuation: n > s");
    if (n == 0) return LogVal(0);
    std::vector<unsigned long> vals;
    vals.reserve(s);
    for (unsigned long m = 1; m <= s; ++m) vals.push_back(vp_int(Int(m), p));
    // The objective is a sum over distinct picks; any n distinct integers
    // can be ordered increasingly, so the greedy over valuations is exact.
    std::partial_sort(vals.begin(), vals.begin() + n, vals.end(),
                      std::greater<unsigned long>());
    unsigned long total = 0;
    for (unsigned long i = 0; i < n; ++i) total += vals[i];
    return LogVal(Rat(total));
}

}  // namespace padic
