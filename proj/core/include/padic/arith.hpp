#ifndef PADIC_ARITH_HPP
#define PADIC_ARITH_HPP

#include "padic/rational.hpp"
#include "padic/xrat.hpp"

namespace padic {

/// Exponent of the prime p in n. Rejects n = 0 (callers map 0 to +inf).
unsigned long vp_int(const Int& n, unsigned long p);

/// v_p of a rational; +inf for zero.
LogVal vp_rat(const Rat& q, unsigned long p);

/// Sum of base-p digits of n >= 0.
unsigned long digit_sum(const Int& n, unsigned long p);

/// v_p(n!) by Legendre's formula, (n - digit_sum(n, p)) / (p - 1).
Rat vp_factorial(unsigned long n, unsigned long p);

/// v_p(a!) for a multi-index factorial: sum of vp_factorial over entries.
template <typename Seq>
Rat vp_multifactorial(const Seq& alpha, unsigned long p) {
    Rat v = 0;
    for (auto a : alpha) v += vp_factorial(a, p);
    return v;
}

/// Largest total p-adic valuation of n strictly increasing integers in
/// [1, s], i.e. log_p of the Dwork-Robba growth constant. Greedy over the
/// n largest valuations; rejects n > s.
LogVal max_subset_valuation(unsigned long s, unsigned long n, unsigned long p);

}  // namespace padic

#endif
