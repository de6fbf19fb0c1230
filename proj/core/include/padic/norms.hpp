#ifndef PADIC_NORMS_HPP
#define PADIC_NORMS_HPP

#include <utility>
#include <vector>

#include "padic/point.hpp"
#include "padic/pseries.hpp"
#include "padic/xrat.hpp"

namespace padic {

/// A norm value; exact == false marks a lower bound (truncated input whose
/// missing tail could only raise the sup).
struct NormBound {
    Radius value;
    bool exact = true;
};

/// |f(t_{a,r})| = sup_alpha |f^{[alpha]}(a)| r^alpha, evaluated exactly in
/// log form. Truncated series yield a flagged lower bound.
NormBound gauss_norm(const PSeries& f, const GenericPoint& xi, unsigned long p);

/// |num/den| at a multiplicative point: gauss_norm(num)/gauss_norm(den).
/// Rejects identically-zero denominators; requires exact polynomials.
Radius ratfunc_norm(const PSeries& num, const PSeries& den,
                    const GenericPoint& xi, unsigned long p);

/// One term of a finite Laurent/power expansion: integer exponent vector
/// (negative entries allowed) and a rational coefficient.
using LaurentTerm = std::pair<std::vector<long>, Rat>;

/// sup_alpha |a_alpha| R^alpha over a finite expansion; radius_log are the
/// log_p R_i.
Radius boundary_seminorm(const std::vector<LaurentTerm>& terms,
                         const std::vector<Rat>& radius_log, unsigned long p);

}  // namespace padic

#endif
