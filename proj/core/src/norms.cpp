#include "padic/norms.hpp"

#include <stdexcept>

#include "padic/arith.hpp"

namespace padic {

NormBound gauss_norm(const PSeries& f, const GenericPoint& xi, unsigned long p) {
    if (f.dim() != xi.dim())
        throw std::invalid_argument("gauss_norm: dimension mismatch");
    PSeries shifted = f.taylor_shift(xi.center);
    XRat best = XRat::neg_inf();
    for (const auto& [alpha, c] : shifted.terms()) {
        // log_p |c| * prod r_i^{alpha_i}; a radius-0 coordinate kills any
        // term with a positive exponent there.
        XRat term = -vp_rat(c, p);
        bool dead = false;
        for (int i = 0; i < f.dim(); ++i) {
            if (alpha[i] == 0) continue;
            if (xi.radius_log[i].is_neg_inf()) {
                dead = true;
                break;
            }
            term = term + xi.radius_log[i].scaled(Rat(alpha[i]));
        }
        if (dead) continue;
        best = padic::max(best, term);
    }
    return NormBound{Radius(best), f.exact()};
}

Radius ratfunc_norm(const PSeries& num, const PSeries& den,
                    const GenericPoint& xi, unsigned long p) {
    if (!num.exact() || !den.exact())
        throw std::invalid_argument("ratfunc_norm: requires exact polynomials");
    NormBound dn = gauss_norm(den, xi, p);
    if (dn.value.is_zero())
        throw std::invalid_argument("ratfunc_norm: denominator vanishes at the point");
    NormBound nn = gauss_norm(num, xi, p);
    return nn.value / dn.value;
}

Radius boundary_seminorm(const std::vector<LaurentTerm>& terms,
                         const std::vector<Rat>& radius_log, unsigned long p) {
    XRat best = XRat::neg_inf();
    for (const auto& [expo, c] : terms) {
        if (expo.size() != radius_log.size())
            throw std::invalid_argument("boundary_seminorm: exponent dimension mismatch");
        if (c == 0) continue;
        XRat term = -vp_rat(c, p);
        for (size_t i = 0; i < expo.size(); ++i) {
            term = term + XRat(Rat(radius_log[i] * expo[i]));
        }
        best = padic::max(best, term);
    }
    return Radius(best);
}

}  // namespace padic
