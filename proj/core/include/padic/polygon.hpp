#ifndef PADIC_POLYGON_HPP
#define PADIC_POLYGON_HPP

#include <optional>
#include <vector>

#include "padic/pseries.hpp"
#include "padic/xrat.hpp"

namespace padic {

/// Value of the valuation polygon at mu, together with all minimizing
/// exponents. regular <=> the minimizer is unique.
struct PolygonResult {
    Rat value;
    std::vector<MultiIndex> minimizers;
    bool regular = false;
};

/// v(f, mu) = min over the support of v_p(f_alpha) + <alpha, mu>.
/// Rejects the zero polynomial and truncated input.
PolygonResult v_of(const PSeries& f, const std::vector<Rat>& mu, unsigned long p);

/// True iff mu lies in the non-regular locus, certifying a zero of f with
/// exactly those coordinate valuations over an algebraically closed
/// complete extension. Existence only; no root is exhibited.
bool zero_detect(const PSeries& f, const std::vector<Rat>& mu, unsigned long p);

/// Zero certificate from a norm comparison against the constant term.
struct ZeroCertificate {
    enum class Kind { SameModulus, AtMost } kind;
    /// Radii |xi_i| at (or within) which the zero lives.
    std::vector<Radius> radii;
};

/// Compares |f(xi)| with |f(0)|: a strict drop certifies a zero on the
/// same polycircle as xi; a strict rise certifies one within it; equality
/// certifies nothing.
std::optional<ZeroCertificate> drop_implies_zero(const PSeries& f,
                                                 const std::vector<Rat>& xi,
                                                 unsigned long p);

/// Distance from a to the nearest zero of the one-variable polynomial g,
/// capped at 1 (the unit disk). Rejects g(a) = 0.
Radius nearest_zero_radius(const PSeries& g, const Rat& a, unsigned long p);

}  // namespace padic

#endif
