#ifndef PADIC_DOMAINS_HPP
#define PADIC_DOMAINS_HPP

#include <string>
#include <vector>

#include "padic/norms.hpp"
#include "padic/point.hpp"
#include "padic/pseries.hpp"
#include "padic/xrat.hpp"

namespace padic {

/// One Laurent constraint: |poly| <= bound (cap) or |poly| >= bound (cup).
struct LaurentConstraint {
    PSeries poly;
    Radius bound;
};

/// Affinoid cut out of the closed unit polydisk by finitely many cap and
/// cup conditions on polynomials; the empty spec is the full polydisk.
struct LaurentSpec {
    int d = 1;
    std::vector<LaurentConstraint> caps;
    std::vector<LaurentConstraint> cups;

    static LaurentSpec polydisk(int d) {
        LaurentSpec s;
        s.d = d;
        return s;
    }
    /// One-dimensional annulus q_lo <= log|x| <= q_hi inside the unit disk.
    static LaurentSpec annulus(Rat q_lo, Rat q_hi);

    void validate() const;
};

/// Which constraint realized the diameter.
struct DiameterWitness {
    enum class Kind { None, Cap, Cup } kind = Kind::None;
    int constraint = -1;
    MultiIndex alpha;
};

struct DiameterReport {
    Radius delta = Radius::one();
    DiameterWitness witness;
    /// Total degree beyond which no exponent can contribute to the min.
    uint32_t truncation_bound = 1;
};

bool member(const LaurentSpec& spec, const GenericPoint& xi, unsigned long p);

/// Diameter of {|f| <= r} at a member point: min over divided derivatives
/// of (r / |f^{[alpha]}(xi)|)^{1/|alpha|}, capped at 1.
DiameterReport diameter_cap(const PSeries& f, const Radius& r,
                            const GenericPoint& xi, unsigned long p);

/// Diameter of {|g| >= s} at a member point: distance to the nearest zero
/// of g, via (|g(xi)| / |g^{[alpha]}(xi)|)^{1/|alpha|}, capped at 1.
DiameterReport diameter_cup(const PSeries& g, const Radius& s,
                            const GenericPoint& xi, unsigned long p);

/// Componentwise min of the per-constraint diameters, capped at 1.
DiameterReport diameter(const LaurentSpec& spec, const GenericPoint& xi,
                        unsigned long p);

/// Boundary points on which sup norms over the spec are attained. Derived
/// for the polydisk and for one-dimensional specs with constraints linear
/// in x; other shapes need caller-supplied points.
std::vector<GenericPoint> shilov_points(const LaurentSpec& spec, unsigned long p);

}  // namespace padic

#endif
